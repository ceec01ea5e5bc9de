#pragma once

// Printed sudoku pair: a 17-clue puzzle and its completion, both read row by
// row from the top.

#include <string>
#include <vector>

#include "latin/catalog.hpp"
#include "latin/critical.hpp"

namespace fixtures {

inline constexpr const char* kSudokuFull =
    "937645821852913476614287359763829145249531687185476932496352718321798564578164293";
inline constexpr const char* kSudokuClues =
    "....4..2..5.9......1..........8..1.52...3..........9..49...2...3......6....1.....";

// Board rows count from the bottom.
inline int sudoku_point(int i) { return (8 - i / 9) * 9 + i % 9; }

inline std::vector<std::string> digits(int n) {
  std::vector<std::string> s;
  for (int i = 1; i <= n; ++i) s.push_back(std::to_string(i));
  return s;
}

inline latin::LatinBoard sudoku_full() {
  latin::LatinBoard l{latin::build_board("sudoku_base"), 1, digits(9), std::vector<int>(81, -1)};
  for (int i = 0; i < 81; ++i) l.cells[static_cast<std::size_t>(sudoku_point(i))] = kSudokuFull[i] - '1';
  return l;
}

inline latin::PartialBoard sudoku17() {
  latin::PartialBoard p{latin::build_board("sudoku_base"), 1, digits(9), std::vector<int>(81, -1)};
  for (int i = 0; i < 81; ++i)
    if (kSudokuClues[i] != '.') p.cells[static_cast<std::size_t>(sudoku_point(i))] = kSudokuClues[i] - '1';
  return p;
}

}  // namespace fixtures
