#pragma once

// Latin boards: a woven board whose warp lines carry distinct symbols.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latin/warp.hpp"

namespace latin {

struct LatinBoard {
  BoardPtr base;
  int k = 1;
  std::vector<std::string> symbols;
  /// Symbol index per point.
  std::vector<int> cells;

  /// Warp lines ordered by symbol: line i carries symbols[i].
  LineSet warp_lines_by_symbol() const;
  WarpClass warp() const { return WarpClass{k, canonical(warp_lines_by_symbol())}; }
};

/// "1..12" -> {"1", ..., "12"}; anything else is split on commas.
std::vector<std::string> parse_symbols(std::string_view text);

/// Warp lines in canonical order get the symbols in the given order.
/// Throws invalid_labeling when the counts differ.
LatinBoard label(const WovenBoard& w, std::vector<std::string> symbols);

struct LatinReport {
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Every point labeled and every symbol exactly k times on every line.
LatinReport verify_latin(const Board& b, int k, const std::vector<int>& cells, int num_symbols);
inline LatinReport verify_latin(const LatinBoard& l) {
  return verify_latin(*l.base, l.k, l.cells, static_cast<int>(l.symbols.size()));
}

/// Row and column of each point of an n x n grid board: the board needs
/// orthogonal classes "H" and "V" of n lines of size n.
struct SquareGrid {
  int n = 0;
  std::vector<int> row, col;
  std::vector<std::vector<int>> at;  // at[r][c] = point
};
std::optional<SquareGrid> square_grid(const Board& b);

/// The distinct conjugates (row, column, symbol role swaps) of a Latin
/// square board. Throws unsupported for non-square boards.
std::vector<LatinBoard> conjugates(const LatinBoard& l);

/// Point permutations generated by row swaps, column swaps and the
/// transpose of a square grid.
PermGroup grid_isotopy_group(const SquareGrid& g);

struct Equivalence {
  /// Point permutations applied to the board (elements are enumerated).
  PermGroup points;
  /// Also minimise over the conjugates (square boards only).
  bool conjugates = false;
};

/// Transform set used by default: paratopy for square grids, otherwise the
/// board's own symmetry group. Symbol renaming is always included.
Equivalence default_equivalence(const Board& b);

/// Least symbol grid (symbols renumbered by first occurrence) over the
/// transform set.
std::vector<int> canonical_form(const LatinBoard& l, const Equivalence& eq);

/// One representative per class, in input order of first appearance.
std::vector<LatinBoard> equivalence_reduce(const std::vector<LatinBoard>& boards, const Equivalence& eq);

enum class CountMode { raw, equiv };

struct CountResult {
  std::uint64_t count = 0;
  std::uint64_t warp_classes = 0;
  bool partial = false;
};

/// raw: warp classes times n! labelings; equiv: classes under
/// default_equivalence. Stops once `cap` is reached and flags partial.
CountResult count_latin_boards(const BoardPtr& b, int k, CountMode mode, std::uint64_t cap);

}  // namespace latin
