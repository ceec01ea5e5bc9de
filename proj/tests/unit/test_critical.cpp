#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "latin/catalog.hpp"
#include "latin/critical.hpp"
#include "latin/error.hpp"
#include "oracles.hpp"

using namespace latin;

TEST_CASE("the 17-clue sudoku is critical with the printed completion") {
  PartialBoard p = fixtures::sudoku17();
  CHECK(p.clue_count() == 17);
  CHECK(count_completions(p, 2) == 1);
  auto c = unique_completion(p);
  REQUIRE(c.has_value());
  CHECK(*c == fixtures::sudoku_full().cells);
  CHECK(classify_partial(p) == PartialClass::Critical);
}

TEST_CASE("deleting any sudoku clue allows several completions") {
  PartialBoard p = fixtures::sudoku17();
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    if (p.cells[i] < 0) continue;
    CAPTURE(i);
    CHECK(classify_partial(without(p, static_cast<int>(i))) == PartialClass::MultiCompletable);
  }
}

TEST_CASE("empty b1 has one completion per latin square") {
  BoardPtr b = build_board("b1");
  PartialBoard p{b, 1, {"1", "2", "3"}, std::vector<int>(9, -1)};
  CHECK(count_completions(p, 100) == oracle::latin_squares(3).size());
  CHECK(classify_partial(p) == PartialClass::MultiCompletable);
}

TEST_CASE("violations and incompletable boards") {
  BoardPtr b = build_board("b1");
  PartialBoard p{b, 1, {"1", "2", "3"}, std::vector<int>(9, -1)};
  p.cells[0] = 0;
  p.cells[1] = 0;
  auto v = violations(p);
  REQUIRE(v.size() == 1);
  CHECK(v[0].count == 2);
  CHECK(v[0].symbol == 0);
  CHECK_THROWS_AS(count_completions(p, 2), Error);
  CHECK(classify_partial(p) == PartialClass::Incompletable);

  // no violation, but no completion either: 1 2 . / . . 3 in a 3x3 square
  PartialBoard q{b, 1, {"1", "2", "3"}, std::vector<int>(9, -1)};
  q.cells[0] = 0;
  q.cells[1] = 1;
  q.cells[5] = 0;
  CHECK(violations(q).empty());
  CHECK(count_completions(q, 2) == oracle::completions(q.cells, [&] {
          auto g = square_grid(*b);
          std::vector<std::vector<int>> out;
          for (const auto& a : oracle::latin_squares(3)) {
            std::vector<int> cells(9);
            for (int i = 0; i < 9; ++i) cells[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(g->row[static_cast<std::size_t>(i)] * 3 + g->col[static_cast<std::size_t>(i)])];
            out.push_back(cells);
          }
          return out;
        }()));
}

TEST_CASE("greedy critical sets on order 3 are critical and no smaller than the minimum") {
  BoardPtr b = build_board("b1");
  auto g = square_grid(*b);
  std::vector<std::vector<int>> fulls;
  for (const auto& a : oracle::latin_squares(3)) {
    std::vector<int> cells(9);
    for (int i = 0; i < 9; ++i)
      cells[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(g->row[static_cast<std::size_t>(i)] * 3 + g->col[static_cast<std::size_t>(i)])];
    fulls.push_back(cells);
  }
  for (const auto& f : fulls) {
    LatinBoard l{b, 1, {"1", "2", "3"}, f};
    PartialBoard c = find_critical_set(l, 9, 3);
    CHECK(oracle::completions(c.cells, fulls) == 1);
    for (std::size_t i = 0; i < 9; ++i)
      if (c.cells[i] >= 0) {
        auto d = c.cells;
        d[i] = -1;
        CHECK(oracle::completions(d, fulls) > 1);
      }
    CHECK(classify_partial(c) == PartialClass::Critical);
    CHECK(c.clue_count() >= oracle::minimum_defining_set(f, fulls));
  }
  CHECK(oracle::minimum_defining_set(fulls.front(), fulls) == 2);
}

TEST_CASE("adding clues never adds completions") {
  BoardPtr b = build_board("latin_square_base?n=4");
  LatinBoard l = label(WovenBoard{b, find_warp_classes(*b, 1, 1).at(0)}, parse_symbols("1..4"));
  std::mt19937 rng(21);
  for (int t = 0; t < 100; ++t) {
    PartialBoard p = as_partial(l);
    for (auto& c : p.cells)
      if (rng() % 3) c = -1;
    std::size_t before = count_completions(p, 1000);
    std::vector<int> empty;
    for (std::size_t i = 0; i < p.cells.size(); ++i)
      if (p.cells[i] < 0) empty.push_back(static_cast<int>(i));
    if (empty.empty()) continue;
    auto i = static_cast<std::size_t>(empty[rng() % empty.size()]);
    p.cells[i] = l.cells[i];
    CHECK(count_completions(p, 1000) <= before);
    CHECK(count_completions(p, 1000) >= 1);
  }
}

TEST_CASE("critical set search is deterministic") {
  BoardPtr b = build_board("monthai_base?n=6");
  LatinBoard l = label(WovenBoard{b, find_warp_classes(*b, 1, 1).at(0)}, parse_symbols("1..12"));
  CHECK(find_critical_set(l, 4, 2).cells == find_critical_set(l, 4, 2).cells);
  PartialBoard c = find_critical_set(l, 4, 2);
  CHECK(classify_partial(c) == PartialClass::Critical);
  auto hole = static_cast<std::size_t>(std::find(c.cells.begin(), c.cells.end(), -1) - c.cells.begin());
  c.cells[hole] = l.cells[hole];
  CHECK(classify_partial(c) == PartialClass::Subcritical);
  CHECK(classify_partial(as_partial(l)) == PartialClass::Subcritical);
}

TEST_CASE("removing an empty cell is an error") {
  PartialBoard p = fixtures::sudoku17();
  auto hole = std::find(p.cells.begin(), p.cells.end(), -1) - p.cells.begin();
  CHECK_THROWS_AS(without(p, static_cast<int>(hole)), Error);
}
