#include <doctest.h>

#include <random>

#include "latin/catalog.hpp"
#include "latin/error.hpp"
#include "latin/latin.hpp"
#include "oracles.hpp"

using namespace latin;

namespace {

std::vector<LatinBoard> all_latin(const BoardPtr& b, int n) {
  std::vector<LatinBoard> out;
  auto syms = parse_symbols("1.." + std::to_string(n));
  for (const auto& w : find_warp_classes(*b, 1)) {
    auto s = syms;
    do out.push_back(label(WovenBoard{b, w}, s));
    while (std::next_permutation(s.begin(), s.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("symbol lists") {
  CHECK(parse_symbols("1..4") == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(parse_symbols("H,E,L,I,O,S").size() == 6);
  CHECK(parse_symbols("a").size() == 1);
}

TEST_CASE("labeling b1 gives a latin square") {
  BoardPtr b = build_board("b1");
  auto w = find_warp_classes(*b, 1).at(0);
  LatinBoard l = label(WovenBoard{b, w}, {"1", "2", "3"});
  CHECK(verify_latin(l).ok());
  CHECK(l.warp() == w);
  auto g = square_grid(*b);
  REQUIRE(g.has_value());
  for (int r = 0; r < 3; ++r) {
    std::set<int> row, col;
    for (int c = 0; c < 3; ++c) {
      row.insert(l.cells[static_cast<std::size_t>(g->at[r][c])]);
      col.insert(l.cells[static_cast<std::size_t>(g->at[c][r])]);
    }
    CHECK(row.size() == 3);
    CHECK(col.size() == 3);
  }
  CHECK_THROWS_AS(label(WovenBoard{b, w}, {"1", "2"}), Error);
  auto bad = l.cells;
  std::swap(bad[0], bad[1]);
  CHECK_FALSE(verify_latin(*b, 1, bad, 3).ok());
}

TEST_CASE("square grids") {
  CHECK(square_grid(*build_board("latin_square_base?n=5")).has_value());
  CHECK_FALSE(square_grid(*build_board("monthai_base?n=4")).has_value());
  CHECK_FALSE(square_grid(*build_board("fano")).has_value());
}

TEST_CASE("conjugates of a cyclic square") {
  BoardPtr b = build_board("latin_square_base?n=3");
  LatinBoard l = all_latin(b, 3).front();
  auto cs = conjugates(l);
  CHECK(!cs.empty());
  CHECK(cs.size() <= 6);
  for (const auto& c : cs) CHECK(verify_latin(c).ok());
  BoardPtr m = build_board("monthai_base?n=6");
  LatinBoard ml = label(WovenBoard{m, find_warp_classes(*m, 1, 1).at(0)}, parse_symbols("1..12"));
  CHECK_THROWS_AS(conjugates(ml), Error);
}

TEST_CASE("grid isotopy group order") {
  for (int n : {2, 3, 4}) {
    auto g = square_grid(*build_board("latin_square_base?n=" + std::to_string(n)));
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    CHECK(grid_isotopy_group(*g).order() == static_cast<std::size_t>(2 * f * f));
  }
}

TEST_CASE("canonical form is invariant under the transform set") {
  BoardPtr b = build_board("latin_square_base?n=4");
  Equivalence eq = default_equivalence(*b);
  CHECK(eq.conjugates);
  std::mt19937 rng(5);
  auto boards = all_latin(b, 4);
  const auto& el = eq.points.elements();
  for (int t = 0; t < 30; ++t) {
    const LatinBoard& l = boards[rng() % boards.size()];
    const Permutation& g = el[rng() % el.size()];
    LatinBoard m = l;
    for (std::size_t p = 0; p < l.cells.size(); ++p) m.cells[static_cast<std::size_t>(g(static_cast<int>(p)))] = l.cells[p];
    std::vector<int> rename{2, 0, 3, 1};
    for (int& c : m.cells) c = rename[static_cast<std::size_t>(c)];
    CHECK(canonical_form(m, eq) == canonical_form(l, eq));
  }
}

TEST_CASE("paratopy classes agree with union-find over all squares") {
  for (int n : {3, 4}) {
    CAPTURE(n);
    BoardPtr b = build_board("latin_square_base?n=" + std::to_string(n));
    std::size_t expect = oracle::paratopy_classes(n);
    CHECK(equivalence_reduce(all_latin(b, n), default_equivalence(*b)).size() == expect);
    CHECK(count_latin_boards(b, 1, CountMode::equiv, 1000).count == expect);
    CHECK(count_latin_boards(b, 1, CountMode::raw, 100000).count == oracle::latin_squares(n).size());
  }
  CHECK(oracle::paratopy_classes(3) == 1);
  CHECK(oracle::paratopy_classes(4) == 2);
}

TEST_CASE("count caps are reported") {
  BoardPtr b = build_board("latin_square_base?n=4");
  CountResult r = count_latin_boards(b, 1, CountMode::raw, 100);
  CHECK(r.partial);
  CHECK(r.count >= 100);
}

TEST_CASE("non-square boards use their own group") {
  BoardPtr b = build_board("monthai_base?n=4");
  Equivalence eq = default_equivalence(*b);
  CHECK_FALSE(eq.conjugates);
  CHECK(eq.points.order() == b->group.order());
}
