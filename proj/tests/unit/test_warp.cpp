#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <set>

#include "latin/catalog.hpp"
#include "latin/error.hpp"
#include "latin/latin.hpp"
#include "oracles.hpp"

using namespace latin;

namespace {

// Labels 1..9 run left to right from the top row; board ids count
// rows from the bottom.
LineSet from_labels(const std::vector<std::vector<int>>& lines) {
  LineSet out;
  for (const auto& l : lines) {
    Line m;
    for (int x : l) m.push_back((2 - (x - 1) / 3) * 3 + (x - 1) % 3);
    out.push_back(m);
  }
  return canonical(out);
}

// Latin squares spelled by all labelings of all warp classes.
std::set<std::vector<int>> squares_from_warps(const BoardPtr& b, int n) {
  auto grid = square_grid(*b);
  REQUIRE(grid.has_value());
  std::set<std::vector<int>> out;
  for (const auto& w : find_warp_classes(*b, 1)) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> a(static_cast<std::size_t>(n * n));
      for (std::size_t s = 0; s < w.lines.size(); ++s)
        for (int p : w.lines[s])
          a[static_cast<std::size_t>(grid->row[static_cast<std::size_t>(p)] * n + grid->col[static_cast<std::size_t>(p)])] =
              perm[s];
      out.insert(a);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::set<std::vector<std::vector<int>>> as_set(const std::vector<WarpClass>& ws) {
  std::set<std::vector<std::vector<int>>> s;
  for (const auto& w : ws) s.insert(w.lines);
  return s;
}

}  // namespace

TEST_CASE("b1 warp classes include both printed classes") {
  BoardPtr b = build_board("b1");
  auto ws = find_warp_classes(*b, 1);
  CHECK(ws.size() == 2);
  auto s = as_set(ws);
  CHECK(s.count(from_labels({{1, 6, 8}, {2, 4, 9}, {3, 5, 7}})));
  CHECK(s.count(from_labels({{3, 4, 8}, {2, 6, 7}, {1, 5, 9}})));
  for (const auto& w : ws) CHECK(verify_warp(*b, w).ok());
}

TEST_CASE("rows are not a warp class of b1") {
  BoardPtr b = build_board("b1");
  WarpReport r = verify_warp(*b, WarpClass{1, from_labels({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})});
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.counts);
  CHECK(r.bad_pair.has_value());
}

TEST_CASE("latin squares from warps match direct enumeration") {
  for (int n : {3, 4}) {
    BoardPtr b = build_board("latin_square_base?n=" + std::to_string(n));
    auto from_search = squares_from_warps(b, n);
    auto all = oracle::latin_squares(n);
    CHECK(from_search == std::set<std::vector<int>>(all.begin(), all.end()));
  }
  CHECK(oracle::latin_squares(3).size() == 12);
  CHECK(oracle::latin_squares(4).size() == 576);
}

TEST_CASE("size laws hold on every class found") {
  for (auto [ref, k] : std::vector<std::pair<std::string, int>>{
           {"monthai_base?n=6", 1}, {"monthai_base?n=6", 2}, {"monthai_base?n=6", 4}, {"monthai_base?n=4", 2},
           {"hexagon_base?n=2", 1}, {"tetrahedron_base?m=3", 1}, {"knut_vik_base?n=5", 1}}) {
    CAPTURE(ref);
    CAPTURE(k);
    BoardPtr b = build_board(ref);
    BoardClass cls = classify_board(*b);
    auto ws = find_warp_classes(*b, k, 20);
    CHECK_FALSE(ws.empty());
    std::size_t s = b->design.line(0).size();
    for (const auto& w : ws) {
      CHECK(verify_warp(*b, w, cls).ok());
      CHECK(s == static_cast<std::size_t>(k) * w.lines.size());
      if (cls == BoardClass::Weft) {
        std::size_t m = b->design.class_lines(b->design.classes().begin()->first).size();
        for (const auto& l : w.lines) CHECK(l.size() == static_cast<std::size_t>(k) * m);
      }
    }
  }
}

TEST_CASE("images of a warp class under the board group are warp classes") {
  for (const char* ref : {"b1", "monthai_base?n=6", "hexagon_base?n=2"}) {
    BoardPtr b = build_board(ref);
    for (const auto& w : find_warp_classes(*b, 1, 3))
      for (const auto& g : b->group.elements()) {
        LineSet img;
        for (const auto& l : w.lines) img.push_back(g.apply(l));
        CHECK(verify_warp(*b, WarpClass{1, canonical(img)}).ok());
      }
  }
}

TEST_CASE("search order is deterministic") {
  BoardPtr b = build_board("monthai_base?n=6");
  CHECK(find_warp_classes(*b, 1, 10) == find_warp_classes(*b, 1, 10));
  CHECK(find_warp_classes(*b, 2, 10) == find_warp_classes(*b, 2, 10));
}

TEST_CASE("symmetry pruning keeps every orbit") {
  for (const char* ref : {"latin_square_base?n=4", "monthai_base?n=6", "hexagon_base?n=2"}) {
    CAPTURE(ref);
    BoardPtr b = build_board(ref);
    auto full = find_warp_classes(*b, 1);
    auto pruned = find_warp_classes(*b, 1, SIZE_MAX, true);
    CHECK(pruned.size() <= full.size());
    auto fs = as_set(full);
    std::set<std::vector<std::vector<int>>> closure;
    for (const auto& w : pruned) {
      CHECK(fs.count(w.lines));
      for (const auto& g : b->group.elements()) {
        LineSet img;
        for (const auto& l : w.lines) img.push_back(g.apply(l));
        closure.insert(canonical(img));
      }
    }
    CHECK(closure == fs);
  }
}

TEST_CASE("the fano plane has no warp class") {
  BoardPtr b = build_board("fano");
  auto t0 = std::chrono::steady_clock::now();
  CHECK(find_warp_classes(*b, 1).empty());
  CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(1));
}

TEST_CASE("warp preconditions") {
  BoardPtr b = build_board("b1");
  CHECK(warp_symbol_count(*b, 1) == 3);
  CHECK_THROWS_AS(warp_symbol_count(*b, 2), Error);
  BoardPtr t = build_board("triangle_vertex_base?n=3");
  CHECK(warp_symbol_count(*t, 1) == 5);
}

TEST_CASE("warp from cells") {
  WarpClass w = warp_from_cells(1, {0, 1, 2, 1, 2, 0, 2, 0, 1}, 3);
  CHECK(w.lines == LineSet{{0, 5, 7}, {1, 3, 8}, {2, 4, 6}});
}
