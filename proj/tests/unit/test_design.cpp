#include <doctest.h>

#include <functional>

#include "latin/catalog.hpp"
#include "latin/design.hpp"
#include "latin/error.hpp"
#include "oracles.hpp"

using namespace latin;

namespace {

Design grid3(bool with_symbols) {
  LineSet lines{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}};
  std::map<std::string, std::vector<int>> cls{{"H", {0, 1, 2}}, {"V", {3, 4, 5}}};
  if (with_symbols) {
    for (Line l : {Line{0, 4, 8}, Line{1, 5, 6}, Line{2, 3, 7}}) lines.push_back(l);
    cls["S"] = {6, 7, 8};
  }
  return Design(9, lines, cls);
}

// Resolutions counted by recursion over subsets of lines.
std::size_t brute_resolutions(const Design& d) {
  std::size_t L = d.num_lines();
  std::vector<unsigned> classes;
  for (unsigned mask = 1; mask < (1u << L); ++mask) {
    std::vector<int> seen(d.num_points(), 0);
    bool ok = true;
    for (std::size_t i = 0; i < L && ok; ++i)
      if (mask >> i & 1u)
        for (int p : d.line(i)) ok = ++seen[static_cast<std::size_t>(p)] == 1;
    for (int s : seen) ok = ok && s == 1;
    if (ok) classes.push_back(mask);
  }
  std::size_t count = 0;
  std::function<void(unsigned)> go = [&](unsigned used) {
    if (used == (1u << L) - 1) {
      ++count;
      return;
    }
    unsigned low = ~used & (used + 1);  // first unused line
    for (unsigned c : classes)
      if ((c & low) && !(c & used)) go(used | c);
  };
  go(0);
  return count;
}

}  // namespace

TEST_CASE("fano plane") {
  Design f = fano_design();
  CHECK(f.num_points() == 7);
  CHECK(f.num_lines() == 7);
  CHECK(is_k_uniform(f, 3));
  CHECK(sin(f) == std::set<std::size_t>{1});
  CHECK(automorphism_group(f).order() == 168);
  CHECK(oracle::automorphism_count(7, f.lines()) == 168);
  auto w = are_isomorphic(f, dual(f));
  REQUIRE(w.has_value());
  CHECK(oracle::line_set(dual(f).lines()) == oracle::line_set([&] {
          LineSet img;
          for (const auto& l : f.lines()) img.push_back(w->apply(l));
          return img;
        }()));
  CHECK(find_resolutions(f).empty());
}

TEST_CASE("grid designs") {
  Design b1 = grid3(false);
  CHECK(sin(b1) == std::set<std::size_t>{1});
  CHECK(sin(b1, true) == std::set<std::size_t>{0, 1});
  CHECK(is_parallel_class(b1, b1.class_lines("H")));
  CHECK(are_orthogonal(b1.class_lines("H"), b1.class_lines("V")));
  CHECK(find_resolutions(b1).size() == brute_resolutions(b1));
  CHECK(find_resolutions(b1).size() == 1);
  CHECK(automorphism_group(b1).order() == 72);
  CHECK(oracle::automorphism_count(9, b1.lines()) == 72);

  Design b2 = grid3(true);
  CHECK(find_resolutions(b2).size() == brute_resolutions(b2));
  for (const auto& l : b2.class_lines("S")) CHECK(b2.index_of(l) >= 0);
  CHECK(b2.lines_through(4).size() == 3);
}

TEST_CASE("dual of the dual is isomorphic") {
  for (const Design& d : {fano_design(), grid3(true)}) {
    Design dd = dual(dual(d));
    CHECK(dd.num_points() == d.num_points());
    CHECK(are_isomorphic(d, dd).has_value());
  }
  // points 1 and 2 lie on the same lines
  CHECK_THROWS_AS(dual(Design(3, {{0, 1, 2}, {0}})), Error);
}

TEST_CASE("isomorphism witnesses map lines onto lines") {
  Design a = grid3(false);
  Permutation g = Permutation::from_cycles(9, {{0, 5, 7}, {1, 3}});
  LineSet moved;
  for (const auto& l : a.lines()) moved.push_back(g.apply(l));
  Design b(9, moved);
  auto w = are_isomorphic(a, b);
  REQUIRE(w.has_value());
  LineSet img;
  for (const auto& l : a.lines()) img.push_back(w->apply(l));
  CHECK(canonical(img) == b.lines());
  CHECK_FALSE(are_isomorphic(grid3(false), grid3(true)).has_value());
}

TEST_CASE("invalid designs") {
  CHECK_THROWS_AS(Design(3, {{0, 1}, {}}), Error);
  CHECK_THROWS_AS(Design(3, {{0, 1}, {1, 0}, {2}}), Error);
  CHECK_THROWS_AS(Design(3, {{0, 1}, {2, 3}}), Error);
  CHECK_THROWS_AS(Design(3, {{0, 1}}), Error);
  CHECK_THROWS_AS(Design(3, {{0, 1}, {1, 2}}, {{"X", {0, 1}}}), Error);
  CHECK_THROWS_AS(sin(LineSet{{0, 1}}), Error);
}

TEST_CASE("automorphism group refuses large designs without force") {
  LineSet lines;
  for (int i = 0; i + 1 < 40; ++i) lines.push_back({i, i + 1});
  Design d(40, lines);  // a path: only the reversal
  CHECK_THROWS_AS(automorphism_group(d), Error);
  CHECK(automorphism_group(d, true).order() == 2);
}
