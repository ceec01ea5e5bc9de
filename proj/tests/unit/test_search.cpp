#include <doctest.h>

#include <random>

#include "latin/catalog.hpp"
#include "latin/dlx.hpp"
#include "latin/error.hpp"
#include "latin/search.hpp"
#include "oracles.hpp"

using namespace latin;

TEST_CASE("exact cover agrees with subset enumeration") {
  std::mt19937 rng(3);
  for (int t = 0; t < 60; ++t) {
    int items = 4 + static_cast<int>(rng() % 5);
    int opts = 6 + static_cast<int>(rng() % 8);
    std::vector<std::vector<int>> options;
    ExactCover ec(static_cast<std::size_t>(items));
    for (int o = 0; o < opts; ++o) {
      std::vector<int> row;
      for (int i = 0; i < items; ++i)
        if (rng() % 3 == 0) row.push_back(i);
      if (row.empty()) row.push_back(static_cast<int>(rng() % static_cast<unsigned>(items)));
      options.push_back(row);
      ec.add_option(row);
    }
    std::size_t brute = 0;
    for (unsigned mask = 0; mask < (1u << opts); ++mask) {
      std::vector<int> hit(static_cast<std::size_t>(items), 0);
      for (int o = 0; o < opts; ++o)
        if (mask >> o & 1u)
          for (int i : options[static_cast<std::size_t>(o)]) ++hit[static_cast<std::size_t>(i)];
      bool ok = true;
      for (int h : hit) ok = ok && h == 1;
      brute += ok;
    }
    CHECK(ec.count(1000) == brute);
  }
}

TEST_CASE("exact cover with preselection") {
  ExactCover ec(4);
  int a = ec.add_option({0, 1});
  ec.add_option({2, 3});
  int c = ec.add_option({1, 2});
  ec.add_option({0});
  ec.add_option({3});
  CHECK(ec.select(c));
  std::vector<std::vector<int>> sols;
  ec.solve([&](const std::vector<int>& s) {
    sols.push_back(s);
    return true;
  });
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].front() == c);
  CHECK_FALSE(ec.select(a));
  CHECK(ec.count(10) == 0);
}

TEST_CASE("labelings of the 3x3 grid are the order-3 Latin squares") {
  BoardPtr b = build_board("latin_square_base?n=3");
  LabelProblem p{&b->design, 1, 3, {}, false};
  std::size_t expect = oracle::latin_squares(3).size();
  CHECK(count_labelings(p, 1000, Engine::dlx) == expect);
  CHECK(count_labelings(p, 1000, Engine::backtrack) == expect);
  p.break_symbols = true;
  CHECK(count_labelings(p, 1000, Engine::dlx) * 6 == expect);
  CHECK(count_labelings(p, 1000, Engine::backtrack) * 6 == expect);
}

TEST_CASE("both engines agree with k > 1") {
  BoardPtr b = build_board("monthai_base?n=4");
  LabelProblem p{&b->design, 2, 4, {}, true};
  CHECK(count_labelings(p, 100000, Engine::backtrack) == count_labelings(p, 100000, Engine::automatic));
  p.k = 3;
  CHECK_THROWS_AS(count_labelings(p, 10), Error);
}

TEST_CASE("transversals meet every line k times") {
  BoardPtr b = build_board("latin_square_base?n=4");
  std::size_t n = 0;
  for_each_transversal(b->design, 1, 4, {0}, [&](const std::vector<int>& t) {
    ++n;
    for (const auto& l : b->design.lines()) CHECK(intersection_size(l, t) == 1);
    CHECK(t.front() == 0);
    return true;
  });
  CHECK(n == 6);  // permutation matrices through a fixed cell: 3!
}
