#include <doctest.h>

#include <random>

#include "latin/error.hpp"
#include "latin/perm.hpp"
#include "oracles.hpp"

using namespace latin;

TEST_CASE("composition applies the right factor first") {
  auto a = Permutation::from_cycles(3, {{0, 1}});
  auto b = Permutation::from_cycles(3, {{1, 2}});
  CHECK((a * b)(1) == a(b(1)));
  CHECK((a * b)(1) == 2);
  CHECK((b * a)(1) == 0);
  CHECK((a * a.inverse()).is_identity());
  CHECK(Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}}).order() == 6);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
}

TEST_CASE("cycle strings") {
  CHECK(Permutation::from_cycles(5, {{0, 2}, {1, 3, 4}}).to_cycle_string() == "(0 2)(1 3 4)");
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
}

TEST_CASE("group order matches brute-force closure") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 3 + static_cast<std::size_t>(rng() % 5);
    std::vector<Permutation> gens;
    std::vector<oracle::Perm> raw;
    int k = 1 + static_cast<int>(rng() % 2);
    for (int g = 0; g < k; ++g) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      gens.emplace_back(p);
      raw.push_back(p);
    }
    PermGroup G(n, gens);
    auto all = oracle::closure(raw, n);
    CHECK(G.order() == all.size());
    for (const auto& p : all) CHECK(G.contains(Permutation(p)));
    if (all.size() < 200) CHECK(G.elements().size() == all.size());
  }
}

TEST_CASE("symmetric group orders") {
  for (std::size_t n = 2; n <= 10; ++n) {
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    PermGroup S(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cyc})});
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    CHECK(S.order() == f);
  }
}

TEST_CASE("orbits and stabilizers") {
  // D4 on the corners of a square
  PermGroup D(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{1, 3}})});
  CHECK(D.order() == 8);
  CHECK(D.orbit(0) == std::vector<int>{0, 1, 2, 3});
  auto st = D.stabilizer_elements(0);
  CHECK(st.size() == 2);
  for (const auto& g : st) CHECK(g(0) == 0);
  CHECK_THROWS_AS(D.elements(4), Error);
}
