#pragma once

// Brute-force reference implementations. Everything here works on plain
// arrays and vectors and never calls into the search code it checks.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

// Breadth-first closure under the generators.
inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> todo{id};
  while (!todo.empty()) {
    Perm x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Perm y = compose(g, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

inline std::set<std::vector<int>> line_set(const std::vector<std::vector<int>>& lines) {
  std::set<std::vector<int>> s;
  for (auto l : lines) {
    std::sort(l.begin(), l.end());
    s.insert(l);
  }
  return s;
}

inline bool maps_lines(const Perm& p, const std::vector<std::vector<int>>& lines) {
  auto s = line_set(lines);
  for (const auto& l : lines) {
    std::vector<int> img;
    for (int x : l) img.push_back(p[static_cast<std::size_t>(x)]);
    std::sort(img.begin(), img.end());
    if (!s.count(img)) return false;
  }
  return true;
}

// |Aut| by trying every point permutation.
inline std::size_t automorphism_count(std::size_t n, const std::vector<std::vector<int>>& lines) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    if (maps_lines(p, lines)) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// All n x n Latin squares, row-major, symbols 0..n-1.
inline std::vector<std::vector<int>> latin_squares(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n * n), -1);
  std::function<void(int)> fill = [&](int i) {
    if (i == n * n) {
      out.push_back(a);
      return;
    }
    int r = i / n, c = i % n;
    for (int s = 0; s < n; ++s) {
      bool ok = true;
      for (int j = 0; j < c && ok; ++j) ok = a[static_cast<std::size_t>(r * n + j)] != s;
      for (int j = 0; j < r && ok; ++j) ok = a[static_cast<std::size_t>(j * n + c)] != s;
      if (!ok) continue;
      a[static_cast<std::size_t>(i)] = s;
      fill(i + 1);
    }
    a[static_cast<std::size_t>(i)] = -1;
  };
  fill(0);
  return out;
}

// Number of main classes (paratopy) among all order-n squares, by
// union-find over the generators: adjacent row, column and symbol swaps,
// the transpose and the (row, col, sym) -> (sym, col, row) conjugate.
inline std::size_t paratopy_classes(int n) {
  auto all = latin_squares(n);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
  std::vector<std::size_t> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto at = [n](const std::vector<int>& a, int r, int c) { return a[static_cast<std::size_t>(r * n + c)]; };
  auto N = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& a = all[i];
    std::vector<std::vector<int>> images;
    for (int t = 0; t + 1 < n; ++t) {
      std::vector<int> rows(N * N), cols(N * N), syms(N * N);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          int rr = r == t ? t + 1 : r == t + 1 ? t : r;
          int cc = c == t ? t + 1 : c == t + 1 ? t : c;
          rows[static_cast<std::size_t>(r * n + c)] = at(a, rr, c);
          cols[static_cast<std::size_t>(r * n + c)] = at(a, r, cc);
          int s = at(a, r, c);
          syms[static_cast<std::size_t>(r * n + c)] = s == t ? t + 1 : s == t + 1 ? t : s;
        }
      images.push_back(rows);
      images.push_back(cols);
      images.push_back(syms);
    }
    std::vector<int> tr(N * N), conj(N * N);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        tr[static_cast<std::size_t>(c * n + r)] = at(a, r, c);
        conj[static_cast<std::size_t>(at(a, r, c) * n + c)] = r;
      }
    images.push_back(tr);
    images.push_back(conj);
    for (const auto& img : images) parent[find(i)] = find(index.at(img));
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < all.size(); ++i) roots.insert(find(i));
  return roots.size();
}

// Completions of a partial square (-1 = empty) among a list of full ones.
inline std::size_t completions(const std::vector<int>& partial, const std::vector<std::vector<int>>& fulls) {
  std::size_t c = 0;
  for (const auto& f : fulls) {
    bool ok = true;
    for (std::size_t i = 0; i < partial.size() && ok; ++i) ok = partial[i] < 0 || partial[i] == f[i];
    c += ok;
  }
  return c;
}

// Smallest number of clues of `full` that force it, by trying all subsets.
inline std::size_t minimum_defining_set(const std::vector<int>& full, const std::vector<std::vector<int>>& fulls) {
  std::size_t n = full.size(), best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= best) continue;
    std::vector<int> p(n, -1);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) p[i] = full[i];
    if (completions(p, fulls) == 1) best = size;
  }
  return best;
}

// Closed forms for {vertices, edges, faces} of a biregular polygon of order n.
struct Counts {
  long vertices, edges, faces;
};
inline Counts triangle_counts(long n) { return {(n + 1) * (n + 2) / 2, 3 * n * (n + 1) / 2, n * n}; }
inline Counts square_counts(long n) { return {(n + 1) * (n + 1), 2 * n * (n + 1), n * n}; }
inline Counts hexagon_counts(long n) { return {3 * n * n + 3 * n + 1, 3 * n * (3 * n + 1), 6 * n * n}; }

}  // namespace oracle
