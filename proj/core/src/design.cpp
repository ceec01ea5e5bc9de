#include "latin/design.hpp"

#include <algorithm>
#include <numeric>

#include "latin/dlx.hpp"
#include "latin/error.hpp"

namespace latin {

LineSet canonical(LineSet lines) {
  for (auto& l : lines) std::sort(l.begin(), l.end());
  std::sort(lines.begin(), lines.end());
  return lines;
}

Design::Design(std::size_t num_points, LineSet lines, std::map<std::string, std::vector<int>> classes)
    : num_points_(num_points) {
  std::vector<int> order(lines.size());
  std::iota(order.begin(), order.end(), 0);
  for (auto& l : lines) {
    std::sort(l.begin(), l.end());
    if (l.empty()) throw Error(ErrorCode::invalid_design, "empty line");
    if (std::adjacent_find(l.begin(), l.end()) != l.end())
      throw Error(ErrorCode::invalid_design, "line repeats a point");
    if (l.front() < 0 || static_cast<std::size_t>(l.back()) >= num_points)
      throw Error(ErrorCode::invalid_design, "line point out of range");
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return lines[static_cast<std::size_t>(a)] < lines[static_cast<std::size_t>(b)];
  });
  std::vector<int> new_index(lines.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    lines_.push_back(std::move(lines[static_cast<std::size_t>(order[i])]));
  }
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (!index_.emplace(lines_[i], static_cast<int>(i)).second)
      throw Error(ErrorCode::invalid_design, "repeated line (design must be simple)");
  }
  through_.assign(num_points, {});
  for (std::size_t i = 0; i < lines_.size(); ++i)
    for (int p : lines_[i]) through_[static_cast<std::size_t>(p)].push_back(static_cast<int>(i));
  for (std::size_t p = 0; p < num_points; ++p)
    if (through_[p].empty()) throw Error(ErrorCode::invalid_design, "point " + std::to_string(p) + " is on no line");

  std::vector<char> used(lines_.size(), 0);
  for (auto& [name, idx] : classes) {
    std::vector<int> mapped;
    for (int i : idx) {
      if (i < 0 || static_cast<std::size_t>(i) >= new_index.size())
        throw Error(ErrorCode::invalid_design, "class " + name + " refers to a missing line");
      int j = new_index[static_cast<std::size_t>(i)];
      if (used[static_cast<std::size_t>(j)]++)
        throw Error(ErrorCode::invalid_design, "class " + name + " reuses a line of another class");
      mapped.push_back(j);
    }
    std::sort(mapped.begin(), mapped.end());
    LineSet ls;
    for (int j : mapped) ls.push_back(lines_[static_cast<std::size_t>(j)]);
    if (!is_parallel_class(num_points, ls))
      throw Error(ErrorCode::invalid_design, "class " + name + " is not a parallel class");
    classes_.emplace(name, std::move(mapped));
  }
}

int Design::index_of(const Line& l) const {
  auto it = index_.find(l);
  return it == index_.end() ? -1 : it->second;
}

LineSet Design::class_lines(const std::string& name) const {
  auto it = classes_.find(name);
  if (it == classes_.end()) throw Error(ErrorCode::not_found, "no class named " + name);
  LineSet out;
  for (int i : it->second) out.push_back(lines_[static_cast<std::size_t>(i)]);
  return out;
}

bool is_k_uniform(const Design& d, std::size_t k) {
  return std::all_of(d.lines().begin(), d.lines().end(), [k](const Line& l) { return l.size() == k; });
}

std::optional<std::size_t> uniform_size(const LineSet& lines) {
  if (lines.empty()) return std::nullopt;
  for (const auto& l : lines)
    if (l.size() != lines.front().size()) return std::nullopt;
  return lines.front().size();
}

std::size_t intersection_size(const Line& a, const Line& b) {
  std::size_t n = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else ++n, ++i, ++j;
  }
  return n;
}

std::set<std::size_t> sin(const LineSet& lines, bool include_empty) {
  if (lines.size() < 2) throw Error(ErrorCode::undefined_sin, "SIN needs at least two lines");
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      std::size_t s = intersection_size(lines[i], lines[j]);
      if (s || include_empty) out.insert(s);
    }
  return out;
}

bool is_parallel_class(std::size_t num_points, const LineSet& lines) {
  std::vector<char> seen(num_points, 0);
  std::size_t covered = 0;
  for (const auto& l : lines)
    for (int p : l) {
      if (p < 0 || static_cast<std::size_t>(p) >= num_points || seen[static_cast<std::size_t>(p)]) return false;
      seen[static_cast<std::size_t>(p)] = 1;
      ++covered;
    }
  return covered == num_points;
}

bool are_orthogonal(const LineSet& c1, const LineSet& c2) {
  for (const auto& a : c1)
    for (const auto& b : c2)
      if (intersection_size(a, b) != 1) return false;
  return true;
}

Design dual(const Design& d) {
  LineSet lines;
  for (std::size_t p = 0; p < d.num_points(); ++p) lines.push_back(d.lines_through(static_cast<int>(p)));
  LineSet sorted = canonical(lines);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::non_simple_dual, "two points lie on the same set of lines");
  return Design(d.num_lines(), std::move(lines));
}

std::vector<Resolution> find_resolutions(const Design& d, std::size_t limit, bool force) {
  if (d.num_lines() > 64 && !force)
    throw Error(ErrorCode::too_large, std::to_string(d.num_lines()) + " lines exceed the resolution guard of 64");
  std::vector<std::vector<int>> classes;
  {
    ExactCover ec(d.num_points());
    for (const auto& l : d.lines()) ec.add_option(l);
    ec.solve([&](const std::vector<int>& chosen) {
      std::vector<int> c = chosen;
      std::sort(c.begin(), c.end());
      classes.push_back(std::move(c));
      if (classes.size() > 200000) throw Error(ErrorCode::too_large, "too many parallel classes");
      return true;
    });
  }
  std::vector<Resolution> out;
  if (classes.empty() || limit == 0) return out;
  ExactCover ec(d.num_lines());
  for (const auto& c : classes) ec.add_option(c);
  ec.solve([&](const std::vector<int>& chosen) {
    Resolution r;
    for (int c : chosen) r.push_back(classes[static_cast<std::size_t>(c)]);
    std::sort(r.begin(), r.end());
    out.push_back(std::move(r));
    return out.size() < limit;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_automorphism(const Design& d, const Permutation& g) {
  if (g.degree() != d.num_points()) return false;
  for (const auto& l : d.lines())
    if (d.index_of(g.apply(l)) < 0) return false;
  return true;
}

// --- partition refinement -----------------------------------------------------

namespace {

struct Coloring {
  std::vector<int> pc, lc;
};

int num_colors(const std::vector<int>& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

/// Replaces each signature by its rank among the distinct signatures, so
/// colours only depend on the structure, never on point names.
std::vector<int> rank(const std::vector<std::vector<int>>& sigs) {
  std::vector<std::vector<int>> uniq = sigs;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<int> out(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sigs[i]) - uniq.begin());
  return out;
}

Coloring refine(const Design& d, Coloring c) {
  int np = num_colors(c.pc), nl = num_colors(c.lc);
  std::vector<std::vector<int>> sig;
  for (;;) {
    sig.assign(d.num_lines(), {});
    for (std::size_t i = 0; i < d.num_lines(); ++i) {
      auto& s = sig[i];
      for (int p : d.line(i)) s.push_back(c.pc[static_cast<std::size_t>(p)]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), c.lc[i]);
    }
    c.lc = rank(sig);
    sig.assign(d.num_points(), {});
    for (std::size_t p = 0; p < d.num_points(); ++p) {
      auto& s = sig[p];
      for (int l : d.lines_through(static_cast<int>(p))) s.push_back(c.lc[static_cast<std::size_t>(l)]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), c.pc[p]);
    }
    c.pc = rank(sig);
    int np2 = num_colors(c.pc), nl2 = num_colors(c.lc);
    if (np2 == np && nl2 == nl) return c;
    np = np2, nl = nl2;
  }
}

Coloring individualize(Coloring c, int p) {
  c.pc[static_cast<std::size_t>(p)] = num_colors(c.pc);
  return c;
}

bool same_histogram(const Coloring& a, const Coloring& b) {
  auto hist = [](const std::vector<int>& v) {
    std::vector<int> h(static_cast<std::size_t>(num_colors(v)), 0);
    for (int x : v) ++h[static_cast<std::size_t>(x)];
    return h;
  };
  return hist(a.pc) == hist(b.pc) && hist(a.lc) == hist(b.lc);
}

/// A fixed individualization path through the reference design; candidate
/// mappings are searched against it.
class Matcher {
 public:
  explicit Matcher(const Design& ref) : ref_(ref) {
    Coloring c = refine(ref, Coloring{std::vector<int>(ref.num_points(), 0), std::vector<int>(ref.num_lines(), 0)});
    for (;;) {
      int cell = first_cell(c);
      if (cell < 0) break;
      int base = -1;
      for (std::size_t p = 0; p < c.pc.size() && base < 0; ++p)
        if (c.pc[p] == cell) base = static_cast<int>(p);
      path_.push_back({c, cell, base});
      c = refine(ref, individualize(c, base));
    }
    leaf_ = std::move(c);
  }

  struct Step {
    Coloring c;
    int cell;
    int base;
  };

  const std::vector<Step>& path() const noexcept { return path_; }

  /// Searches for g : ref -> target whose target colouring, at level j of
  /// the path, is `sigma`.
  std::optional<Permutation> extend(const Design& target, std::size_t j, const Coloring& sigma) const {
    const Coloring& ref = j == path_.size() ? leaf_ : path_[j].c;
    if (!same_histogram(ref, sigma)) return std::nullopt;
    if (j == path_.size()) {
      std::vector<int> where(sigma.pc.size());
      for (std::size_t q = 0; q < sigma.pc.size(); ++q) where[static_cast<std::size_t>(sigma.pc[q])] = static_cast<int>(q);
      std::vector<int> img(ref.pc.size());
      for (std::size_t p = 0; p < ref.pc.size(); ++p) img[p] = where[static_cast<std::size_t>(ref.pc[p])];
      Permutation g(std::move(img));
      for (const auto& l : ref_.lines())
        if (target.index_of(g.apply(l)) < 0) return std::nullopt;
      return g;
    }
    const int cell = path_[j].cell;
    for (std::size_t y = 0; y < sigma.pc.size(); ++y) {
      if (sigma.pc[y] != cell) continue;
      auto g = extend(target, j + 1, refine(target, individualize(sigma, static_cast<int>(y))));
      if (g) return g;
    }
    return std::nullopt;
  }

  Coloring initial(const Design& target) const {
    return refine(target, Coloring{std::vector<int>(target.num_points(), 0), std::vector<int>(target.num_lines(), 0)});
  }

 private:
  static int first_cell(const Coloring& c) {
    std::vector<int> count(static_cast<std::size_t>(num_colors(c.pc)), 0);
    for (int x : c.pc) ++count[static_cast<std::size_t>(x)];
    for (std::size_t i = 0; i < count.size(); ++i)
      if (count[i] > 1) return static_cast<int>(i);
    return -1;
  }

  const Design& ref_;
  std::vector<Step> path_;
  Coloring leaf_;
};

std::vector<int> orbit_under(const std::vector<Permutation>& gens, int x, std::size_t n) {
  std::vector<char> seen(n, 0);
  std::vector<int> out{x};
  seen[static_cast<std::size_t>(x)] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      int y = g(out[i]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
      }
    }
  return out;
}

}  // namespace

PermGroup automorphism_group(const Design& d, bool force) {
  if (d.num_points() > 32 && !force)
    throw Error(ErrorCode::too_large, std::to_string(d.num_points()) + " points exceed the automorphism guard of 32");
  const std::size_t n = d.num_points();
  Matcher m(d);
  std::vector<Permutation> gens;
  const auto& path = m.path();
  for (std::size_t i = path.size(); i-- > 0;) {
    const auto& step = path[i];
    std::vector<char> in_orbit(n, 0), failed(n, 0);
    for (int y : orbit_under(gens, step.base, n)) in_orbit[static_cast<std::size_t>(y)] = 1;
    for (std::size_t y = 0; y < n; ++y) {
      if (step.c.pc[y] != step.cell || in_orbit[y] || failed[y]) continue;
      auto g = m.extend(d, i + 1, refine(d, individualize(step.c, static_cast<int>(y))));
      if (g) {
        gens.push_back(std::move(*g));
        for (int z : orbit_under(gens, step.base, n)) in_orbit[static_cast<std::size_t>(z)] = 1;
      } else {
        for (int z : orbit_under(gens, static_cast<int>(y), n)) failed[static_cast<std::size_t>(z)] = 1;
      }
    }
  }
  return PermGroup(n, std::move(gens));
}

std::optional<Permutation> are_isomorphic(const Design& d1, const Design& d2, bool force) {
  if (std::max(d1.num_points(), d2.num_points()) > 32 && !force)
    throw Error(ErrorCode::too_large, "isomorphism test above 32 points needs force");
  if (d1.num_points() != d2.num_points() || d1.num_lines() != d2.num_lines()) return std::nullopt;
  Matcher m(d1);
  return m.extend(d2, 0, m.initial(d2));
}

}  // namespace latin
