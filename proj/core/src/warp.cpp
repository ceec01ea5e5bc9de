#include "latin/warp.hpp"

#include <algorithm>

#include "latin/error.hpp"

namespace latin {

WarpClass warp_from_cells(int k, const std::vector<int>& cells, int n) {
  LineSet lines(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < cells.size(); ++p) lines.at(static_cast<std::size_t>(cells[p])).push_back(static_cast<int>(p));
  return WarpClass{k, canonical(std::move(lines))};
}

int warp_symbol_count(const Board& b, int k) {
  if (k < 1) throw Error(ErrorCode::invalid_parameter, "k must be at least 1");
  auto s = uniform_size(b.design.lines());
  if (!s) throw Error(ErrorCode::not_uniform, "symmetric lines differ in size, so no warp class can exist");
  if (*s % static_cast<std::size_t>(k) != 0)
    throw Error(ErrorCode::size_mismatch, "line size " + std::to_string(*s) + " is not a multiple of k = " + std::to_string(k));
  return static_cast<int>(*s / static_cast<std::size_t>(k));
}

std::size_t for_each_warp_class(const Board& b, const WarpOptions& options,
                                const std::function<bool(const WarpClass&)>& visit, SearchStats* stats) {
  const int n = warp_symbol_count(b, options.k);
  const std::size_t P = b.design.num_points();
  if (P % static_cast<std::size_t>(n) != 0) return 0;
  std::size_t emitted = 0;
  SearchStats total;
  auto emit = [&](const std::vector<int>& cells) {
    if (emitted >= options.limit) return false;
    ++emitted;
    return visit(warp_from_cells(options.k, cells, n)) && emitted < options.limit;
  };
  LabelProblem pr{&b.design, options.k, n, {}, true};
  if (options.limit == 0) return 0;
  if (!options.prune_by_symmetry) {
    total = solve_labelings(pr, emit, options.engine);
  } else {
    const int p0 = b.design.line(0).front();
    const auto stab = b.group.stabilizer_elements(p0);
    bool go_on = true;
    for_each_transversal(b.design, options.k, P / static_cast<std::size_t>(n), {p0}, [&](const std::vector<int>& t) {
      for (const auto& g : stab)
        if (g.apply(t) < t) return true;
      LabelProblem fixed = pr;
      fixed.fixed.assign(P, -1);
      for (int p : t) fixed.fixed[static_cast<std::size_t>(p)] = 0;
      auto st = solve_labelings(
          fixed,
          [&](const std::vector<int>& cells) {
            go_on = emit(cells);
            return go_on;
          },
          options.engine);
      total.nodes += st.nodes;
      total.solutions += st.solutions;
      return go_on;
    });
  }
  if (stats) *stats = total;
  return emitted;
}

std::vector<WarpClass> find_warp_classes(const Board& b, int k, std::size_t limit, bool prune_by_symmetry) {
  std::vector<WarpClass> out;
  WarpOptions o;
  o.k = k;
  o.limit = limit;
  o.prune_by_symmetry = prune_by_symmetry;
  for_each_warp_class(b, o, [&](const WarpClass& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

WarpReport verify_warp(const Board& b, const WarpClass& w, std::optional<BoardClass> cls) {
  WarpReport r;
  const auto& sym = b.design.lines();
  LineSet lines = canonical(w.lines);

  std::vector<int> hits(b.design.num_points(), 0);
  bool in_range = true;
  for (const auto& l : lines)
    for (int p : l) {
      if (p < 0 || static_cast<std::size_t>(p) >= hits.size()) in_range = false;
      else ++hits[static_cast<std::size_t>(p)];
    }
  r.partition = in_range;
  if (!in_range) r.failures.push_back("warp line mentions a point outside the board");
  for (std::size_t p = 0; p < hits.size() && in_range; ++p)
    if (hits[p] != 1) {
      r.partition = false;
      r.failures.push_back("point " + std::to_string(p) + " is on " + std::to_string(hits[p]) + " warp lines");
    }

  r.counts = true;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < sym.size(); ++j) {
      std::size_t c = intersection_size(lines[i], sym[j]);
      if (c == static_cast<std::size_t>(w.k)) continue;
      if (r.counts) r.bad_pair = std::pair{static_cast<int>(i), static_cast<int>(j)};
      r.counts = false;
      r.failures.push_back("warp line " + std::to_string(i) + " meets symmetric line " + std::to_string(j) + " in " +
                           std::to_string(c) + " points, expected " + std::to_string(w.k));
    }

  r.size_law = true;
  for (std::size_t j = 0; j < sym.size(); ++j)
    if (sym[j].size() != static_cast<std::size_t>(w.k) * lines.size()) {
      r.size_law = false;
      r.failures.push_back("symmetric line " + std::to_string(j) + " has size " + std::to_string(sym[j].size()) +
                           ", not k*|W| = " + std::to_string(static_cast<std::size_t>(w.k) * lines.size()));
    }

  BoardClass c = cls ? *cls : classify_board(b);
  if (c == BoardClass::Weft) {
    auto res = weft_resolution(b);
    if (res && !res->empty()) {
      std::size_t m = res->front().size();
      r.uniform = std::all_of(lines.begin(), lines.end(),
                              [&](const Line& l) { return l.size() == static_cast<std::size_t>(w.k) * m; });
      if (!*r.uniform)
        r.failures.push_back("weft board but warp lines are not all of size k*m = " +
                             std::to_string(static_cast<std::size_t>(w.k) * m));
    }
  }
  return r;
}

}  // namespace latin
