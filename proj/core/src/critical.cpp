#include "latin/critical.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "latin/error.hpp"

namespace latin {

std::size_t PartialBoard::clue_count() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](int s) { return s >= 0; }));
}

std::string_view to_string(PartialClass c) noexcept {
  switch (c) {
    case PartialClass::Incompletable: return "Incompletable";
    case PartialClass::MultiCompletable: return "MultiCompletable";
    case PartialClass::Subcritical: return "Subcritical";
    case PartialClass::Critical: return "Critical";
  }
  return "?";
}

namespace {

void check_shape(const PartialBoard& p) {
  if (!p.base) throw Error(ErrorCode::invalid_partial, "partial board without a base");
  if (p.cells.size() != p.base->design.num_points())
    throw Error(ErrorCode::invalid_partial, "expected " + std::to_string(p.base->design.num_points()) + " cells");
  for (int s : p.cells)
    if (s < -1 || s >= static_cast<int>(p.symbols.size()))
      throw Error(ErrorCode::invalid_partial, "cell symbol out of range");
}

}  // namespace

std::vector<Violation> violations(const PartialBoard& p) {
  check_shape(p);
  std::vector<Violation> out;
  std::vector<int> count(p.symbols.size());
  for (std::size_t j = 0; j < p.base->design.num_lines(); ++j) {
    std::fill(count.begin(), count.end(), 0);
    for (int q : p.base->design.line(j))
      if (int s = p.cells[static_cast<std::size_t>(q)]; s >= 0) ++count[static_cast<std::size_t>(s)];
    for (std::size_t s = 0; s < count.size(); ++s)
      if (count[s] > p.k) out.push_back({static_cast<int>(j), static_cast<int>(s), count[s]});
  }
  return out;
}

std::size_t count_completions(const PartialBoard& p, std::size_t cap) {
  auto v = violations(p);
  if (!v.empty())
    throw Error(ErrorCode::invalid_partial, "symbol " + p.symbols[static_cast<std::size_t>(v[0].symbol)] + " occurs " +
                                                std::to_string(v[0].count) + " times on line " + std::to_string(v[0].line));
  LabelProblem pr{&p.base->design, p.k, static_cast<int>(p.symbols.size()), p.cells, false};
  return count_labelings(pr, cap);
}

std::optional<std::vector<int>> unique_completion(const PartialBoard& p) {
  if (!violations(p).empty()) return std::nullopt;
  LabelProblem pr{&p.base->design, p.k, static_cast<int>(p.symbols.size()), p.cells, false};
  std::vector<int> first;
  std::size_t seen = 0;
  solve_labelings(pr, [&](const std::vector<int>& cells) {
    if (seen++ == 0) first = cells;
    return seen < 2;
  });
  if (seen != 1) return std::nullopt;
  return first;
}

PartialBoard without(const PartialBoard& p, int point) {
  PartialBoard q = p;
  int& cell = q.cells.at(static_cast<std::size_t>(point));
  if (cell < 0) throw Error(ErrorCode::invalid_partial, "point " + std::to_string(point) + " holds no clue");
  cell = -1;
  return q;
}

PartialBoard as_partial(const LatinBoard& full) { return PartialBoard{full.base, full.k, full.symbols, full.cells}; }

PartialClass classify_partial(const PartialBoard& p) {
  if (!violations(p).empty()) return PartialClass::Incompletable;
  std::size_t c = count_completions(p, 2);
  if (c == 0) return PartialClass::Incompletable;
  if (c >= 2) return PartialClass::MultiCompletable;
  PartialBoard q = p;
  for (std::size_t i = 0; i < q.cells.size(); ++i) {
    int s = q.cells[i];
    if (s < 0) continue;
    q.cells[i] = -1;
    bool still_unique = count_completions(q, 2) == 1;
    q.cells[i] = s;
    if (still_unique) return PartialClass::Subcritical;
  }
  return PartialClass::Critical;
}

PartialBoard find_critical_set(const LatinBoard& full, std::uint64_t seed, int restarts) {
  auto rep = verify_latin(full);
  if (!rep.ok()) throw Error(ErrorCode::invalid_partial, "not a full Latin board: " + rep.failures.front());
  std::optional<PartialBoard> best;
  std::mt19937_64 rng(seed);
  for (int run = 0; run <= std::max(0, restarts); ++run) {
    PartialBoard p = as_partial(full);
    std::vector<int> order(p.cells.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int q : order) {
      int s = p.cells[static_cast<std::size_t>(q)];
      p.cells[static_cast<std::size_t>(q)] = -1;
      if (count_completions(p, 2) != 1) p.cells[static_cast<std::size_t>(q)] = s;
    }
    if (!best || p.clue_count() < best->clue_count()) best = std::move(p);
  }
  return *best;
}

}  // namespace latin
