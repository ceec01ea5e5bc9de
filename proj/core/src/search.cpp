#include "latin/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "latin/dlx.hpp"
#include "latin/error.hpp"

namespace latin {

namespace {

void check_problem(const LabelProblem& pr) {
  if (!pr.design) throw Error(ErrorCode::invalid_parameter, "labeling problem without a design");
  if (pr.k < 1 || pr.n < 1) throw Error(ErrorCode::invalid_parameter, "k and n must be positive");
  for (const auto& l : pr.design->lines())
    if (l.size() != static_cast<std::size_t>(pr.k * pr.n))
      throw Error(ErrorCode::size_mismatch, "line of size " + std::to_string(l.size()) + " is not k*n = " +
                                                std::to_string(pr.k * pr.n));
  if (!pr.fixed.empty() && pr.fixed.size() != pr.design->num_points())
    throw Error(ErrorCode::invalid_parameter, "fixed assignment has the wrong length");
  for (int s : pr.fixed)
    if (s < -1 || s >= pr.n) throw Error(ErrorCode::invalid_parameter, "fixed symbol out of range");
  if (pr.break_symbols)
    for (int s : pr.fixed)
      if (s > 0) throw Error(ErrorCode::invalid_parameter, "symbol breaking allows only symbol 0 to be fixed");
}

// --- k = 1: exact cover ------------------------------------------------------------

SearchStats solve_dlx(const LabelProblem& pr, const std::function<bool(const std::vector<int>&)>& visit) {
  const Design& d = *pr.design;
  const int P = static_cast<int>(d.num_points());
  const int n = pr.n;
  ExactCover ec(static_cast<std::size_t>(P) + d.num_lines() * static_cast<std::size_t>(n));
  std::vector<int> opt_point, opt_sym;
  std::vector<int> option_of(static_cast<std::size_t>(P) * static_cast<std::size_t>(n), -1);
  std::vector<int> items;
  for (int p = 0; p < P; ++p) {
    int f = pr.fixed.empty() ? -1 : pr.fixed[static_cast<std::size_t>(p)];
    for (int s = 0; s < n; ++s) {
      if (f >= 0 && f != s) continue;
      items.assign(1, p);
      for (int l : d.lines_through(p)) items.push_back(P + l * n + s);
      option_of[static_cast<std::size_t>(p * n + s)] = ec.add_option(items);
      opt_point.push_back(p);
      opt_sym.push_back(s);
    }
  }
  std::vector<int> preset = pr.fixed.empty() ? std::vector<int>(static_cast<std::size_t>(P), -1) : pr.fixed;
  bool ok = true;
  if (pr.break_symbols) {
    const Line& l0 = d.line(0);
    for (std::size_t i = 0; i < l0.size(); ++i) {
      int& f = preset[static_cast<std::size_t>(l0[i])];
      if (f >= 0 && f != static_cast<int>(i)) ok = false;
      f = static_cast<int>(i);
    }
  }
  for (int p = 0; p < P && ok; ++p) {
    int f = preset[static_cast<std::size_t>(p)];
    if (f < 0) continue;
    int opt = option_of[static_cast<std::size_t>(p * n + f)];
    ok = opt >= 0 && ec.select(opt);
  }
  SearchStats stats;
  if (!ok) return stats;
  std::vector<int> cells(static_cast<std::size_t>(P), -1);
  stats.solutions = ec.solve([&](const std::vector<int>& chosen) {
    for (int o : chosen) cells[static_cast<std::size_t>(opt_point[static_cast<std::size_t>(o)])] = opt_sym[static_cast<std::size_t>(o)];
    return visit(cells);
  });
  stats.nodes = ec.nodes();
  return stats;
}

// --- any k: backtracking over points --------------------------------------------

class Backtracker {
 public:
  Backtracker(const LabelProblem& pr, const std::function<bool(const std::vector<int>&)>& visit)
      : d_(*pr.design), k_(pr.k), n_(pr.n), visit_(visit) {
    if (n_ > 64) throw Error(ErrorCode::invalid_parameter, "backtracking engine supports at most 64 symbols");
    all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    const std::size_t P = d_.num_points();
    sym_.assign(P, -1);
    cnt_.assign(d_.num_lines() * static_cast<std::size_t>(n_), 0);
    full_.assign(d_.num_lines(), 0);
    if (pr.break_symbols) prefix_ = d_.line(0);
    if (!pr.fixed.empty())
      for (std::size_t p = 0; p < P; ++p) {
        int s = pr.fixed[p];
        if (s < 0) continue;
        if (!(feasible(static_cast<int>(p)) >> s & 1)) {
          dead_ = true;
          return;
        }
        assign(static_cast<int>(p), s);
        max_sym_ = std::max(max_sym_, s);
      }
    for (std::size_t l = 0; l < d_.num_lines() && !dead_; ++l)
      for (int s = 0; s < n_ && !dead_; ++s) dead_ = !line_ok(static_cast<int>(l), s);
  }

  SearchStats run() {
    if (!dead_) search(0, max_sym_);
    return stats_;
  }

 private:
  std::uint64_t feasible(int p) const {
    std::uint64_t blocked = 0;
    for (int l : d_.lines_through(p)) blocked |= full_[static_cast<std::size_t>(l)];
    return all_ & ~blocked;
  }

  int& count(int l, int s) { return cnt_[static_cast<std::size_t>(l) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(s)]; }

  void assign(int p, int s) {
    sym_[static_cast<std::size_t>(p)] = s;
    for (int l : d_.lines_through(p))
      if (++count(l, s) == k_) full_[static_cast<std::size_t>(l)] |= std::uint64_t{1} << s;
  }

  void unassign(int p) {
    int s = sym_[static_cast<std::size_t>(p)];
    for (int l : d_.lines_through(p)) {
      if (count(l, s)-- == k_) full_[static_cast<std::size_t>(l)] &= ~(std::uint64_t{1} << s);
    }
    sym_[static_cast<std::size_t>(p)] = -1;
  }

  /// Enough free points on l can still take s to reach k copies.
  bool line_ok(int l, int s) {
    int need = k_ - count(l, s);
    if (need <= 0) return true;
    int avail = 0;
    for (int q : d_.line(static_cast<std::size_t>(l)))
      if (sym_[static_cast<std::size_t>(q)] < 0 && (feasible(q) >> s & 1) && ++avail >= need) return true;
    return false;
  }

  bool consistent_after(int p, int s) {
    for (int l : d_.lines_through(p))
      for (int t = 0; t < n_; ++t)
        if (!line_ok(l, t)) return false;
    for (int l : d_.lines_through(p)) {
      if (count(l, s) != k_) continue;
      for (int q : d_.line(static_cast<std::size_t>(l))) {
        if (sym_[static_cast<std::size_t>(q)] >= 0) continue;
        for (int l2 : d_.lines_through(q))
          if (l2 != l && !line_ok(l2, s)) return false;
      }
    }
    return true;
  }

  bool search(std::size_t prefix_pos, int max_sym) {
    ++stats_.nodes;
    while (prefix_pos < prefix_.size() && sym_[static_cast<std::size_t>(prefix_[prefix_pos])] >= 0) ++prefix_pos;
    int p = -1;
    std::uint64_t options = 0;
    if (prefix_pos < prefix_.size()) {
      p = prefix_[prefix_pos];
      int top = std::min(max_sym + 1, n_ - 1);
      std::uint64_t rg = top >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (top + 1)) - 1;
      options = feasible(p) & rg;
    } else {
      int best = std::numeric_limits<int>::max();
      for (std::size_t q = 0; q < sym_.size(); ++q) {
        if (sym_[q] >= 0) continue;
        std::uint64_t f = feasible(static_cast<int>(q));
        int c = std::popcount(f);
        if (c < best) {
          best = c;
          p = static_cast<int>(q);
          options = f;
          if (c <= 1) break;
        }
      }
      if (p < 0) {
        ++stats_.solutions;
        return visit_(sym_);
      }
    }
    while (options) {
      int s = std::countr_zero(options);
      options &= options - 1;
      assign(p, s);
      bool go_on = true;
      if (consistent_after(p, s)) go_on = search(prefix_pos, std::max(max_sym, s));
      unassign(p);
      if (!go_on) return false;
    }
    return true;
  }

  const Design& d_;
  int k_, n_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::uint64_t all_ = 0;
  std::vector<int> sym_, cnt_;
  std::vector<std::uint64_t> full_;
  std::vector<int> prefix_;
  int max_sym_ = -1;
  bool dead_ = false;
  SearchStats stats_;
};

}  // namespace

SearchStats solve_labelings(const LabelProblem& problem, const std::function<bool(const std::vector<int>&)>& visit,
                            Engine engine) {
  check_problem(problem);
  if (engine == Engine::automatic) engine = problem.k == 1 ? Engine::dlx : Engine::backtrack;
  if (engine == Engine::dlx) {
    if (problem.k != 1) throw Error(ErrorCode::unsupported, "the exact-cover engine needs k = 1");
    return solve_dlx(problem, visit);
  }
  return Backtracker(problem, visit).run();
}

std::size_t count_labelings(const LabelProblem& problem, std::size_t cap, Engine engine) {
  if (cap == 0) return 0;
  std::size_t seen = 0;
  solve_labelings(problem, [&](const std::vector<int>&) { return ++seen < cap; }, engine);
  return seen;
}

void for_each_transversal(const Design& d, int k, std::size_t size, const std::vector<int>& must,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  const std::size_t P = d.num_points();
  std::vector<int> need(d.num_lines(), k);
  std::vector<char> state(P, 0);  // 0 undecided, 1 in, 2 out
  std::vector<int> chosen;
  auto eligible = [&](int p) {
    if (state[static_cast<std::size_t>(p)] != 0) return false;
    for (int l : d.lines_through(p))
      if (need[static_cast<std::size_t>(l)] <= 0) return false;
    return true;
  };
  auto take = [&](int p, int delta) {
    for (int l : d.lines_through(p)) need[static_cast<std::size_t>(l)] -= delta;
  };
  for (int p : must) {
    if (!eligible(p)) return;
    state[static_cast<std::size_t>(p)] = 1;
    take(p, 1);
    chosen.push_back(p);
  }
  std::function<bool()> rec = [&]() -> bool {
    if (chosen.size() > size) return true;
    int best = -1, best_avail = std::numeric_limits<int>::max();
    for (std::size_t l = 0; l < d.num_lines(); ++l) {
      if (need[l] <= 0) continue;
      int avail = 0;
      for (int q : d.line(l)) avail += eligible(q);
      if (avail < need[l]) return true;
      if (avail < best_avail) best_avail = avail, best = static_cast<int>(l);
    }
    if (best < 0) {
      if (chosen.size() != size) return true;
      std::vector<int> t = chosen;
      std::sort(t.begin(), t.end());
      return visit(t);
    }
    int x = -1;
    for (int q : d.line(static_cast<std::size_t>(best)))
      if (eligible(q)) {
        x = q;
        break;
      }
    state[static_cast<std::size_t>(x)] = 1;
    take(x, 1);
    chosen.push_back(x);
    bool go_on = rec();
    chosen.pop_back();
    take(x, -1);
    if (go_on) {
      state[static_cast<std::size_t>(x)] = 2;
      go_on = rec();
    }
    state[static_cast<std::size_t>(x)] = 0;
    return go_on;
  };
  rec();
}

}  // namespace latin
