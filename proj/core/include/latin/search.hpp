#pragma once

// Labeling search: assign one of n symbols to every point so that each
// symbol occurs exactly k times on every line. Both warp classes (up to
// renaming symbols) and partial-board completions reduce to this.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "latin/design.hpp"

namespace latin {

enum class Engine { automatic, dlx, backtrack };

struct LabelProblem {
  const Design* design = nullptr;
  int k = 1;
  int n = 0;  // number of symbols; every line must have size k * n
  /// Pre-assigned symbol per point, -1 for free. Empty means all free.
  std::vector<int> fixed;
  /// Count each labeling once per symbol renaming: symbols are numbered by
  /// first occurrence along line 0. Only symbol 0 may be pre-assigned.
  bool break_symbols = false;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::size_t solutions = 0;
};

/// Calls visit(cells) for every labeling; stops when visit returns false.
/// Throws size_mismatch if a line size is not k * n, invalid_parameter for
/// n > 64 on the backtracking engine.
SearchStats solve_labelings(const LabelProblem& problem, const std::function<bool(const std::vector<int>&)>& visit,
                            Engine engine = Engine::automatic);

/// Number of labelings, stopping at cap.
std::size_t count_labelings(const LabelProblem& problem, std::size_t cap, Engine engine = Engine::automatic);

/// Point sets T with |T ∩ l| = k for every line, containing every point of
/// `must` (sorted). Visit returns false to stop.
void for_each_transversal(const Design& d, int k, std::size_t size, const std::vector<int>& must,
                          const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace latin
