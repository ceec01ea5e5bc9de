#pragma once

// Partial boards, completion counting and critical sets.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latin/latin.hpp"

namespace latin {

struct PartialBoard {
  BoardPtr base;
  int k = 1;
  std::vector<std::string> symbols;
  /// Symbol index per point, -1 for an empty cell.
  std::vector<int> cells;

  std::size_t clue_count() const;
};

enum class PartialClass { Incompletable, MultiCompletable, Subcritical, Critical };
std::string_view to_string(PartialClass c) noexcept;

/// A symbol that occurs more than k times on a line.
struct Violation {
  int line = 0;
  int symbol = 0;
  int count = 0;
};

/// Empty when the partial board respects its multiplicity limit.
std::vector<Violation> violations(const PartialBoard& p);

/// Number of full Latin boards extending p, stopping at cap. Throws
/// invalid_partial when p breaks its own invariant.
std::size_t count_completions(const PartialBoard& p, std::size_t cap);

/// The completion if it is unique.
std::optional<std::vector<int>> unique_completion(const PartialBoard& p);

PartialClass classify_partial(const PartialBoard& p);

/// Removing clue at `point` (the point must hold a clue).
PartialBoard without(const PartialBoard& p, int point);

/// The full board as a partial board (every cell a clue).
PartialBoard as_partial(const LatinBoard& full);

/// Greedy descent: visit points in an order shuffled by `seed`, dropping
/// each clue whose removal keeps the completion unique. With restarts, the
/// smallest of restarts + 1 runs wins (ties: first).
PartialBoard find_critical_set(const LatinBoard& full, std::uint64_t seed, int restarts = 0);

}  // namespace latin
