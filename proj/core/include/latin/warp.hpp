#pragma once

// k-warp classes: parallel classes whose lines meet every symmetric line in
// exactly k points.

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latin/board.hpp"
#include "latin/search.hpp"

namespace latin {

struct WarpClass {
  int k = 1;
  LineSet lines;  // canonical order

  friend bool operator==(const WarpClass&, const WarpClass&) = default;
};

/// Warp class whose lines are the symbol classes of a labeling.
WarpClass warp_from_cells(int k, const std::vector<int>& cells, int n);

struct WarpOptions {
  int k = 1;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  /// Only keep first warp lines (the one through the first point of line 0)
  /// that are lexicographically least under that point's stabilizer.
  bool prune_by_symmetry = false;
  Engine engine = Engine::automatic;
};

/// Number of symbols a k-warp class of b would use. Throws not_uniform or
/// size_mismatch.
int warp_symbol_count(const Board& b, int k);

/// Streams warp classes in a fixed order; returns how many were emitted.
/// An exhausted search emits nothing (not an error).
std::size_t for_each_warp_class(const Board& b, const WarpOptions& options,
                                const std::function<bool(const WarpClass&)>& visit, SearchStats* stats = nullptr);

std::vector<WarpClass> find_warp_classes(const Board& b, int k, std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                         bool prune_by_symmetry = false);

struct WarpReport {
  bool partition = false;
  bool counts = false;
  bool size_law = false;
  /// Set when the board is weft: every warp line has k*m points, m being
  /// the number of lines in a parallel class.
  std::optional<bool> uniform;
  std::vector<std::string> failures;
  /// First offending (warp line, symmetric line) pair, if any.
  std::optional<std::pair<int, int>> bad_pair;

  bool ok() const noexcept { return partition && counts && size_law && uniform.value_or(true); }
};

/// Checks w against b from scratch (set intersections only, no search
/// state). The weft/uniformity part classifies the board unless `cls` is
/// given.
WarpReport verify_warp(const Board& b, const WarpClass& w, std::optional<BoardClass> cls = std::nullopt);

struct WovenBoard {
  BoardPtr base;
  WarpClass warp;
};

}  // namespace latin
