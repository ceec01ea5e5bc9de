#pragma once

// Boards: designs on geometric points, with the permutation image of the
// source's symmetry group.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latin/design.hpp"
#include "latin/geometry.hpp"
#include "latin/perm.hpp"

namespace latin {

struct Board {
  /// Catalog reference such as "monthai_base?n=6", or a free-form name.
  std::string name;
  Source source;
  Design design;
  PermGroup group;
};

using BoardPtr = std::shared_ptr<const Board>;

/// Pairs a design with its source; group = induced_group(source).
BoardPtr make_board(std::string name, Source source, Design design);

enum class BoardClass { Weft, Woof, NotSymmetric };
std::string_view to_string(BoardClass c) noexcept;

/// Every generator maps every line of d to a line of d.
bool acts_on_lines(const PermGroup& g, const Design& d);

/// Single orbit on `blocks` (each block a set of lines). Throws
/// not_an_action when a generator sends a block outside the list.
bool acts_transitively(const PermGroup& g, const std::vector<LineSet>& blocks);

/// Weft: symmetric, resolvable, singleton SIN (zero excluded), and the group
/// acts transitively on the classes of some resolution. Woof: symmetric but
/// not weft.
BoardClass classify_board(const Board& b);

/// Parallel classes on which the board is weft, if any (first resolution
/// that qualifies).
std::optional<Resolution> weft_resolution(const Board& b);

/// Orbit of a line, sorted.
LineSet orbit(const PermGroup& g, const Line& line);
/// Orbit of a set of lines (each image canonicalised), sorted.
std::vector<LineSet> orbit(const PermGroup& g, const LineSet& lines);

}  // namespace latin
