#pragma once

// JSON documents for sources, designs, boards, warp solutions, Latin
// boards and puzzles. Output key order is fixed so that serialising twice
// gives the same bytes.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "latin/critical.hpp"
#include "latin/latin.hpp"

namespace latin {

using Json = nlohmann::ordered_json;

Json to_json(const Layout& l);
Layout layout_from_json(const Json& j);

/// {family, order, group:{kind, n, generators}, points:[{id, kind, coords}], layout?}
Json to_json(const Source& s);
Source source_from_json(const Json& j);

/// {points, lines, classes}
Json to_json(const Design& d);
Design design_from_json(const Json& j);

/// {board_ref, source, design}. Loading re-derives the group and throws
/// load_error when the source is not invariant.
Json to_json(const Board& b);
BoardPtr board_from_json(const Json& j);

/// Resolves a board_ref to a board: catalog references are rebuilt, other
/// names must come with an embedded board. Passed to the readers below.
using BoardResolver = std::function<BoardPtr(const std::string& ref, const Json* embedded)>;

/// {board_ref, [board], k, warp:[[ids]]}. The board is embedded when
/// `embed` is set.
Json solution_to_json(const WovenBoard& w, bool embed);
WovenBoard solution_from_json(const Json& j, const BoardResolver& resolve);

/// Solution document plus symbols, labeling {symbol: line index} and cells
/// {point: symbol}.
Json latin_to_json(const LatinBoard& l, bool embed);
LatinBoard latin_from_json(const Json& j, const BoardResolver& resolve);

/// {board_ref, [board], k, symbols, clues:{point: symbol}}
Json puzzle_to_json(const PartialBoard& p, bool embed);
PartialBoard puzzle_from_json(const Json& j, const BoardResolver& resolve);

/// Parses a {point: symbol} map against a symbol list, -1 for missing
/// points. Throws invalid_partial on unknown points or symbols.
std::vector<int> assignment_from_json(const Json& j, std::size_t num_points, const std::vector<std::string>& symbols);

/// Reads a whole file; throws load_error.
std::string read_file(const std::string& path);
/// Parses text; throws load_error naming `where` and the byte offset.
Json parse_json(const std::string& text, const std::string& where);

}  // namespace latin
