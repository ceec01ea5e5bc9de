#pragma once

// Named board constructions, each checked against its expected profile
// when built.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "latin/board.hpp"
#include "latin/io.hpp"
#include "latin/warp.hpp"

namespace latin {

enum class EntryStatus { derived, data_backed };
std::string_view to_string(EntryStatus s) noexcept;

struct ParamSpec {
  std::string name;
  std::string default_value;  // empty: required
  std::string help;
};

struct CatalogEntry {
  std::string name;
  EntryStatus status = EntryStatus::derived;
  std::vector<ParamSpec> params;
  std::string summary;
};

/// All entries, in listing order.
const std::vector<CatalogEntry>& catalog_entries();
/// Throws not_found.
const CatalogEntry& catalog_entry(std::string_view name);

/// "name" or "name?key=value&key=value" with keys in sorted order.
struct BoardRef {
  std::string name;
  std::map<std::string, std::string> params;

  friend bool operator==(const BoardRef&, const BoardRef&) = default;
};
BoardRef parse_board_ref(std::string_view text);
std::string format_board_ref(const BoardRef& ref);

struct ClassShape {
  std::string name;
  std::size_t lines = 0;
  std::size_t line_size = 0;
  friend bool operator==(const ClassShape&, const ClassShape&) = default;
};

struct WarpProfile {
  int k = 1;
  std::size_t lines = 0;
  std::size_t line_size = 0;
  friend bool operator==(const WarpProfile&, const WarpProfile&) = default;
};

struct ExpectedProfile {
  std::size_t points = 0;
  std::size_t lines = 0;
  /// 0 when lines differ in size.
  std::size_t line_size = 0;
  std::vector<ClassShape> classes;
  std::set<std::size_t> sin;
  BoardClass board_class = BoardClass::NotSymmetric;
  /// Shape of a warp class bundled with (or known for) the entry.
  std::optional<WarpProfile> warp;
};

/// What the profile of b actually is (warp left empty).
ExpectedProfile measure_profile(const Board& b);
/// Human-readable differences; empty when they agree. The warp field is
/// compared only when both sides have one.
std::vector<std::string> profile_differences(const ExpectedProfile& expected, const ExpectedProfile& actual);

/// Builds a board; fills in default parameters and normalises the
/// reference stored as the board's name. Throws not_found for an unknown
/// name, invalid_parameter for bad parameters and construction_bug when
/// the result does not match the entry's expected profile.
BoardPtr build_board(const BoardRef& ref);
inline BoardPtr build_board(std::string_view ref) { return build_board(parse_board_ref(ref)); }

/// The expected profile of an entry for the given parameters.
ExpectedProfile expected_profile(const BoardRef& ref);

/// A bundled data file: the board plus its expected profile, provenance
/// note and a witness warp class.
struct DataBoard {
  BoardPtr board;
  ExpectedProfile expected;
  std::string provenance;
  std::optional<WarpClass> warp;
};

/// Parses a data file ("latin-board/1" schema) and re-verifies the board,
/// its profile and the witness warp. Throws load_error naming the failed
/// check.
DataBoard load_data_board(const std::string& text, const std::string& where);

/// Loads a board file: either a data file or a {board_ref, source,
/// design} document. All invariants are checked; throws load_error.
BoardPtr load_board(const std::string& path);

Json to_json(const ExpectedProfile& p);
ExpectedProfile profile_from_json(const Json& j);

/// Raw text of a bundled data file ("octa_board", ...); throws not_found.
std::string_view bundled_data(std::string_view name);

/// Bundled witness warp of a data-backed entry, if any.
std::optional<WarpClass> bundled_warp(std::string_view name);

/// Catalog references resolve through build_board; other names need an
/// embedded board.
BoardPtr resolve_board(const std::string& ref, const Json* embedded);

// Constructions (also used by the catalog).
Design fano_design();
Source fano_source();

}  // namespace latin
