#pragma once

// Puzzle store and the HTTP endpoints used by the play client.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latin/catalog.hpp"
#include "latin/critical.hpp"
#include "latin/io.hpp"

namespace httplib {
class Server;
}

namespace latin::app {

struct Puzzle {
  std::string id;
  std::string title;
  PartialBoard partial;
  /// Set when the clues have exactly one completion.
  std::optional<std::vector<int>> solution;
};

/// {id, title, board_ref, board, warp_k, symbols, clues, layout}
Json puzzle_doc(const Puzzle& p);
/// Accepts a PuzzleDoc or a plain puzzle document; `id` is used when the
/// document has none. Throws load_error / invalid_partial.
Puzzle puzzle_from_doc(const Json& j, const std::string& id);

class PuzzleStore {
 public:
  /// The 17-clue sudoku and a small Latin triangle game.
  static PuzzleStore builtin();

  /// Adds every *.json file of a directory (file stem = default id).
  void load_dir(const std::string& dir);
  void add(Puzzle p);

  const Puzzle* find(const std::string& id) const;
  const std::vector<Puzzle>& all() const noexcept { return puzzles_; }

 private:
  std::vector<Puzzle> puzzles_;
};

/// Registers GET /puzzles, GET /puzzle/{id}, POST /validate, POST /hint and
/// POST /check-complete.
void install_routes(httplib::Server& server, std::shared_ptr<const PuzzleStore> store);

/// Environment variable naming the puzzle store directory.
inline constexpr const char* kStoreEnv = "LATINBOARD_STORE";

}  // namespace latin::app
