#include "server.hpp"

#include <httplib.h>

#include <algorithm>
#include <filesystem>

#include "latin/error.hpp"

namespace latin::app {

namespace {

// A published 17-clue sudoku, rows from the top.
constexpr const char* kSudokuClues =
    "....4..2..5.9......1..........8..1.52...3..........9..49...2...3......6....1.....";

std::vector<std::string> digits(int n) {
  std::vector<std::string> s;
  for (int i = 1; i <= n; ++i) s.push_back(std::to_string(i));
  return s;
}

Puzzle make_puzzle(std::string id, std::string title, PartialBoard p) {
  Puzzle z{std::move(id), std::move(title), std::move(p), std::nullopt};
  if (violations(z.partial).empty()) z.solution = unique_completion(z.partial);
  return z;
}

Puzzle sudoku17() {
  BoardPtr b = build_board("sudoku_base");
  PartialBoard p{b, 1, digits(9), std::vector<int>(81, -1)};
  for (int i = 0; i < 81; ++i) {
    int id = (8 - i / 9) * 9 + i % 9;  // board rows count from the bottom
    if (kSudokuClues[i] != '.') p.cells[static_cast<std::size_t>(id)] = kSudokuClues[i] - '1';
  }
  return make_puzzle("sudoku17", "Sudoku, 17 clues", std::move(p));
}

Puzzle monthai6() {
  BoardPtr b = build_board("monthai_base?n=6");
  auto w = find_warp_classes(*b, 1, 1);
  LatinBoard l = label(WovenBoard{b, w.at(0)}, digits(12));
  return make_puzzle("monthai6", "Latin triangle of order 6", find_critical_set(l, 1, 4));
}

}  // namespace

Json puzzle_doc(const Puzzle& z) {
  Json j;
  j["id"] = z.id;
  j["title"] = z.title;
  Json p = puzzle_to_json(z.partial, true);
  j["board_ref"] = p["board_ref"];
  j["board"] = p["board"];
  j["warp_k"] = z.partial.k;
  j["symbols"] = p["symbols"];
  j["clues"] = p["clues"];
  if (z.partial.base->source.layout) j["layout"] = to_json(*z.partial.base->source.layout);
  return j;
}

Puzzle puzzle_from_doc(const Json& j, const std::string& id) {
  Json doc = j;
  if (doc.contains("warp_k") && !doc.contains("k")) doc["k"] = doc["warp_k"];
  PartialBoard p = puzzle_from_json(doc, resolve_board);
  std::string pid = doc.value("id", id);
  std::string title = doc.value("title", pid);
  return make_puzzle(pid, title, std::move(p));
}

PuzzleStore PuzzleStore::builtin() {
  PuzzleStore s;
  s.add(sudoku17());
  s.add(monthai6());
  return s;
}

void PuzzleStore::load_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error(ErrorCode::load_error, "puzzle store '" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) add(puzzle_from_doc(parse_json(read_file(f.string()), f.string()), f.stem().string()));
}

void PuzzleStore::add(Puzzle p) {
  auto it = std::find_if(puzzles_.begin(), puzzles_.end(), [&](const Puzzle& q) { return q.id == p.id; });
  if (it != puzzles_.end()) *it = std::move(p);
  else puzzles_.push_back(std::move(p));
}

const Puzzle* PuzzleStore::find(const std::string& id) const {
  for (const auto& p : puzzles_)
    if (p.id == id) return &p;
  return nullptr;
}

namespace {

struct HttpError {
  int status;
  std::string message;
};

void send(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

Json body_of(const httplib::Request& req) {
  try {
    Json j = Json::parse(req.body);
    if (!j.is_object()) throw HttpError{400, "body must be a JSON object"};
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw HttpError{400, std::string("malformed JSON: ") + e.what()};
  }
}

const Puzzle& puzzle_of(const PuzzleStore& store, const Json& body) {
  if (!body.contains("id") || !body["id"].is_string()) throw HttpError{400, "missing puzzle id"};
  const Puzzle* p = store.find(body["id"].get<std::string>());
  if (!p) throw HttpError{404, "unknown puzzle '" + body["id"].get<std::string>() + "'"};
  return *p;
}

/// Clues plus the player's entries.
PartialBoard merged(const Puzzle& z, const Json& body) {
  PartialBoard p = z.partial;
  if (!body.contains("assignment")) return p;
  std::vector<int> entries;
  try {
    entries = assignment_from_json(body["assignment"], p.cells.size(), p.symbols);
  } catch (const Error& e) {
    throw HttpError{400, e.what()};
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0) continue;
    if (p.cells[i] >= 0 && p.cells[i] != entries[i]) throw HttpError{400, "point " + std::to_string(i) + " is a clue"};
    p.cells[i] = entries[i];
  }
  return p;
}

Json violation_list(const PartialBoard& p) {
  Json out = Json::array();
  for (const auto& v : violations(p))
    out.push_back(Json{{"line", v.line},
                       {"points", p.base->design.line(static_cast<std::size_t>(v.line))},
                       {"symbol", p.symbols[static_cast<std::size_t>(v.symbol)]},
                       {"count", v.count},
                       {"limit", p.k}});
  return out;
}

template <class F>
void guard(httplib::Response& res, F&& f) {
  try {
    f();
  } catch (const HttpError& e) {
    send(res, e.status, Json{{"error", e.message}});
  } catch (const Error& e) {
    send(res, 400, Json{{"error", e.what()}});
  } catch (const std::exception& e) {
    send(res, 500, Json{{"error", e.what()}});
  }
}

}  // namespace

void install_routes(httplib::Server& server, std::shared_ptr<const PuzzleStore> store) {
  server.Get("/puzzles", [store](const httplib::Request&, httplib::Response& res) {
    Json list = Json::array();
    for (const auto& z : store->all())
      list.push_back(Json{{"id", z.id},
                          {"title", z.title},
                          {"board_ref", z.partial.base->name},
                          {"points", z.partial.cells.size()},
                          {"symbols", z.partial.symbols.size()},
                          {"clues", z.partial.clue_count()},
                          {"warp_k", z.partial.k},
                          {"unique", z.solution.has_value()}});
    send(res, 200, list);
  });

  server.Get(R"(/puzzle/([^/]+))", [store](const httplib::Request& req, httplib::Response& res) {
    const Puzzle* z = store->find(req.matches[1].str());
    if (!z) return send(res, 404, Json{{"error", "unknown puzzle '" + req.matches[1].str() + "'"}});
    send(res, 200, puzzle_doc(*z));
  });

  server.Post("/validate", [store](const httplib::Request& req, httplib::Response& res) {
    guard(res, [&] {
      Json body = body_of(req);
      PartialBoard p = merged(puzzle_of(*store, body), body);
      Json v = violation_list(p);
      send(res, 200, Json{{"ok", v.empty()}, {"violations", v}});
    });
  });

  server.Post("/hint", [store](const httplib::Request& req, httplib::Response& res) {
    guard(res, [&] {
      Json body = body_of(req);
      const Puzzle& z = puzzle_of(*store, body);
      if (!body.contains("point") || !body["point"].is_number_integer()) throw HttpError{400, "missing integer point"};
      int point = body["point"].get<int>();
      if (point < 0 || static_cast<std::size_t>(point) >= z.partial.cells.size())
        throw HttpError{400, "unknown point " + std::to_string(point)};
      if (!z.solution) throw HttpError{409, "puzzle does not have a unique completion"};
      send(res, 200,
           Json{{"point", point}, {"symbol", z.partial.symbols[static_cast<std::size_t>((*z.solution)[static_cast<std::size_t>(point)])]}});
    });
  });

  server.Post("/check-complete", [store](const httplib::Request& req, httplib::Response& res) {
    guard(res, [&] {
      Json body = body_of(req);
      const Puzzle& z = puzzle_of(*store, body);
      PartialBoard p = merged(z, body);
      bool filled = p.clue_count() == p.cells.size();
      bool complete =
          filled && verify_latin(*p.base, p.k, p.cells, static_cast<int>(p.symbols.size())).ok();
      Json out{{"complete", complete}, {"filled", filled}, {"class", std::string(to_string(classify_partial(p)))}};
      out["violations"] = violation_list(p);
      send(res, 200, out);
    });
  });
}

}  // namespace latin::app
