#include "cli.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "latin/catalog.hpp"
#include "latin/error.hpp"
#include "latin/svg.hpp"
#include "server.hpp"

namespace latin::app {

namespace {

struct Failure {
  int code;
  std::string message;
};

std::string slurp(const std::string& file, std::istream& in) {
  if (file != "-") return read_file(file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// First JSON document of the input; solve-warp writes one per line.
Json read_doc(const std::string& file, std::istream& in) {
  const std::string where = file == "-" ? "stdin" : file;
  std::string text = slurp(file, in);
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw Error(ErrorCode::load_error, where + ": empty input");
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) return parse_json(line, where);
    return parse_json(text, where);
  }
}

bool in_catalog(const std::string& ref) {
  try {
    catalog_entry(parse_board_ref(ref).name);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool embed(const Board& b) { return !in_catalog(b.name); }

BoardPtr board_of(const Json& j) {
  if (j.contains("schema")) return load_data_board(j.dump(), "input").board;
  if (j.contains("source") && j.contains("design")) return board_from_json(j);
  if (j.contains("board_ref")) return resolve_board(j.at("board_ref").get<std::string>(), j.contains("board") ? &j.at("board") : nullptr);
  throw Error(ErrorCode::load_error, "input is not a board document");
}

bool looks_like_fano(const Design& d) {
  if (d.num_points() != 7 || d.num_lines() != 7 || !is_k_uniform(d, 3)) return false;
  return sin(d, true) == std::set<std::size_t>{1};
}

void print(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

std::vector<std::string> default_symbols(std::size_t n) {
  std::vector<std::string> s;
  for (std::size_t i = 1; i <= n; ++i) s.push_back(std::to_string(i));
  return s;
}

Engine engine_from(const std::string& s) {
  if (s == "dlx") return Engine::dlx;
  if (s == "backtrack") return Engine::backtrack;
  return Engine::automatic;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Latin boards: catalog, warp search, labeling, counting, critical sets, rendering and a puzzle server",
               "latinboard"};
  app.require_subcommand(1);

  // catalog
  auto* cat = app.add_subcommand("catalog", "list or build catalog boards");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list the entries");
  bool list_json = false;
  cat_list->add_flag("--json", list_json, "JSON output");
  auto* cat_build = cat->add_subcommand("build", "build a board and print its document");
  std::string build_name, format = "json";
  std::vector<std::string> build_params;
  std::string p_n, p_m, p_pairing;
  cat_build->add_option("name", build_name, "entry name or board reference")->required();
  cat_build->add_option("--param", build_params, "key=value parameter");
  cat_build->add_option("--n", p_n, "shorthand for --param n=...");
  cat_build->add_option("--m", p_m, "shorthand for --param m=...");
  cat_build->add_option("--pairing", p_pairing, "shorthand for --param pairing=...");
  cat_build->add_option("--format", format, "json or svg")->check(CLI::IsMember({"json", "svg"}));

  // solve-warp
  auto* solve = app.add_subcommand("solve-warp", "search k-warp classes of a board (one JSON document per line)");
  std::string file = "-", engine = "auto";
  int k = 1;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  bool prune = false;
  solve->add_option("file", file, "board document, - for stdin");
  solve->add_option("--k", k, "symbols per symmetric line")->check(CLI::PositiveNumber);
  solve->add_option("--limit", limit, "stop after this many classes");
  solve->add_flag("--prune", prune, "only first warp lines that are least under the point stabilizer");
  solve->add_option("--engine", engine, "auto, dlx or backtrack")->check(CLI::IsMember({"auto", "dlx", "backtrack"}));

  // label
  auto* lab = app.add_subcommand("label", "label a warp class with symbols");
  std::string symbols_text;
  lab->add_option("file", file, "solution document, - for stdin");
  lab->add_option("--symbols", symbols_text, "1..n or a comma list (default 1..|W|)");
  lab->add_option("--format", format, "json or svg")->check(CLI::IsMember({"json", "svg"}));

  // count
  auto* cnt = app.add_subcommand("count", "count Latin boards");
  std::string mode = "raw";
  std::uint64_t cap = 1000000000;
  cnt->add_option("file", file, "board document, - for stdin");
  cnt->add_option("--k", k, "symbols per symmetric line")->check(CLI::PositiveNumber);
  cnt->add_option("--up-to", mode, "raw or equiv")->check(CLI::IsMember({"raw", "equiv"}));
  cnt->add_option("--cap", cap, "stop counting here");

  // critical
  auto* crit = app.add_subcommand("critical", "greedy critical set of a Latin board");
  std::uint64_t seed = 1;
  int restarts = 0;
  crit->add_option("file", file, "Latin board document, - for stdin");
  crit->add_option("--seed", seed, "shuffle seed");
  crit->add_option("--restarts", restarts, "extra greedy runs, the smallest wins")->check(CLI::NonNegativeNumber);
  crit->add_option("--format", format, "json or svg")->check(CLI::IsMember({"json", "svg"}));

  // verify
  auto* ver = app.add_subcommand("verify", "check a board, solution, Latin board or puzzle document");
  ver->add_option("file", file, "document, - for stdin");

  // render
  auto* ren = app.add_subcommand("render", "draw a document as SVG");
  bool ids = false, no_lines = false;
  double scale = 48;
  ren->add_option("file", file, "document, - for stdin");
  ren->add_flag("--ids", ids, "label empty points with their ids");
  ren->add_flag("--no-lines", no_lines, "omit symmetric lines");
  ren->add_option("--scale", scale, "pixels per unit")->check(CLI::PositiveNumber);

  // serve
  auto* srv = app.add_subcommand("serve", "HTTP endpoints for the play client");
  int port = 8080;
  std::string host = "127.0.0.1", store_dir;
  srv->add_option("--port", port, "port")->check(CLI::Range(1, 65535));
  srv->add_option("--host", host, "bind address");
  srv->add_option("--store", store_dir, std::string("puzzle directory (default $") + kStoreEnv + ")");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "latinboard: " << e.what() << "\n";
    return usage;
  }

  SvgOptions svg;
  svg.ids = ids;
  svg.lines = !no_lines;
  svg.scale = scale;

  try {
    if (*cat_list) {
      if (list_json) {
        Json a = Json::array();
        for (const auto& e : catalog_entries()) {
          Json ps = Json::array();
          for (const auto& p : e.params) ps.push_back(Json{{"name", p.name}, {"default", p.default_value}, {"help", p.help}});
          a.push_back(Json{{"name", e.name}, {"status", std::string(to_string(e.status))}, {"params", ps}, {"summary", e.summary}});
        }
        print(out, a);
      } else {
        for (const auto& e : catalog_entries()) {
          std::string ps;
          for (const auto& p : e.params) ps += " " + p.name + (p.default_value.empty() ? "" : "=" + p.default_value);
          out << e.name << " [" << to_string(e.status) << "]" << ps << "\n    " << e.summary << "\n";
        }
      }
      return ok;
    }
    if (*cat_build) {
      BoardRef ref = parse_board_ref(build_name);
      for (const auto& kv : build_params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw Failure{usage, "--param expects key=value, got '" + kv + "'"};
        ref.params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      if (!p_n.empty()) ref.params["n"] = p_n;
      if (!p_m.empty()) ref.params["m"] = p_m;
      if (!p_pairing.empty()) ref.params["pairing"] = p_pairing;
      BoardPtr b = build_board(ref);
      if (format == "svg") out << render_svg(*b, svg);
      else print(out, to_json(*b));
      return ok;
    }
    if (*solve) {
      BoardPtr b = board_of(read_doc(file, in));
      WarpOptions o;
      o.k = k;
      o.limit = limit;
      o.prune_by_symmetry = prune;
      o.engine = engine_from(engine);
      std::size_t n = 0;
      try {
        n = for_each_warp_class(*b, o, [&](const WarpClass& w) {
          out << solution_to_json(WovenBoard{b, w}, embed(*b)).dump() << "\n";
          return true;
        });
      } catch (const Error& e) {
        if (e.code() != ErrorCode::not_uniform && e.code() != ErrorCode::size_mismatch) throw;
        throw Failure{exhausted, "search exhausted: " + std::string(e.what())};
      }
      if (n == 0) {
        std::string msg = "search exhausted: " + b->name + " admits no " + std::to_string(k) + "-warp class";
        if (looks_like_fano(b->design)) msg += " (no woven board contains the Fano plane)";
        throw Failure{exhausted, msg};
      }
      return ok;
    }
    if (*lab) {
      WovenBoard w = solution_from_json(read_doc(file, in), resolve_board);
      auto symbols = symbols_text.empty() ? default_symbols(w.warp.lines.size()) : parse_symbols(symbols_text);
      LatinBoard l = label(w, symbols);
      if (format == "svg") out << render_svg(l, svg);
      else print(out, latin_to_json(l, embed(*l.base)));
      return ok;
    }
    if (*cnt) {
      BoardPtr b = board_of(read_doc(file, in));
      CountResult r;
      try {
        r = count_latin_boards(b, k, mode == "raw" ? CountMode::raw : CountMode::equiv, cap);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::not_uniform && e.code() != ErrorCode::size_mismatch) throw;
        r = CountResult{};
      }
      print(out, Json{{"board_ref", b->name},
                      {"k", k},
                      {"mode", mode},
                      {"count", r.count},
                      {"warp_classes", r.warp_classes},
                      {"partial", r.partial}});
      return ok;
    }
    if (*crit) {
      LatinBoard l = latin_from_json(read_doc(file, in), resolve_board);
      PartialBoard p = find_critical_set(l, seed, restarts);
      if (format == "svg") out << render_svg(p, svg);
      else print(out, puzzle_to_json(p, embed(*p.base)));
      return ok;
    }
    if (*ver) {
      Json j;
      try {
        j = read_doc(file, in);
      } catch (const Error& e) {
        throw Failure{verify_failed, e.what()};
      }
      std::vector<std::string> failures;
      std::string kind;
      try {
        if (j.contains("labeling")) {
          kind = "latin board";
          LatinBoard l = latin_from_json(j, resolve_board);
          auto wr = verify_warp(*l.base, l.warp());
          failures = wr.failures;
          auto lr = verify_latin(l);
          failures.insert(failures.end(), lr.failures.begin(), lr.failures.end());
        } else if (j.contains("warp") && !j.contains("schema")) {
          kind = "warp solution";
          WovenBoard w = solution_from_json(j, resolve_board);
          failures = verify_warp(*w.base, w.warp).failures;
        } else if (j.contains("clues")) {
          kind = "puzzle";
          Json doc = j;
          if (doc.contains("warp_k") && !doc.contains("k")) doc["k"] = doc["warp_k"];
          PartialBoard p = puzzle_from_json(doc, resolve_board);
          for (const auto& v : violations(p))
            failures.push_back("line " + std::to_string(v.line) + ": symbol " + p.symbols[static_cast<std::size_t>(v.symbol)] +
                               " occurs " + std::to_string(v.count) + " times, limit " + std::to_string(p.k));
          if (failures.empty()) {
            auto c = classify_partial(p);
            out << "puzzle class: " << to_string(c) << "\n";
            if (c == PartialClass::Incompletable) failures.push_back("clues have no completion");
          }
        } else {
          kind = "board";
          BoardPtr b = board_of(j);
          auto prof = measure_profile(*b);
          out << "board " << b->name << ": " << to_json(prof).dump() << "\n";
          if (in_catalog(b->name) && catalog_entry(parse_board_ref(b->name).name).status == EntryStatus::derived) {
            for (const auto& d : profile_differences(expected_profile(parse_board_ref(b->name)), prof)) failures.push_back(d);
            if (!(b->design == build_board(b->name)->design)) failures.push_back("design differs from the catalog construction");
          }
        }
      } catch (const Error& e) {
        failures.push_back(e.what());
      }
      if (!failures.empty()) {
        err << (kind.empty() ? "document" : kind) << " fails verification:\n";
        for (const auto& f : failures) err << "  " << f << "\n";
        return verify_failed;
      }
      out << kind << " ok\n";
      return ok;
    }
    if (*ren) {
      Json j = read_doc(file, in);
      if (j.contains("labeling")) out << render_svg(latin_from_json(j, resolve_board), svg);
      else if (j.contains("clues")) {
        if (j.contains("warp_k") && !j.contains("k")) j["k"] = j["warp_k"];
        out << render_svg(puzzle_from_json(j, resolve_board), svg);
      } else if (j.contains("warp") && !j.contains("schema")) {
        WovenBoard w = solution_from_json(j, resolve_board);
        out << render_svg(label(w, default_symbols(w.warp.lines.size())), svg);
      } else {
        out << render_svg(*board_of(j), svg);
      }
      return ok;
    }
    if (*srv) {
      if (store_dir.empty())
        if (const char* env = std::getenv(kStoreEnv)) store_dir = env;
      auto store = std::make_shared<PuzzleStore>(PuzzleStore::builtin());
      if (!store_dir.empty()) store->load_dir(store_dir);
      httplib::Server server;
      install_routes(server, store);
      err << "serving " << store->all().size() << " puzzles on http://" << host << ":" << port << "\n";
      if (!server.listen(host, port)) throw Failure{usage, "cannot listen on " + host + ":" + std::to_string(port)};
      return ok;
    }
  } catch (const Failure& f) {
    err << "latinboard: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "latinboard: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace latin::app
