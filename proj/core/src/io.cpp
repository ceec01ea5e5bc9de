#include "latin/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "latin/error.hpp"

namespace latin {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::load_error, std::string(what) + ": " + e.what());
  }
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

Vec vec_from(const Json& j) {
  Vec v;
  for (const auto& x : j) {
    try {
      v.push_back(Real::parse(x.get<std::string>()));
    } catch (const Error& e) {
      throw Error(ErrorCode::load_error, std::string("bad coordinate: ") + e.what());
    }
  }
  return v;
}

Json p2(const Layout::P2& p) { return Json::array({p[0], p[1]}); }
Layout::P2 p2_from(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

Json polygon(const std::vector<Layout::P2>& poly) {
  Json a = Json::array();
  for (const auto& p : poly) a.push_back(p2(p));
  return a;
}

std::vector<Layout::P2> polygon_from(const Json& j) {
  std::vector<Layout::P2> out;
  for (const auto& p : j) out.push_back(p2_from(p));
  return out;
}

Json lines_json(const LineSet& lines) {
  Json a = Json::array();
  for (const auto& l : lines) a.push_back(l);
  return a;
}

LineSet lines_from(const Json& j) {
  LineSet out;
  for (const auto& l : j) out.push_back(l.get<Line>());
  return out;
}

void put_board(Json& j, const Board& b, bool embed) {
  j["board_ref"] = b.name;
  if (embed) j["board"] = to_json(b);
}

BoardPtr get_board(const Json& j, const BoardResolver& resolve) {
  const Json* embedded = j.contains("board") ? &j.at("board") : nullptr;
  auto ref = j.at("board_ref").get<std::string>();
  BoardPtr b = resolve(ref, embedded);
  if (!b) throw Error(ErrorCode::load_error, "cannot resolve board '" + ref + "'");
  return b;
}

int point_key(const std::string& key, std::size_t num_points) {
  std::size_t used = 0;
  int p = -1;
  try {
    p = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || p < 0 || static_cast<std::size_t>(p) >= num_points)
    throw Error(ErrorCode::invalid_partial, "unknown point '" + key + "'");
  return p;
}

}  // namespace

Json to_json(const Layout& l) {
  Json j;
  Json pos = Json::array(), cells = Json::array(), outlines = Json::array();
  for (const auto& p : l.positions) pos.push_back(p2(p));
  for (const auto& c : l.cells) cells.push_back(polygon(c));
  for (const auto& o : l.outlines) outlines.push_back(polygon(o));
  j["positions"] = pos;
  j["cells"] = cells;
  j["outlines"] = outlines;
  return j;
}

Layout layout_from_json(const Json& j) {
  return guarded("layout", [&] {
    Layout l;
    for (const auto& p : j.at("positions")) l.positions.push_back(p2_from(p));
    if (j.contains("cells"))
      for (const auto& c : j.at("cells")) l.cells.push_back(polygon_from(c));
    if (j.contains("outlines"))
      for (const auto& o : j.at("outlines")) l.outlines.push_back(polygon_from(o));
    return l;
  });
}

Json to_json(const Source& s) {
  Json j;
  j["family"] = std::string(to_string(s.family));
  j["order"] = s.order;
  Json g;
  g["kind"] = std::string(to_string(s.group.kind()));
  g["n"] = s.group.n();
  Json gens = Json::array();
  for (const auto& t : s.group.generators()) {
    Json lin = Json::array();
    for (std::size_t r = 0; r < t.linear.size(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < t.linear.size(); ++c) row.push_back(t.linear(r, c).to_string());
      lin.push_back(row);
    }
    gens.push_back(Json{{"name", t.name}, {"linear", lin}, {"translation", vec_json(t.translation)}});
  }
  g["generators"] = gens;
  j["group"] = g;
  Json pts = Json::array();
  for (const auto& p : s.points)
    pts.push_back(Json{{"id", p.id}, {"kind", std::string(to_string(p.kind))}, {"coords", vec_json(p.coords)}});
  j["points"] = pts;
  if (s.layout) j["layout"] = to_json(*s.layout);
  return j;
}

Source source_from_json(const Json& j) {
  return guarded("source", [&] {
    Source s;
    try {
      s.family = family_from_string(j.at("family").get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::load_error, e.what());
    }
    s.order = j.at("order").get<int>();
    std::size_t dim = 0;
    for (const auto& p : j.at("points")) {
      Point q;
      q.id = p.at("id").get<int>();
      if (q.id != static_cast<int>(s.points.size()))
        throw Error(ErrorCode::load_error, "point ids must be 0..n-1 in order (at id " + std::to_string(q.id) + ")");
      q.kind = point_kind_from_string(p.at("kind").get<std::string>());
      q.coords = vec_from(p.at("coords"));
      if (dim == 0) dim = q.coords.size();
      if (q.coords.size() != dim || dim < 2 || dim > 3)
        throw Error(ErrorCode::load_error, "point " + std::to_string(q.id) + " has bad dimension");
      s.points.push_back(std::move(q));
    }
    const Json& g = j.at("group");
    std::vector<Transform> gens;
    for (const auto& t : g.at("generators")) {
      const Json& lin = t.at("linear");
      if (lin.size() != dim) throw Error(ErrorCode::load_error, "generator dimension differs from the points");
      std::vector<Real> entries;
      for (const auto& row : lin) {
        Vec r = vec_from(row);
        if (r.size() != dim) throw Error(ErrorCode::load_error, "generator matrix is not square");
        entries.insert(entries.end(), r.begin(), r.end());
      }
      Transform tr{Matrix(dim, std::move(entries)), vec_from(t.at("translation")), t.value("name", std::string())};
      if (tr.translation.size() != dim) throw Error(ErrorCode::load_error, "bad translation");
      if (!tr.is_isometry()) throw Error(ErrorCode::load_error, "generator '" + tr.name + "' is not an isometry");
      gens.push_back(std::move(tr));
    }
    s.group = SymmetryGroup(group_kind_from_string(g.at("kind").get<std::string>()), g.value("n", 0), std::move(gens));
    if (j.contains("layout")) {
      s.layout = layout_from_json(j.at("layout"));
      if (s.layout->positions.size() != s.points.size())
        throw Error(ErrorCode::load_error, "layout does not cover every point");
    }
    return s;
  });
}

Json to_json(const Design& d) {
  Json j;
  j["points"] = d.num_points();
  j["lines"] = lines_json(d.lines());
  Json cls = Json::object();
  for (const auto& [name, idx] : d.classes()) cls[name] = idx;
  j["classes"] = cls;
  return j;
}

Design design_from_json(const Json& j) {
  return guarded("design", [&] {
    std::map<std::string, std::vector<int>> classes;
    if (j.contains("classes"))
      for (const auto& [name, idx] : j.at("classes").items()) classes[name] = idx.get<std::vector<int>>();
    try {
      return Design(j.at("points").get<std::size_t>(), lines_from(j.at("lines")), std::move(classes));
    } catch (const Error& e) {
      throw Error(ErrorCode::load_error, e.what());
    }
  });
}

Json to_json(const Board& b) {
  Json j;
  j["board_ref"] = b.name;
  j["source"] = to_json(b.source);
  j["design"] = to_json(b.design);
  return j;
}

BoardPtr board_from_json(const Json& j) {
  return guarded("board", [&] {
    Source s = source_from_json(j.at("source"));
    Design d = design_from_json(j.at("design"));
    if (d.num_points() != s.points.size())
      throw Error(ErrorCode::load_error, "design has " + std::to_string(d.num_points()) + " points, source has " +
                                             std::to_string(s.points.size()));
    try {
      return make_board(j.at("board_ref").get<std::string>(), std::move(s), std::move(d));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::load_error) throw;
      throw Error(ErrorCode::load_error, e.what());
    }
  });
}

Json solution_to_json(const WovenBoard& w, bool embed) {
  Json j;
  put_board(j, *w.base, embed);
  j["k"] = w.warp.k;
  j["warp"] = lines_json(canonical(w.warp.lines));
  return j;
}

WovenBoard solution_from_json(const Json& j, const BoardResolver& resolve) {
  return guarded("solution", [&] {
    WovenBoard w{get_board(j, resolve), WarpClass{j.at("k").get<int>(), canonical(lines_from(j.at("warp")))}};
    return w;
  });
}

Json latin_to_json(const LatinBoard& l, bool embed) {
  Json j = solution_to_json(WovenBoard{l.base, l.warp()}, embed);
  j["symbols"] = l.symbols;
  // warp() is canonical; find each symbol's line index in it
  const LineSet by_symbol = l.warp_lines_by_symbol();
  const LineSet lines = canonical(by_symbol);
  Json lab = Json::object();
  for (std::size_t s = 0; s < l.symbols.size(); ++s) {
    Line sorted = by_symbol[s];
    std::sort(sorted.begin(), sorted.end());
    lab[l.symbols[s]] = std::lower_bound(lines.begin(), lines.end(), sorted) - lines.begin();
  }
  j["labeling"] = lab;
  Json cells = Json::object();
  for (std::size_t p = 0; p < l.cells.size(); ++p) cells[std::to_string(p)] = l.symbols[static_cast<std::size_t>(l.cells[p])];
  j["cells"] = cells;
  return j;
}

LatinBoard latin_from_json(const Json& j, const BoardResolver& resolve) {
  return guarded("latin board", [&] {
    WovenBoard w = solution_from_json(j, resolve);
    if (!j.contains("labeling")) throw Error(ErrorCode::load_error, "document has no labeling");
    std::vector<std::string> symbols = j.contains("symbols") ? j.at("symbols").get<std::vector<std::string>>()
                                                             : std::vector<std::string>{};
    if (symbols.empty())
      for (const auto& [s, _] : j.at("labeling").items()) symbols.push_back(s);
    if (symbols.size() != w.warp.lines.size())
      throw Error(ErrorCode::invalid_labeling, std::to_string(symbols.size()) + " symbols for " +
                                                   std::to_string(w.warp.lines.size()) + " warp lines");
    const std::size_t P = w.base->design.num_points();
    std::vector<int> cells(P, -1);
    std::set<int> used;
    for (std::size_t s = 0; s < symbols.size(); ++s) {
      if (!j.at("labeling").contains(symbols[s]))
        throw Error(ErrorCode::invalid_labeling, "symbol '" + symbols[s] + "' has no warp line");
      int li = j.at("labeling").at(symbols[s]).get<int>();
      if (li < 0 || static_cast<std::size_t>(li) >= w.warp.lines.size() || !used.insert(li).second)
        throw Error(ErrorCode::invalid_labeling, "symbol '" + symbols[s] + "' has a bad line index");
      for (int p : w.warp.lines[static_cast<std::size_t>(li)]) {
        if (p < 0 || static_cast<std::size_t>(p) >= P || cells[static_cast<std::size_t>(p)] >= 0)
          throw Error(ErrorCode::invalid_labeling, "warp lines do not partition the points");
        cells[static_cast<std::size_t>(p)] = static_cast<int>(s);
      }
    }
    if (std::find(cells.begin(), cells.end(), -1) != cells.end())
      throw Error(ErrorCode::invalid_labeling, "warp lines do not cover the points");
    return LatinBoard{w.base, w.warp.k, std::move(symbols), std::move(cells)};
  });
}

Json puzzle_to_json(const PartialBoard& p, bool embed) {
  Json j;
  put_board(j, *p.base, embed);
  j["k"] = p.k;
  j["symbols"] = p.symbols;
  Json clues = Json::object();
  for (std::size_t q = 0; q < p.cells.size(); ++q)
    if (p.cells[q] >= 0) clues[std::to_string(q)] = p.symbols[static_cast<std::size_t>(p.cells[q])];
  j["clues"] = clues;
  return j;
}

std::vector<int> assignment_from_json(const Json& j, std::size_t num_points, const std::vector<std::string>& symbols) {
  if (!j.is_object()) throw Error(ErrorCode::invalid_partial, "assignment must be an object {point: symbol}");
  std::vector<int> cells(num_points, -1);
  for (const auto& [key, value] : j.items()) {
    int p = point_key(key, num_points);
    if (!value.is_string()) throw Error(ErrorCode::invalid_partial, "symbol for point " + key + " must be a string");
    auto s = value.get<std::string>();
    auto it = std::find(symbols.begin(), symbols.end(), s);
    if (it == symbols.end()) throw Error(ErrorCode::invalid_partial, "unknown symbol '" + s + "'");
    cells[static_cast<std::size_t>(p)] = static_cast<int>(it - symbols.begin());
  }
  return cells;
}

PartialBoard puzzle_from_json(const Json& j, const BoardResolver& resolve) {
  return guarded("puzzle", [&] {
    PartialBoard p;
    p.base = get_board(j, resolve);
    p.k = j.value("k", 1);
    p.symbols = j.at("symbols").get<std::vector<std::string>>();
    if (std::set<std::string>(p.symbols.begin(), p.symbols.end()).size() != p.symbols.size())
      throw Error(ErrorCode::invalid_partial, "symbols are not distinct");
    p.cells = assignment_from_json(j.at("clues"), p.base->design.num_points(), p.symbols);
    return p;
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::load_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::load_error, where + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace latin
