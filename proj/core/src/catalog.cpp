#include "latin/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>

#include "latin/error.hpp"

namespace latin {

namespace detail {
struct BundledFile {
  const char* name;
  const char* text;
};
extern const BundledFile kBundled[];
extern const std::size_t kBundledCount;
}  // namespace detail

std::string_view to_string(EntryStatus s) noexcept { return s == EntryStatus::derived ? "derived" : "data_backed"; }

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"fano", EntryStatus::derived, {}, "Fano plane drawn as a triangle with its incircle"},
      {"b1", EntryStatus::derived, {}, "order-3 square grid, rows and columns"},
      {"latin_square_base", EntryStatus::derived, {{"n", "", "order, at least 2"}}, "n x n square grid, rows H and columns V"},
      {"sudoku_base", EntryStatus::derived, {}, "9 x 9 grid with rows, columns and 3 x 3 boxes"},
      {"knut_vik_base", EntryStatus::derived, {{"n", "", "odd order, at least 3"}},
       "n x n grid, broken diagonals D and broken anti-diagonals A"},
      {"monthai_base", EntryStatus::derived, {{"n", "", "even order"}},
       "triangle of order n, rows i and n+1-i joined, three directions"},
      {"triangle_vertex_base", EntryStatus::derived, {{"n", "", "odd order"}},
       "vertices of the order-n triangle, rows r and n-r joined"},
      {"square_paired_base", EntryStatus::derived, {{"n", "", "even order"}},
       "n x n grid, rows i and n+1-i joined, columns likewise"},
      {"hexagon_base", EntryStatus::derived,
       {{"n", "", "side length"}, {"pairing", "P1", "P1 joins strips i and i+n, P2 mirrors each half"}},
       "hexagon of side n, 2n strips per direction paired into n lines"},
      {"tetrahedron_base", EntryStatus::derived, {{"m", "", "face subdivision"}},
       "monthai_base(2m) folded onto the tetrahedron"},
      {"cube_base", EntryStatus::derived, {{"m", "", "face subdivision"}}, "m x m cells per face, width-1 rings around each axis"},
      {"octa_board", EntryStatus::data_backed, {}, "octahedron, 9 cells per face, bands about the 3-fold axes"},
      {"icosa_board", EntryStatus::data_backed, {}, "icosahedron, 4 cells per face, bands about the 5-fold axes"},
      {"dodeca_board", EntryStatus::data_backed, {}, "dodecahedron edge midpoints, central hexagons"},
      {"helios_board", EntryStatus::data_backed, {}, "crossings of the 12 chords {j, j+4} of a regular 12-gon"},
  };
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw Error(ErrorCode::not_found, "no catalog entry named '" + std::string(name) + "'");
}

BoardRef parse_board_ref(std::string_view text) {
  BoardRef r;
  auto q = text.find('?');
  r.name = std::string(text.substr(0, q));
  if (r.name.empty()) throw Error(ErrorCode::invalid_parameter, "empty board reference");
  if (q == std::string_view::npos) return r;
  std::string_view rest = text.substr(q + 1);
  while (!rest.empty()) {
    auto amp = rest.find('&');
    auto kv = rest.substr(0, amp);
    auto eq = kv.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw Error(ErrorCode::invalid_parameter, "bad parameter '" + std::string(kv) + "' in board reference");
    r.params[std::string(kv.substr(0, eq))] = std::string(kv.substr(eq + 1));
    if (amp == std::string_view::npos) break;
    rest = rest.substr(amp + 1);
  }
  return r;
}

std::string format_board_ref(const BoardRef& ref) {
  std::string s = ref.name;
  char sep = '?';
  for (const auto& [k, v] : ref.params) {
    s += sep;
    s += k + "=" + v;
    sep = '&';
  }
  return s;
}

// --- profiles ------------------------------------------------------------

ExpectedProfile measure_profile(const Board& b) {
  ExpectedProfile p;
  p.points = b.design.num_points();
  p.lines = b.design.num_lines();
  p.line_size = uniform_size(b.design.lines()).value_or(0);
  for (const auto& [name, idx] : b.design.classes()) {
    auto lines = b.design.class_lines(name);
    p.classes.push_back({name, idx.size(), uniform_size(lines).value_or(0)});
  }
  p.sin = sin(b.design);
  p.board_class = classify_board(b);
  return p;
}

std::vector<std::string> profile_differences(const ExpectedProfile& e, const ExpectedProfile& a) {
  std::vector<std::string> out;
  auto num = [&](const char* what, std::size_t x, std::size_t y) {
    if (x != y) out.push_back(std::string(what) + ": expected " + std::to_string(x) + ", got " + std::to_string(y));
  };
  num("points", e.points, a.points);
  num("lines", e.lines, a.lines);
  num("line size", e.line_size, a.line_size);
  auto shapes = [](const std::vector<ClassShape>& v) {
    std::string s;
    for (const auto& c : v) s += " " + c.name + ":" + std::to_string(c.lines) + "x" + std::to_string(c.line_size);
    return s.empty() ? std::string(" none") : s;
  };
  if (e.classes != a.classes) out.push_back("classes: expected" + shapes(e.classes) + ", got" + shapes(a.classes));
  auto set_str = [](const std::set<std::size_t>& s) {
    std::string r = "{";
    for (auto x : s) r += (r.size() > 1 ? "," : "") + std::to_string(x);
    return r + "}";
  };
  if (e.sin != a.sin) out.push_back("SIN: expected " + set_str(e.sin) + ", got " + set_str(a.sin));
  if (e.board_class != a.board_class)
    out.push_back("class: expected " + std::string(to_string(e.board_class)) + ", got " + std::string(to_string(a.board_class)));
  if (e.warp && a.warp && !(*e.warp == *a.warp))
    out.push_back("warp: expected " + std::to_string(e.warp->lines) + "x" + std::to_string(e.warp->line_size) + ", got " +
                  std::to_string(a.warp->lines) + "x" + std::to_string(a.warp->line_size));
  return out;
}

namespace {

BoardClass board_class_from_string(const std::string& s) {
  if (s == "Weft") return BoardClass::Weft;
  if (s == "Woof") return BoardClass::Woof;
  if (s == "NotSymmetric") return BoardClass::NotSymmetric;
  throw Error(ErrorCode::load_error, "unknown board class '" + s + "'");
}

}  // namespace

Json to_json(const ExpectedProfile& p) {
  Json j;
  j["points"] = p.points;
  j["lines"] = p.lines;
  j["line_size"] = p.line_size;
  Json cls = Json::array();
  for (const auto& c : p.classes) cls.push_back(Json{{"name", c.name}, {"lines", c.lines}, {"line_size", c.line_size}});
  j["classes"] = cls;
  j["sin"] = std::vector<std::size_t>(p.sin.begin(), p.sin.end());
  j["board_class"] = std::string(to_string(p.board_class));
  if (p.warp) j["warp"] = Json{{"k", p.warp->k}, {"lines", p.warp->lines}, {"line_size", p.warp->line_size}};
  return j;
}

ExpectedProfile profile_from_json(const Json& j) {
  try {
    ExpectedProfile p;
    p.points = j.at("points").get<std::size_t>();
    p.lines = j.at("lines").get<std::size_t>();
    p.line_size = j.at("line_size").get<std::size_t>();
    for (const auto& c : j.at("classes"))
      p.classes.push_back({c.at("name").get<std::string>(), c.at("lines").get<std::size_t>(), c.at("line_size").get<std::size_t>()});
    for (const auto& x : j.at("sin")) p.sin.insert(x.get<std::size_t>());
    p.board_class = board_class_from_string(j.at("board_class").get<std::string>());
    if (j.contains("warp")) {
      const auto& w = j.at("warp");
      p.warp = WarpProfile{w.at("k").get<int>(), w.at("lines").get<std::size_t>(), w.at("line_size").get<std::size_t>()};
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::load_error, std::string("expected profile: ") + e.what());
  }
}

// --- constructions -------------------------------------------------------

namespace {

using Keys = std::vector<int>;  // per point, -1 = on no line of this class

/// Lines grouped by key value, in increasing key order.
void add_class(LineSet& lines, std::map<std::string, std::vector<int>>& classes, const std::string& name, const Keys& keys) {
  std::map<int, Line> by_key;
  for (std::size_t p = 0; p < keys.size(); ++p)
    if (keys[p] >= 0) by_key[keys[p]].push_back(static_cast<int>(p));
  auto& idx = classes[name];
  for (auto& [_, l] : by_key) {
    idx.push_back(static_cast<int>(lines.size()));
    lines.push_back(std::move(l));
  }
}

void add_lines(LineSet& lines, const Keys& keys) {
  std::map<std::string, std::vector<int>> ignore;
  add_class(lines, ignore, "", keys);
}

int floor_of(const Real& x) { return static_cast<int>(x.as_rational().floor()); }

Layout::P2 p2(double x, double y) { return {x, y}; }

int int_param(const BoardRef& ref, const std::string& key) {
  const std::string& v = ref.params.at(key);
  int x = 0;
  auto r = std::from_chars(v.data(), v.data() + v.size(), x);
  if (r.ec != std::errc{} || r.ptr != v.data() + v.size())
    throw Error(ErrorCode::invalid_parameter, key + " must be an integer, got '" + v + "'");
  return x;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::invalid_parameter, what);
}

struct Built {
  Source source;
  Design design;
};

Built square_grid_board(int n, const std::function<void(const Source&, LineSet&, std::map<std::string, std::vector<int>>&)>& f) {
  Source s = build_biregular(Family::biregular_square, n, PointKind::face_center);
  LineSet lines;
  std::map<std::string, std::vector<int>> classes;
  f(s, lines, classes);
  Design d(s.points.size(), std::move(lines), std::move(classes));
  return {std::move(s), std::move(d)};
}

std::pair<int, int> row_col(const Point& p) { return {floor_of(p.coords[1]), floor_of(p.coords[0])}; }

Built latin_square(int n) {
  return square_grid_board(n, [n](const Source& s, LineSet& lines, auto& classes) {
    Keys h, v;
    for (const auto& p : s.points) {
      auto [r, c] = row_col(p);
      h.push_back(r);
      v.push_back(c);
    }
    (void)n;
    add_class(lines, classes, "H", h);
    add_class(lines, classes, "V", v);
  });
}

Built sudoku() {
  return square_grid_board(9, [](const Source& s, LineSet& lines, auto& classes) {
    Keys h, v, q;
    for (const auto& p : s.points) {
      auto [r, c] = row_col(p);
      h.push_back(r);
      v.push_back(c);
      q.push_back(3 * (r / 3) + c / 3);
    }
    add_class(lines, classes, "H", h);
    add_class(lines, classes, "V", v);
    add_class(lines, classes, "Q", q);
  });
}

Built knut_vik(int n) {
  return square_grid_board(n, [n](const Source& s, LineSet& lines, auto& classes) {
    Keys d, a;
    for (const auto& p : s.points) {
      auto [r, c] = row_col(p);
      d.push_back(((c - r) % n + n) % n);
      a.push_back((c + r) % n);
    }
    add_class(lines, classes, "A", a);
    add_class(lines, classes, "D", d);
  });
}

Built square_paired(int n) {
  return square_grid_board(n, [n](const Source& s, LineSet& lines, auto& classes) {
    Keys h, v;
    for (const auto& p : s.points) {
      auto [r, c] = row_col(p);
      h.push_back(std::min(r, n - 1 - r));
      v.push_back(std::min(c, n - 1 - c));
    }
    add_class(lines, classes, "H", h);
    add_class(lines, classes, "V", v);
  });
}

/// Rows of a triangle-lattice point in the three directions.
std::array<Rational, 3> triangle_rows(const Vec& xy, int n) {
  auto [a, b] = triangular_lattice(xy);
  return {b, a, Rational(n) - a - b};
}

void monthai_lines(const Source& s, int n, LineSet& lines, std::map<std::string, std::vector<int>>& classes) {
  static const char* names[] = {"A", "B", "C"};
  for (int dir = 0; dir < 3; ++dir) {
    Keys keys;
    for (const auto& p : s.points) {
      int r = static_cast<int>(triangle_rows(p.coords, n)[static_cast<std::size_t>(dir)].floor());
      keys.push_back(std::min(r, n - 1 - r));
    }
    add_class(lines, classes, names[dir], keys);
  }
}

Built monthai(int n) {
  Source s = build_biregular(Family::biregular_triangle, n, PointKind::face_center);
  LineSet lines;
  std::map<std::string, std::vector<int>> classes;
  monthai_lines(s, n, lines, classes);
  Design d(s.points.size(), std::move(lines), std::move(classes));
  return {std::move(s), std::move(d)};
}

Built triangle_vertex(int n) {
  Source s = build_biregular(Family::biregular_triangle, n, PointKind::vertex);
  static const char* names[] = {"A", "B", "C"};
  LineSet lines;
  std::map<std::string, std::vector<int>> classes;
  for (int dir = 0; dir < 3; ++dir) {
    Keys keys;
    for (const auto& p : s.points) {
      int r = static_cast<int>(triangle_rows(p.coords, n)[static_cast<std::size_t>(dir)].floor());
      keys.push_back(std::min(r, n - r));
    }
    add_class(lines, classes, names[dir], keys);
  }
  Design d(s.points.size(), std::move(lines), std::move(classes));
  return {std::move(s), std::move(d)};
}

Built hexagon(int n, bool shift) {
  Source s = build_biregular(Family::biregular_hexagon, n, PointKind::face_center);
  static const char* names[] = {"A", "B", "C"};
  LineSet lines;
  std::map<std::string, std::vector<int>> classes;
  const int mid = n % 2 ? (n - 1) / 2 : -1;
  for (int dir = 0; dir < 3; ++dir) {
    Keys keys;
    for (const auto& p : s.points) {
      auto [a, b] = triangular_lattice(p.coords);
      Rational x = dir == 0 ? b : dir == 1 ? a : -(a + b);
      int strip = static_cast<int>(x.floor()) + n;  // 0 .. 2n-1
      int key = 0;
      if (shift) {
        key = strip % n;
      } else {
        int half = strip / n, t = strip % n;
        key = (t == mid) ? mid : half * n + std::min(t, n - 1 - t);
      }
      keys.push_back(key);
    }
    add_class(lines, classes, names[dir], keys);
  }
  Design d(s.points.size(), std::move(lines), std::move(classes));
  return {std::move(s), std::move(d)};
}

Built tetrahedron(int m) {
  Source flat = build_biregular(Family::biregular_triangle, 2 * m, PointKind::face_center);
  LineSet flat_lines;
  std::map<std::string, std::vector<int>> classes;
  monthai_lines(flat, 2 * m, flat_lines, classes);
  Source s = build_polyhedral_source(Polyhedron::tetrahedron, m, PointKind::face_center);
  std::map<std::string, int> id_of;
  for (const auto& p : s.points) id_of[to_string(p.coords)] = p.id;
  std::vector<int> image(flat.points.size());
  for (const auto& p : flat.points) {
    auto [a, b] = triangular_lattice(p.coords);
    auto it = id_of.find(to_string(fold_triangle_to_tetrahedron(a, b, m)));
    if (it == id_of.end()) throw Error(ErrorCode::construction_bug, "folded cell missing on the tetrahedron");
    image[static_cast<std::size_t>(p.id)] = it->second;
  }
  for (auto& l : flat_lines)
    for (int& p : l) p = image[static_cast<std::size_t>(p)];
  Design d(s.points.size(), std::move(flat_lines), std::move(classes));
  return {std::move(s), std::move(d)};
}

Built cube(int m) {
  Source s = build_polyhedral_source(Polyhedron::cube, m, PointKind::face_center);
  LineSet lines;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    Keys keys;
    for (const auto& p : s.points) {
      Rational c = p.coords[axis].as_rational();
      bool on_cap = c == Rational(1) || c == Rational(-1);
      keys.push_back(on_cap ? -1 : static_cast<int>((Rational(m) * (c + Rational(1)) / Rational(2)).floor()));
    }
    add_lines(lines, keys);
  }
  Design d(s.points.size(), std::move(lines));
  return {std::move(s), std::move(d)};
}

ExpectedProfile uniform_profile(std::size_t points, std::vector<ClassShape> classes, std::set<std::size_t> sin_set,
                                BoardClass cls) {
  ExpectedProfile p;
  p.points = points;
  for (const auto& c : classes) p.lines += c.lines;
  p.line_size = classes.empty() ? 0 : classes.front().line_size;
  p.classes = std::move(classes);
  p.sin = std::move(sin_set);
  p.board_class = cls;
  return p;
}

std::vector<ClassShape> same_classes(std::initializer_list<const char*> names, std::size_t lines, std::size_t size) {
  std::vector<ClassShape> out;
  for (const char* n : names) out.push_back({n, lines, size});
  return out;
}

/// Fills defaults and checks the parameter names.
BoardRef normalise(const BoardRef& ref) {
  const auto& e = catalog_entry(ref.name);
  BoardRef out{ref.name, {}};
  for (const auto& [k, v] : ref.params) {
    bool known = std::any_of(e.params.begin(), e.params.end(), [&](const ParamSpec& p) { return p.name == k; });
    if (!known) throw Error(ErrorCode::invalid_parameter, ref.name + " has no parameter '" + k + "'");
    out.params[k] = v;
  }
  for (const auto& p : e.params)
    if (!out.params.count(p.name)) {
      if (p.default_value.empty()) throw Error(ErrorCode::invalid_parameter, ref.name + " needs parameter '" + p.name + "'");
      out.params[p.name] = p.default_value;
    }
  return out;
}

const ExpectedProfile& data_profile(const std::string& name);

}  // namespace

ExpectedProfile expected_profile(const BoardRef& raw) {
  const BoardRef ref = normalise(raw);
  const std::string& name = ref.name;
  const auto sz = [](int x) { return static_cast<std::size_t>(x); };
  if (name == "fano") {
    ExpectedProfile p;
    p.points = 7;
    p.lines = 7;
    p.line_size = 3;
    p.sin = {1};
    p.board_class = BoardClass::Woof;
    return p;
  }
  if (name == "b1") return uniform_profile(9, same_classes({"H", "V"}, 3, 3), {1}, BoardClass::Weft);
  if (name == "sudoku_base") return uniform_profile(81, same_classes({"H", "Q", "V"}, 9, 9), {1, 3}, BoardClass::Woof);
  if (name == "latin_square_base") {
    int n = int_param(ref, "n");
    require(n >= 2 && n <= 64, "latin_square_base needs 2 <= n <= 64");
    return uniform_profile(sz(n * n), same_classes({"H", "V"}, sz(n), sz(n)), {1}, BoardClass::Weft);
  }
  if (name == "knut_vik_base") {
    int n = int_param(ref, "n");
    require(n >= 3 && n % 2 == 1 && n <= 63, "knut_vik_base needs odd 3 <= n <= 63");
    return uniform_profile(sz(n * n), same_classes({"A", "D"}, sz(n), sz(n)), {1}, BoardClass::Weft);
  }
  if (name == "monthai_base") {
    int n = int_param(ref, "n");
    require(n >= 4 && n % 2 == 0 && n <= 64, "monthai_base needs even 4 <= n <= 64");
    return uniform_profile(sz(n * n), same_classes({"A", "B", "C"}, sz(n / 2), sz(2 * n)), {4}, BoardClass::Weft);
  }
  if (name == "triangle_vertex_base") {
    int n = int_param(ref, "n");
    require(n >= 3 && n % 2 == 1 && n <= 63, "triangle_vertex_base needs odd 3 <= n <= 63");
    // two row pairs of different directions share 2 or 3 vertices
    return uniform_profile(sz((n + 1) * (n + 2) / 2), same_classes({"A", "B", "C"}, sz((n + 1) / 2), sz(n + 2)), {2, 3},
                           BoardClass::Woof);
  }
  if (name == "square_paired_base") {
    int n = int_param(ref, "n");
    require(n >= 4 && n % 2 == 0 && n <= 64, "square_paired_base needs even 4 <= n <= 64");
    return uniform_profile(sz(n * n), same_classes({"H", "V"}, sz(n / 2), sz(2 * n)), {4}, BoardClass::Weft);
  }
  if (name == "hexagon_base") {
    int n = int_param(ref, "n");
    require(n >= 2 && n <= 32, "hexagon_base needs 2 <= n <= 32");
    const std::string& pairing = ref.params.at("pairing");
    require(pairing == "P1" || pairing == "P2", "pairing must be P1 or P2");
    bool weft = pairing == "P1";
    std::set<std::size_t> s = {6};
    if (!weft) s = n % 2 ? std::set<std::size_t>{4, 6, 8} : std::set<std::size_t>{4, 8};
    return uniform_profile(sz(6 * n * n), same_classes({"A", "B", "C"}, sz(n), sz(6 * n)), s,
                           weft ? BoardClass::Weft : BoardClass::Woof);
  }
  if (name == "tetrahedron_base") {
    int m = int_param(ref, "m");
    require(m >= 2 && m <= 16, "tetrahedron_base needs 2 <= m <= 16");
    return uniform_profile(sz(4 * m * m), same_classes({"A", "B", "C"}, sz(m), sz(4 * m)), {4}, BoardClass::Weft);
  }
  if (name == "cube_base") {
    int m = int_param(ref, "m");
    require(m >= 1 && m <= 16, "cube_base needs 1 <= m <= 16");
    ExpectedProfile p;
    p.points = sz(6 * m * m);
    p.lines = sz(3 * m);
    p.line_size = sz(4 * m);
    p.sin = {2};
    p.board_class = BoardClass::Woof;
    return p;
  }
  return data_profile(name);
}

// --- Fano ----------------------------------------------------------------

Source fano_source() {
  const Real h = Real::sqrt(3);
  const std::vector<Vec> coords = {
      {Real(1), Real(0)},
      {Real(Rational(1, 2)), h / Real(2)},
      {Real(Rational(3, 2)), h / Real(2)},
      {Real(0), Real(0)},
      {Real(2), Real(0)},
      {Real(1), h},
      {Real(1), h / Real(3)},
  };
  Source s;
  Layout layout;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    s.points.push_back(Point{static_cast<int>(i), coords[i], PointKind::vertex});
    layout.positions.push_back({coords[i][0].to_double(), coords[i][1].to_double()});
    layout.cells.emplace_back();
  }
  const double r = std::sqrt(3.0) / 3;
  layout.outlines.push_back({p2(0, 0), p2(2, 0), p2(1, std::sqrt(3.0)), p2(0, 0)});
  for (int v : {3, 4, 5}) {
    const auto& a = layout.positions[static_cast<std::size_t>(v)];
    const auto& b = layout.positions[static_cast<std::size_t>(v == 3 ? 2 : v == 4 ? 1 : 0)];
    layout.outlines.push_back({a, b});
  }
  std::vector<Layout::P2> circle;
  for (int i = 0; i <= 48; ++i) {
    double t = 2 * std::numbers::pi * i / 48;
    circle.push_back(p2(1 + r * std::cos(t), r + r * std::sin(t)));
  }
  layout.outlines.push_back(std::move(circle));
  s.layout = std::move(layout);
  s.group = dihedral_group(3, coords[6], 90);
  s.family = Family::custom;
  s.order = 1;
  return s;
}

Design fano_design() {
  return Design(7, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}, {0, 5, 6}, {1, 4, 6}, {2, 3, 6}});
}

// --- bundled data --------------------------------------------------------

std::string_view bundled_data(std::string_view name) {
  for (std::size_t i = 0; i < detail::kBundledCount; ++i)
    if (name == detail::kBundled[i].name && detail::kBundled[i].text[0] != '\0') return detail::kBundled[i].text;
  throw Error(ErrorCode::not_found, "no bundled data for '" + std::string(name) + "'");
}

DataBoard load_data_board(const std::string& text, const std::string& where) {
  Json j = parse_json(text, where);
  auto fail = [&](const std::string& what) { return Error(ErrorCode::load_error, where + ": " + what); };
  DataBoard out;
  try {
    if (j.value("schema", std::string()) != "latin-board/1") throw fail("schema must be latin-board/1");
    out.board = board_from_json(j.at("board"));
    out.expected = profile_from_json(j.at("expected"));
    out.provenance = j.value("provenance", std::string());
    if (j.contains("warp"))
      out.warp = WarpClass{j.at("warp").at("k").get<int>(), canonical(j.at("warp").at("lines").get<LineSet>())};
  } catch (const nlohmann::json::exception& e) {
    throw fail(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::load_error) throw;
    throw fail(e.what());
  }
  ExpectedProfile actual = measure_profile(*out.board);
  if (out.warp) {
    auto rep = verify_warp(*out.board, *out.warp, actual.board_class);
    if (!rep.ok()) throw fail("bundled warp fails: " + rep.failures.front());
    actual.warp = WarpProfile{out.warp->k, out.warp->lines.size(), uniform_size(out.warp->lines).value_or(0)};
  }
  if (out.expected.warp && !out.warp) throw fail("expected profile names a warp but the file has none");
  auto diff = profile_differences(out.expected, actual);
  if (!diff.empty()) throw fail("profile mismatch: " + diff.front());
  return out;
}

namespace {

const DataBoard& data_entry(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, DataBoard> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  if (catalog_entry(name).status != EntryStatus::data_backed)
    throw Error(ErrorCode::not_found, "'" + name + "' is not a data-backed entry");
  DataBoard d;
  try {
    d = load_data_board(std::string(bundled_data(name)), name);
  } catch (const Error& e) {
    throw Error(ErrorCode::construction_bug, e.what());
  }
  if (d.board->name != name) throw Error(ErrorCode::construction_bug, name + ": file names board '" + d.board->name + "'");
  return cache.emplace(name, std::move(d)).first->second;
}

const ExpectedProfile& data_profile(const std::string& name) { return data_entry(name).expected; }

Built construct(const BoardRef& ref) {
  const std::string& name = ref.name;
  if (name == "fano") return {fano_source(), fano_design()};
  if (name == "b1") return latin_square(3);
  if (name == "sudoku_base") return sudoku();
  if (name == "latin_square_base") return latin_square(int_param(ref, "n"));
  if (name == "knut_vik_base") return knut_vik(int_param(ref, "n"));
  if (name == "monthai_base") return monthai(int_param(ref, "n"));
  if (name == "triangle_vertex_base") return triangle_vertex(int_param(ref, "n"));
  if (name == "square_paired_base") return square_paired(int_param(ref, "n"));
  if (name == "hexagon_base") return hexagon(int_param(ref, "n"), ref.params.at("pairing") == "P1");
  if (name == "tetrahedron_base") return tetrahedron(int_param(ref, "m"));
  if (name == "cube_base") return cube(int_param(ref, "m"));
  throw Error(ErrorCode::not_found, "no construction for '" + name + "'");
}

}  // namespace

BoardPtr build_board(const BoardRef& raw) {
  const BoardRef ref = normalise(raw);
  if (catalog_entry(ref.name).status == EntryStatus::data_backed) return data_entry(ref.name).board;
  const ExpectedProfile expected = expected_profile(ref);
  Built b = construct(ref);
  BoardPtr board;
  try {
    board = make_board(format_board_ref(ref), std::move(b.source), std::move(b.design));
  } catch (const Error& e) {
    throw Error(ErrorCode::construction_bug, format_board_ref(ref) + ": " + e.what());
  }
  auto diff = profile_differences(expected, measure_profile(*board));
  if (!diff.empty()) throw Error(ErrorCode::construction_bug, format_board_ref(ref) + ": " + diff.front());
  return board;
}

std::optional<WarpClass> bundled_warp(std::string_view name) {
  if (catalog_entry(name).status != EntryStatus::data_backed) return std::nullopt;
  return data_entry(std::string(name)).warp;
}

BoardPtr load_board(const std::string& path) {
  Json j = parse_json(read_file(path), path);
  if (j.contains("schema")) return load_data_board(j.dump(), path).board;
  if (j.contains("source") && j.contains("design")) return board_from_json(j);
  if (j.contains("board")) return board_from_json(j.at("board"));
  if (j.contains("board_ref")) return resolve_board(j.at("board_ref").get<std::string>(), nullptr);
  throw Error(ErrorCode::load_error, path + ": not a board document");
}

BoardPtr resolve_board(const std::string& ref, const Json* embedded) {
  if (embedded) return board_from_json(*embedded);
  try {
    return build_board(ref);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::not_found)
      throw Error(ErrorCode::load_error, "board '" + ref + "' is not in the catalog and no board is embedded");
    throw;
  }
}

}  // namespace latin
