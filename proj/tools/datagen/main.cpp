// Regenerates the bundled board files under core/data.
//
//   latin_datagen <out-dir> [--only name]
//
// Each file holds the board, its measured profile and one warp class found
// by the solver. The stated shapes are asserted before anything is written.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>

#include "latin/catalog.hpp"
#include "latin/error.hpp"

using namespace latin;

namespace {

struct Stated {
  std::size_t points, lines, line_size;
  std::optional<WarpProfile> warp;
};

Vec unit_axis_pick(const Vec& v) {
  // one of each antipodal pair: first nonzero coordinate positive
  for (const auto& x : v)
    if (!x.is_zero()) return x.sign() > 0 ? v : Real(-1) * v;
  return v;
}

/// Cells of a face-subdivided solid grouped into bands about each axis.
/// a = smallest positive vertex height; cells strictly between -a and a
/// are in the belt and fall into m bands of equal height.
LineSet band_lines(const Source& s, const std::vector<Vec>& axes, const std::vector<Vec>& verts, int m) {
  LineSet lines;
  for (const auto& d : axes) {
    Real a;
    bool have = false;
    for (const auto& v : verts) {
      Real h = dot(v, d);
      if (h.sign() > 0 && (!have || h < a)) {
        a = h;
        have = true;
      }
    }
    std::map<int, Line> bands;
    for (const auto& p : s.points) {
      Real h = dot(p.coords, d);
      if (!(h < a) || !(-a < h)) continue;
      Real w = Real(m) * (a - h) / (Real(2) * a);
      int t = 0;
      while (Real(t + 1) < w) ++t;
      bands[t].push_back(p.id);
    }
    for (auto& [_, l] : bands) lines.push_back(std::move(l));
  }
  return lines;
}

std::pair<Source, Design> octa() {
  const int m = 3;
  Source s = build_polyhedral_source(Polyhedron::octahedron, m, PointKind::face_center);
  std::vector<Vec> axes;
  for (int x : {1, -1})
    for (int y : {1, -1}) axes.push_back({Real(x), Real(y), Real(1)});
  LineSet lines = band_lines(s, axes, polyhedron_vertices(Polyhedron::octahedron), m);
  Design d(s.points.size(), std::move(lines));
  return {std::move(s), std::move(d)};
}

std::pair<Source, Design> icosa() {
  const int m = 2;
  Source s = build_polyhedral_source(Polyhedron::icosahedron, m, PointKind::face_center);
  const auto verts = polyhedron_vertices(Polyhedron::icosahedron);
  std::vector<Vec> axes;
  std::set<std::string> seen;
  for (const auto& v : verts) {
    Vec u = unit_axis_pick(v);
    if (seen.insert(to_string(u)).second) axes.push_back(u);
  }
  LineSet lines = band_lines(s, axes, verts, m);
  Design d(s.points.size(), std::move(lines));
  return {std::move(s), std::move(d)};
}

std::pair<Source, Design> dodeca() {
  Source s = build_polyhedral_source(Polyhedron::dodecahedron, 1, PointKind::edge_center);
  std::set<std::string> seen;
  LineSet lines;
  for (const auto& v : polyhedron_vertices(Polyhedron::dodecahedron)) {
    Vec u = unit_axis_pick(v);
    if (!seen.insert(to_string(u)).second) continue;
    Line l;
    for (const auto& p : s.points)
      if (dot(p.coords, u).is_zero()) l.push_back(p.id);
    lines.push_back(std::move(l));
  }
  Design d(s.points.size(), std::move(lines));
  return {std::move(s), std::move(d)};
}

/// Solves x on the segment a-b crossing c-d; nullopt when they do not
/// cross strictly inside both.
std::optional<Vec> crossing(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  Vec r = b - a, q = d - c;
  Real den = r[0] * q[1] - r[1] * q[0];
  if (den.is_zero()) return std::nullopt;
  Vec ac = c - a;
  Real t = (ac[0] * q[1] - ac[1] * q[0]) / den;
  Real u = (ac[0] * r[1] - ac[1] * r[0]) / den;
  if (!(Real(0) < t && t < Real(1) && Real(0) < u && u < Real(1))) return std::nullopt;
  return a + t * r;
}

std::pair<Source, Design> helios() {
  std::vector<Vec> rim;
  for (int j = 0; j < 12; ++j) {
    auto [c, s] = cos_sin_deg(30 * j);
    rim.push_back({c, s});
  }
  std::map<std::string, Vec> pts;
  std::map<std::string, std::set<int>> on;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) {
      auto x = crossing(rim[static_cast<std::size_t>(i)], rim[static_cast<std::size_t>((i + 4) % 12)],
                        rim[static_cast<std::size_t>(j)], rim[static_cast<std::size_t>((j + 4) % 12)]);
      if (!x) continue;
      auto key = to_string(*x);
      pts[key] = *x;
      on[key].insert(i);
      on[key].insert(j);
    }
  std::vector<std::pair<Vec, std::set<int>>> sorted;
  for (auto& [k, v] : pts) sorted.push_back({v, on[k]});
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.first[1] != y.first[1]) return x.first[1] < y.first[1];
    return x.first[0] < y.first[0];
  });
  Source s;
  Layout layout;
  LineSet lines(12);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    s.points.push_back(Point{static_cast<int>(i), sorted[i].first, PointKind::vertex});
    layout.positions.push_back({sorted[i].first[0].to_double(), sorted[i].first[1].to_double()});
    layout.cells.emplace_back();
    for (int c : sorted[i].second) lines[static_cast<std::size_t>(c)].push_back(static_cast<int>(i));
  }
  std::vector<Layout::P2> circle;
  for (int i = 0; i <= 72; ++i) {
    double t = 2 * std::numbers::pi * i / 72;
    circle.push_back({std::cos(t), std::sin(t)});
  }
  layout.outlines.push_back(std::move(circle));
  for (int j = 0; j < 12; ++j) {
    const auto& a = rim[static_cast<std::size_t>(j)];
    const auto& b = rim[static_cast<std::size_t>((j + 4) % 12)];
    layout.outlines.push_back({{a[0].to_double(), a[1].to_double()}, {b[0].to_double(), b[1].to_double()}});
  }
  s.layout = std::move(layout);
  s.group = dihedral_group(12, {Real(0), Real(0)}, 0);
  s.family = Family::custom;
  s.order = 12;
  Design d(s.points.size(), std::move(lines));
  return {std::move(s), std::move(d)};
}

int generate(const std::string& name, const std::filesystem::path& dir) {
  std::pair<Source, Design> sd;
  Stated stated{};
  std::string provenance;
  if (name == "octa_board") {
    sd = octa();
    stated = {72, 12, 18, WarpProfile{1, 18, 4}};
    provenance = "Reconstruction: octahedron with 9 cells per face; for each 3-fold axis the 6 faces around its belt are cut "
                 "into 3 bands of 18 cells parallel to the equator. Consistent with the stated warp of 18 lines of 4 "
                 "points; not a transcription of a drawing.";
  } else if (name == "icosa_board") {
    sd = icosa();
    stated = {80, 12, 20, WarpProfile{1, 20, 4}};
    provenance = "Reconstruction: icosahedron with 4 cells per face; for each 5-fold axis the 10 belt faces are cut into "
                 "2 bands of 20 cells. Consistent with the stated warp of 20 lines of 4 points; not a transcription of a "
                 "drawing.";
  } else if (name == "dodeca_board") {
    sd = dodeca();
    stated = {30, 10, 6, WarpProfile{1, 6, 5}};
    provenance = "Reconstruction: the 30 edge midpoints of the dodecahedron; each line is the 6 midpoints on the great "
                 "circle perpendicular to a vertex axis. Consistent with the stated warp of 6 lines of 5 points; not a "
                 "transcription of a drawing.";
  } else if (name == "helios_board") {
    sd = helios();
    stated = {36, 12, 6, std::nullopt};
    provenance = "Reconstruction: the 36 interior crossings of the 12 chords {j, j+4} of a regular 12-gon, one line per "
                 "chord; D12-symmetric, 6 points per line and 2 lines per point. Not a transcription of a drawing.";
  } else {
    std::cerr << "unknown entry " << name << "\n";
    return 1;
  }
  BoardPtr b = make_board(name, std::move(sd.first), std::move(sd.second));
  ExpectedProfile p = measure_profile(*b);
  if (p.points != stated.points || p.lines != stated.lines || p.line_size != stated.line_size) {
    std::cerr << name << ": profile " << to_json(p).dump() << " does not match the stated shape\n";
    return 2;
  }
  WarpOptions o;
  o.k = 1;
  o.limit = 1;
  std::optional<WarpClass> warp;
  for_each_warp_class(*b, o, [&](const WarpClass& w) {
    warp = w;
    return false;
  });
  if (warp) p.warp = WarpProfile{warp->k, warp->lines.size(), uniform_size(warp->lines).value_or(0)};
  if (stated.warp && (!p.warp || !(*p.warp == *stated.warp))) {
    std::cerr << name << ": no warp class of the stated shape\n";
    return 2;
  }
  Json j;
  j["schema"] = "latin-board/1";
  j["name"] = name;
  j["provenance"] = provenance;
  j["expected"] = to_json(p);
  j["board"] = to_json(*b);
  if (warp) j["warp"] = Json{{"k", warp->k}, {"lines", warp->lines}};
  std::ofstream out(dir / (name + ".json"));
  out << j.dump(1) << "\n";
  std::cout << name << ": " << to_json(p).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regenerate bundled board files"};
  std::string dir;
  std::vector<std::string> only;
  app.add_option("out-dir", dir, "output directory")->required();
  app.add_option("--only", only, "entries to regenerate");
  CLI11_PARSE(app, argc, argv);
  if (only.empty()) only = {"octa_board", "icosa_board", "dodeca_board", "helios_board"};
  int rc = 0;
  for (const auto& name : only) {
    try {
      rc = std::max(rc, generate(name, dir));
    } catch (const std::exception& e) {
      std::cerr << name << ": " << e.what() << "\n";
      rc = 2;
    }
  }
  return rc;
}
