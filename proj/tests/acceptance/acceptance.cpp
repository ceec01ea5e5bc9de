// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "latin/catalog.hpp"
#include "latin/critical.hpp"
#include "latin/error.hpp"
#include "oracles.hpp"

using namespace latin;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Full boards collected along the way for the critical-set suite.
std::vector<std::pair<std::string, LatinBoard>> g_full;

void keep(const std::string& name, const WovenBoard& w) {
  g_full.emplace_back(name, label(w, fixtures::digits(static_cast<int>(w.warp.lines.size()))));
}

LineSet from_labels(const std::vector<std::vector<int>>& lines) {
  LineSet out;
  for (const auto& l : lines) {
    Line m;
    for (int x : l) m.push_back((2 - (x - 1) / 3) * 3 + (x - 1) % 3);
    out.push_back(m);
  }
  return canonical(out);
}

std::set<std::vector<int>> squares_from_warps(const BoardPtr& b, const std::vector<WarpClass>& ws, int n) {
  auto grid = square_grid(*b);
  std::set<std::vector<int>> out;
  for (const auto& w : ws) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> a(static_cast<std::size_t>(n * n));
      for (std::size_t s = 0; s < w.lines.size(); ++s)
        for (int p : w.lines[s]) {
          auto P = static_cast<std::size_t>(p);
          a[static_cast<std::size_t>(grid->row[P] * n + grid->col[P])] = perm[s];
        }
      out.insert(a);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

// Every class found satisfies the size laws.
void size_laws(Check& c, const Board& b, const std::vector<WarpClass>& ws, const std::string& tag) {
  BoardClass cls = classify_board(b);
  std::size_t s = b.design.line(0).size();
  std::size_t m = b.design.classes().empty() ? 0 : b.design.class_lines(b.design.classes().begin()->first).size();
  for (const auto& w : ws) {
    WarpReport r = verify_warp(b, w, cls);
    c.expect(r.ok(), tag + ": verify_warp failed");
    c.expect(s == static_cast<std::size_t>(w.k) * w.lines.size(), tag + ": line size != k|W|");
    if (cls == BoardClass::Weft)
      for (const auto& l : w.lines) c.expect(l.size() == static_cast<std::size_t>(w.k) * m, tag + ": warp not uniform");
  }
}

Check fano_suite() {
  Check c;
  BoardPtr b = build_board("fano");
  const Design& d = b->design;
  c.expect(d.num_points() == 7 && d.num_lines() == 7, "7 points / 7 lines");
  c.expect(is_k_uniform(d, 3), "3-uniform");
  c.expect(are_isomorphic(d, dual(d)).has_value(), "self-dual witness");
  std::size_t aut = automorphism_group(d).order();
  c.expect(aut == 168, "|Aut| = " + std::to_string(aut));
  c.expect(oracle::automorphism_count(7, d.lines()) == aut, "|Aut| disagrees with brute force over S7");
  c.expect(classify_board(*b) == BoardClass::Woof, "classify = Woof");
  auto t = Clock::now();
  bool empty = find_warp_classes(*b, 1).empty();
  double dt = seconds_since(t);
  c.expect(empty, "k=1 warp search not empty");
  c.expect(dt < 1.0, "warp search took " + std::to_string(dt) + " s");
  c.note("|Aut|=" + std::to_string(aut) + ", warp search " + std::to_string(dt) + " s");
  return c;
}

Check b1_suite() {
  Check c;
  BoardPtr b = build_board("b1");
  c.expect(classify_board(*b) == BoardClass::Weft, "classify(B1) = Weft");
  c.expect(sin(b->design) == std::set<std::size_t>{1}, "SIN(B1) = {1}");
  auto ws = find_warp_classes(*b, 1);
  std::set<LineSet> found;
  for (const auto& w : ws) found.insert(w.lines);
  c.expect(found.count(from_labels({{1, 6, 8}, {2, 4, 9}, {3, 5, 7}})) == 1, "class S missing");
  c.expect(found.count(from_labels({{3, 4, 8}, {2, 6, 7}, {1, 5, 9}})) == 1, "second printed class missing");
  for (const auto& w : ws) keep("b1", WovenBoard{b, w});

  auto t = Clock::now();
  for (int n : {3, 4}) {
    BoardPtr sq = build_board("latin_square_base?n=" + std::to_string(n));
    std::uint64_t raw = count_latin_boards(sq, 1, CountMode::raw, 1'000'000).count;
    auto all = oracle::latin_squares(n);
    c.expect(raw == all.size(), "raw count order " + std::to_string(n) + " = " + std::to_string(raw));
    auto wsq = find_warp_classes(*sq, 1);
    c.expect(squares_from_warps(sq, wsq, n) == std::set<std::vector<int>>(all.begin(), all.end()),
             "order " + std::to_string(n) + " squares differ from brute force");
    if (n == 4) keep("latin_square_base?n=4", WovenBoard{sq, wsq.back()});
  }
  double dt = seconds_since(t);
  c.expect(dt < 5.0, "raw counts took " + std::to_string(dt) + " s");

  t = Clock::now();
  for (int n : {3, 4}) {
    BoardPtr sq = build_board("latin_square_base?n=" + std::to_string(n));
    std::uint64_t eq = count_latin_boards(sq, 1, CountMode::equiv, 1'000'000).count;
    std::size_t expect = oracle::paratopy_classes(n);
    c.expect(eq == expect, "order " + std::to_string(n) + " classes " + std::to_string(eq) + " vs oracle " +
                               std::to_string(expect));
    c.expect(eq == (n == 3 ? 1u : 2u), "order " + std::to_string(n) + " paratopy classes");
  }
  double de = seconds_since(t);
  c.expect(de < 60.0, "equivalence took " + std::to_string(de) + " s");
  c.note("12/576 raw in " + std::to_string(dt) + " s, classes in " + std::to_string(de) + " s");
  return c;
}

Check sudoku_suite() {
  Check c;
  auto t = Clock::now();
  LatinBoard full = fixtures::sudoku_full();
  c.expect(verify_latin(full).ok(), "full grid fails verify_latin");
  PartialBoard p = fixtures::sudoku17();
  c.expect(p.clue_count() == 17, "17 clues");
  c.expect(classify_partial(p) == PartialClass::Critical, "17-clue partial is not Critical");
  auto u = unique_completion(p);
  c.expect(u.has_value() && *u == full.cells, "completion differs from the full grid");
  double dt = seconds_since(t);
  c.expect(dt < 10.0, "took " + std::to_string(dt) + " s");
  g_full.emplace_back("sudoku", full);
  c.note(std::to_string(dt) + " s");
  return c;
}

Check counts_suite() {
  Check c;
  auto t = Clock::now();
  struct Fam {
    Family f;
    oracle::Counts (*counts)(long);
    const char* name;
  };
  for (Fam fam : {Fam{Family::biregular_triangle, oracle::triangle_counts, "triangle"},
                  Fam{Family::biregular_square, oracle::square_counts, "square"},
                  Fam{Family::biregular_hexagon, oracle::hexagon_counts, "hexagon"}})
    for (int n = 2; n <= 8; ++n) {
      oracle::Counts e = fam.counts(n);
      auto got = [&](PointKind k) { return static_cast<long>(build_biregular(fam.f, n, k).points.size()); };
      std::string tag = std::string(fam.name) + " n=" + std::to_string(n);
      c.expect(got(PointKind::vertex) == e.vertices, tag + " vertices");
      c.expect(got(PointKind::edge_center) == e.edges, tag + " edges");
      c.expect(got(PointKind::face_center) == e.faces, tag + " faces");
    }
  double dt = seconds_since(t);
  c.expect(dt < 1.0, "took " + std::to_string(dt) + " s");
  c.note("63 counts in " + std::to_string(dt) + " s");
  return c;
}

Check monthai_suite() {
  Check c;
  BoardPtr b = build_board("monthai_base?n=6");
  ExpectedProfile p = measure_profile(*b);
  c.expect(p.points == 36, "36 points");
  c.expect(p.classes.size() == 3, "3 classes");
  for (const auto& cl : p.classes) c.expect(cl.lines == 3 && cl.line_size == 12, "class " + cl.name + " shape");
  c.expect(p.board_class == BoardClass::Weft, "Weft");
  c.expect(p.sin == std::set<std::size_t>{4}, "SIN {4}");
  for (int k : {1, 4}) {
    auto t = Clock::now();
    auto ws = find_warp_classes(*b, k, 50);
    double dt = seconds_since(t);
    std::size_t lines = k == 1 ? 12 : 3, size = k == 1 ? 3 : 12;
    bool shaped = false;
    for (const auto& w : ws) {
      bool ok = w.lines.size() == lines;
      for (const auto& l : w.lines) ok = ok && l.size() == size;
      shaped = shaped || ok;
    }
    c.expect(shaped, "no k=" + std::to_string(k) + " class of " + std::to_string(lines) + " lines of " +
                         std::to_string(size));
    c.expect(dt < 60.0, "k=" + std::to_string(k) + " took " + std::to_string(dt) + " s");
    size_laws(c, *b, ws, "k=" + std::to_string(k));
    if (!ws.empty()) keep("monthai_base?n=6 k=" + std::to_string(k), WovenBoard{b, ws.front()});
    c.note("k=" + std::to_string(k) + ": " + std::to_string(ws.size()) + " classes in " + std::to_string(dt) + " s");
  }
  return c;
}

Check hexagon_suite() {
  Check c;
  BoardPtr p1 = build_board("hexagon_base?n=3&pairing=P1");
  BoardPtr p2 = build_board("hexagon_base?n=3&pairing=P2");
  c.expect(classify_board(*p1) == BoardClass::Weft, "P1 Weft");
  c.expect(sin(p1->design) == std::set<std::size_t>{6}, "P1 SIN {6}");
  c.expect(classify_board(*p2) == BoardClass::Woof, "P2 Woof");
  auto t = Clock::now();
  auto ws = find_warp_classes(*p1, 1, 1);
  double dt = seconds_since(t);
  c.expect(!ws.empty() && ws.front().lines.size() == 18, "no k=1 class with 18 lines");
  c.expect(dt < 600.0, "took " + std::to_string(dt) + " s");
  size_laws(c, *p1, ws, "hexagon");
  if (!ws.empty()) keep("hexagon_base?n=3", WovenBoard{p1, ws.front()});
  c.note("warp in " + std::to_string(dt) + " s");
  return c;
}

Check polyhedra_suite() {
  Check c;
  BoardPtr t4 = build_board("tetrahedron_base?m=4");
  BoardPtr m8 = build_board("monthai_base?n=8");
  auto iso = are_isomorphic(t4->design, m8->design, true);
  c.expect(iso.has_value(), "tetrahedron(4) not isomorphic to monthai(8)");
  if (iso) {
    LineSet img;
    for (const auto& l : t4->design.lines()) img.push_back(iso->apply(l));
    c.expect(canonical(img) == m8->design.lines(), "isomorphism witness is wrong");
  }

  BoardPtr cube = build_board("cube_base?m=4");
  c.expect(cube->design.num_lines() == 12, "cube: 12 lines");
  for (const auto& l : cube->design.lines()) c.expect(l.size() == 16, "cube: line size 16");
  c.expect(classify_board(*cube) == BoardClass::Woof, "cube: Woof");
  auto t = Clock::now();
  auto ws = find_warp_classes(*cube, 1, 1);
  double dt = seconds_since(t);
  bool shaped = !ws.empty() && ws.front().lines.size() == 16;
  if (shaped)
    for (const auto& l : ws.front().lines) shaped = shaped && l.size() == 6;
  c.expect(shaped, "cube: no warp of 16 lines of 6");
  c.expect(dt < 1800.0, "cube warp took " + std::to_string(dt) + " s");
  size_laws(c, *cube, ws, "cube");
  if (!ws.empty()) keep("cube_base?m=4", WovenBoard{cube, ws.front()});

  struct Data {
    const char* name;
    std::size_t lines, size;
  };
  for (Data d : {Data{"octa_board", 18, 4}, Data{"icosa_board", 20, 4}, Data{"dodeca_board", 6, 5}}) {
    auto t0 = Clock::now();
    try {
      DataBoard db = load_data_board(std::string(bundled_data(d.name)), d.name);
      double dl = seconds_since(t0);
      bool ok = db.warp && db.expected.warp && db.expected.warp->lines == d.lines &&
                db.expected.warp->line_size == d.size && db.warp->lines.size() == d.lines;
      if (ok)
        for (const auto& l : db.warp->lines) ok = ok && l.size() == d.size;
      c.expect(ok, std::string(d.name) + ": warp profile");
      c.expect(profile_differences(db.expected, measure_profile(*db.board)).empty(), std::string(d.name) + ": profile");
      c.expect(dl < 1.0, std::string(d.name) + ": load took " + std::to_string(dl) + " s");
      if (db.warp) keep(d.name, WovenBoard{db.board, *db.warp});
    } catch (const Error& e) {
      c.expect(false, std::string(d.name) + ": " + e.what());
    }
  }
  c.note("cube warp in " + std::to_string(dt) + " s");
  return c;
}

Check critical_suite() {
  Check c;
  std::mt19937_64 rng(2024);
  auto t = Clock::now();
  for (const auto& [name, full] : g_full) {
    PartialBoard crit = find_critical_set(full, 1);
    c.expect(classify_partial(crit) == PartialClass::Critical, name + ": critical set is not Critical");
    constexpr std::size_t cap = 64;
    for (int trial = 0; trial < 100; ++trial) {
      // drop one or two clues of the critical set, add a few others, then
      // one more clue from the full board
      PartialBoard p = crit;
      std::vector<std::size_t> clues;
      for (std::size_t i = 0; i < p.cells.size(); ++i)
        if (p.cells[i] >= 0) clues.push_back(i);
      std::shuffle(clues.begin(), clues.end(), rng);
      for (std::size_t i = 0; i < std::min<std::size_t>(clues.size(), 1 + rng() % 2); ++i) p.cells[clues[i]] = -1;
      for (std::size_t i = 0; i < p.cells.size(); ++i)
        if (p.cells[i] < 0 && rng() % 16 == 0) p.cells[i] = full.cells[i];
      std::vector<std::size_t> holes;
      for (std::size_t i = 0; i < p.cells.size(); ++i)
        if (p.cells[i] < 0) holes.push_back(i);
      if (holes.empty()) continue;
      std::size_t before = count_completions(p, cap);
      std::size_t h = holes[rng() % holes.size()];
      p.cells[h] = full.cells[h];
      std::size_t after = count_completions(p, cap);
      c.expect(after >= 1 && after <= before, name + ": adding a clue raised the completion count");
      if (before == 1) c.expect(unique_completion(p) == full.cells, name + ": completion changed");
    }
  }
  c.note(std::to_string(g_full.size()) + " boards in " + std::to_string(seconds_since(t)) + " s");
  return c;
}

Check symmetry_suite() {
  Check c;
  std::vector<std::string> refs;
  for (const auto& e : catalog_entries()) {
    BoardRef r{e.name, {}};
    for (const auto& p : e.params)
      if (p.default_value.empty()) r.params[p.name] = "4";
    if (e.name == "knut_vik_base" || e.name == "triangle_vertex_base") r.params["n"] = "5";
    refs.push_back(format_board_ref(r));
  }
  refs.push_back("hexagon_base?n=3&pairing=P2");
  for (const auto& ref : refs) {
    BoardPtr b = build_board(ref);
    const auto& el = b->source.group.elements();
    const auto& pts = b->source.points;
    std::size_t literal = 0;
    if (el.size() <= 32) {
      for (const auto& g : el) {
        Permutation p = induced_permutation(g, pts);
        c.expect(oracle::maps_lines(p.images(), b->design.lines()), ref + ": induced permutation not in Aut");
        ++literal;
      }
    } else {
      for (const auto& p : b->group.generators())
        c.expect(oracle::maps_lines(p.images(), b->design.lines()), ref + ": generator not in Aut");
    }
    const auto& gens = b->source.group.generators();
    for (const auto& g : gens)
      for (const auto& h : gens)
        c.expect(induced_permutation(g * h, pts) == induced_permutation(g, pts) * induced_permutation(h, pts),
                 ref + ": induced action is not a homomorphism");
    c.expect(literal == el.size() || el.size() > 32, ref + ": literal check incomplete");
  }
  c.note(std::to_string(refs.size()) + " boards");
  return c;
}

}  // namespace

int main() {
  struct Suite {
    const char* name;
    std::function<Check()> run;
  };
  std::vector<Suite> suites{{"fano", fano_suite},         {"b1-latin-square", b1_suite},
                            {"sudoku", sudoku_suite},     {"biregular-counts", counts_suite},
                            {"monthai", monthai_suite},   {"hexagon", hexagon_suite},
                            {"polyhedra", polyhedra_suite}, {"critical-sets", critical_suite},
                            {"symmetry", symmetry_suite}};
  int failed = 0;
  for (const auto& s : suites) {
    Check c;
    auto t = Clock::now();
    try {
      c = s.run();
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << (c.failures.empty() ? "PASS " : "FAIL ") << s.name << " (" << seconds_since(t) << " s)";
    for (const auto& n : c.notes) line << " | " << n;
    for (const auto& f : c.failures) line << " | " << f;
    std::puts(line.str().c_str());
    std::fflush(stdout);
    failed += !c.failures.empty();
  }
  return failed;
}
