#include "latin/latin.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

#include "latin/error.hpp"

namespace latin {

LineSet LatinBoard::warp_lines_by_symbol() const {
  LineSet lines(symbols.size());
  for (std::size_t p = 0; p < cells.size(); ++p) lines.at(static_cast<std::size_t>(cells[p])).push_back(static_cast<int>(p));
  return lines;
}

std::vector<std::string> parse_symbols(std::string_view text) {
  std::vector<std::string> out;
  auto dots = text.find("..");
  if (dots != std::string_view::npos) {
    int lo = 0, hi = -1;
    auto a = text.substr(0, dots), b = text.substr(dots + 2);
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), lo);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), hi);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != a.data() + a.size() || r2.ptr != b.data() + b.size() ||
        hi < lo)
      throw Error(ErrorCode::invalid_parameter, "bad symbol range '" + std::string(text) + "'");
    for (int i = lo; i <= hi; ++i) out.push_back(std::to_string(i));
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (piece.empty()) throw Error(ErrorCode::invalid_parameter, "empty symbol in '" + std::string(text) + "'");
    out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

LatinBoard label(const WovenBoard& w, std::vector<std::string> symbols) {
  const LineSet lines = canonical(w.warp.lines);
  if (symbols.size() != lines.size())
    throw Error(ErrorCode::invalid_labeling, std::to_string(symbols.size()) + " symbols for " +
                                                 std::to_string(lines.size()) + " warp lines");
  std::set<std::string> distinct(symbols.begin(), symbols.end());
  if (distinct.size() != symbols.size()) throw Error(ErrorCode::invalid_labeling, "symbols are not distinct");
  const std::size_t P = w.base->design.num_points();
  std::vector<int> cells(P, -1);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (int p : lines[i]) {
      if (p < 0 || static_cast<std::size_t>(p) >= P || cells[static_cast<std::size_t>(p)] >= 0)
        throw Error(ErrorCode::invalid_labeling, "warp lines do not partition the points");
      cells[static_cast<std::size_t>(p)] = static_cast<int>(i);
    }
  if (std::find(cells.begin(), cells.end(), -1) != cells.end())
    throw Error(ErrorCode::invalid_labeling, "warp lines do not cover the points");
  return LatinBoard{w.base, w.warp.k, std::move(symbols), std::move(cells)};
}

LatinReport verify_latin(const Board& b, int k, const std::vector<int>& cells, int num_symbols) {
  LatinReport r;
  const std::size_t P = b.design.num_points();
  if (cells.size() != P) {
    r.failures.push_back("expected " + std::to_string(P) + " cells, got " + std::to_string(cells.size()));
    return r;
  }
  for (std::size_t p = 0; p < P; ++p)
    if (cells[p] < 0 || cells[p] >= num_symbols) r.failures.push_back("point " + std::to_string(p) + " has no valid symbol");
  if (!r.ok()) return r;
  std::vector<int> count(static_cast<std::size_t>(num_symbols));
  for (std::size_t j = 0; j < b.design.num_lines(); ++j) {
    std::fill(count.begin(), count.end(), 0);
    for (int p : b.design.line(j)) ++count[static_cast<std::size_t>(cells[static_cast<std::size_t>(p)])];
    for (int s = 0; s < num_symbols; ++s)
      if (count[static_cast<std::size_t>(s)] != k)
        r.failures.push_back("line " + std::to_string(j) + ": symbol " + std::to_string(s) + " occurs " +
                             std::to_string(count[static_cast<std::size_t>(s)]) + " times, expected " + std::to_string(k));
  }
  return r;
}

std::optional<SquareGrid> square_grid(const Board& b) {
  const auto& cls = b.design.classes();
  if (!cls.count("H") || !cls.count("V")) return std::nullopt;
  LineSet H = b.design.class_lines("H"), V = b.design.class_lines("V");
  const std::size_t n = H.size();
  if (V.size() != n || n * n != b.design.num_points() || !are_orthogonal(H, V)) return std::nullopt;
  SquareGrid g;
  g.n = static_cast<int>(n);
  g.row.assign(n * n, -1);
  g.col.assign(n * n, -1);
  g.at.assign(n, std::vector<int>(n, -1));
  for (std::size_t r = 0; r < n; ++r)
    for (int p : H[r]) g.row[static_cast<std::size_t>(p)] = static_cast<int>(r);
  for (std::size_t c = 0; c < n; ++c)
    for (int p : V[c]) g.col[static_cast<std::size_t>(p)] = static_cast<int>(c);
  for (std::size_t p = 0; p < n * n; ++p)
    g.at[static_cast<std::size_t>(g.row[p])][static_cast<std::size_t>(g.col[p])] = static_cast<int>(p);
  return g;
}

std::vector<LatinBoard> conjugates(const LatinBoard& l) {
  auto g = square_grid(*l.base);
  if (!g || l.k != 1 || static_cast<int>(l.symbols.size()) != g->n)
    throw Error(ErrorCode::unsupported, "conjugates need an n x n Latin square board");
  static constexpr std::array<std::array<int, 3>, 6> roles{
      {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
  std::vector<LatinBoard> out;
  std::set<std::vector<int>> seen;
  for (const auto& sigma : roles) {
    std::vector<int> cells(l.cells.size(), -1);
    for (std::size_t p = 0; p < l.cells.size(); ++p) {
      std::array<int, 3> t{g->row[p], g->col[p], l.cells[p]};
      int r = t[static_cast<std::size_t>(sigma[0])], c = t[static_cast<std::size_t>(sigma[1])],
          s = t[static_cast<std::size_t>(sigma[2])];
      cells[static_cast<std::size_t>(g->at[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])] = s;
    }
    if (seen.insert(cells).second) out.push_back(LatinBoard{l.base, l.k, l.symbols, std::move(cells)});
  }
  return out;
}

PermGroup grid_isotopy_group(const SquareGrid& g) {
  const std::size_t N = static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n);
  std::vector<Permutation> gens;
  auto make = [&](auto&& f) {
    std::vector<int> img(N);
    for (std::size_t p = 0; p < N; ++p) {
      auto [r, c] = f(g.row[p], g.col[p]);
      img[p] = g.at[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return Permutation(std::move(img));
  };
  auto swap_adj = [](int x, int i) { return x == i ? i + 1 : x == i + 1 ? i : x; };
  for (int i = 0; i + 1 < g.n; ++i) {
    gens.push_back(make([&](int r, int c) { return std::pair{swap_adj(r, i), c}; }));
    gens.push_back(make([&](int r, int c) { return std::pair{r, swap_adj(c, i)}; }));
  }
  if (g.n > 1) gens.push_back(make([](int r, int c) { return std::pair{c, r}; }));
  return PermGroup(N, std::move(gens));
}

Equivalence default_equivalence(const Board& b) {
  if (auto g = square_grid(b)) return Equivalence{grid_isotopy_group(*g), true};
  return Equivalence{b.group, false};
}

namespace {

void renumber(std::vector<int>& cells) {
  std::vector<int> name(cells.size() + 1, -1);
  int next = 0;
  for (int& s : cells) {
    int& m = name[static_cast<std::size_t>(s)];
    if (m < 0) m = next++;
    s = m;
  }
}

}  // namespace

std::vector<int> canonical_form(const LatinBoard& l, const Equivalence& eq) {
  std::vector<LatinBoard> variants = eq.conjugates ? conjugates(l) : std::vector<LatinBoard>{l};
  const auto& elements = eq.points.elements();
  std::vector<int> best, img(l.cells.size());
  for (const auto& v : variants)
    for (const auto& g : elements) {
      for (std::size_t p = 0; p < v.cells.size(); ++p) img[static_cast<std::size_t>(g(static_cast<int>(p)))] = v.cells[p];
      renumber(img);
      if (best.empty() || img < best) best = img;
    }
  return best;
}

std::vector<LatinBoard> equivalence_reduce(const std::vector<LatinBoard>& boards, const Equivalence& eq) {
  std::vector<LatinBoard> out;
  std::set<std::vector<int>> seen;
  for (const auto& b : boards)
    if (seen.insert(canonical_form(b, eq)).second) out.push_back(b);
  return out;
}

CountResult count_latin_boards(const BoardPtr& b, int k, CountMode mode, std::uint64_t cap) {
  const int n = warp_symbol_count(*b, k);
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact = fact > cap / static_cast<std::uint64_t>(i) ? cap + 1 : fact * static_cast<std::uint64_t>(i);
  CountResult r;
  WarpOptions o;
  o.k = k;
  if (mode == CountMode::raw) {
    for_each_warp_class(*b, o, [&](const WarpClass&) {
      ++r.warp_classes;
      if (fact > cap || r.warp_classes * fact > cap) {
        r.partial = true;
        return false;
      }
      return true;
    });
    r.count = r.partial ? cap : r.warp_classes * fact;
    return r;
  }
  const Equivalence eq = default_equivalence(*b);
  std::vector<std::string> symbols;
  for (int i = 1; i <= n; ++i) symbols.push_back(std::to_string(i));
  std::set<std::vector<int>> reps;
  for_each_warp_class(*b, o, [&](const WarpClass& w) {
    ++r.warp_classes;
    reps.insert(canonical_form(label(WovenBoard{b, w}, symbols), eq));
    if (reps.size() > cap) {
      r.partial = true;
      return false;
    }
    return true;
  });
  r.count = std::min<std::uint64_t>(reps.size(), cap);
  return r;
}

}  // namespace latin
