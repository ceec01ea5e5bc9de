#include "latin/board.hpp"

#include <algorithm>
#include <set>

#include "latin/error.hpp"

namespace latin {

std::string_view to_string(BoardClass c) noexcept {
  switch (c) {
    case BoardClass::Weft: return "Weft";
    case BoardClass::Woof: return "Woof";
    case BoardClass::NotSymmetric: return "NotSymmetric";
  }
  return "?";
}

BoardPtr make_board(std::string name, Source source, Design design) {
  if (source.points.size() != design.num_points())
    throw Error(ErrorCode::invalid_design, "design and source disagree on the number of points");
  PermGroup g = induced_group(source);
  return std::make_shared<const Board>(Board{std::move(name), std::move(source), std::move(design), std::move(g)});
}

bool acts_on_lines(const PermGroup& g, const Design& d) {
  for (const auto& p : g.generators())
    if (!is_automorphism(d, p)) return false;
  return true;
}

namespace {

LineSet image(const Permutation& p, const LineSet& lines) {
  LineSet out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back(p.apply(l));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool acts_transitively(const PermGroup& g, const std::vector<LineSet>& blocks) {
  if (blocks.empty()) return true;
  std::vector<LineSet> canon;
  for (const auto& b : blocks) canon.push_back(canonical(b));
  auto find = [&](const LineSet& s) -> int {
    for (std::size_t i = 0; i < canon.size(); ++i)
      if (canon[i] == s) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> moves;  // moves[gen][block]
  for (const auto& p : g.generators()) {
    std::vector<int> m;
    for (std::size_t i = 0; i < canon.size(); ++i) {
      int j = find(image(p, canon[i]));
      if (j < 0)
        throw Error(ErrorCode::not_an_action, "generator " + p.to_cycle_string() + " sends block " +
                                                  std::to_string(i) + " outside the block list");
      m.push_back(j);
    }
    moves.push_back(std::move(m));
  }
  std::vector<char> seen(canon.size(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& m : moves) {
      int j = m[static_cast<std::size_t>(queue[q])];
      if (!seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = 1;
        queue.push_back(j);
      }
    }
  return queue.size() == canon.size();
}

std::optional<Resolution> weft_resolution(const Board& b) {
  const Design& d = b.design;
  if (!acts_on_lines(b.group, d)) return std::nullopt;
  if (d.num_lines() < 2 || sin(d).size() != 1) return std::nullopt;
  for (const auto& r : find_resolutions(d, 1000)) {
    std::vector<LineSet> blocks;
    for (const auto& cls : r) {
      LineSet ls;
      for (int i : cls) ls.push_back(d.line(static_cast<std::size_t>(i)));
      blocks.push_back(std::move(ls));
    }
    try {
      if (acts_transitively(b.group, blocks)) return r;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_an_action) throw;
    }
  }
  return std::nullopt;
}

BoardClass classify_board(const Board& b) {
  if (!acts_on_lines(b.group, b.design)) return BoardClass::NotSymmetric;
  return weft_resolution(b) ? BoardClass::Weft : BoardClass::Woof;
}

LineSet orbit(const PermGroup& g, const Line& line) {
  Line start = line;
  std::sort(start.begin(), start.end());
  std::set<Line> seen{start};
  std::vector<Line> queue{start};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& p : g.generators()) {
      Line img = p.apply(queue[i]);
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  return LineSet(seen.begin(), seen.end());
}

std::vector<LineSet> orbit(const PermGroup& g, const LineSet& lines) {
  LineSet start = canonical(lines);
  std::set<LineSet> seen{start};
  std::vector<LineSet> queue{start};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& p : g.generators()) {
      LineSet img = image(p, queue[i]);
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  return {seen.begin(), seen.end()};
}

}  // namespace latin
