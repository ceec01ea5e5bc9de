#include "latin/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "latin/error.hpp"

namespace latin {

namespace {

using P2 = Layout::P2;

const char* const kPalette[] = {"#c0392b", "#2471a3", "#229954", "#b9770e", "#7d3c98",
                                "#17a589", "#cb4335", "#2e4053", "#d68910", "#a93226"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

struct Frame {
  double minx, miny, maxx, maxy, scale, pad;
  std::string x(double v) const { return num((v - minx) * scale + pad); }
  std::string y(double v) const { return num((maxy - v) * scale + pad); }
  std::string pt(const P2& p) const { return x(p[0]) + " " + y(p[1]); }
};

const Layout& layout_of(const Board& b) {
  if (!b.source.layout || b.source.layout->positions.size() != b.design.num_points())
    throw Error(ErrorCode::no_layout, "board '" + b.name + "' has no 2D layout");
  return *b.source.layout;
}

double dist(const P2& a, const P2& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

/// Splits a line into runs of nearby points, each ordered along its longest
/// extent.
std::vector<std::vector<P2>> line_runs(const Line& l, const std::vector<P2>& pos, double reach) {
  std::vector<int> comp(l.size(), -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (comp[i] >= 0) continue;
    std::vector<std::size_t> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < l.size(); ++v)
        if (comp[v] < 0 && dist(pos[static_cast<std::size_t>(l[u])], pos[static_cast<std::size_t>(l[v])]) <= reach) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<P2>> runs(static_cast<std::size_t>(ncomp));
  for (std::size_t i = 0; i < l.size(); ++i)
    runs[static_cast<std::size_t>(comp[i])].push_back(pos[static_cast<std::size_t>(l[i])]);
  for (auto& r : runs) {
    P2 a = r.front(), b = r.front();
    double best = -1;
    for (const auto& p : r)
      for (const auto& q : r)
        if (dist(p, q) > best + 1e-9) {
          best = dist(p, q);
          a = p;
          b = q;
        }
    double dx = b[0] - a[0], dy = b[1] - a[1];
    std::stable_sort(r.begin(), r.end(), [&](const P2& p, const P2& q) {
      return (p[0] - a[0]) * dx + (p[1] - a[1]) * dy < (q[0] - a[0]) * dx + (q[1] - a[1]) * dy;
    });
  }
  return runs;
}

std::string render(const Board& b, const std::vector<std::string>* labels, const std::vector<bool>* locked,
                   const SvgOptions& o) {
  const Layout& lay = layout_of(b);
  const auto& pos = lay.positions;
  Frame f{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest(),
          std::numeric_limits<double>::lowest(), o.scale, 0.6 * o.scale};
  auto extend = [&](const P2& p) {
    f.minx = std::min(f.minx, p[0]);
    f.miny = std::min(f.miny, p[1]);
    f.maxx = std::max(f.maxx, p[0]);
    f.maxy = std::max(f.maxy, p[1]);
  };
  for (const auto& p : pos) extend(p);
  for (const auto& c : lay.cells)
    for (const auto& p : c) extend(p);
  for (const auto& c : lay.outlines)
    for (const auto& p : c) extend(p);

  double nearest = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) nearest = std::min(nearest, dist(pos[i], pos[j]));
  if (nearest == std::numeric_limits<double>::max()) nearest = 1;
  const double r = std::max(2.0, 0.18 * nearest * o.scale);

  std::string s;
  const double w = (f.maxx - f.minx) * f.scale + 2 * f.pad, h = (f.maxy - f.miny) * f.scale + 2 * f.pad;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " +
       num(w) + " " + num(h) + "\">\n";
  s += "<title>" + escape(b.name) + "</title>\n";
  s += "<g fill=\"none\" stroke=\"#999\" stroke-width=\"1\">\n";
  for (const auto& c : lay.outlines) {
    if (c.empty()) continue;
    std::string d = "M" + f.pt(c.front());
    for (std::size_t i = 1; i < c.size(); ++i) d += " L" + f.pt(c[i]);
    s += "<path class=\"outline\" d=\"" + d + "\"/>\n";
  }
  s += "</g>\n<g fill=\"#fafafa\" stroke=\"#bbb\" stroke-width=\"0.5\">\n";
  for (std::size_t i = 0; i < lay.cells.size(); ++i) {
    const auto& c = lay.cells[i];
    if (c.empty()) continue;
    std::string pts;
    for (const auto& p : c) pts += (pts.empty() ? "" : " ") + f.x(p[0]) + "," + f.y(p[1]);
    s += "<polygon class=\"cell\" data-point=\"" + std::to_string(i) + "\" points=\"" + pts + "\"/>\n";
  }
  s += "</g>\n";
  if (o.lines) {
    std::vector<std::string> color(b.design.num_lines(), "");
    std::size_t k = 0;
    for (const auto& [name, idx] : b.design.classes()) {
      for (int li : idx) color[static_cast<std::size_t>(li)] = kPalette[k % std::size(kPalette)];
      ++k;
    }
    s += "<g fill=\"none\" stroke-width=\"2\" stroke-opacity=\"0.55\" stroke-linecap=\"round\">\n";
    for (std::size_t li = 0; li < b.design.num_lines(); ++li) {
      const std::string& c = color[li].empty() ? std::string(kPalette[li % std::size(kPalette)]) : color[li];
      std::string d;
      for (const auto& run : line_runs(b.design.line(li), pos, 1.5 * nearest)) {
        d += (d.empty() ? "M" : " M") + f.pt(run.front());
        for (std::size_t i = 1; i < run.size(); ++i) d += " L" + f.pt(run[i]);
      }
      s += "<path class=\"line\" data-line=\"" + std::to_string(li) + "\" stroke=\"" + c + "\" d=\"" + d + "\"/>\n";
    }
    s += "</g>\n";
  }
  s += "<g stroke=\"#333\" stroke-width=\"0.75\">\n";
  for (std::size_t i = 0; i < pos.size(); ++i) {
    bool labeled = labels && !(*labels)[i].empty();
    s += "<circle class=\"point\" data-point=\"" + std::to_string(i) + "\" cx=\"" + f.x(pos[i][0]) + "\" cy=\"" +
         f.y(pos[i][1]) + "\" r=\"" + num(labeled ? r * 1.6 : r * 0.5) + "\" fill=\"" +
         (labeled ? ((locked && (*locked)[i]) ? "#ffe9a8" : "#fff") : "#333") + "\"/>\n";
  }
  s += "</g>\n<g font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\" font-size=\"" + num(r * 1.8) +
       "\">\n";
  for (std::size_t i = 0; i < pos.size(); ++i) {
    std::string text;
    std::string cls = "symbol";
    if (labels && !(*labels)[i].empty()) text = (*labels)[i];
    else if (o.ids) {
      text = std::to_string(i);
      cls = "id";
    }
    if (text.empty()) continue;
    s += "<text class=\"" + cls + "\" data-point=\"" + std::to_string(i) + "\" x=\"" + f.x(pos[i][0]) + "\" y=\"" +
         f.y(pos[i][1]) + "\">" + escape(text) + "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace

std::string render_svg(const Board& b, const SvgOptions& o) { return render(b, nullptr, nullptr, o); }

std::string render_svg(const LatinBoard& l, const SvgOptions& o) {
  std::vector<std::string> labels;
  for (int c : l.cells) labels.push_back(l.symbols.at(static_cast<std::size_t>(c)));
  return render(*l.base, &labels, nullptr, o);
}

std::string render_svg(const PartialBoard& p, const SvgOptions& o) {
  std::vector<std::string> labels;
  std::vector<bool> locked;
  for (int c : p.cells) {
    labels.push_back(c >= 0 ? p.symbols.at(static_cast<std::size_t>(c)) : std::string());
    locked.push_back(c >= 0);
  }
  return render(*p.base, &labels, &locked, o);
}

}  // namespace latin
