#include "latin/perm.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>

#include "latin/error.hpp"

namespace latin {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::invalid_parameter, "not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  for (const auto& cyc : cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i) v.at(static_cast<std::size_t>(cyc[i])) = cyc[(i + 1) % cyc.size()];
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return p;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::invalid_parameter, "degree mismatch");
  Permutation p;
  p.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) p.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  return p;
}

std::vector<int> Permutation::apply(std::span<const int> points) const {
  std::vector<int> out;
  out.reserve(points.size());
  for (int x : points) out.push_back((*this)(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string s;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      if (j != i) s += " ";
      s += std::to_string(j);
      seen[j] = 1;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

// --- Schreier-Sims ----------------------------------------------------------

namespace {

struct Level {
  int base = 0;
  std::vector<Permutation> gens;
  std::vector<int> orbit;
  std::vector<std::optional<Permutation>> transversal;  // u with u(base) = point
};

void compute_orbit(Level& level, std::size_t n) {
  level.orbit.assign(1, level.base);
  level.transversal.assign(n, std::nullopt);
  level.transversal[static_cast<std::size_t>(level.base)] = Permutation::identity(n);
  for (std::size_t qi = 0; qi < level.orbit.size(); ++qi) {
    int beta = level.orbit[qi];
    for (const auto& g : level.gens) {
      int gamma = g(beta);
      if (!level.transversal[static_cast<std::size_t>(gamma)]) {
        level.transversal[static_cast<std::size_t>(gamma)] = g * *level.transversal[static_cast<std::size_t>(beta)];
        level.orbit.push_back(gamma);
      }
    }
  }
}

int first_moved_point(const Permutation& p) {
  for (std::size_t i = 0; i < p.degree(); ++i)
    if (p(static_cast<int>(i)) != static_cast<int>(i)) return static_cast<int>(i);
  return -1;
}

/// Sift g through levels [start, end); returns the residue and the level
/// where sifting stopped (levels.size() when it went all the way through).
std::pair<Permutation, std::size_t> strip(Permutation g, const std::vector<Level>& levels, std::size_t start) {
  for (std::size_t j = start; j < levels.size(); ++j) {
    int beta = g(levels[j].base);
    const auto& u = levels[j].transversal[static_cast<std::size_t>(beta)];
    if (!u) return {std::move(g), j};
    g = u->inverse() * g;
  }
  return {std::move(g), levels.size()};
}

}  // namespace

struct PermGroup::Cache {
  std::mutex mutex;
  bool chain_built = false;
  std::vector<Level> levels;
  bool elements_built = false;
  std::vector<Permutation> elements;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw Error(ErrorCode::invalid_parameter, "generator degree mismatch");
}

const PermGroup::Cache& PermGroup::cache() const {
  if (!cache_) throw Error(ErrorCode::invalid_parameter, "empty PermGroup");
  std::lock_guard lock(cache_->mutex);
  if (cache_->chain_built) return *cache_;
  auto& levels = cache_->levels;
  std::vector<Permutation> gens;
  for (const auto& g : generators_)
    if (!g.is_identity()) gens.push_back(g);
  for (const auto& g : gens) {
    bool fixes_base = std::all_of(levels.begin(), levels.end(), [&](const Level& l) { return g(l.base) == l.base; });
    if (fixes_base) levels.push_back(Level{first_moved_point(g), {}, {}, {}});
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (const auto& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j) fixes_prefix = fixes_prefix && g(levels[j].base) == levels[j].base;
      if (fixes_prefix) levels[i].gens.push_back(g);
    }
    compute_orbit(levels[i], degree_);
  }
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    auto& level = levels[static_cast<std::size_t>(i)];
    for (std::size_t oi = 0; oi < level.orbit.size() && !restarted; ++oi) {
      int beta = level.orbit[oi];
      for (std::size_t gi = 0; gi < level.gens.size() && !restarted; ++gi) {
        const Permutation& x = level.gens[gi];
        const Permutation& u_beta = *level.transversal[static_cast<std::size_t>(beta)];
        const Permutation& u_img = *level.transversal[static_cast<std::size_t>(x(beta))];
        Permutation schreier = u_img.inverse() * x * u_beta;
        auto [residue, j] = strip(std::move(schreier), levels, static_cast<std::size_t>(i) + 1);
        if (residue.is_identity()) continue;
        if (j == levels.size()) levels.push_back(Level{first_moved_point(residue), {}, {}, {}});
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels[l].gens.push_back(residue);
          compute_orbit(levels[l], degree_);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
      }
    }
    if (!restarted) --i;
  }
  cache_->chain_built = true;
  return *cache_;
}

std::size_t PermGroup::order() const {
  const auto& c = cache();
  std::size_t order = 1;
  for (const auto& level : c.levels) {
    std::size_t k = level.orbit.size();
    if (order > std::numeric_limits<std::size_t>::max() / k) return std::numeric_limits<std::size_t>::max();
    order *= k;
  }
  return order;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  const auto& c = cache();
  auto [residue, j] = strip(p, c.levels, 0);
  return j == c.levels.size() && residue.is_identity();
}

const std::vector<Permutation>& PermGroup::elements(std::size_t cap) const {
  std::size_t n = order();
  if (n > cap) throw Error(ErrorCode::too_large, "group of order " + std::to_string(n) + " exceeds element cap");
  const auto& c = cache();
  std::lock_guard lock(cache_->mutex);
  if (c.elements_built) return c.elements;
  // Every element factors uniquely as u_0 * u_1 * ... over the transversals.
  std::vector<Permutation> current{Permutation::identity(degree_)};
  for (auto it = c.levels.rbegin(); it != c.levels.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(current.size() * it->orbit.size());
    for (int beta : it->orbit)
      for (const auto& e : current) next.push_back(*it->transversal[static_cast<std::size_t>(beta)] * e);
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  cache_->elements = std::move(current);
  cache_->elements_built = true;
  return cache_->elements;
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<char> seen(degree_, 0);
  std::vector<int> out{point};
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t qi = 0; qi < out.size(); ++qi)
    for (const auto& g : generators_) {
      int y = g(out[qi]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> PermGroup::stabilizer_elements(int point, std::size_t cap) const {
  std::vector<Permutation> out;
  for (const auto& e : elements(cap))
    if (e(point) == point) out.push_back(e);
  return out;
}

}  // namespace latin
