#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace latin {

/// A bijection on {0, ..., n-1} in array form: p(i) = images()[i].
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error(invalid_parameter) if `images` is not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);
  /// Build from cycles, e.g. {{1,2},{4,5}} on n points.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Order of the permutation as a group element.
  std::size_t order() const;
  /// (a * b)(x) = a(b(x)): apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// Image of a point set, sorted.
  std::vector<int> apply(std::span<const int> points) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

  std::string to_cycle_string() const;

 private:
  std::vector<int> images_;
};

/// A permutation group given by generators. Order and membership use a
/// Schreier-Sims stabilizer chain built on first use; the element list is
/// only materialised on request. Copies share the cached chain, and the
/// cache is filled under a lock, so const access is thread-safe.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Exact group order (saturates at SIZE_MAX).
  std::size_t order() const;
  bool contains(const Permutation& p) const;
  /// All elements, sorted. Throws Error(too_large) if order() > cap.
  const std::vector<Permutation>& elements(std::size_t cap = 1'000'000) const;

  /// Orbit of a single point, sorted.
  std::vector<int> orbit(int point) const;
  /// Elements fixing `point` (pointwise stabilizer), enumerated.
  std::vector<Permutation> stabilizer_elements(int point, std::size_t cap = 1'000'000) const;

 private:
  struct Cache;
  const Cache& cache() const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace latin
