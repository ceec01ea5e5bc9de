#pragma once

// Finite incidence structures: points 0..n-1 and a set of lines.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "latin/perm.hpp"

namespace latin {

using Line = std::vector<int>;         // sorted point ids
using LineSet = std::vector<Line>;     // sorted lines

/// Sorts each line and then the list of lines.
LineSet canonical(LineSet lines);

class Design {
 public:
  Design() = default;
  /// `classes` maps a name to indices into `lines` as given; they are
  /// remapped after canonical sorting. Throws invalid_design when a line is
  /// empty, repeated or out of range, a point is on no line, or a class is
  /// not a parallel class.
  Design(std::size_t num_points, LineSet lines, std::map<std::string, std::vector<int>> classes = {});

  std::size_t num_points() const noexcept { return num_points_; }
  std::size_t num_lines() const noexcept { return lines_.size(); }
  const LineSet& lines() const noexcept { return lines_; }
  const Line& line(std::size_t i) const { return lines_.at(i); }
  /// Indices of the lines through point p, ascending.
  const std::vector<int>& lines_through(int p) const { return through_.at(static_cast<std::size_t>(p)); }
  /// Index of a sorted line, or -1.
  int index_of(const Line& l) const;

  /// Named parallel classes, as indices into lines().
  const std::map<std::string, std::vector<int>>& classes() const noexcept { return classes_; }
  LineSet class_lines(const std::string& name) const;

  friend bool operator==(const Design& a, const Design& b) {
    return a.num_points_ == b.num_points_ && a.lines_ == b.lines_ && a.classes_ == b.classes_;
  }

 private:
  std::size_t num_points_ = 0;
  LineSet lines_;
  std::map<std::string, std::vector<int>> classes_;
  std::vector<std::vector<int>> through_;
  std::map<Line, int> index_;
};

inline std::size_t line_size(const Line& l) { return l.size(); }
bool is_k_uniform(const Design& d, std::size_t k);
/// Common line size, or nullopt if the lines differ in size.
std::optional<std::size_t> uniform_size(const LineSet& lines);

/// Set of intersection sizes over pairs of distinct lines. Zero is left out
/// unless include_empty. Throws undefined_sin for fewer than two lines.
std::set<std::size_t> sin(const LineSet& lines, bool include_empty = false);
inline std::set<std::size_t> sin(const Design& d, bool include_empty = false) { return sin(d.lines(), include_empty); }

std::size_t intersection_size(const Line& a, const Line& b);

bool is_parallel_class(std::size_t num_points, const LineSet& lines);
inline bool is_parallel_class(const Design& d, const LineSet& lines) { return is_parallel_class(d.num_points(), lines); }
/// Every line of c1 meets every line of c2 in exactly one point.
bool are_orthogonal(const LineSet& c1, const LineSet& c2);

/// Points of the dual are the lines of d; dual line j lists the lines through
/// point j. Throws non_simple_dual when two points share their line set.
Design dual(const Design& d);

/// A resolution: parallel classes (as line indices) partitioning all lines.
using Resolution = std::vector<std::vector<int>>;
/// Up to `limit` resolutions, by exact cover twice: parallel classes over
/// points, then classes over lines. More than 64 lines needs `force`.
std::vector<Resolution> find_resolutions(const Design& d, std::size_t limit = 1000, bool force = false);

/// Full automorphism group by partition refinement and backtracking.
/// More than 32 points needs `force` (throws too_large otherwise).
PermGroup automorphism_group(const Design& d, bool force = false);
/// A point bijection g with g(lines(d1)) = lines(d2), if any.
std::optional<Permutation> are_isomorphic(const Design& d1, const Design& d2, bool force = false);
/// g maps every line of d to a line of d.
bool is_automorphism(const Design& d, const Permutation& g);

}  // namespace latin
