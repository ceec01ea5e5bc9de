#pragma once

// Exact cover by dancing links (Knuth's Algorithm X). Items are 0..n-1 and
// every item must be covered exactly once.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace latin {

class ExactCover {
 public:
  explicit ExactCover(std::size_t num_items);

  /// Returns the option index. Items must be distinct.
  int add_option(std::span<const int> items);
  int add_option(std::initializer_list<int> items) { return add_option(std::span<const int>(items.begin(), items.size())); }

  /// Commit to an option before solving. Returns false (and marks the
  /// problem infeasible) if it clashes with an earlier selection.
  bool select(int option);

  /// Calls visit(chosen options) for each solution, selected options first.
  /// Stops when visit returns false. Returns the number of solutions seen.
  std::size_t solve(const std::function<bool(const std::vector<int>&)>& visit);
  /// Counts solutions up to `cap`.
  std::size_t count(std::size_t cap);

  std::size_t num_items() const noexcept { return num_items_; }
  std::size_t num_options() const noexcept { return option_start_.size(); }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void cover(int c);
  void uncover(int c);
  bool search(const std::function<bool(const std::vector<int>&)>& visit, std::size_t& found);

  std::size_t num_items_;
  // Node 0 is the root; nodes 1..n are item headers.
  std::vector<int> left_, right_, up_, down_, col_, row_;
  std::vector<int> size_;
  std::vector<int> option_start_, option_end_;
  std::vector<char> active_;
  std::vector<int> chosen_;
  bool infeasible_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace latin
