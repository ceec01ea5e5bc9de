#include "latin/dlx.hpp"

#include "latin/error.hpp"

namespace latin {

ExactCover::ExactCover(std::size_t num_items) : num_items_(num_items) {
  const std::size_t n = num_items + 1;
  left_.resize(n);
  right_.resize(n);
  up_.resize(n);
  down_.resize(n);
  col_.resize(n);
  row_.assign(n, -1);
  size_.assign(n, 0);
  active_.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    int ii = static_cast<int>(i);
    left_[i] = ii == 0 ? static_cast<int>(num_items) : ii - 1;
    right_[i] = i == num_items ? 0 : ii + 1;
    up_[i] = down_[i] = col_[i] = ii;
  }
}

int ExactCover::add_option(std::span<const int> items) {
  if (items.empty()) throw Error(ErrorCode::invalid_parameter, "empty option");
  const int r = static_cast<int>(option_start_.size());
  option_start_.push_back(static_cast<int>(col_.size()));
  for (int item : items) {
    if (item < 0 || static_cast<std::size_t>(item) >= num_items_)
      throw Error(ErrorCode::invalid_parameter, "option item out of range");
    int c = item + 1;
    int x = static_cast<int>(col_.size());
    col_.push_back(c);
    row_.push_back(r);
    up_.push_back(up_[static_cast<std::size_t>(c)]);
    down_.push_back(c);
    left_.push_back(0);
    right_.push_back(0);
    down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(c)])] = x;
    up_[static_cast<std::size_t>(c)] = x;
    ++size_[static_cast<std::size_t>(c)];
  }
  option_end_.push_back(static_cast<int>(col_.size()));
  return r;
}

// Row neighbours are implicit: an option occupies a contiguous node range.
void ExactCover::cover(int c) {
  auto C = static_cast<std::size_t>(c);
  left_[static_cast<std::size_t>(right_[C])] = left_[C];
  right_[static_cast<std::size_t>(left_[C])] = right_[C];
  active_[C] = 0;
  for (int i = down_[C]; i != c; i = down_[static_cast<std::size_t>(i)]) {
    const auto r = static_cast<std::size_t>(row_[static_cast<std::size_t>(i)]);
    const int b = option_start_[r], e = option_end_[r];
    for (int j = i + 1 == e ? b : i + 1; j != i; j = j + 1 == e ? b : j + 1) {
      auto J = static_cast<std::size_t>(j);
      up_[static_cast<std::size_t>(down_[J])] = up_[J];
      down_[static_cast<std::size_t>(up_[J])] = down_[J];
      --size_[static_cast<std::size_t>(col_[J])];
    }
  }
}

void ExactCover::uncover(int c) {
  auto C = static_cast<std::size_t>(c);
  for (int i = up_[C]; i != c; i = up_[static_cast<std::size_t>(i)]) {
    const auto r = static_cast<std::size_t>(row_[static_cast<std::size_t>(i)]);
    const int b = option_start_[r], e = option_end_[r];
    for (int j = i == b ? e - 1 : i - 1; j != i; j = j == b ? e - 1 : j - 1) {
      auto J = static_cast<std::size_t>(j);
      ++size_[static_cast<std::size_t>(col_[J])];
      up_[static_cast<std::size_t>(down_[J])] = j;
      down_[static_cast<std::size_t>(up_[J])] = j;
    }
  }
  active_[C] = 1;
  left_[static_cast<std::size_t>(right_[C])] = c;
  right_[static_cast<std::size_t>(left_[C])] = c;
}

bool ExactCover::select(int option) {
  if (infeasible_) return false;
  const auto r = static_cast<std::size_t>(option);
  for (int j = option_start_.at(r); j < option_end_[r]; ++j)
    if (!active_[static_cast<std::size_t>(col_[static_cast<std::size_t>(j)])]) {
      infeasible_ = true;
      return false;
    }
  for (int j = option_start_[r]; j < option_end_[r]; ++j) cover(col_[static_cast<std::size_t>(j)]);
  chosen_.push_back(option);
  return true;
}

bool ExactCover::search(const std::function<bool(const std::vector<int>&)>& visit, std::size_t& found) {
  ++nodes_;
  if (right_[0] == 0) {
    ++found;
    return visit(chosen_);
  }
  int best = right_[0];
  for (int c = right_[0]; c != 0; c = right_[static_cast<std::size_t>(c)])
    if (size_[static_cast<std::size_t>(c)] < size_[static_cast<std::size_t>(best)]) {
      best = c;
      if (size_[static_cast<std::size_t>(c)] == 0) break;
    }
  if (size_[static_cast<std::size_t>(best)] == 0) return true;
  cover(best);
  bool go_on = true;
  for (int r = down_[static_cast<std::size_t>(best)]; r != best && go_on; r = down_[static_cast<std::size_t>(r)]) {
    const auto row = static_cast<std::size_t>(row_[static_cast<std::size_t>(r)]);
    const int b = option_start_[row], e = option_end_[row];
    chosen_.push_back(static_cast<int>(row));
    for (int j = r + 1 == e ? b : r + 1; j != r; j = j + 1 == e ? b : j + 1) cover(col_[static_cast<std::size_t>(j)]);
    go_on = search(visit, found);
    for (int j = r == b ? e - 1 : r - 1; j != r; j = j == b ? e - 1 : j - 1) uncover(col_[static_cast<std::size_t>(j)]);
    chosen_.pop_back();
  }
  uncover(best);
  return go_on;
}

std::size_t ExactCover::solve(const std::function<bool(const std::vector<int>&)>& visit) {
  std::size_t found = 0;
  if (!infeasible_) search(visit, found);
  return found;
}

std::size_t ExactCover::count(std::size_t cap) {
  if (cap == 0) return 0;
  return solve([&, seen = std::size_t{0}](const std::vector<int>&) mutable { return ++seen < cap; });
}

}  // namespace latin
