#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsshape/partition.hpp"

namespace rsshape {

/// An element of S_n in one-line notation. Values are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  /// "2 6 5 7 4 1 3", "[2,6,5,7,4,1,3]" or "2,6,5,7,4,1,3".
  static Permutation parse_one_line(std::string_view text);

  /// Disjoint cycle notation such as "(3,5,4,7)(1,2,6)". Omitted points
  /// are fixed; `n == 0` means "largest element mentioned".
  static Permutation parse_cycles(std::string_view text, int n = 0);

  /// Cycle notation if the text contains '(' and one-line notation otherwise.
  static Permutation parse(std::string_view text, int n = 0);

  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const noexcept { return one_line_; }

  /// Cycles led by their minimum, ordered by decreasing length then leader.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

Permutation inverse(const Permutation& sigma);

/// (sigma o tau)(i) = sigma(tau(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);

Partition cycle_type(const Permutation& sigma);

/// Canonical cycle text; fixed points are written explicitly.
std::string format_cycles(const Permutation& sigma);

/// Space separated one-line text.
std::string format_one_line(const Permutation& sigma);

/// |C_alpha| = n! / (prod alpha_i * prod m_j!). Exact for n <= 20.
std::uint64_t class_size(const Partition& alpha);

/// Generates every element of a conjugacy class exactly once.
///
/// Elements are produced by repeatedly opening a cycle at the smallest
/// unused point, choosing its length among the remaining parts, and then
/// choosing the remaining points of the cycle in increasing order. The
/// decision tree can be cut into disjoint subtrees (`Task`s) for parallel
/// workers; the union over all tasks is the whole class.
class ClassEnumerator {
 public:
  struct Task {
    std::vector<int> sequence;  ///< points in cycle order
    std::vector<int> lengths;   ///< lengths of the cycles opened so far
  };

  explicit ClassEnumerator(Partition alpha);

  const Partition& alpha() const noexcept { return alpha_; }
  std::uint64_t size() const { return class_size(alpha_); }

  /// The root task (the whole class).
  Task root() const { return {}; }

  /// Splits the tree breadth first until at least `min_tasks` subtrees exist
  /// or every subtree is a single leaf. Order follows the serial order.
  std::vector<Task> split(std::size_t min_tasks) const;

  /// Calls `visit(std::span<const int> one_line)` for every element in `task`.
  template <class Visit>
  void for_each(const Task& task, Visit&& visit) const;

  template <class Visit>
  void for_each(Visit&& visit) const {
    for_each(root(), visit);
  }

 private:
  struct State {
    int n = 0;
    std::vector<int> sequence;
    std::vector<int> lengths;
    std::vector<int> remaining;  // remaining[len] = cycles of that length still to open
    std::vector<char> used;      // 1-based
    std::vector<int> one_line;   // 1-based, 0 = unset
    int block_start = 0;         // index in sequence where the current cycle starts
    int block_length = 0;
  };

  State restore(const Task& task) const;
  std::vector<Task> children(const Task& task) const;
  bool is_leaf(const Task& task) const { return static_cast<int>(task.sequence.size()) == alpha_.size(); }

  template <class Visit>
  void walk(State& s, Visit& visit) const;

  Partition alpha_;
  std::vector<int> distinct_lengths_;  // decreasing
};

template <class Visit>
void ClassEnumerator::for_each(const Task& task, Visit&& visit) const {
  State s = restore(task);
  walk(s, visit);
}

template <class Visit>
void ClassEnumerator::walk(State& s, Visit& visit) const {
  const int pos = static_cast<int>(s.sequence.size());
  if (pos == s.n) {
    visit(std::span<const int>(s.one_line.data() + 1, static_cast<std::size_t>(s.n)));
    return;
  }
  if (pos == s.block_start + s.block_length) {
    int first = 1;
    while (s.used[static_cast<std::size_t>(first)]) ++first;
    const int saved_start = s.block_start;
    const int saved_length = s.block_length;
    for (int len : distinct_lengths_) {
      if (s.remaining[static_cast<std::size_t>(len)] == 0) continue;
      --s.remaining[static_cast<std::size_t>(len)];
      s.lengths.push_back(len);
      s.block_start = pos;
      s.block_length = len;
      s.sequence.push_back(first);
      s.used[static_cast<std::size_t>(first)] = 1;
      if (len == 1) s.one_line[static_cast<std::size_t>(first)] = first;
      walk(s, visit);
      s.used[static_cast<std::size_t>(first)] = 0;
      s.sequence.pop_back();
      s.lengths.pop_back();
      ++s.remaining[static_cast<std::size_t>(len)];
    }
    s.block_start = saved_start;
    s.block_length = saved_length;
    return;
  }
  const int prev = s.sequence.back();
  const int head = s.sequence[static_cast<std::size_t>(s.block_start)];
  const bool closes = pos + 1 == s.block_start + s.block_length;
  for (int y = head + 1; y <= s.n; ++y) {
    if (s.used[static_cast<std::size_t>(y)]) continue;
    s.used[static_cast<std::size_t>(y)] = 1;
    s.sequence.push_back(y);
    s.one_line[static_cast<std::size_t>(prev)] = y;
    if (closes) s.one_line[static_cast<std::size_t>(y)] = head;
    walk(s, visit);
    s.sequence.pop_back();
    s.used[static_cast<std::size_t>(y)] = 0;
  }
}

}  // namespace rsshape
