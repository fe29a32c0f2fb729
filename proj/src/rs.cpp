#include "rsshape/rs.hpp"

#include <algorithm>
#include <unordered_map>

#include "rsshape/error.hpp"

namespace rsshape {

namespace {

// Inserts `value` into `rows`, returning the index of the row that grew.
std::size_t row_insert(std::vector<std::vector<int>>& rows, int value) {
  int carry = value;
  for (std::size_t k = 0;; ++k) {
    if (k == rows.size()) {
      rows.push_back({carry});
      return k;
    }
    auto& row = rows[k];
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      return k;
    }
    std::swap(*it, carry);
  }
}

}  // namespace

RsPair rs_forward(const Permutation& sigma, std::vector<RsStep>* trace) {
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  for (int i = 1; i <= sigma.size(); ++i) {
    const std::size_t grown = row_insert(p, sigma(i));
    if (grown == q.size()) q.emplace_back();
    q[grown].push_back(i);
    if (trace) trace->push_back({sigma(i), Tableau(p), Tableau(q)});
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Permutation rs_inverse(const Tableau& p, const Tableau& q) {
  if (p.shape() != q.shape()) throw Error("P and Q must have the same shape");
  if (!is_standard(p) || !is_standard(q)) throw Error("P and Q must be standard");
  if (!p.is_bijective() || !q.is_bijective()) throw Error("P and Q must be filled with 1..n");
  const int n = p.size();
  auto rows = p.rows();
  std::vector<int> one_line(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const Cell c = q.find(i);
    std::size_t k = static_cast<std::size_t>(c.row - 1);
    int carry = rows[k].back();
    rows[k].pop_back();
    while (k > 0) {
      --k;
      auto& row = rows[k];
      // Rightmost entry smaller than the carried value is bumped upward.
      auto it = std::lower_bound(row.begin(), row.end(), carry);
      --it;
      std::swap(*it, carry);
    }
    if (rows.back().empty()) rows.pop_back();
    one_line[static_cast<std::size_t>(i - 1)] = carry;
  }
  return Permutation(std::move(one_line));
}

Partition rs_shape(const Permutation& sigma) {
  if (sigma.size() <= ShapeScanner::kMaxN) {
    ShapeScanner scanner;
    scanner.scan(sigma.one_line());
    auto lengths = scanner.row_lengths();
    return Partition(std::vector<int>(lengths.begin(), lengths.end()));
  }
  return rs_forward(sigma).p.shape();
}

int ShapeScanner::scan(std::span<const int> one_line) {
  rows_ = 0;
  for (int value : one_line) {
    int carry = value;
    int k = 0;
    for (;; ++k) {
      if (k == rows_) {
        cells_[static_cast<std::size_t>(k)][0] = carry;
        lengths_[static_cast<std::size_t>(k)] = 1;
        ++rows_;
        break;
      }
      auto& row = cells_[static_cast<std::size_t>(k)];
      int& len = lengths_[static_cast<std::size_t>(k)];
      int* end = row.data() + len;
      int* it = std::upper_bound(row.data(), end, carry);
      if (it == end) {
        *end = carry;
        ++len;
        break;
      }
      std::swap(*it, carry);
    }
  }
  return rows_;
}

std::uint64_t ShapeScanner::code() const {
  std::uint64_t c = 1;
  for (int i = rows_ - 1; i >= 0; --i) {
    const int next = (i + 1 < rows_) ? lengths_[static_cast<std::size_t>(i + 1)] : 0;
    for (int k = 0; k < lengths_[static_cast<std::size_t>(i)] - next; ++k) c = (c << 1) | 1u;
    c <<= 1;
  }
  return c;
}

Partition decode_shape(std::uint64_t code) {
  // Undo ShapeScanner::code: read bits from least significant upward.
  std::vector<int> reversed_rows;
  int width = 0;
  // Bits after the leading 1, most significant first, describe rows bottom to top.
  int top = 63;
  while (top > 0 && !((code >> top) & 1u)) --top;
  for (int b = top - 1; b >= 0; --b) {
    if ((code >> b) & 1u) {
      ++width;
    } else {
      reversed_rows.push_back(width);
    }
  }
  std::reverse(reversed_rows.begin(), reversed_rows.end());
  return Partition(std::move(reversed_rows));
}

int longest_monotone_subsequence(std::span<const int> word, Direction dir) {
  std::vector<int> piles;
  for (int v : word) {
    const int key = dir == Direction::ascending ? v : -v;
    auto it = std::lower_bound(piles.begin(), piles.end(), key);
    if (it == piles.end()) {
      piles.push_back(key);
    } else {
      *it = key;
    }
  }
  return static_cast<int>(piles.size());
}

int greene_invariant(const Permutation& sigma, int k, Direction dir) {
  if (k < 1) throw Error("Greene invariant needs k >= 1");
  const int n = sigma.size();
  if (k == 1) return longest_monotone_subsequence(sigma.one_line(), dir);
  if (n > 12) throw Error("exhaustive Greene oracle is limited to n <= 12");
  k = std::min(k, n == 0 ? 1 : n);

  // Map descending to ascending by negating values: v -> n + 1 - v.
  std::vector<int> word(sigma.one_line());
  if (dir == Direction::descending) {
    for (int& v : word) v = n + 1 - v;
  }

  // State: position and the multiset of chain tails (0 = empty chain),
  // kept sorted so equivalent assignments share a memo entry.
  std::unordered_map<std::uint64_t, int> memo;
  std::vector<int> tails(static_cast<std::size_t>(k), 0);
  auto encode = [&](int pos) {
    std::uint64_t key = static_cast<std::uint64_t>(pos);
    for (int t : tails) key = key * 16 + static_cast<std::uint64_t>(t);
    return key;
  };
  auto best = [&](auto&& self, int pos) -> int {
    if (pos == n) return 0;
    const std::uint64_t key = encode(pos);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int result = self(self, pos + 1);  // leave word[pos] out
    const int v = word[static_cast<std::size_t>(pos)];
    for (std::size_t c = 0; c < tails.size(); ++c) {
      if (tails[c] >= v) continue;
      if (c > 0 && tails[c] == tails[c - 1]) continue;  // same tail, same outcome
      const std::vector<int> saved = tails;
      tails[c] = v;
      std::sort(tails.begin(), tails.end());
      result = std::max(result, 1 + self(self, pos + 1));
      tails = saved;
    }
    memo.emplace(key, result);
    return result;
  };
  return best(best, 0);
}

}  // namespace rsshape
