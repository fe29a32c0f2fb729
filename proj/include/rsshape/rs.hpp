#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rsshape/partition.hpp"
#include "rsshape/permutation.hpp"
#include "rsshape/tableau.hpp"

namespace rsshape {

struct RsPair {
  Tableau p;  ///< insertion tableau
  Tableau q;  ///< recording tableau
  friend bool operator==(const RsPair&, const RsPair&) = default;
};

/// (P_i, Q_i) after inserting sigma(i).
struct RsStep {
  int inserted = 0;
  Tableau p;
  Tableau q;
};

/// Row insertion of sigma(1), ..., sigma(n). When `trace` is non-null the
/// intermediate pairs (P_1, Q_1) ... (P_n, Q_n) are appended to it.
RsPair rs_forward(const Permutation& sigma, std::vector<RsStep>* trace = nullptr);

/// Reverse bumping. Throws if P and Q differ in shape or are not standard.
Permutation rs_inverse(const Tableau& p, const Tableau& q);

Partition rs_shape(const Permutation& sigma);

/// Allocation-free shape computation for hot loops over S_n, n <= kMaxN.
class ShapeScanner {
 public:
  static constexpr int kMaxN = 31;

  /// Row lengths of the RS shape of `one_line`; returns the number of rows.
  int scan(std::span<const int> one_line);

  /// Row lengths after the last scan (first `rows` entries are valid).
  std::span<const int> row_lengths() const { return {lengths_.data(), static_cast<std::size_t>(rows_)}; }

  /// Injective 64-bit code of the last shape (boundary path with a leading 1).
  std::uint64_t code() const;

 private:
  std::array<std::array<int, kMaxN>, kMaxN> cells_{};
  std::array<int, kMaxN> lengths_{};
  int rows_ = 0;
};

Partition decode_shape(std::uint64_t code);

enum class Direction { ascending, descending };

/// Longest strictly monotone subsequence (patience sorting).
int longest_monotone_subsequence(std::span<const int> word, Direction dir);

/// a_k / d_k: the largest total size of k disjoint ascending (descending)
/// subsequences of the one-line word, found by exhaustive memoized search
/// over chain assignments. Row insertion is not used. k >= 2 needs n <= 12.
int greene_invariant(const Permutation& sigma, int k, Direction dir);

}  // namespace rsshape
