#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rsshape {

/// An integer partition: weakly decreasing positive parts.
///
/// The same type is used for shapes (lambda) and for cycle types (alpha).
/// The default-constructed partition is the empty partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Accepts "3,2,1,1", "(3,2,1,1)", "3 2 1 1" and exponent form "2^4,1^2".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-based part access; zero beyond the last part.
  int part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  /// Canonical text form, comma separated ("3,2,1,1").
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Orders partitions the way `enumerate_partitions` emits them: larger
/// partitions in lexicographic order come first.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

Partition conjugate(const Partition& lambda);

/// All partitions of n in reverse-lexicographic order, starting at (n).
std::vector<Partition> enumerate_partitions(int n);

/// Partitions of n with every part at most `max_part`, same order.
std::vector<Partition> enumerate_partitions(int n, int max_part);

struct ShapeStats {
  int tail_length = 0;
  bool is_hook = false;
  int odd_column_count = 0;
};

ShapeStats shape_stats(const Partition& lambda);

struct BoundingBox {
  int max_rows = 1;
  int max_cols = 1;
};

BoundingBox bounding_box(const Partition& alpha);

inline bool fits(const BoundingBox& box, const Partition& lambda) {
  return lambda.length() <= box.max_rows && lambda.part(1) <= box.max_cols;
}

/// Shapes of |alpha| that fit the bounding box of alpha, in canonical order.
std::vector<Partition> enumerate_B_alpha(const Partition& alpha);

bool is_strict(const Partition& alpha);

/// Number of parts equal to `value`.
int multiplicity(const Partition& alpha, int value);

/// Sorted set difference `a \ b`; both inputs in canonical order.
std::vector<Partition> difference(const std::vector<Partition>& a, const std::vector<Partition>& b);

}  // namespace rsshape
