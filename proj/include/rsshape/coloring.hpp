#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsshape/partition.hpp"
#include "rsshape/permutation.hpp"
#include "rsshape/tableau.hpp"

namespace rsshape {

/// For two colors, color 1 is "blue" (alpha_1 boxes) and color 2 is "red".
inline constexpr int kBlue = 1;
inline constexpr int kRed = 2;

/// Assignment of a color index 1..r to every box of a shape.
class Coloring {
 public:
  Coloring() = default;

  /// Rows of color indices; row lengths give the shape.
  explicit Coloring(std::vector<std::vector<int>> colors);

  /// Every box of `shape` in color `color`.
  static Coloring uniform(const Partition& shape, int color = 1);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return colors_; }
  int at(int row, int col) const { return colors_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)]; }
  void set(int row, int col, int color);

  /// Largest color index in use.
  int num_colors() const;

  /// counts()[c - 1] = number of boxes of color c.
  std::vector<int> counts() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> colors_;
};

/// A spiral coloring of a single column.
struct SpiralResult {
  std::vector<int> color_of;  ///< colors, top to bottom
  /// terminal[c - 1] = 1-based row (from the top of the column) of the last
  /// box given color c, or 0 if the color is absent.
  std::vector<int> terminal;
};

/// Alternately (starting with `outside_color`) give each color the
/// bottommost then the topmost free box; once a color runs out, the other
/// color takes every remaining box, continuing its own bottom/top alternation.
/// With `upside_down` the roles of top and bottom are exchanged.
SpiralResult spiral_coloring(int column_length, int count_outside, int count_inside, int outside_color,
                             bool upside_down = false);

struct CanonicalCycle {
  Permutation sigma;
  Tableau p;  ///< sigma . T_lambda^up
};

/// The n-cycle of shape lambda obtained from the slash/arrow scheme on
/// T_lambda^up. Requires lambda in B_(n).
CanonicalCycle canonical_cycle(const Partition& lambda);

/// Applies the slash/arrow scheme to each color of `q_up` separately and
/// returns sigma with P = sigma . q_up.
///
/// Within a color: columns are that color's boxes (top to bottom); the
/// bottom box of every column is slashed except in the rightmost column of
/// the color and in columns holding one box of the color. The path visits
/// each column's unslashed boxes top, bottom, next top, ..., moves on to
/// the top box of the next column, and after the rightmost column returns
/// through the slashed boxes right to left. Each arrow a -> b means
/// sigma(b) = a.
Permutation associated_permutation(const Tableau& q_up, const Coloring& coloring);

struct ColoringCheck {
  bool accepted = false;
  Permutation sigma;
  Tableau p;
};

/// Checks that `coloring` is an alpha-coloring of Q^up. Throws if Q is not
/// admissible or the color counts (sorted) differ from alpha.
ColoringCheck validate_alpha_coloring(const Tableau& q, const Coloring& coloring, const Partition& alpha);

enum class OutcomeKind { coloring, explicit_permutation, unattainable };

struct ColoringOutcome {
  OutcomeKind kind = OutcomeKind::unattainable;
  std::string construction;  ///< which construction produced the witness
  std::optional<Coloring> coloring;
  Tableau q;                 ///< admissible recording tableau (coloring kind)
  Permutation sigma;
  Tableau witness_p;         ///< sigma . Q^up (coloring kind) or RS insertion tableau
};

/// True iff (alpha, lambda) is one of the unattainable pairs for two cycles.
bool is_two_cycle_exception(const Partition& alpha, const Partition& lambda);

/// The exceptional shapes of alpha = (alpha_1, alpha_2) that lie in B_alpha,
/// in canonical order.
std::vector<Partition> two_cycle_exceptions(const Partition& alpha);

/// A witness for lambda in S_alpha for a two-part alpha and lambda in B_alpha.
/// The result is re-checked before it is returned; a construction that
/// produced an invalid witness throws.
ColoringOutcome construct_two_cycle(const Partition& alpha, const Partition& lambda);

/// For alpha = (2^(r-k), 1^k): singleton colors on the middle box of every
/// odd column, pair colors placed symmetrically in each column.
ColoringOutcome involution_canonical_coloring(const Partition& alpha, const Partition& lambda);

struct SearchOptions {
  std::uint64_t budget = 50'000'000;  ///< colorings examined before giving up
  bool count_all = false;             ///< count every coloring instead of stopping at the first
  bool canonical_only = false;        ///< only try Q = T_lambda
};

enum class SearchStatus { found, absent, budget_exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<ColoringOutcome> witness;  ///< first witness in search order
  std::uint64_t examined = 0;
  /// Number of alpha-colorings found (count_all). Colorings that differ only
  /// by swapping two colors of equal size are counted once.
  std::uint64_t count = 0;
  std::uint64_t admissible_tableaux = 0;
};

/// Exhaustive alpha-coloring search over admissible Q (T_lambda first, then
/// the other admissible tableaux in SYT order). "absent" means proven absent.
SearchResult search_alpha_coloring(const Partition& alpha, const Partition& lambda, const SearchOptions& options = {});

}  // namespace rsshape
