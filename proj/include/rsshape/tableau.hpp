#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rsshape/partition.hpp"
#include "rsshape/permutation.hpp"

namespace rsshape {

/// A box of a Young diagram, English convention, 1-based.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A filling of a Young diagram with distinct positive integers.
///
/// Standard tableaux, column-reversed tableaux Q^up and the partial
/// tableaux of row insertion all share this type; standardness is a
/// predicate, not an invariant.
class Tableau {
 public:
  Tableau() = default;

  /// Row lengths must be weakly decreasing and entries distinct and positive.
  explicit Tableau(std::vector<std::vector<int>> rows);

  /// Builds a tableau of `shape` from its column word (columns top to bottom).
  static Tableau from_column_word(const Partition& shape, const std::vector<int>& word);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int size() const noexcept { return shape_.size(); }

  int at(int row, int col) const { return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)]; }
  int at(Cell c) const { return at(c.row, c.col); }

  /// Entries of column j (1-based), top to bottom.
  std::vector<int> column(int j) const;

  /// Position of an entry; throws if absent.
  Cell find(int entry) const;

  /// True iff the entries are exactly 1..n.
  bool is_bijective() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// T_lambda: the standard tableau whose column word is 1..n.
Tableau canonical_tableau(const Partition& lambda);

/// Q^up: every column's entries reversed.
Tableau column_reverse(const Tableau& t);

bool is_standard(const Tableau& t);

/// Q is admissible iff every row of Q^up increases. Throws if Q is not standard.
bool is_admissible(const Tableau& q);

/// Independent test of admissibility: bottom-justify each column and check
/// that the resulting skew filling is standard.
bool gravity_filling_is_standard(const Tableau& q);

/// All standard tableaux of shape lambda, lexicographic by row word
/// (rows read top to bottom, left to right).
std::vector<Tableau> enumerate_syt(const Partition& lambda);

/// Calls `visit` for every standard tableau of shape lambda (unspecified order).
void for_each_syt(const Partition& lambda, const std::function<void(const Tableau&)>& visit);

/// Number of standard tableaux by the hook length formula.
std::uint64_t count_syt(const Partition& lambda);

/// sigma . T: every entry i replaced by sigma(i).
Tableau apply_permutation(const Permutation& sigma, const Tableau& t);

/// Columns left to right, each read top to bottom.
std::vector<int> column_word(const Tableau& t);

/// Columns left to right, each read bottom to top.
std::vector<int> reverse_column_word(const Tableau& t);

/// Row word: rows top to bottom, each left to right.
std::vector<int> row_word(const Tableau& t);

/// Swaps the positions of two entries.
Tableau swap_entries(const Tableau& t, int a, int b);

}  // namespace rsshape
