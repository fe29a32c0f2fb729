#include "rsshape/tableau.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "rsshape/error.hpp"

namespace rsshape {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lengths;
  std::unordered_set<int> seen;
  for (const auto& row : rows_) {
    if (row.empty()) throw Error("tableau rows must be non-empty");
    lengths.push_back(static_cast<int>(row.size()));
    for (int v : row) {
      if (v < 1) throw Error("tableau entries must be positive");
      if (!seen.insert(v).second) throw Error("tableau entry " + std::to_string(v) + " repeated");
    }
  }
  shape_ = Partition(std::move(lengths));
}

Tableau Tableau::from_column_word(const Partition& shape, const std::vector<int>& word) {
  if (static_cast<int>(word.size()) != shape.size()) throw Error("column word length does not match shape");
  std::vector<std::vector<int>> rows;
  for (int len : shape.parts()) rows.emplace_back(static_cast<std::size_t>(len));
  const Partition cols = conjugate(shape);
  std::size_t k = 0;
  for (int j = 1; j <= cols.length(); ++j) {
    for (int i = 1; i <= cols.part(j); ++i) {
      rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = word[k++];
    }
  }
  return Tableau(std::move(rows));
}

std::vector<int> Tableau::column(int j) const {
  std::vector<int> out;
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) >= j) out.push_back(row[static_cast<std::size_t>(j - 1)]);
  }
  return out;
}

Cell Tableau::find(int entry) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] == entry) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    }
  }
  throw Error("entry " + std::to_string(entry) + " not in tableau");
}

bool Tableau::is_bijective() const {
  const int n = size();
  for (const auto& row : rows_) {
    for (int v : row) {
      if (v > n) return false;
    }
  }
  return true;  // distinct positive entries, n of them, all <= n
}

Tableau canonical_tableau(const Partition& lambda) {
  std::vector<int> word(static_cast<std::size_t>(lambda.size()));
  for (std::size_t i = 0; i < word.size(); ++i) word[i] = static_cast<int>(i) + 1;
  return Tableau::from_column_word(lambda, word);
}

Tableau column_reverse(const Tableau& t) {
  auto rows = t.rows();
  const Partition cols = conjugate(t.shape());
  for (int j = 1; j <= cols.length(); ++j) {
    const int h = cols.part(j);
    for (int i = 0; i < h / 2; ++i) {
      std::swap(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)],
                rows[static_cast<std::size_t>(h - 1 - i)][static_cast<std::size_t>(j - 1)]);
    }
  }
  return Tableau(std::move(rows));
}

bool is_standard(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0 && rows[i][j - 1] >= rows[i][j]) return false;
      if (i > 0 && rows[i - 1][j] >= rows[i][j]) return false;
    }
  }
  return true;
}

bool is_admissible(const Tableau& q) {
  if (!is_standard(q)) throw Error("admissibility is defined for standard tableaux only");
  const Tableau up = column_reverse(q);
  for (const auto& row : up.rows()) {
    if (!std::is_sorted(row.begin(), row.end())) return false;
  }
  return true;
}

bool gravity_filling_is_standard(const Tableau& q) {
  // Bottom-justified grid: column j occupies the lowest col_len(j) slots of
  // a box of height ell. Empty slots are 0.
  const Partition cols = conjugate(q.shape());
  const int height = q.shape().length();
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(height), std::vector<int>(static_cast<std::size_t>(cols.length()), 0));
  for (int j = 1; j <= cols.length(); ++j) {
    const auto col = q.column(j);
    const int offset = height - static_cast<int>(col.size());
    for (std::size_t i = 0; i < col.size(); ++i) grid[static_cast<std::size_t>(offset) + i][static_cast<std::size_t>(j - 1)] = col[i];
  }
  for (int i = 0; i < height; ++i) {
    for (int j = 0; j < cols.length(); ++j) {
      const int v = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v == 0) continue;
      if (j > 0) {
        const int left = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
        if (left != 0 && left >= v) return false;
      }
      if (i > 0) {
        const int up = grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        if (up != 0 && up >= v) return false;
      }
    }
  }
  return true;
}

void for_each_syt(const Partition& lambda, const std::function<void(const Tableau&)>& visit) {
  // Place 1..n one at a time into outer corners of the growing shape.
  const int n = lambda.size();
  std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
  std::vector<std::vector<int>> rows;
  for (int len : lambda.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);

  std::function<void(int)> place = [&](int value) {
    if (value > n) {
      visit(Tableau(rows));
      return;
    }
    for (std::size_t i = 0; i < filled.size(); ++i) {
      const int c = filled[i];
      if (c >= lambda.part(static_cast<int>(i) + 1)) continue;
      if (i > 0 && filled[i - 1] <= c) continue;
      rows[i][static_cast<std::size_t>(c)] = value;
      ++filled[i];
      place(value + 1);
      --filled[i];
    }
  };
  place(1);
}

std::vector<Tableau> enumerate_syt(const Partition& lambda) {
  std::vector<std::pair<std::vector<int>, Tableau>> keyed;
  for_each_syt(lambda, [&](const Tableau& t) { keyed.emplace_back(row_word(t), t); });
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Tableau> out;
  out.reserve(keyed.size());
  for (auto& [key, t] : keyed) out.push_back(std::move(t));
  return out;
}

std::uint64_t count_syt(const Partition& lambda) {
  // n! / prod(hooks), evaluated through prime exponents so it stays exact
  // whenever the result fits in 64 bits.
  const int n = lambda.size();
  std::map<int, int> exponent;
  auto add = [&](int value, int sign) {
    for (int p = 2; value > 1; ++p) {
      while (value % p == 0) {
        exponent[p] += sign;
        value /= p;
      }
    }
  };
  for (int k = 2; k <= n; ++k) add(k, +1);
  const Partition cols = conjugate(lambda);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      add((lambda.part(i) - j) + (cols.part(j) - i) + 1, -1);
    }
  }
  std::uint64_t result = 1;
  for (auto [p, e] : exponent) {
    if (e < 0) throw Error("hook length formula produced a non-integer");
    for (int k = 0; k < e; ++k) result *= static_cast<std::uint64_t>(p);
  }
  return result;
}

Tableau apply_permutation(const Permutation& sigma, const Tableau& t) {
  if (sigma.size() != t.size()) throw Error("permutation and tableau sizes differ");
  auto rows = t.rows();
  for (auto& row : rows) {
    for (int& v : row) {
      if (v > sigma.size()) throw Error("tableau entries are not 1..n");
      v = sigma(v);
    }
  }
  return Tableau(std::move(rows));
}

std::vector<int> column_word(const Tableau& t) {
  std::vector<int> out;
  for (int j = 1; j <= t.shape().part(1); ++j) {
    for (int v : t.column(j)) out.push_back(v);
  }
  return out;
}

std::vector<int> reverse_column_word(const Tableau& t) {
  std::vector<int> out;
  for (int j = 1; j <= t.shape().part(1); ++j) {
    auto col = t.column(j);
    out.insert(out.end(), col.rbegin(), col.rend());
  }
  return out;
}

std::vector<int> row_word(const Tableau& t) {
  std::vector<int> out;
  for (const auto& row : t.rows()) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Tableau swap_entries(const Tableau& t, int a, int b) {
  auto rows = t.rows();
  for (auto& row : rows) {
    for (int& v : row) {
      if (v == a) {
        v = b;
      } else if (v == b) {
        v = a;
      }
    }
  }
  return Tableau(std::move(rows));
}

}  // namespace rsshape
