#include "rsshape/coloring.hpp"

#include <algorithm>
#include <functional>

#include "rsshape/error.hpp"
#include "rsshape/rs.hpp"

namespace rsshape {

Coloring::Coloring(std::vector<std::vector<int>> colors) : colors_(std::move(colors)) {
  std::vector<int> lengths;
  for (const auto& row : colors_) {
    if (row.empty()) throw Error("coloring rows must be non-empty");
    for (int c : row) {
      if (c < 1) throw Error("color indices start at 1");
    }
    lengths.push_back(static_cast<int>(row.size()));
  }
  shape_ = Partition(std::move(lengths));
}

Coloring Coloring::uniform(const Partition& shape, int color) {
  std::vector<std::vector<int>> rows;
  for (int len : shape.parts()) rows.emplace_back(static_cast<std::size_t>(len), color);
  return Coloring(std::move(rows));
}

void Coloring::set(int row, int col, int color) {
  if (color < 1) throw Error("color indices start at 1");
  colors_.at(static_cast<std::size_t>(row - 1)).at(static_cast<std::size_t>(col - 1)) = color;
}

int Coloring::num_colors() const {
  int m = 0;
  for (const auto& row : colors_) {
    for (int c : row) m = std::max(m, c);
  }
  return m;
}

std::vector<int> Coloring::counts() const {
  std::vector<int> out(static_cast<std::size_t>(num_colors()), 0);
  for (const auto& row : colors_) {
    for (int c : row) ++out[static_cast<std::size_t>(c - 1)];
  }
  return out;
}

SpiralResult spiral_coloring(int column_length, int count_outside, int count_inside, int outside_color,
                             bool upside_down) {
  if (count_outside < 0 || count_inside < 0 || count_outside + count_inside != column_length) {
    throw Error("spiral coloring counts must be non-negative and sum to the column length");
  }
  if (outside_color != kBlue && outside_color != kRed) throw Error("spiral coloring uses colors 1 and 2");
  const int inside_color = outside_color == kBlue ? kRed : kBlue;
  const int len = column_length;

  // seq[k]: color of the k-th box counted from the end that is taken first
  // (the bottom, unless upside down).
  std::vector<int> seq(static_cast<std::size_t>(len), 0);
  int remaining[3] = {0, 0, 0};
  remaining[outside_color] = count_outside;
  remaining[inside_color] = count_inside;
  int last[3] = {-1, -1, -1};
  int lo = 0;
  int hi = len - 1;
  int turn = outside_color;
  while (lo <= hi) {
    const int other = turn == kBlue ? kRed : kBlue;
    if (remaining[turn] > 0) {
      seq[static_cast<std::size_t>(lo)] = turn;
      last[turn] = lo++;
      --remaining[turn];
    }
    if (remaining[turn] > 0 && lo <= hi) {
      seq[static_cast<std::size_t>(hi)] = turn;
      last[turn] = hi--;
      --remaining[turn];
    }
    if (remaining[other] > 0) turn = other;
  }

  SpiralResult out;
  out.terminal.assign(2, 0);
  out.color_of.resize(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) {
    const int row = upside_down ? k + 1 : len - k;
    out.color_of[static_cast<std::size_t>(row - 1)] = seq[static_cast<std::size_t>(k)];
  }
  for (int c : {kBlue, kRed}) {
    if (last[c] >= 0) out.terminal[static_cast<std::size_t>(c - 1)] = upside_down ? last[c] + 1 : len - last[c];
  }
  return out;
}

namespace {

// Cycle order of the boxes of one color. `columns` lists the color's boxes
// column by column (left to right), each top to bottom.
std::vector<Cell> arrow_path(const std::vector<std::vector<Cell>>& columns) {
  std::vector<Cell> path;
  std::vector<Cell> slashed;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto& col = columns[j];
    std::size_t end = col.size();
    if (j + 1 < columns.size() && col.size() >= 2) {
      slashed.push_back(col.back());
      --end;
    }
    std::size_t top = 0;
    std::size_t bottom = end;
    bool take_top = true;
    while (top < bottom) {
      if (take_top) {
        path.push_back(col[top++]);
      } else {
        path.push_back(col[--bottom]);
      }
      take_top = !take_top;
    }
  }
  path.insert(path.end(), slashed.rbegin(), slashed.rend());
  return path;
}

// Applies the arrow scheme color by color; one_line is filled in place.
void arrows_to_permutation(const Tableau& q_up, const std::vector<std::vector<int>>& colors, int num_colors,
                           std::vector<int>& one_line) {
  const Partition& shape = q_up.shape();
  const int width = shape.part(1);
  std::vector<std::vector<std::vector<Cell>>> per_color(static_cast<std::size_t>(num_colors));
  for (int j = 1; j <= width; ++j) {
    for (int i = 1; i <= shape.length() && shape.part(i) >= j; ++i) {
      const int c = colors[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      auto& cols = per_color[static_cast<std::size_t>(c - 1)];
      if (cols.empty() || cols.back().back().col != j) cols.emplace_back();
      cols.back().push_back({i, j});
    }
  }
  for (int c = 1; c <= num_colors; ++c) {
    const auto& cols = per_color[static_cast<std::size_t>(c - 1)];
    if (cols.empty()) throw Error("color " + std::to_string(c) + " has no boxes");
    const auto path = arrow_path(cols);
    // Arrow path[k] -> path[k+1] means sigma(entry at path[k+1]) = entry at path[k].
    for (std::size_t k = 0; k < path.size(); ++k) {
      const Cell from = path[k];
      const Cell to = path[(k + 1) % path.size()];
      one_line[static_cast<std::size_t>(q_up.at(to) - 1)] = q_up.at(from);
    }
  }
}

}  // namespace

Permutation associated_permutation(const Tableau& q_up, const Coloring& coloring) {
  if (q_up.shape() != coloring.shape()) throw Error("coloring shape differs from the tableau shape");
  if (!q_up.is_bijective()) throw Error("tableau entries are not 1..n");
  std::vector<int> one_line(static_cast<std::size_t>(q_up.size()), 0);
  arrows_to_permutation(q_up, coloring.rows(), coloring.num_colors(), one_line);
  return Permutation(std::move(one_line));
}

CanonicalCycle canonical_cycle(const Partition& lambda) {
  const int n = lambda.size();
  if (n < 1) throw Error("empty shape");
  if (!fits(bounding_box(Partition{n}), lambda)) {
    throw Error("shape " + lambda.str() + " is not in the bounding box of an " + std::to_string(n) + "-cycle");
  }
  if (lambda.part(1) == 1 && n > 2) throw Error("single-column shapes have no canonical cycle for n > 2");
  const Tableau up = column_reverse(canonical_tableau(lambda));
  Permutation sigma = associated_permutation(up, Coloring::uniform(lambda));
  Tableau p = apply_permutation(sigma, up);
  return {std::move(sigma), std::move(p)};
}

ColoringCheck validate_alpha_coloring(const Tableau& q, const Coloring& coloring, const Partition& alpha) {
  if (!is_admissible(q)) throw Error("recording tableau is not admissible");
  if (q.shape() != coloring.shape()) throw Error("coloring shape differs from the tableau shape");
  auto counts = coloring.counts();
  if (std::find(counts.begin(), counts.end(), 0) != counts.end()) throw Error("coloring skips a color index");
  std::sort(counts.begin(), counts.end(), std::greater<>());
  if (counts != alpha.parts()) throw Error("color counts do not match " + alpha.str());

  const Tableau up = column_reverse(q);
  ColoringCheck check;
  check.sigma = associated_permutation(up, coloring);
  check.p = apply_permutation(check.sigma, up);
  check.accepted = is_standard(check.p);
  if (check.accepted) {
    const RsPair rs = rs_forward(check.sigma);
    if (rs.p != check.p || rs.q != q) throw Error("accepted coloring disagrees with row insertion");
  }
  return check;
}

ColoringOutcome involution_canonical_coloring(const Partition& alpha, const Partition& lambda) {
  if (alpha.size() != lambda.size()) throw Error("alpha and lambda have different sizes");
  for (int part : alpha.parts()) {
    if (part > 2) throw Error("involution classes have parts 1 and 2 only");
  }
  const int k = multiplicity(alpha, 1);
  const int pairs = multiplicity(alpha, 2);
  if (shape_stats(lambda).odd_column_count != k) {
    throw Error("shape " + lambda.str() + " does not have " + std::to_string(k) + " odd columns");
  }
  const Partition cols = conjugate(lambda);
  auto coloring = Coloring::uniform(lambda);
  int next_pair = 1;
  int next_single = pairs + 1;
  for (int j = 1; j <= cols.length(); ++j) {
    const int h = cols.part(j);
    for (int i = 1; i <= h / 2; ++i) {
      coloring.set(i, j, next_pair);
      coloring.set(h + 1 - i, j, next_pair);
      ++next_pair;
    }
    if (h % 2 == 1) coloring.set((h + 1) / 2, j, next_single++);
  }

  ColoringOutcome out;
  out.kind = OutcomeKind::coloring;
  out.construction = "symmetric-pairs";
  out.q = canonical_tableau(lambda);
  const ColoringCheck check = validate_alpha_coloring(out.q, coloring, alpha);
  if (!check.accepted) throw Error("symmetric involution coloring was rejected for " + lambda.str());
  out.coloring = std::move(coloring);
  out.sigma = check.sigma;
  out.witness_p = check.p;
  return out;
}

namespace {

// Colorings of Q^up in column-major cell order with per-color counts fixed.
// Colors with equal counts are interchangeable, so color c may only open
// after color c - 1 when both have the same count.
class ColoringSearch {
 public:
  ColoringSearch(const Partition& alpha, const Tableau& q, std::uint64_t budget, std::uint64_t& examined)
      : alpha_(alpha), q_(q), up_(column_reverse(q)), budget_(budget), examined_(examined) {
    const Partition& shape = q.shape();
    for (int j = 1; j <= shape.part(1); ++j) {
      for (int i = 1; i <= shape.length() && shape.part(i) >= j; ++i) cells_.push_back({i, j});
    }
    for (int len : shape.parts()) colors_.emplace_back(static_cast<std::size_t>(len), 0);
    remaining_ = alpha.parts();
    opened_.assign(remaining_.size(), false);
    one_line_.assign(static_cast<std::size_t>(q.size()), 0);
  }

  // Visits accepted colorings in order; `visit` returns false to stop.
  // Returns false if the budget ran out.
  bool run(const std::function<bool(const Coloring&, const Permutation&, const Tableau&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    exhausted_ = false;
    place(0);
    return !exhausted_;
  }

 private:
  void place(std::size_t k) {
    if (stopped_ || exhausted_) return;
    if (k == cells_.size()) {
      check_leaf();
      return;
    }
    const Cell cell = cells_[k];
    for (std::size_t c = 0; c < remaining_.size(); ++c) {
      if (remaining_[c] == 0) continue;
      if (c > 0 && !opened_[c - 1] && alpha_.parts()[c - 1] == alpha_.parts()[c]) continue;
      const bool was_open = opened_[c];
      opened_[c] = true;
      --remaining_[c];
      colors_[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - 1)] = static_cast<int>(c) + 1;
      place(k + 1);
      ++remaining_[c];
      opened_[c] = was_open;
      if (stopped_ || exhausted_) return;
    }
  }

  void check_leaf() {
    if (examined_ >= budget_) {
      exhausted_ = true;
      return;
    }
    ++examined_;
    arrows_to_permutation(up_, colors_, static_cast<int>(remaining_.size()), one_line_);
    // P = sigma . Q^up, checked for standardness without building a Tableau.
    const auto& up_rows = up_.rows();
    for (std::size_t i = 0; i < up_rows.size(); ++i) {
      for (std::size_t j = 0; j < up_rows[i].size(); ++j) {
        const int v = one_line_[static_cast<std::size_t>(up_rows[i][j] - 1)];
        if (j > 0 && one_line_[static_cast<std::size_t>(up_rows[i][j - 1] - 1)] >= v) return;
        if (i > 0 && one_line_[static_cast<std::size_t>(up_rows[i - 1][j] - 1)] >= v) return;
      }
    }
    Permutation sigma(one_line_);
    Tableau p = apply_permutation(sigma, up_);
    if (!(*visit_)(Coloring(colors_), sigma, p)) stopped_ = true;
  }

  const Partition& alpha_;
  const Tableau& q_;
  Tableau up_;
  std::uint64_t budget_;
  std::uint64_t& examined_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> colors_;
  std::vector<int> remaining_;
  std::vector<bool> opened_;
  std::vector<int> one_line_;
  const std::function<bool(const Coloring&, const Permutation&, const Tableau&)>* visit_ = nullptr;
  bool stopped_ = false;
  bool exhausted_ = false;
};

}  // namespace

SearchResult search_alpha_coloring(const Partition& alpha, const Partition& lambda, const SearchOptions& options) {
  if (alpha.size() != lambda.size()) throw Error("alpha and lambda have different sizes");
  SearchResult result;
  if (!fits(bounding_box(alpha), lambda)) return result;

  const Tableau canonical = canonical_tableau(lambda);
  std::vector<Tableau> candidates{canonical};
  if (!options.canonical_only) {
    for (auto& q : enumerate_syt(lambda)) {
      if (q != canonical && is_admissible(q)) candidates.push_back(std::move(q));
    }
  }
  result.admissible_tableaux = candidates.size();

  bool exhausted = false;
  for (const Tableau& q : candidates) {
    ColoringSearch search(alpha, q, options.budget, result.examined);
    const bool finished = search.run([&](const Coloring& coloring, const Permutation& sigma, const Tableau& p) {
      ++result.count;
      if (!result.witness) {
        const RsPair rs = rs_forward(sigma);
        if (rs.p != p || rs.q != q) throw Error("accepted coloring disagrees with row insertion");
        ColoringOutcome out;
        out.kind = OutcomeKind::coloring;
        out.construction = "search";
        out.coloring = coloring;
        out.q = q;
        out.sigma = sigma;
        out.witness_p = p;
        result.witness = std::move(out);
      }
      return options.count_all;
    });
    if (!finished) {
      exhausted = true;
      break;
    }
    if (result.witness && !options.count_all) break;
  }
  if (result.witness && !(exhausted && options.count_all)) {
    result.status = SearchStatus::found;
  } else if (exhausted) {
    result.status = SearchStatus::budget_exhausted;
  } else {
    result.status = SearchStatus::absent;
  }
  return result;
}

}  // namespace rsshape
