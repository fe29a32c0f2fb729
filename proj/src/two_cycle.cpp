// Explicit two-color constructions: for alpha = (a1, a2) and a shape in
// B_alpha, color Q^up so that the arrow permutation lands in C_alpha.
// Color 1 (blue) has a1 boxes and color 2 (red) has a2 boxes.

#include <algorithm>

#include "rsshape/coloring.hpp"
#include "rsshape/error.hpp"
#include "rsshape/rs.hpp"

namespace rsshape {

namespace {

int other(int color) { return color == kBlue ? kRed : kBlue; }

// A two-coloring of Q^up under construction, addressed by column and by
// entry. Everything starts blue.
class Painter {
 public:
  explicit Painter(Tableau q) : q_(std::move(q)), up_(column_reverse(q_)), coloring_(Coloring::uniform(q_.shape(), kBlue)) {
    cols_ = conjugate(q_.shape());
  }

  int height(int j) const { return cols_.part(j); }
  int width() const { return cols_.length(); }
  int n() const { return q_.size(); }

  void entry(int e, int color) {
    const Cell c = up_.find(e);
    coloring_.set(c.row, c.col, color);
  }
  void box(int row, int col, int color) { coloring_.set(row, col, color); }
  int color_at(int row, int col) const { return coloring_.at(row, col); }
  void column(int j, int color) {
    for (int i = 1; i <= height(j); ++i) coloring_.set(i, j, color);
  }

  // Spiral over the whole column j; returns the spiral for terminal lookups.
  SpiralResult spiral(int j, int outside, int red, bool upside_down = false) {
    const int h = height(j);
    const int count_outside = outside == kRed ? red : h - red;
    SpiralResult s = spiral_coloring(h, count_outside, h - count_outside, outside, upside_down);
    for (int i = 1; i <= h; ++i) coloring_.set(i, j, s.color_of[static_cast<std::size_t>(i - 1)]);
    return s;
  }

  // Colors `cells` left to right, alternating from `first` until one color
  // runs out, then fills with the other.
  void alternate(const std::vector<Cell>& cells, int first, int red) {
    int left[3] = {0, static_cast<int>(cells.size()) - red, red};
    int c = first;
    for (const Cell& cell : cells) {
      if (left[c] == 0) c = other(c);
      coloring_.set(cell.row, cell.col, c);
      --left[c];
      if (left[other(c)] > 0) c = other(c);
    }
  }

  int red_count() const {
    int r = 0;
    for (const auto& row : coloring_.rows()) r += static_cast<int>(std::count(row.begin(), row.end(), kRed));
    return r;
  }

  const Tableau& q() const { return q_; }
  const Coloring& coloring() const { return coloring_; }

 private:
  Tableau q_;
  Tableau up_;
  Coloring coloring_;
  Partition cols_;
};

// Row (from the top) of the lower of the two terminal boxes; color of it.
int lower_terminal_color(const SpiralResult& s) {
  const int blue = s.terminal[0];
  const int red = s.terminal[1];
  if (blue == 0) return kRed;
  if (red == 0) return kBlue;
  return blue > red ? kBlue : kRed;
}

int higher_terminal_color(const SpiralResult& s) {
  const int blue = s.terminal[0];
  const int red = s.terminal[1];
  if (blue == 0) return kRed;
  if (red == 0) return kBlue;
  return blue < red ? kBlue : kRed;
}

struct Built {
  std::string name;
  Painter painter;
};

Built one_red_box(const Partition& lambda) {
  Painter p(canonical_tableau(lambda));
  const int h = lambda.length();
  p.entry(h <= 2 ? p.n() : (h + 2) / 2, kRed);
  return {"single-red-box", std::move(p)};
}

Built two_red_boxes(const Partition& lambda) {
  const Partition cols = conjugate(lambda);
  const int h = cols.part(1);
  if (h != 3) {
    Painter p(canonical_tableau(lambda));
    p.entry((h + 1) / 2, kRed);
    p.entry((h + 1) / 2 + 1, kRed);
    return {"red-pair-mid-column", std::move(p)};
  }
  if (cols.part(2) == 1) {
    Painter p(canonical_tableau(lambda));
    p.entry(2, kRed);
    p.entry(4, kRed);
    return {"red-pair-three-rows", std::move(p)};
  }
  Painter p(swap_entries(canonical_tableau(lambda), 3, 4));
  p.entry(1, kRed);
  p.entry(4, kRed);
  return {"red-pair-three-rows-swapped", std::move(p)};
}

Built three_rows_three_red(const Partition& lambda) {
  const int second = conjugate(lambda).part(2);
  if (second == 3) {
    Painter p(swap_entries(canonical_tableau(lambda), 3, 4));
    for (int e : {1, 4, 5}) p.entry(e, kRed);
    return {"red-triple-three-rows-swapped", std::move(p)};
  }
  Painter p(canonical_tableau(lambda));
  for (int e : (second == 1 ? std::vector<int>{2, 4, 6} : std::vector<int>{2, 4, 5})) p.entry(e, kRed);
  return {"red-triple-three-rows", std::move(p)};
}

Built two_columns(const Partition& alpha, const Partition& lambda) {
  const int a2 = alpha.part(2);
  const Partition cols = conjugate(lambda);
  const int h1 = cols.part(1);
  const int h2 = cols.part(2);
  Painter p(canonical_tableau(lambda));
  if (h2 == 2) {
    // One red box in column 2; the top box of column 2 takes the outside color.
    const int outside = a2 % 2 == 0 ? kRed : kBlue;
    p.spiral(1, outside, a2 - 1);
    p.box(1, 2, outside);
    p.box(2, 2, other(outside));
    return {"two-columns-short-second", std::move(p)};
  }
  if (h1 == h2) {
    const SpiralResult right = p.spiral(2, kBlue, a2 - 2, /*upside_down=*/true);
    p.spiral(1, higher_terminal_color(right), 2);
    return {"two-columns-equal", std::move(p)};
  }
  const SpiralResult left = p.spiral(1, kRed, a2 - 1);
  const int top = lower_terminal_color(left);
  p.column(2, kBlue);
  p.box(top == kRed ? 1 : 2, 2, kRed);
  return {"two-columns-unequal", std::move(p)};
}

Built hook(const Partition& alpha, const Partition& lambda) {
  const int a2 = alpha.part(2);
  const int h = lambda.length();
  const int w = lambda.part(1);
  Painter p(canonical_tableau(lambda));
  if (h == 3) {
    for (int k = 1; k <= a2; ++k) p.entry(2 * k, kRed);
    return {"hook-three-rows", std::move(p)};
  }
  if (w == 3) {
    // Entry n takes color c; the rest of c goes into column 1 by a spiral
    // with c outside, and entry n - 1 takes the other color.
    const int c = a2 % 2 == 1 ? kRed : kBlue;
    const int c_in_first = (c == kRed ? a2 : alpha.part(1)) - 1;
    p.spiral(1, c, c == kRed ? c_in_first : h - c_in_first);
    p.box(1, 2, other(c));
    p.box(1, 3, c);
    return {"hook-three-columns", std::move(p)};
  }
  const int red_first = std::min(h - 2, a2 - 1);
  const SpiralResult s = p.spiral(1, kBlue, red_first);
  std::vector<Cell> tail;
  for (int j = 2; j <= w; ++j) tail.push_back({1, j});
  p.alternate(tail, lower_terminal_color(s), a2 - red_first);
  return {"hook-alternating-tail", std::move(p)};
}

Built red_in_first_columns(const Partition& alpha, const Partition& lambda) {
  const int a2 = alpha.part(2);
  const Partition cols = conjugate(lambda);
  const int h1 = cols.part(1);
  const int h2 = cols.part(2);
  Painter p(canonical_tableau(lambda));
  if (a2 < h1) {
    const SpiralResult s = p.spiral(1, h2 == 2 ? kBlue : kRed, a2 - 1);
    p.box(lower_terminal_color(s) == kRed ? 1 : 2, 2, kRed);
    return {"red-left-one-in-second", std::move(p)};
  }
  if (h2 <= 3) {
    p.spiral(1, kBlue, a2 - 2);
    p.box(1, 2, kRed);
    p.box(h2, 2, kRed);
    return {"red-left-top-bottom-second", std::move(p)};
  }
  const SpiralResult s = p.spiral(1, kRed, a2 - 2);
  p.box(h2 - 1, 2, kRed);
  p.box(lower_terminal_color(s) == kRed ? 1 : 2, 2, kRed);
  return {"red-left-two-in-second", std::move(p)};
}

Built blue_in_tail(const Partition& alpha, const Partition& lambda) {
  const int a2 = alpha.part(2);
  const int l1 = lambda.part(1);
  const int l2 = lambda.part(2);
  const Partition cols = conjugate(lambda);
  Painter p(canonical_tableau(lambda));
  int red_left = 0;
  for (int j = 1; j <= l2; ++j) {
    p.column(j, kRed);
    red_left += cols.part(j);
  }
  p.box(cols.part(l2), l2, kBlue);
  --red_left;
  std::vector<Cell> tail;
  for (int j = l2 + 1; j <= l1; ++j) tail.push_back({1, j});
  p.alternate(tail, kBlue, a2 - red_left);
  return {"blue-in-tail", std::move(p)};
}

Built mixing_column(const Partition& alpha, const Partition& lambda) {
  const Partition cols = conjugate(lambda);
  Painter p(canonical_tableau(lambda));
  int red = alpha.part(2);
  int blue = alpha.part(1);
  int left = 1;
  int right = cols.length();
  while (left <= right && red >= cols.part(left)) {
    p.column(left, kRed);
    red -= cols.part(left++);
  }
  while (right >= left && blue >= cols.part(right)) {
    p.column(right, kBlue);
    blue -= cols.part(right--);
  }
  if (left == right) {
    const int h = cols.part(left);
    // Top box red; the rest is a spiral with blue outside.
    const SpiralResult s = spiral_coloring(h - 1, blue, red - 1, kBlue);
    p.box(1, left, kRed);
    for (int i = 2; i <= h; ++i) p.box(i, left, s.color_of[static_cast<std::size_t>(i - 2)]);
  } else if (left <= right) {
    throw Error("colors do not meet in a single column");
  }
  return {"mixing-column", std::move(p)};
}

ColoringOutcome crossing_permutation(const Partition& alpha, const Partition& lambda) {
  // [n-1, n-2, ..., n/2+1, 1, n, n/2, ..., 3, 2]
  const int n = alpha.size();
  std::vector<int> one_line;
  for (int v = n - 1; v >= n / 2 + 1; --v) one_line.push_back(v);
  one_line.push_back(1);
  one_line.push_back(n);
  for (int v = n / 2; v >= 2; --v) one_line.push_back(v);
  ColoringOutcome out;
  out.kind = OutcomeKind::explicit_permutation;
  out.construction = "two-columns-explicit";
  out.sigma = Permutation(std::move(one_line));
  const RsPair rs = rs_forward(out.sigma);
  out.q = rs.q;
  out.witness_p = rs.p;
  if (cycle_type(out.sigma) != alpha || rs.p.shape() != lambda) {
    throw Error("explicit permutation misses " + alpha.str() + " / " + lambda.str());
  }
  return out;
}

}  // namespace

std::vector<Partition> two_cycle_exceptions(const Partition& alpha) {
  if (alpha.length() != 2) throw Error("expected a cycle type with two parts");
  const int n = alpha.size();
  const int a1 = alpha.part(1);
  const int a2 = alpha.part(2);
  std::vector<Partition> out;
  if (n % 2 == 0 && a2 == 1) out.push_back(Partition{n / 2, n / 2});
  if (a1 == a2 && n >= 4) {
    out.push_back(Partition{n - 2, 1, 1});
    if (n % 4 == 0) {
      std::vector<int> parts{3};
      parts.resize(static_cast<std::size_t>(n - 2), 1);
      out.emplace_back(std::move(parts));
    }
  }
  if (alpha == Partition{4, 2}) out.push_back(Partition{2, 2, 2});
  if (alpha == Partition{5, 3}) out.push_back(Partition{2, 2, 2, 2});

  const BoundingBox box = bounding_box(alpha);
  std::erase_if(out, [&](const Partition& p) { return !fits(box, p); });
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_two_cycle_exception(const Partition& alpha, const Partition& lambda) {
  const auto ex = two_cycle_exceptions(alpha);
  return std::find(ex.begin(), ex.end(), lambda) != ex.end();
}

ColoringOutcome construct_two_cycle(const Partition& alpha, const Partition& lambda) {
  if (alpha.length() != 2) throw Error("expected a cycle type with two parts");
  if (alpha.size() != lambda.size()) throw Error("alpha and lambda have different sizes");
  if (!fits(bounding_box(alpha), lambda)) {
    throw Error("shape " + lambda.str() + " is outside the bounding box of " + alpha.str());
  }
  if (is_two_cycle_exception(alpha, lambda)) {
    ColoringOutcome out;
    out.kind = OutcomeKind::unattainable;
    out.construction = "exception";
    return out;
  }

  const int n = alpha.size();
  const int a1 = alpha.part(1);
  const int a2 = alpha.part(2);
  const int l1 = lambda.part(1);
  const int l2 = lambda.part(2);
  const int h1 = lambda.length();

  std::optional<Built> built;
  if (a2 == 1) {
    built = one_red_box(lambda);
  } else if (a2 == 2) {
    built = two_red_boxes(lambda);
  } else if (a2 == 3 && h1 == 3) {
    built = three_rows_three_red(lambda);
  } else if (l1 == 2) {
    if (conjugate(lambda).part(2) == 2 && a1 == a2 && a1 % 2 == 1) return crossing_permutation(alpha, lambda);
    built = two_columns(alpha, lambda);
  } else if (l2 == 1) {
    built = hook(alpha, lambda);
  } else if (a2 <= h1) {
    built = red_in_first_columns(alpha, lambda);
  } else if (a2 >= n - l1 + l2) {
    built = blue_in_tail(alpha, lambda);
  } else {
    built = mixing_column(alpha, lambda);
  }

  const Painter& painter = built->painter;
  if (painter.red_count() != a2) {
    throw Error("construction " + built->name + " placed " + std::to_string(painter.red_count()) +
                " red boxes for " + alpha.str() + " / " + lambda.str());
  }
  const ColoringCheck check = validate_alpha_coloring(painter.q(), painter.coloring(), alpha);
  if (!check.accepted) {
    throw Error("construction " + built->name + " gave a non-standard tableau for " + alpha.str() + " / " +
                lambda.str());
  }
  ColoringOutcome out;
  out.kind = OutcomeKind::coloring;
  out.construction = built->name;
  out.coloring = painter.coloring();
  out.q = painter.q();
  out.sigma = check.sigma;
  out.witness_p = check.p;
  return out;
}

}  // namespace rsshape
