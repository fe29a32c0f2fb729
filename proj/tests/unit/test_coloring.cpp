#include <algorithm>
#include <random>

#include "doctest.h"
#include "rsshape/coloring.hpp"
#include "rsshape/error.hpp"
#include "rsshape/rs.hpp"
#include "support/oracles.hpp"

using namespace rsshape;

namespace {

using Rows = std::vector<std::vector<int>>;

std::vector<Partition> two_part_types(int n) {
  std::vector<Partition> out;
  for (int a2 = 1; 2 * a2 <= n; ++a2) out.push_back(Partition{n - a2, a2});
  return out;
}

// Colors each entry of T_lambda^up according to `red` (entries colored 2).
Coloring color_entries(const Partition& lambda, const std::vector<int>& red) {
  const Tableau up = column_reverse(canonical_tableau(lambda));
  Rows colors;
  for (const auto& row : up.rows()) {
    colors.emplace_back();
    for (int v : row) colors.back().push_back(std::count(red.begin(), red.end(), v) ? kRed : kBlue);
  }
  return Coloring(colors);
}

}  // namespace

TEST_CASE("coloring basics") {
  Coloring c = Coloring::uniform(Partition{2, 1});
  CHECK(c.num_colors() == 1);
  c.set(2, 1, 2);
  CHECK(c.at(2, 1) == 2);
  CHECK(c.counts() == std::vector<int>{2, 1});
  CHECK_THROWS_AS(Coloring(Rows{{1, 0}}), Error);
  CHECK_THROWS_AS(Coloring(Rows{{1}, {1, 1}}), Error);
}

TEST_CASE("spiral coloring of a ten-box column") {
  // red outside, 3 blue and 7 red
  SpiralResult s = spiral_coloring(10, 7, 3, kRed);
  CHECK(s.color_of == std::vector<int>{2, 1, 2, 2, 2, 2, 1, 2, 1, 2});
  CHECK(s.terminal[kBlue - 1] == 7);  // entry 4 of a column holding 10..1
  CHECK(s.terminal[kRed - 1] == 5);   // entry 6
  // blue outside, 5 of each
  s = spiral_coloring(10, 5, 5, kBlue);
  CHECK(s.color_of == std::vector<int>{1, 2, 1, 2, 2, 1, 2, 1, 2, 1});
  CHECK(s.terminal[kBlue - 1] == 6);  // entry 5
  CHECK(s.terminal[kRed - 1] == 5);   // entry 6
}

TEST_CASE("spiral coloring invariants") {
  for (int len = 1; len <= 12; ++len) {
    for (int out = 0; out <= len; ++out) {
      for (bool upside : {false, true}) {
        const SpiralResult s = spiral_coloring(len, out, len - out, kRed, upside);
        CHECK(std::count(s.color_of.begin(), s.color_of.end(), kRed) == out);
        const SpiralResult flip = spiral_coloring(len, out, len - out, kRed, !upside);
        std::vector<int> rev(flip.color_of.rbegin(), flip.color_of.rend());
        CHECK(rev == s.color_of);
        if (out > 0) CHECK(s.color_of[upside ? 0 : static_cast<std::size_t>(len - 1)] == kRed);
      }
    }
  }
  CHECK_THROWS_AS(spiral_coloring(3, 2, 2, kRed), Error);
}

TEST_CASE("canonical cycle of (3,3,3,2,1,1)") {
  const Partition lambda{3, 3, 3, 2, 1, 1};
  const CanonicalCycle cc = canonical_cycle(lambda);
  CHECK(cc.sigma.one_line() == std::vector<int>{7, 6, 5, 3, 2, 1, 12, 10, 8, 4, 13, 11, 9});
  CHECK(inverse(cc.sigma) == Permutation::parse("(1,6,2,5,3,4,10,8,9,13,11,12,7)"));
  CHECK(cc.p.rows() == Rows{{1, 4, 9}, {2, 8, 11}, {3, 10, 13}, {5, 12}, {6}, {7}});
  const RsPair rs = rs_forward(cc.sigma);
  CHECK(rs.p == cc.p);
  CHECK(rs.q == canonical_tableau(lambda));
  CHECK(reverse_column_word(cc.p) == cc.sigma.one_line());
}

TEST_CASE("canonical cycles realize every shape of the box") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& lambda : enumerate_B_alpha(Partition{n})) {
      const CanonicalCycle cc = canonical_cycle(lambda);
      CHECK(oracle::cycle_lengths(cc.sigma.one_line()) == std::vector<int>{n});
      const RsPair rs = rs_forward(cc.sigma);
      CHECK(rs.p == cc.p);
      CHECK(rs.q == canonical_tableau(lambda));
    }
  }
  CHECK_THROWS_AS(canonical_cycle(Partition{1, 1, 1}), Error);
  CHECK_THROWS_AS(canonical_cycle(Partition{4}), Error);
}

TEST_CASE("two-color example on (3,3,3,2,1,1)") {
  const Partition lambda{3, 3, 3, 2, 1, 1};
  const Coloring coloring = color_entries(lambda, {1, 3, 4, 6, 8, 10});
  const ColoringCheck check = validate_alpha_coloring(canonical_tableau(lambda), coloring, Partition{7, 6});
  CHECK(check.accepted);
  CHECK(inverse(check.sigma) == Permutation::parse("(1,6,3,4,10,8)(2,5,9,13,11,12,7)"));
  CHECK(check.p.rows() == Rows{{1, 4, 9}, {2, 5, 11}, {3, 10, 13}, {6, 12}, {7}, {8}});
}

TEST_CASE("associated permutations cycle each color once") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto shapes = enumerate_partitions(2 + static_cast<int>(rng() % 10));
    const Partition lambda = shapes[rng() % shapes.size()];
    const Tableau up = column_reverse(canonical_tableau(lambda));
    const int colors = 1 + static_cast<int>(rng() % std::min(3, lambda.size()));
    Rows rows;
    for (int len : lambda.parts()) {
      rows.emplace_back();
      for (int j = 0; j < len; ++j) rows.back().push_back(1 + static_cast<int>(rng() % colors));
    }
    const Coloring c(rows);
    std::vector<int> counts = c.counts();
    if (static_cast<int>(counts.size()) != colors || std::count(counts.begin(), counts.end(), 0) > 0) continue;
    const Permutation sigma = associated_permutation(up, c);
    std::sort(counts.rbegin(), counts.rend());
    CHECK(oracle::cycle_lengths(sigma.one_line()) == counts);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        // sigma moves each entry to another entry of the same color
        const Cell target = up.find(sigma(up.rows()[i][j]));
        CHECK(c.at(target.row, target.col) == rows[i][j]);
      }
    }
  }
}

TEST_CASE("validation errors") {
  const Partition lambda{2, 1};
  const Coloring c(Rows{{1, 1}, {2}});
  CHECK_THROWS_AS(validate_alpha_coloring(Tableau({{1, 2}, {3}}), c, Partition{2, 1}), Error);
  CHECK_THROWS_AS(validate_alpha_coloring(canonical_tableau(lambda), c, Partition{3}), Error);
  CHECK_THROWS_AS(validate_alpha_coloring(canonical_tableau(lambda), Coloring(Rows{{1, 3}, {1}}), Partition{2, 1}), Error);
  CHECK_THROWS_AS(validate_alpha_coloring(canonical_tableau(Partition{3}), c, Partition{2, 1}), Error);
}

TEST_CASE("two-cycle exception table") {
  CHECK(two_cycle_exceptions(Partition{5, 1}) == std::vector<Partition>{{3, 3}});
  CHECK(two_cycle_exceptions(Partition{3, 3}) == std::vector<Partition>{{4, 1, 1}});
  CHECK(two_cycle_exceptions(Partition{4, 4}) == std::vector<Partition>{{6, 1, 1}, {3, 1, 1, 1, 1, 1}});
  CHECK(two_cycle_exceptions(Partition{4, 2}) == std::vector<Partition>{{2, 2, 2}});
  CHECK(two_cycle_exceptions(Partition{5, 3}) == std::vector<Partition>{{2, 2, 2, 2}});
  CHECK(two_cycle_exceptions(Partition{6, 2}).empty());
  CHECK(two_cycle_exceptions(Partition{4, 3}).empty());
  CHECK(two_cycle_exceptions(Partition{1, 1}).empty());
  CHECK(two_cycle_exceptions(Partition{2, 2}) == std::vector<Partition>{{2, 1, 1}});
  CHECK(is_two_cycle_exception(Partition{9, 1}, Partition{5, 5}));
  CHECK_FALSE(is_two_cycle_exception(Partition{9, 1}, Partition{6, 4}));
}

TEST_CASE("two-cycle constructions for n up to 16") {
  for (int n = 2; n <= 16; ++n) {
    for (const auto& alpha : two_part_types(n)) {
      for (const auto& lambda : enumerate_B_alpha(alpha)) {
        const ColoringOutcome o = construct_two_cycle(alpha, lambda);
        if (is_two_cycle_exception(alpha, lambda)) {
          CHECK(o.kind == OutcomeKind::unattainable);
          continue;
        }
        REQUIRE(o.kind != OutcomeKind::unattainable);
        CHECK(oracle::cycle_lengths(o.sigma.one_line()) == alpha.parts());
        CHECK(rs_shape(o.sigma) == lambda);
        if (n <= 10) CHECK(oracle::shape_by_subsets(o.sigma.one_line()) == lambda.parts());
        if (o.kind == OutcomeKind::coloring) {
          REQUIRE(o.coloring.has_value());
          CHECK(is_admissible(o.q));
          const ColoringCheck check = validate_alpha_coloring(o.q, *o.coloring, alpha);
          CHECK(check.accepted);
          CHECK(check.sigma == o.sigma);
          CHECK(rs_forward(o.sigma).q == o.q);
        }
      }
    }
  }
  CHECK_THROWS_AS(construct_two_cycle(Partition{4, 2}, Partition{6}), Error);
  CHECK_THROWS_AS(construct_two_cycle(Partition{3, 2, 1}, Partition{3, 3}), Error);
}

TEST_CASE("symmetric involution colorings") {
  for (int n = 2; n <= 9; ++n) {
    for (int k = n % 2; k <= n; k += 2) {
      std::vector<int> parts(static_cast<std::size_t>((n - k) / 2), 2);
      parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
      const Partition alpha(parts);
      for (const auto& lambda : enumerate_partitions(n)) {
        if (shape_stats(lambda).odd_column_count != k) continue;
        const ColoringOutcome o = involution_canonical_coloring(alpha, lambda);
        REQUIRE(o.coloring.has_value());
        CHECK(validate_alpha_coloring(o.q, *o.coloring, alpha).accepted);
        CHECK(oracle::cycle_lengths(o.sigma.one_line()) == alpha.parts());
        CHECK(rs_shape(o.sigma) == lambda);
      }
    }
  }
}

TEST_CASE("search agrees with the class oracle") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& alpha : enumerate_partitions(n)) {
      const auto present = oracle::shapes_of_class(alpha.parts());
      for (const auto& lambda : enumerate_B_alpha(alpha)) {
        const SearchResult r = search_alpha_coloring(alpha, lambda);
        const bool in_class = std::find(present.begin(), present.end(), lambda.parts()) != present.end();
        if (r.status == SearchStatus::found) {
          CHECK(in_class);
          REQUIRE(r.witness.has_value());
          CHECK(oracle::cycle_lengths(r.witness->sigma.one_line()) == alpha.parts());
          CHECK(rs_shape(r.witness->sigma) == lambda);
        } else {
          CHECK(r.status == SearchStatus::absent);
        }
        if (!in_class) CHECK(r.status == SearchStatus::absent);
        if (in_class && is_strict(alpha)) CHECK(r.status == SearchStatus::found);
      }
    }
  }
  const SearchResult none = search_alpha_coloring(Partition{4, 2}, Partition{2, 2, 2});
  CHECK(none.status == SearchStatus::absent);
  SearchOptions tiny;
  tiny.budget = 1;
  CHECK(search_alpha_coloring(Partition{4, 2}, Partition{2, 2, 2}, tiny).status == SearchStatus::budget_exhausted);
}

TEST_CASE("counting colorings") {
  SearchOptions all;
  all.count_all = true;
  all.canonical_only = true;
  // (3,3,3,2,1,1) admits the example coloring above, so the count is positive
  const SearchResult r = search_alpha_coloring(Partition{7, 6}, Partition{3, 3, 3, 2, 1, 1}, all);
  CHECK(r.status == SearchStatus::found);
  CHECK(r.count >= 1);
  CHECK(r.admissible_tableaux == 1);
}
