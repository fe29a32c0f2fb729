#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsshape/coloring.hpp"
#include "rsshape/partition.hpp"

namespace rsshape {

enum class Method { brute_force, constructive, cached, sampled };

std::string method_name(Method m);

/// S_alpha next to B_alpha. Partition lists are in canonical order.
struct ShapeSetReport {
  Partition alpha;
  std::vector<Partition> b_alpha;
  std::vector<Partition> s_alpha;
  std::vector<Partition> missing;       ///< b_alpha \ s_alpha
  std::vector<Partition> outside_box;   ///< s_alpha \ b_alpha (empty unless the box bound fails)
  Method method = Method::brute_force;
  std::uint64_t class_size = 0;
  std::uint64_t examined = 0;           ///< permutations whose shape was computed
  bool lower_bound = false;             ///< sampled: s_alpha may be incomplete
  /// Optional multiset of shapes, (shape, number of sigma), canonical order.
  std::vector<std::pair<Partition, std::uint64_t>> histogram;
  double elapsed_seconds = 0;           ///< wall time; never serialized
};

struct BruteForceOptions {
  std::uint64_t budget = 100'000'000;  ///< largest class enumerated in full
  int jobs = 1;
  bool histogram = false;
  /// If set, classes over budget are sampled with this many draws instead
  /// of failing; the report is then a lower bound.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  /// Cache directory; empty disables the cache.
  std::string cache_dir;
};

/// {sh(sigma) : sigma in C_alpha} by enumerating the class. Throws
/// BudgetExceeded for classes over budget unless sampling is requested.
/// The output does not depend on `jobs`.
ShapeSetReport brute_force_S_alpha(const Partition& alpha, const BruteForceOptions& options = {});

/// S_alpha from explicit witnesses: canonical cycles for r = 1 and
/// construct_two_cycle for r = 2. Every witness is re-checked by row insertion.
ShapeSetReport constructive_S_alpha(const Partition& alpha);

/// B_alpha minus the exception table (two-part alpha).
std::vector<Partition> predicted_S_alpha_two_cycle(const Partition& alpha);

/// Expected vs observed shape sets for one cycle type.
struct SetComparison {
  Partition alpha;
  std::vector<Partition> expected;
  std::vector<Partition> observed;
  std::vector<Partition> only_expected;
  std::vector<Partition> only_observed;
  bool equal() const { return only_expected.empty() && only_observed.empty(); }
};

SetComparison compare_sets(const Partition& alpha, std::vector<Partition> expected, std::vector<Partition> observed);

struct TheoremEntry {
  SetComparison brute;         ///< predicted vs brute force
  SetComparison constructive;  ///< predicted vs constructions
  std::vector<Partition> exceptions;
};

struct TheoremReport {
  int n = 0;
  std::vector<TheoremEntry> entries;
  bool ok() const;
};

/// For each alpha = (a1, a2) of n: brute force and constructions both equal
/// the predicted set.
TheoremReport verify_main_theorem(int n, const BruteForceOptions& options = {});

struct ContainmentReport {
  int n = 0;
  std::vector<ShapeSetReport> reports;  ///< one per alpha of n
  bool ok() const;
};

/// S_alpha within B_alpha for every alpha of n.
ContainmentReport verify_containment(int n, const BruteForceOptions& options = {});

/// Brute force against the strict-partition prediction: S = B, except
/// that (n/2, n/2) is missing when the smallest part is 1 and n is even.
/// Requires a strict alpha with at least three parts.
SetComparison check_strict_conjecture(const Partition& alpha, const BruteForceOptions& options = {});

/// Shapes obtained from some mu in `base` by adding a horizontal strip of k
/// boxes (all in row 1 when the result has two rows), restricted to B_target.
std::vector<Partition> pieri_expansion(const std::vector<Partition>& base, int k, const Partition& target);

/// alpha with k parts equal to 1 appended.
Partition append_fixed_points(const Partition& alpha, int k);

/// Brute-force S of alpha plus k fixed points against the expansion of
/// brute-force S_alpha. Requires smallest part of alpha > 1 and k >= 1.
SetComparison check_almost_pieri(const Partition& alpha, int k, const BruteForceOptions& options = {});

struct InvolutionCheck {
  int k = 0;  ///< number of fixed points
  SetComparison shapes;
  std::vector<Partition> coloring_failures;  ///< members where the symmetric coloring is rejected
  bool ok() const { return shapes.equal() && coloring_failures.empty(); }
};

/// For every k with n - k even: S of (2^((n-k)/2), 1^k) equals the shapes
/// with exactly k odd columns, and the symmetric coloring works on each.
std::vector<InvolutionCheck> check_involution_shapes(int n, const BruteForceOptions& options = {});

struct ColoringWitnessEntry {
  Partition lambda;
  SearchStatus status = SearchStatus::absent;
  bool canonical_q = false;  ///< witness uses Q = T_lambda
  std::uint64_t examined = 0;
};

struct ColoringConjectureReport {
  Partition alpha;
  std::vector<ColoringWitnessEntry> entries;  ///< one per shape in brute-force S_alpha
  bool ok() const;
};

/// For strict alpha: every shape in S_alpha has an alpha-coloring of some
/// admissible Q^up.
ColoringConjectureReport check_coloring_conjecture(const Partition& alpha, const BruteForceOptions& options = {},
                                                   const SearchOptions& search = {});

/// For alpha with smallest part > 1: every shape obtained from a colorable
/// mu by the Pieri-like rule is colorable for alpha plus k fixed points.
ColoringConjectureReport check_fixed_point_colorings(const Partition& alpha, int k,
                                                     const BruteForceOptions& options = {},
                                                     const SearchOptions& search = {});

struct AdmissibleCount {
  std::uint64_t admissible = 0;
  std::uint64_t total = 0;
  double fraction() const { return total == 0 ? 0.0 : static_cast<double>(admissible) / static_cast<double>(total); }
};

/// Admissible standard tableaux among all standard tableaux of size n.
AdmissibleCount admissible_fraction(int n);

/// All partitions alpha of n with distinct parts, canonical order.
std::vector<Partition> strict_partitions(int n);

/// Bumped whenever the cache format or any shape computation changes.
inline constexpr const char* kCacheVersion = "rsshape-1";

}  // namespace rsshape
