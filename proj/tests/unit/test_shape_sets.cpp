#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "doctest.h"
#include "rsshape/error.hpp"
#include "rsshape/io.hpp"
#include "rsshape/shape_sets.hpp"
#include "support/oracles.hpp"

using namespace rsshape;
namespace fs = std::filesystem;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& list) {
  std::vector<std::vector<int>> out;
  for (const auto& p : list) out.push_back(p.parts());
  return out;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("rsshape-test-" + std::to_string(::getpid()));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("brute force matches filtering S_n") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& alpha : enumerate_partitions(n)) {
      const ShapeSetReport r = brute_force_S_alpha(alpha);
      CHECK(parts_of(r.s_alpha) == oracle::shapes_of_class(alpha.parts()));
      CHECK(r.b_alpha == enumerate_B_alpha(alpha));
      CHECK(r.missing == difference(r.b_alpha, r.s_alpha));
      CHECK(r.outside_box.empty());
      CHECK(r.class_size == class_size(alpha));
      CHECK(r.examined == r.class_size);
      CHECK(r.method == Method::brute_force);
      CHECK_FALSE(r.lower_bound);
    }
  }
}

TEST_CASE("histogram and job count") {
  BruteForceOptions one;
  one.histogram = true;
  BruteForceOptions many = one;
  many.jobs = 6;
  for (const Partition alpha : {Partition{5, 3}, Partition{4, 2, 2}, Partition{3, 3, 2, 1}}) {
    const ShapeSetReport a = brute_force_S_alpha(alpha, one);
    const ShapeSetReport b = brute_force_S_alpha(alpha, many);
    CHECK(to_json(a).dump() == to_json(b).dump());
    std::uint64_t total = 0;
    for (const auto& [shape, count] : a.histogram) total += count;
    CHECK(total == a.class_size);
    CHECK(a.histogram.size() == a.s_alpha.size());
  }
}

TEST_CASE("budget and sampling") {
  BruteForceOptions small;
  small.budget = 100;
  CHECK_THROWS_AS(brute_force_S_alpha(Partition{4, 3}, small), BudgetExceeded);
  small.sample = 5000;
  const ShapeSetReport s = brute_force_S_alpha(Partition{4, 3}, small);
  CHECK(s.method == Method::sampled);
  CHECK(s.lower_bound);
  CHECK(s.examined == 5000);
  const ShapeSetReport exact = brute_force_S_alpha(Partition{4, 3});
  CHECK(difference(s.s_alpha, exact.s_alpha).empty());
  CHECK(to_json(brute_force_S_alpha(Partition{4, 3}, small)).dump() == to_json(s).dump());
  CHECK_THROWS_AS(brute_force_S_alpha(Partition(std::vector<int>(32, 1))), Error);
}

TEST_CASE("cache round trip") {
  TempDir dir;
  BruteForceOptions o;
  o.cache_dir = dir.path.string();
  const ShapeSetReport first = brute_force_S_alpha(Partition{4, 2}, o);
  CHECK(first.method == Method::brute_force);
  CHECK(fs::exists(dir.path / "salpha-n6.json"));
  const ShapeSetReport second = brute_force_S_alpha(Partition{4, 2}, o);
  CHECK(second.method == Method::cached);
  CHECK(second.s_alpha == first.s_alpha);
  CHECK(second.missing == first.missing);
  brute_force_S_alpha(Partition{3, 3}, o);
  const Json j = Json::parse(std::ifstream(dir.path / "salpha-n6.json"));
  CHECK(j.at("version") == kCacheVersion);
  CHECK(j.at("entries").size() == 2);
  // a stale version tag is ignored
  {
    Json stale = j;
    stale["version"] = "old";
    std::ofstream(dir.path / "salpha-n6.json") << stale.dump();
  }
  CHECK(brute_force_S_alpha(Partition{4, 2}, o).method == Method::brute_force);
}

TEST_CASE("constructions and predictions") {
  const auto predicted = predicted_S_alpha_two_cycle(Partition{4, 2});
  CHECK(difference(enumerate_B_alpha(Partition{4, 2}), predicted) == std::vector<Partition>{{2, 2, 2}});
  for (int n = 2; n <= 12; ++n) {
    CHECK(constructive_S_alpha(Partition{n}).s_alpha == enumerate_B_alpha(Partition{n}));
    for (int a2 = 1; 2 * a2 <= n; ++a2) {
      const Partition alpha{n - a2, a2};
      const ShapeSetReport r = constructive_S_alpha(alpha);
      CHECK(r.method == Method::constructive);
      CHECK(r.s_alpha == predicted_S_alpha_two_cycle(alpha));
    }
  }
  CHECK_THROWS_AS(constructive_S_alpha(Partition{3, 2, 1}), Error);
}

TEST_CASE("theorem and containment for small n") {
  for (int n = 2; n <= 8; ++n) {
    const TheoremReport t = verify_main_theorem(n);
    CHECK(t.ok());
    CHECK(t.entries.size() == static_cast<std::size_t>(n / 2));
    CHECK(verify_containment(n).ok());
  }
  const TheoremReport six = verify_main_theorem(6);
  CHECK(six.entries[1].brute.alpha == Partition{4, 2});
  CHECK(six.entries[1].exceptions == std::vector<Partition>{{2, 2, 2}});
}

TEST_CASE("set comparison") {
  const SetComparison c = compare_sets(Partition{2}, {{2}, {1, 1}}, {{1, 1}, {3}});
  CHECK_FALSE(c.equal());
  CHECK(c.only_expected == std::vector<Partition>{{2}});
  CHECK(c.only_observed == std::vector<Partition>{{3}});
}

TEST_CASE("strict cycle types") {
  CHECK(strict_partitions(6) == std::vector<Partition>{{6}, {5, 1}, {4, 2}, {3, 2, 1}});
  CHECK(check_strict_conjecture(Partition{3, 2, 1}).equal());
  CHECK(check_strict_conjecture(Partition{4, 2, 1}).equal());
  CHECK(check_strict_conjecture(Partition{4, 3, 1}).equal());
  CHECK_THROWS_AS(check_strict_conjecture(Partition{4, 2}), Error);
  CHECK_THROWS_AS(check_strict_conjecture(Partition{2, 2, 1}), Error);
}

TEST_CASE("Pieri-like expansion") {
  CHECK(append_fixed_points(Partition{3, 2}, 2) == Partition{3, 2, 1, 1});
  // from (2,1): (2,2) has two rows but grew in row 2
  CHECK(pieri_expansion({{2, 1}}, 1, Partition{3, 1}) == std::vector<Partition>{{3, 1}, {2, 1, 1}});
  // (3,3) grows in row 2 and (2,2,1,1) puts two boxes in one column
  CHECK(pieri_expansion({{2, 2}}, 2, Partition{2, 2, 1, 1}) == std::vector<Partition>{{4, 2}, {3, 2, 1}, {2, 2, 2}});
  CHECK(check_almost_pieri(Partition{3, 2}, 1).equal());
  CHECK(check_almost_pieri(Partition{4}, 2).equal());
  // (2,2,1,1) arises from (3,3) but (2,2,1,1,1) does not arise from (3,3,1)
  const SetComparison bad = check_almost_pieri(Partition{3, 3}, 1);
  CHECK_FALSE(bad.equal());
  CHECK(bad.only_expected == std::vector<Partition>{{2, 2, 1, 1, 1}});
  CHECK(bad.only_observed.empty());
}

TEST_CASE("involutions") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& check : check_involution_shapes(n)) CHECK(check.ok());
  }
}

TEST_CASE("coloring witnesses") {
  for (const Partition alpha : {Partition{5, 2}, Partition{4, 2, 1}, Partition{6, 1}}) {
    const ColoringConjectureReport r = check_coloring_conjecture(alpha);
    CHECK(r.ok());
    CHECK(r.entries.size() == brute_force_S_alpha(alpha).s_alpha.size());
  }
  CHECK(check_fixed_point_colorings(Partition{3, 2}, 1).ok());
}

TEST_CASE("admissible fraction") {
  const AdmissibleCount a = admissible_fraction(4);
  CHECK(a.total == 10);
  std::uint64_t admissible = 0;
  for (const auto& lambda : enumerate_partitions(4)) {
    for (const auto& q : enumerate_syt(lambda)) admissible += gravity_filling_is_standard(q) ? 1 : 0;
  }
  CHECK(a.admissible == admissible);
}
