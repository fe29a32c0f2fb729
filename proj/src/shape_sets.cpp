#include "rsshape/shape_sets.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <thread>
#include <unordered_map>

#include "rsshape/error.hpp"
#include "rsshape/io.hpp"
#include "rsshape/rs.hpp"

namespace rsshape {

std::string method_name(Method m) {
  switch (m) {
    case Method::brute_force:
      return "brute-force";
    case Method::constructive:
      return "constructive";
    case Method::cached:
      return "cached";
    case Method::sampled:
      return "sampled";
  }
  return "unknown";
}

namespace {

void sort_canonical(std::vector<Partition>& list) {
  std::sort(list.begin(), list.end(), CanonicalOrder{});
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

// Exact for n <= 20; beyond that a rounded estimate that only has to be
// good enough to compare against the budget.
std::uint64_t class_size_estimate(const Partition& alpha) {
  if (alpha.size() <= 20) return class_size(alpha);
  long double log_size = std::lgamma(static_cast<long double>(alpha.size()) + 1);
  for (int a : alpha.parts()) log_size -= std::log(static_cast<long double>(a));
  for (int v = 1; v <= alpha.size(); ++v) log_size -= std::lgamma(static_cast<long double>(multiplicity(alpha, v)) + 1);
  if (log_size > 62 * std::log(2.0L)) return std::uint64_t{1} << 62;
  return static_cast<std::uint64_t>(std::llround(std::exp(log_size)));
}

void fill_derived(ShapeSetReport& r) {
  sort_canonical(r.s_alpha);
  r.missing = difference(r.b_alpha, r.s_alpha);
  r.outside_box = difference(r.s_alpha, r.b_alpha);
}

std::filesystem::path cache_file(const std::string& dir, int n) {
  return std::filesystem::path(dir) / ("salpha-n" + std::to_string(n) + ".json");
}

std::string cache_key(const Partition& alpha, Method method) {
  return alpha.str() + "|" + method_name(method) + "|" + kCacheVersion;
}

Json read_cache(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return Json::object();
  try {
    Json j = Json::parse(in);
    if (j.value("version", "") != kCacheVersion || !j.contains("entries")) return Json::object();
    return j;
  } catch (const Json::exception&) {
    return Json::object();  // unreadable cache files are ignored and rewritten
  }
}

std::optional<ShapeSetReport> cache_lookup(const BruteForceOptions& options, const Partition& alpha) {
  if (options.cache_dir.empty()) return std::nullopt;
  const Json j = read_cache(cache_file(options.cache_dir, alpha.size()));
  const std::string key = cache_key(alpha, Method::brute_force);
  if (!j.contains("entries") || !j["entries"].contains(key)) return std::nullopt;
  ShapeSetReport r = report_from_json(j["entries"][key]);
  if (options.histogram && r.histogram.empty()) return std::nullopt;
  r.method = Method::cached;
  return r;
}

void cache_store(const BruteForceOptions& options, const ShapeSetReport& r) {
  if (options.cache_dir.empty()) return;
  std::filesystem::create_directories(options.cache_dir);
  const auto file = cache_file(options.cache_dir, r.alpha.size());
  Json j = read_cache(file);
  if (!j.contains("entries")) j = Json{{"version", kCacheVersion}, {"entries", Json::object()}};
  j["entries"][cache_key(r.alpha, Method::brute_force)] = to_json(r);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file " + tmp);
    out << j.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, file);
}

using ShapeCounts = std::unordered_map<std::uint64_t, std::uint64_t>;

ShapeCounts enumerate_class(const Partition& alpha, int jobs) {
  const ClassEnumerator enumerator(alpha);
  const std::vector<ClassEnumerator::Task> tasks =
      jobs > 1 ? enumerator.split(static_cast<std::size_t>(jobs) * 16) : std::vector<ClassEnumerator::Task>{enumerator.root()};
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<ShapeCounts> partial(static_cast<std::size_t>(workers));
  std::atomic<std::size_t> next{0};
  auto work = [&](int w) {
    ShapeScanner scanner;
    ShapeCounts& counts = partial[static_cast<std::size_t>(w)];
    std::uint64_t last_code = 0;
    std::uint64_t* last_slot = nullptr;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      enumerator.for_each(tasks[i], [&](std::span<const int> one_line) {
        scanner.scan(one_line);
        const std::uint64_t code = scanner.code();
        // Consecutive elements often share a shape; skip the hash lookup then.
        if (last_slot == nullptr || code != last_code) {
          last_slot = &counts[code];
          last_code = code;
        }
        ++*last_slot;
      });
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  ShapeCounts merged;
  for (const auto& counts : partial) {
    for (const auto& [code, count] : counts) merged[code] += count;
  }
  return merged;
}

ShapeCounts sample_class(const Partition& alpha, std::uint64_t draws, std::uint64_t seed) {
  // A uniform shuffle cut into consecutive blocks of lengths alpha_i is a
  // uniform element of C_alpha.
  std::mt19937_64 rng(seed);
  const int n = alpha.size();
  std::vector<int> points(static_cast<std::size_t>(n));
  std::vector<int> one_line(static_cast<std::size_t>(n));
  ShapeScanner scanner;
  ShapeCounts counts;
  for (std::uint64_t d = 0; d < draws; ++d) {
    std::iota(points.begin(), points.end(), 1);
    std::shuffle(points.begin(), points.end(), rng);
    std::size_t start = 0;
    for (int len : alpha.parts()) {
      for (int k = 0; k < len; ++k) {
        const int from = points[start + static_cast<std::size_t>(k)];
        const int to = points[start + static_cast<std::size_t>((k + 1) % len)];
        one_line[static_cast<std::size_t>(from - 1)] = to;
      }
      start += static_cast<std::size_t>(len);
    }
    scanner.scan(one_line);
    ++counts[scanner.code()];
  }
  return counts;
}

}  // namespace

ShapeSetReport brute_force_S_alpha(const Partition& alpha, const BruteForceOptions& options) {
  if (alpha.empty()) throw Error("empty cycle type");
  if (options.jobs < 1) throw Error("jobs must be at least 1");
  if (alpha.size() > ShapeScanner::kMaxN) {
    throw Error("brute force is limited to n <= " + std::to_string(ShapeScanner::kMaxN));
  }
  const auto start = std::chrono::steady_clock::now();
  const bool sampled = class_size_estimate(alpha) > options.budget;
  if (sampled && !options.sample) {
    throw BudgetExceeded("class " + alpha.str() + " has about " + std::to_string(class_size_estimate(alpha)) +
                         " elements, over the budget of " + std::to_string(options.budget) +
                         "; raise --budget or use sampling (reported as a lower bound)");
  }
  if (!sampled) {
    if (auto hit = cache_lookup(options, alpha)) return *hit;
  }

  ShapeSetReport r;
  r.alpha = alpha;
  r.b_alpha = enumerate_B_alpha(alpha);
  r.class_size = class_size_estimate(alpha);
  ShapeCounts counts;
  if (sampled) {
    r.method = Method::sampled;
    r.lower_bound = true;
    r.examined = *options.sample;
    counts = sample_class(alpha, *options.sample, options.seed);
  } else {
    r.method = Method::brute_force;
    r.examined = r.class_size;
    counts = enumerate_class(alpha, options.jobs);
  }
  std::map<Partition, std::uint64_t, CanonicalOrder> by_shape;
  for (const auto& [code, count] : counts) by_shape[decode_shape(code)] += count;
  for (const auto& [shape, count] : by_shape) {
    r.s_alpha.push_back(shape);
    if (options.histogram) r.histogram.emplace_back(shape, count);
  }
  fill_derived(r);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!sampled) cache_store(options, r);
  return r;
}

ShapeSetReport constructive_S_alpha(const Partition& alpha) {
  if (alpha.empty()) throw Error("empty cycle type");
  if (alpha.length() > 2) throw Error("constructions exist for one or two cycles only");
  const auto start = std::chrono::steady_clock::now();
  ShapeSetReport r;
  r.alpha = alpha;
  r.method = Method::constructive;
  r.b_alpha = enumerate_B_alpha(alpha);
  r.class_size = class_size_estimate(alpha);
  for (const Partition& lambda : r.b_alpha) {
    Permutation sigma;
    if (alpha.length() == 1) {
      if (lambda.part(1) == 1 && alpha.size() > 2) continue;
      sigma = canonical_cycle(lambda).sigma;
    } else {
      const ColoringOutcome out = construct_two_cycle(alpha, lambda);
      if (out.kind == OutcomeKind::unattainable) continue;
      sigma = out.sigma;
    }
    ++r.examined;
    if (cycle_type(sigma) != alpha || rs_shape(sigma) != lambda) {
      throw Error("witness for " + alpha.str() + " / " + lambda.str() + " failed re-checking");
    }
    r.s_alpha.push_back(lambda);
  }
  fill_derived(r);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Partition> predicted_S_alpha_two_cycle(const Partition& alpha) {
  if (alpha.length() != 2) throw Error("expected a cycle type with two parts");
  return difference(enumerate_B_alpha(alpha), two_cycle_exceptions(alpha));
}

SetComparison compare_sets(const Partition& alpha, std::vector<Partition> expected, std::vector<Partition> observed) {
  sort_canonical(expected);
  sort_canonical(observed);
  SetComparison c;
  c.alpha = alpha;
  c.only_expected = difference(expected, observed);
  c.only_observed = difference(observed, expected);
  c.expected = std::move(expected);
  c.observed = std::move(observed);
  return c;
}

bool TheoremReport::ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const TheoremEntry& e) { return e.brute.equal() && e.constructive.equal(); });
}

TheoremReport verify_main_theorem(int n, const BruteForceOptions& options) {
  if (n < 2) throw Error("two-cycle classes need n >= 2");
  TheoremReport report;
  report.n = n;
  for (int a2 = 1; a2 <= n / 2; ++a2) {
    const Partition alpha{n - a2, a2};
    const auto predicted = predicted_S_alpha_two_cycle(alpha);
    TheoremEntry e;
    e.exceptions = two_cycle_exceptions(alpha);
    e.brute = compare_sets(alpha, predicted, brute_force_S_alpha(alpha, options).s_alpha);
    e.constructive = compare_sets(alpha, predicted, constructive_S_alpha(alpha).s_alpha);
    report.entries.push_back(std::move(e));
  }
  return report;
}

bool ContainmentReport::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const ShapeSetReport& r) { return r.outside_box.empty(); });
}

ContainmentReport verify_containment(int n, const BruteForceOptions& options) {
  ContainmentReport report;
  report.n = n;
  for (const Partition& alpha : enumerate_partitions(n)) report.reports.push_back(brute_force_S_alpha(alpha, options));
  return report;
}

SetComparison check_strict_conjecture(const Partition& alpha, const BruteForceOptions& options) {
  if (!is_strict(alpha)) throw Error("cycle type " + alpha.str() + " has repeated parts");
  if (alpha.length() < 3) throw Error("the strict-partition check needs at least three parts");
  const int n = alpha.size();
  std::vector<Partition> expected = enumerate_B_alpha(alpha);
  if (alpha.part(alpha.length()) == 1 && n % 2 == 0) {
    std::erase(expected, Partition{n / 2, n / 2});
  }
  return compare_sets(alpha, std::move(expected), brute_force_S_alpha(alpha, options).s_alpha);
}

namespace {

// lambda / mu is a horizontal strip (mu inside lambda, no two added boxes
// in one column).
bool horizontal_strip(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (mu.part(i) > lambda.part(i)) return false;
    if (lambda.part(i + 1) > mu.part(i)) return false;
  }
  return true;
}

bool only_first_row_differs(const Partition& lambda, const Partition& mu) {
  for (int i = 2; i <= std::max(lambda.length(), mu.length()); ++i) {
    if (lambda.part(i) != mu.part(i)) return false;
  }
  return true;
}

}  // namespace

std::vector<Partition> pieri_expansion(const std::vector<Partition>& base, int k, const Partition& target) {
  std::vector<Partition> out;
  for (const Partition& lambda : enumerate_B_alpha(target)) {
    const bool two_rows = lambda.length() == 2;
    for (const Partition& mu : base) {
      if (mu.size() + k != lambda.size() || !horizontal_strip(lambda, mu)) continue;
      if (two_rows && !only_first_row_differs(lambda, mu)) continue;
      out.push_back(lambda);
      break;
    }
  }
  return out;
}

Partition append_fixed_points(const Partition& alpha, int k) {
  if (k < 0) throw Error("negative number of fixed points");
  std::vector<int> parts = alpha.parts();
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return Partition(std::move(parts));
}

SetComparison check_almost_pieri(const Partition& alpha, int k, const BruteForceOptions& options) {
  if (alpha.empty()) throw Error("empty cycle type");
  if (alpha.part(alpha.length()) <= 1) throw Error("the Pieri check needs every part of alpha to exceed 1");
  if (k < 1) throw Error("the Pieri check needs k >= 1");
  const Partition target = append_fixed_points(alpha, k);
  const auto base = brute_force_S_alpha(alpha, options).s_alpha;
  return compare_sets(target, pieri_expansion(base, k, target), brute_force_S_alpha(target, options).s_alpha);
}

std::vector<InvolutionCheck> check_involution_shapes(int n, const BruteForceOptions& options) {
  if (n < 1) throw Error("n must be positive");
  std::vector<InvolutionCheck> out;
  for (int k = n % 2; k <= n; k += 2) {
    std::vector<int> parts(static_cast<std::size_t>((n - k) / 2), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
    const Partition alpha(std::move(parts));
    std::vector<Partition> expected;
    for (const Partition& lambda : enumerate_partitions(n)) {
      if (shape_stats(lambda).odd_column_count == k) expected.push_back(lambda);
    }
    InvolutionCheck check;
    check.k = k;
    for (const Partition& lambda : expected) {
      try {
        involution_canonical_coloring(alpha, lambda);
      } catch (const Error&) {
        check.coloring_failures.push_back(lambda);
      }
    }
    check.shapes = compare_sets(alpha, std::move(expected), brute_force_S_alpha(alpha, options).s_alpha);
    out.push_back(std::move(check));
  }
  return out;
}

bool ColoringConjectureReport::ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ColoringWitnessEntry& e) { return e.status == SearchStatus::found; });
}

namespace {

ColoringWitnessEntry search_entry(const Partition& alpha, const Partition& lambda, const SearchOptions& search) {
  ColoringWitnessEntry e;
  e.lambda = lambda;
  const SearchResult r = search_alpha_coloring(alpha, lambda, search);
  e.status = r.status;
  e.examined = r.examined;
  e.canonical_q = r.witness && r.witness->q == canonical_tableau(lambda);
  return e;
}

}  // namespace

ColoringConjectureReport check_coloring_conjecture(const Partition& alpha, const BruteForceOptions& options,
                                                   const SearchOptions& search) {
  if (!is_strict(alpha)) throw Error("cycle type " + alpha.str() + " has repeated parts");
  ColoringConjectureReport report;
  report.alpha = alpha;
  for (const Partition& lambda : brute_force_S_alpha(alpha, options).s_alpha) {
    report.entries.push_back(search_entry(alpha, lambda, search));
  }
  return report;
}

ColoringConjectureReport check_fixed_point_colorings(const Partition& alpha, int k, const BruteForceOptions& options,
                                                     const SearchOptions& search) {
  if (alpha.empty()) throw Error("empty cycle type");
  if (alpha.part(alpha.length()) <= 1) throw Error("the fixed-point check needs every part of alpha to exceed 1");
  if (k < 1) throw Error("the fixed-point check needs k >= 1");
  const Partition target = append_fixed_points(alpha, k);
  std::vector<Partition> colorable;
  for (const Partition& mu : brute_force_S_alpha(alpha, options).s_alpha) {
    if (search_alpha_coloring(alpha, mu, search).status == SearchStatus::found) colorable.push_back(mu);
  }
  ColoringConjectureReport report;
  report.alpha = target;
  for (const Partition& lambda : pieri_expansion(colorable, k, target)) {
    report.entries.push_back(search_entry(target, lambda, search));
  }
  return report;
}

AdmissibleCount admissible_fraction(int n) {
  if (n < 1) throw Error("n must be positive");
  AdmissibleCount count;
  for (const Partition& lambda : enumerate_partitions(n)) {
    for_each_syt(lambda, [&](const Tableau& q) {
      ++count.total;
      if (is_admissible(q)) ++count.admissible;
    });
  }
  return count;
}

std::vector<Partition> strict_partitions(int n) {
  std::vector<Partition> out;
  for (const Partition& p : enumerate_partitions(n)) {
    if (is_strict(p)) out.push_back(p);
  }
  return out;
}

}  // namespace rsshape
