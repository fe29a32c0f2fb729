#include "rsshape/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rsshape/error.hpp"
#include "rsshape/io.hpp"
#include "rsshape/rs.hpp"
#include "rsshape/shape_sets.hpp"

namespace rsshape::cli {

namespace {

std::vector<std::vector<int>> parse_rows(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::string row;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, row, '/')) {
    std::vector<int> values;
    std::string item;
    std::stringstream rs(row);
    while (std::getline(rs, item, ',')) {
      const auto first = item.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item.substr(first), &used);
      } catch (const std::exception&) {
        throw Error("bad entry '" + item + "' in '" + std::string(text) + "'");
      }
      if (item.find_first_not_of(" \t", first + used) != std::string::npos) {
        throw Error("bad entry '" + item + "' in '" + std::string(text) + "'");
      }
      values.push_back(v);
    }
    rows.push_back(std::move(values));
  }
  if (rows.empty()) throw Error("empty tableau text");
  return rows;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

bool looks_like_json(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  return first != std::string_view::npos && text[first] == '{';
}

}  // namespace

Tableau parse_tableau(std::string_view text) {
  if (looks_like_json(text)) return tableau_from_json(parse_json(text));
  return Tableau(parse_rows(text));
}

Coloring parse_coloring(std::string_view text) {
  if (looks_like_json(text)) return coloring_from_json(parse_json(text));
  return Coloring(parse_rows(text));
}

std::string compact(const Tableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i > 0) out += '/';
    for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(t.rows()[i][j]);
    }
  }
  return out;
}

namespace {

enum class Format { text, json, latex };

Format parse_format(const std::string& name) {
  if (name == "text" || name == "ascii") return Format::text;
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  throw Error("unknown format '" + name + "' (expected text, ascii, json or latex)");
}

std::string list_text(const std::vector<Partition>& list) {
  if (list.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i > 0) out += "  ";
    out += "(" + list[i].str() + ")";
  }
  return out;
}

std::string render(const Tableau& t, Format f) {
  switch (f) {
    case Format::json:
      return to_json(t).dump();
    case Format::latex:
      return render_latex(t);
    case Format::text:
      break;
  }
  return render_ascii(t);
}

std::string indent(const std::string& block) {
  std::string out = "  ";
  for (char c : block) {
    out += c;
    if (c == '\n') out += "  ";
  }
  return out;
}

// Options shared by every command; each subcommand registers the ones it uses.
struct Config {
  std::string sigma;
  std::string alpha;
  std::string shape;
  std::string p;
  std::string q;
  std::string tableau;
  std::string coloring;
  std::string method = "brute";
  std::string format = "text";
  std::string render_format;
  std::string cache_dir;
  int n = 0;
  int k = 0;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100'000'000;
  std::uint64_t sample = 0;
  std::uint64_t search_budget = 50'000'000;
  bool histogram = false;
  bool count_all = false;
  bool canonical_only = false;
  bool canonical = false;
  bool up = false;

  BruteForceOptions brute() const {
    BruteForceOptions o;
    o.budget = budget;
    o.jobs = jobs;
    o.histogram = histogram;
    o.seed = seed;
    if (sample > 0) o.sample = sample;
    o.cache_dir = cache_dir;
    return o;
  }
  SearchOptions search() const {
    SearchOptions o;
    o.budget = search_budget;
    o.count_all = count_all;
    o.canonical_only = canonical_only;
    return o;
  }
  Format fmt() const { return parse_format(render_format.empty() ? format : render_format); }
};

Partition require_partition(const std::string& text, const char* flag) {
  if (text.empty()) throw Error(std::string("missing ") + flag);
  return Partition::parse(text);
}

int require_n(int n) {
  if (n < 1) throw Error("missing or invalid --n");
  return n;
}

// ---- rs -------------------------------------------------------------------

int rs_apply(const Config& c, std::ostream& out) {
  const Permutation sigma = Permutation::parse(c.sigma);
  const RsPair rs = rs_forward(sigma);
  const Format f = c.fmt();
  if (f == Format::json) {
    out << Json{{"sigma", to_json(sigma)}, {"P", to_json(rs.p)}, {"Q", to_json(rs.q)}, {"shape", parts_json(rs.p.shape())}}.dump()
        << '\n';
    return kExitOk;
  }
  out << "sigma = " << format_one_line(sigma) << '\n';
  out << "cycles = " << format_cycles(sigma) << '\n';
  out << "cycle type = " << cycle_type(sigma).str() << '\n';
  out << "P =\n" << indent(render(rs.p, f)) << '\n';
  out << "Q =\n" << indent(render(rs.q, f)) << '\n';
  out << "shape = " << rs.p.shape().str() << '\n';
  return kExitOk;
}

int rs_invert(const Config& c, std::ostream& out) {
  if (c.p.empty() || c.q.empty()) throw Error("rs invert needs --p and --q");
  const Permutation sigma = rs_inverse(parse_tableau(c.p), parse_tableau(c.q));
  if (c.fmt() == Format::json) {
    out << Json{{"sigma", to_json(sigma)}, {"cycles", format_cycles(sigma)}}.dump() << '\n';
    return kExitOk;
  }
  out << "sigma = " << format_one_line(sigma) << '\n';
  out << "cycles = " << format_cycles(sigma) << '\n';
  return kExitOk;
}

int rs_shape_cmd(const Config& c, std::ostream& out) {
  const Permutation sigma = Permutation::parse(c.sigma);
  const Partition shape = rs_shape(sigma);
  if (c.fmt() == Format::json) {
    out << Json{{"shape", parts_json(shape)}}.dump() << '\n';
  } else {
    out << shape.str() << '\n';
  }
  return kExitOk;
}

int rs_trace(const Config& c, std::ostream& out) {
  const Permutation sigma = Permutation::parse(c.sigma);
  std::vector<RsStep> steps;
  rs_forward(sigma, &steps);
  if (c.fmt() == Format::json) {
    Json j = Json::array();
    for (std::size_t i = 0; i < steps.size(); ++i) {
      j.push_back(Json{{"i", i + 1}, {"inserted", steps[i].inserted}, {"P", to_json(steps[i].p)}, {"Q", to_json(steps[i].q)}});
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  std::size_t width = 1;
  for (const auto& s : steps) width = std::max(width, compact(s.p).size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string p = compact(steps[i].p);
    out << "i=" << i + 1 << "  insert " << steps[i].inserted << "  P=" << p << std::string(width - p.size(), ' ')
        << "  Q=" << compact(steps[i].q) << '\n';
  }
  return kExitOk;
}

// ---- shape sets -------------------------------------------------------------

void print_report(const ShapeSetReport& r, Format f, std::ostream& out) {
  if (f == Format::json) {
    out << to_json(r).dump() << '\n';
    return;
  }
  out << "alpha = " << r.alpha.str() << '\n';
  out << "method = " << method_name(r.method) << (r.lower_bound ? " (lower bound)" : "") << '\n';
  out << "class size = " << r.class_size << '\n';
  out << "B_alpha (" << r.b_alpha.size() << "): " << list_text(r.b_alpha) << '\n';
  out << "S_alpha (" << r.s_alpha.size() << "): " << list_text(r.s_alpha) << '\n';
  out << "missing (" << r.missing.size() << "): " << list_text(r.missing) << '\n';
  if (!r.outside_box.empty()) out << "outside box: " << list_text(r.outside_box) << '\n';
  for (const auto& [shape, count] : r.histogram) out << "  " << shape.str() << ": " << count << '\n';
}

int salpha(const Config& c, std::ostream& out) {
  const Partition alpha = require_partition(c.alpha, "--alpha");
  ShapeSetReport r;
  if (c.method == "brute") {
    r = brute_force_S_alpha(alpha, c.brute());
  } else if (c.method == "construct") {
    r = constructive_S_alpha(alpha);
  } else {
    throw Error("unknown method '" + c.method + "' (expected brute or construct)");
  }
  print_report(r, c.fmt(), out);
  return r.outside_box.empty() ? kExitOk : kExitMismatch;
}

int balpha(const Config& c, std::ostream& out) {
  const Partition alpha = require_partition(c.alpha, "--alpha");
  const BoundingBox box = bounding_box(alpha);
  const auto shapes = enumerate_B_alpha(alpha);
  if (c.fmt() == Format::json) {
    out << Json{{"alpha", parts_json(alpha)},
                {"maxRows", box.max_rows},
                {"maxCols", box.max_cols},
                {"bAlpha", partition_list_json(shapes)}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "alpha = " << alpha.str() << '\n';
  out << "rows <= " << box.max_rows << ", columns <= " << box.max_cols << '\n';
  out << "B_alpha (" << shapes.size() << "): " << list_text(shapes) << '\n';
  return kExitOk;
}

// ---- colorings --------------------------------------------------------------

void print_outcome(const ColoringOutcome& o, const Partition& alpha, const Partition& lambda, Format f,
                   std::ostream& out) {
  if (f == Format::json) {
    Json j = to_json(o);
    j["alpha"] = parts_json(alpha);
    j["shape"] = parts_json(lambda);
    out << j.dump() << '\n';
    return;
  }
  out << "alpha = " << alpha.str() << '\n';
  out << "shape = " << lambda.str() << '\n';
  out << "kind = " << outcome_kind_name(o.kind) << '\n';
  out << "construction = " << o.construction << '\n';
  if (o.kind == OutcomeKind::unattainable) return;
  if (o.coloring) {
    const Tableau up = column_reverse(o.q);
    out << "Q =\n" << indent(render(o.q, f)) << '\n';
    out << "coloring of Q^up (entry:color) =\n"
        << indent(f == Format::latex ? render_latex(*o.coloring, &up) : render_ascii(*o.coloring, &up)) << '\n';
  }
  out << "sigma = " << format_one_line(o.sigma) << '\n';
  out << "sigma^-1 = " << format_cycles(inverse(o.sigma)) << '\n';
  out << "P =\n" << indent(render(o.witness_p, f)) << '\n';
}

int color_construct(const Config& c, std::ostream& out) {
  const Partition alpha = require_partition(c.alpha, "--alpha");
  const Partition lambda = require_partition(c.shape, "--shape");
  ColoringOutcome o;
  if (alpha.length() == 1) {
    const CanonicalCycle cc = canonical_cycle(lambda);
    o.kind = OutcomeKind::coloring;
    o.construction = "canonical-cycle";
    o.coloring = Coloring::uniform(lambda);
    o.q = canonical_tableau(lambda);
    o.sigma = cc.sigma;
    o.witness_p = cc.p;
  } else {
    o = construct_two_cycle(alpha, lambda);
  }
  print_outcome(o, alpha, lambda, c.fmt(), out);
  return kExitOk;
}

int color_search(const Config& c, std::ostream& out) {
  const Partition alpha = require_partition(c.alpha, "--alpha");
  const Partition lambda = require_partition(c.shape, "--shape");
  const SearchResult r = search_alpha_coloring(alpha, lambda, c.search());
  const Format f = c.fmt();
  if (f == Format::json) {
    Json j{{"alpha", parts_json(alpha)},
           {"shape", parts_json(lambda)},
           {"status", search_status_name(r.status)},
           {"admissibleTableaux", r.admissible_tableaux},
           {"examined", r.examined}};
    if (c.count_all) j["count"] = r.count;
    if (r.witness) j["witness"] = to_json(*r.witness);
    out << j.dump() << '\n';
  } else {
    out << "status = " << search_status_name(r.status) << '\n';
    out << "admissible tableaux = " << r.admissible_tableaux << '\n';
    out << "colorings examined = " << r.examined << '\n';
    if (c.count_all) out << "alpha-colorings = " << r.count << '\n';
    if (r.witness) print_outcome(*r.witness, alpha, lambda, f, out);
  }
  if (r.status == SearchStatus::budget_exhausted) throw BudgetExceeded("search budget exhausted before a decision");
  return kExitOk;
}

int color_validate(const Config& c, std::ostream& out) {
  const Partition alpha = require_partition(c.alpha, "--alpha");
  if (c.coloring.empty()) throw Error("missing --coloring");
  const Coloring coloring = parse_coloring(c.coloring);
  Tableau q;
  if (!c.q.empty()) {
    q = parse_tableau(c.q);
  } else {
    q = canonical_tableau(c.shape.empty() ? coloring.shape() : Partition::parse(c.shape));
  }
  const ColoringCheck check = validate_alpha_coloring(q, coloring, alpha);
  const Format f = c.fmt();
  if (f == Format::json) {
    out << Json{{"accepted", check.accepted},
                {"sigma", to_json(check.sigma)},
                {"sigmaInverseCycles", format_cycles(inverse(check.sigma))},
                {"P", to_json(check.p)}}
               .dump()
        << '\n';
  } else {
    out << (check.accepted ? "accepted" : "rejected: sigma . Q^up is not standard") << '\n';
    out << "sigma = " << format_one_line(check.sigma) << '\n';
    out << "sigma^-1 = " << format_cycles(inverse(check.sigma)) << '\n';
    out << "sigma . Q^up =\n" << indent(render(check.p, f)) << '\n';
  }
  return check.accepted ? kExitOk : kExitMismatch;
}

// ---- verification -----------------------------------------------------------

int verify_theorem_cmd(const Config& c, std::ostream& out) {
  const TheoremReport r = verify_main_theorem(require_n(c.n), c.brute());
  if (c.fmt() == Format::json) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
      entries.push_back(Json{{"alpha", parts_json(e.brute.alpha)},
                             {"predictedMissing", partition_list_json(e.exceptions)},
                             {"bruteMatches", e.brute.equal()},
                             {"constructionMatches", e.constructive.equal()},
                             {"bruteOnlyPredicted", partition_list_json(e.brute.only_expected)},
                             {"bruteOnlyObserved", partition_list_json(e.brute.only_observed)},
                             {"constructionOnlyPredicted", partition_list_json(e.constructive.only_expected)},
                             {"constructionOnlyObserved", partition_list_json(e.constructive.only_observed)}});
    }
    out << Json{{"n", r.n}, {"ok", r.ok()}, {"entries", entries}}.dump() << '\n';
  } else {
    for (const auto& e : r.entries) {
      out << "alpha = (" << e.brute.alpha.str() << ")  |S| = " << e.brute.observed.size()
          << "  missing from B: " << list_text(e.exceptions);
      out << "  brute " << (e.brute.equal() ? "ok" : "MISMATCH") << ", constructions "
          << (e.constructive.equal() ? "ok" : "MISMATCH") << '\n';
      if (!e.brute.equal()) {
        out << "  predicted only: " << list_text(e.brute.only_expected) << '\n';
        out << "  observed only: " << list_text(e.brute.only_observed) << '\n';
      }
      if (!e.constructive.equal()) {
        out << "  not constructed: " << list_text(e.constructive.only_expected) << '\n';
        out << "  constructed unexpectedly: " << list_text(e.constructive.only_observed) << '\n';
      }
    }
    out << "n = " << r.n << ": " << (r.ok() ? "theorem verified" : "MISMATCH") << '\n';
  }
  return r.ok() ? kExitOk : kExitMismatch;
}

int verify_containment_cmd(const Config& c, std::ostream& out) {
  const ContainmentReport r = verify_containment(require_n(c.n), c.brute());
  if (c.fmt() == Format::json) {
    Json entries = Json::array();
    for (const auto& rep : r.reports) {
      entries.push_back(Json{{"alpha", parts_json(rep.alpha)},
                             {"sAlpha", rep.s_alpha.size()},
                             {"bAlpha", rep.b_alpha.size()},
                             {"outsideBox", partition_list_json(rep.outside_box)}});
    }
    out << Json{{"n", r.n}, {"ok", r.ok()}, {"entries", entries}}.dump() << '\n';
  } else {
    for (const auto& rep : r.reports) {
      out << "alpha = (" << rep.alpha.str() << ")  |S| = " << rep.s_alpha.size() << "  |B| = " << rep.b_alpha.size()
          << (rep.outside_box.empty() ? "  ok" : "  VIOLATION: " + list_text(rep.outside_box)) << '\n';
    }
    out << "n = " << r.n << ": " << (r.ok() ? "S_alpha within B_alpha for every alpha" : "VIOLATION") << '\n';
  }
  return r.ok() ? kExitOk : kExitMismatch;
}

void print_comparison(const SetComparison& cmp, std::ostream& out) {
  out << "alpha = (" << cmp.alpha.str() << ")  |S| = " << cmp.observed.size() << "  "
      << (cmp.equal() ? "verified" : "COUNTEREXAMPLE") << '\n';
  if (!cmp.equal()) {
    out << "  predicted but absent: " << list_text(cmp.only_expected) << '\n';
    out << "  present but not predicted: " << list_text(cmp.only_observed) << '\n';
  }
}

Json comparison_json(const SetComparison& cmp) {
  return Json{{"alpha", parts_json(cmp.alpha)},
              {"verified", cmp.equal()},
              {"predictedButAbsent", partition_list_json(cmp.only_expected)},
              {"presentButNotPredicted", partition_list_json(cmp.only_observed)}};
}

int finish_conjecture(bool ok, int n, Json entries, const Config& c, std::ostream& out) {
  if (c.fmt() == Format::json) {
    out << Json{{"n", n}, {"verdict", ok ? "verified up to budget" : "counterexample"}, {"entries", entries}}.dump()
        << '\n';
  } else {
    out << (ok ? "verified up to budget (n = " + std::to_string(n) + ")" : "counterexample found") << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

int conjecture_strict(const Config& c, std::ostream& out) {
  const int n = require_n(c.n);
  bool ok = true;
  Json entries = Json::array();
  for (const Partition& alpha : strict_partitions(n)) {
    if (alpha.length() < 3) continue;
    const SetComparison cmp = check_strict_conjecture(alpha, c.brute());
    ok = ok && cmp.equal();
    entries.push_back(comparison_json(cmp));
    if (c.fmt() != Format::json) print_comparison(cmp, out);
  }
  return finish_conjecture(ok, n, entries, c, out);
}

int conjecture_pieri(const Config& c, std::ostream& out) {
  const int n = require_n(c.n);
  bool ok = true;
  Json entries = Json::array();
  for (int m = 2; m < n; ++m) {
    for (const Partition& alpha : enumerate_partitions(m)) {
      if (alpha.part(alpha.length()) < 2) continue;
      const SetComparison cmp = check_almost_pieri(alpha, n - m, c.brute());
      ok = ok && cmp.equal();
      entries.push_back(comparison_json(cmp));
      if (c.fmt() != Format::json) print_comparison(cmp, out);
    }
  }
  return finish_conjecture(ok, n, entries, c, out);
}

int coloring_report(const ColoringConjectureReport& r, const Config& c, Json& entries, std::ostream& out) {
  Json shapes = Json::array();
  int canonical = 0;
  for (const auto& e : r.entries) {
    canonical += e.canonical_q ? 1 : 0;
    shapes.push_back(
        Json{{"shape", parts_json(e.lambda)}, {"status", search_status_name(e.status)}, {"canonicalQ", e.canonical_q}});
  }
  entries.push_back(Json{{"alpha", parts_json(r.alpha)}, {"verified", r.ok()}, {"shapes", shapes}});
  if (c.fmt() != Format::json) {
    out << "alpha = (" << r.alpha.str() << ")  shapes = " << r.entries.size() << "  with Q = T_lambda: " << canonical
        << "  " << (r.ok() ? "verified" : "COUNTEREXAMPLE") << '\n';
    for (const auto& e : r.entries) {
      if (e.status != SearchStatus::found) out << "  (" << e.lambda.str() << "): " << search_status_name(e.status) << '\n';
    }
  }
  return r.ok();
}

int conjecture_coloring(const Config& c, std::ostream& out) {
  const int n = require_n(c.n);
  bool ok = true;
  Json entries = Json::array();
  for (const Partition& alpha : strict_partitions(n)) {
    ok = coloring_report(check_coloring_conjecture(alpha, c.brute(), c.search()), c, entries, out) && ok;
  }
  return finish_conjecture(ok, n, entries, c, out);
}

int conjecture_fixed_points(const Config& c, std::ostream& out) {
  const int n = require_n(c.n);
  bool ok = true;
  Json entries = Json::array();
  for (int m = 2; m < n; ++m) {
    for (const Partition& alpha : enumerate_partitions(m)) {
      if (alpha.part(alpha.length()) < 2) continue;
      ok = coloring_report(check_fixed_point_colorings(alpha, n - m, c.brute(), c.search()), c, entries, out) && ok;
    }
  }
  return finish_conjecture(ok, n, entries, c, out);
}

int conjecture_involutions(const Config& c, std::ostream& out) {
  const int n = require_n(c.n);
  bool ok = true;
  Json entries = Json::array();
  for (const InvolutionCheck& check : check_involution_shapes(n, c.brute())) {
    ok = ok && check.ok();
    Json e = comparison_json(check.shapes);
    e["fixedPoints"] = check.k;
    e["coloringFailures"] = partition_list_json(check.coloring_failures);
    entries.push_back(e);
    if (c.fmt() != Format::json) {
      out << "k = " << check.k << ": ";
      print_comparison(check.shapes, out);
      if (!check.coloring_failures.empty()) out << "  coloring rejected for " << list_text(check.coloring_failures) << '\n';
    }
  }
  return finish_conjecture(ok, n, entries, c, out);
}

int admissible_cmd(const Config& c, std::ostream& out) {
  const int n = require_n(c.n);
  const AdmissibleCount a = admissible_fraction(n);
  if (c.fmt() == Format::json) {
    out << Json{{"n", n}, {"admissible", a.admissible}, {"total", a.total}, {"fraction", a.fraction()}}.dump() << '\n';
  } else {
    std::ostringstream pct;
    pct.setf(std::ios::fixed);
    pct.precision(3);
    pct << 100.0 * a.fraction();
    out << "n = " << n << ": " << a.admissible << " of " << a.total << " standard tableaux are admissible (" << pct.str()
        << "%)\n";
  }
  return kExitOk;
}

// ---- render -------------------------------------------------------------------

int render_cmd(const Config& c, std::ostream& out) {
  const Format f = c.fmt();
  if (!c.coloring.empty()) {
    const Coloring coloring = parse_coloring(c.coloring);
    std::optional<Tableau> t;
    if (!c.tableau.empty()) t = parse_tableau(c.tableau);
    if (c.canonical) t = canonical_tableau(coloring.shape());
    if (t && c.up) t = column_reverse(*t);
    const Tableau* tp = t ? &*t : nullptr;
    if (f == Format::json) {
      Json j = to_json(coloring);
      if (tp) j["tableau"] = to_json(*tp);
      out << j.dump() << '\n';
    } else {
      out << (f == Format::latex ? render_latex(coloring, tp) : render_ascii(coloring, tp)) << '\n';
    }
    return kExitOk;
  }
  std::optional<Tableau> t;
  if (!c.tableau.empty()) {
    t = parse_tableau(c.tableau);
  } else if (c.canonical) {
    t = canonical_tableau(require_partition(c.shape, "--shape"));
  }
  if (t) {
    if (c.up) t = column_reverse(*t);
    out << render(*t, f) << '\n';
    return kExitOk;
  }
  const Partition p = require_partition(c.shape, "--shape");
  if (f == Format::json) {
    out << to_json(p).dump() << '\n';
  } else {
    out << (f == Format::latex ? render_latex(p) : render_ascii(p)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  if (const char* env = std::getenv("RSSHAPE_CACHE_DIR")) c.cache_dir = env;

  CLI::App app{"Robinson-Schensted shapes of conjugacy classes", "rsshape"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "Output format: text, json or latex");

  std::function<int(const Config&, std::ostream&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  int (*fn)(const Config&, std::ostream&)) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("--format", c.format, "Output format: text, json or latex");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto add_brute = [&](CLI::App* sub) {
    sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget", c.budget, "Largest class enumerated in full");
    sub->add_option("--seed", c.seed, "Seed for sampling");
    sub->add_option("--cache-dir", c.cache_dir, "Cache directory (also RSSHAPE_CACHE_DIR)");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--search-budget", c.search_budget, "Colorings examined per shape before giving up");
  };

  CLI::App* rs = app.add_subcommand("rs", "Robinson-Schensted correspondence");
  rs->require_subcommand(1);
  leaf(rs, "apply", "Insertion and recording tableaux of a permutation", rs_apply)
      ->add_option("--sigma", c.sigma, "Permutation, one-line or cycle notation")
      ->required();
  {
    CLI::App* sub = leaf(rs, "invert", "Permutation of a pair of tableaux", rs_invert);
    sub->add_option("--p", c.p, "Insertion tableau, rows like 1,3,7/2,4/5/6")->required();
    sub->add_option("--q", c.q, "Recording tableau")->required();
  }
  leaf(rs, "shape", "Shape of a permutation", rs_shape_cmd)->add_option("--sigma", c.sigma)->required();
  leaf(rs, "trace", "Every intermediate pair of tableaux", rs_trace)->add_option("--sigma", c.sigma)->required();

  {
    CLI::App* sub = leaf(&app, "salpha", "Set of shapes of a conjugacy class", salpha);
    sub->add_option("--alpha", c.alpha, "Cycle type")->required();
    sub->add_option("--method", c.method, "brute or construct");
    sub->add_option("--sample", c.sample, "Sample this many elements when the class is over budget");
    sub->add_flag("--histogram", c.histogram, "Count permutations per shape");
    add_brute(sub);
  }
  leaf(&app, "balpha", "Shapes inside the bounding box", balpha)->add_option("--alpha", c.alpha)->required();

  CLI::App* color = app.add_subcommand("color", "Colorings and their permutations");
  color->require_subcommand(1);
  {
    CLI::App* sub = leaf(color, "construct", "Explicit witness for a shape", color_construct);
    sub->add_option("--alpha", c.alpha)->required();
    sub->add_option("--shape", c.shape)->required();
    sub->add_option("--render", c.render_format, "ascii, latex or json");
  }
  {
    CLI::App* sub = leaf(color, "search", "Exhaustive coloring search", color_search);
    sub->add_option("--alpha", c.alpha)->required();
    sub->add_option("--shape", c.shape)->required();
    sub->add_option("--budget", c.search_budget, "Colorings examined before giving up");
    sub->add_flag("--count-all", c.count_all, "Count every coloring");
    sub->add_flag("--canonical-only", c.canonical_only, "Only try Q = T_lambda");
    sub->add_option("--render", c.render_format, "ascii, latex or json");
  }
  {
    CLI::App* sub = leaf(color, "validate", "Check a coloring", color_validate);
    sub->add_option("--alpha", c.alpha)->required();
    sub->add_option("--coloring", c.coloring, "Colors by row, like 2,1/2,1/1 or coloring JSON")->required();
    sub->add_option("--q", c.q, "Recording tableau (default T_lambda)");
    sub->add_option("--shape", c.shape);
    sub->add_option("--render", c.render_format, "ascii, latex or json");
  }

  CLI::App* verify = app.add_subcommand("verify", "Brute-force verification");
  verify->require_subcommand(1);
  for (auto [name, fn] : {std::pair{"theorem", verify_theorem_cmd}, std::pair{"containment", verify_containment_cmd}}) {
    CLI::App* sub = leaf(verify, name, std::string("Verify the ") + name + " claim for one n", fn);
    sub->add_option("--n", c.n)->required();
    add_brute(sub);
  }

  CLI::App* conj = app.add_subcommand("conjecture", "Conjecture checks up to a budget");
  conj->require_subcommand(1);
  for (auto [name, fn] : {std::pair{"strict", conjecture_strict}, std::pair{"coloring", conjecture_coloring},
                          std::pair{"pieri", conjecture_pieri}, std::pair{"involutions", conjecture_involutions},
                          std::pair{"fixed-points", conjecture_fixed_points}}) {
    CLI::App* sub = leaf(conj, name, std::string("Check the ") + name + " conjecture at size n", fn);
    sub->add_option("--n", c.n)->required();
    add_brute(sub);
    add_search(sub);
  }

  {
    CLI::App* sub = leaf(&app, "admissible", "Fraction of admissible standard tableaux", admissible_cmd);
    sub->add_option("--n", c.n)->required();
  }
  {
    CLI::App* sub = leaf(&app, "render", "Render a shape, tableau or coloring", render_cmd);
    sub->add_option("--shape", c.shape);
    sub->add_option("--tableau", c.tableau, "Rows like 1,3/2");
    sub->add_option("--coloring", c.coloring);
    sub->add_flag("--canonical", c.canonical, "Use T_lambda for the shape");
    sub->add_flag("--up", c.up, "Reverse every column");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (!action) throw Error("no command given");
    return action(c, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace rsshape::cli
