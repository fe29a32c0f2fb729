#include "rsshape/io.hpp"

#include <algorithm>
#include <sstream>

#include "rsshape/error.hpp"

namespace rsshape {

Json parts_json(const Partition& p) { return Json(p.parts()); }

Json partition_list_json(const std::vector<Partition>& list) {
  Json out = Json::array();
  for (const auto& p : list) out.push_back(parts_json(p));
  return out;
}

Json to_json(const Partition& p) { return Json{{"parts", p.parts()}}; }

Json to_json(const Permutation& sigma) { return Json{{"n", sigma.size()}, {"oneLine", sigma.one_line()}}; }

Json to_json(const Tableau& t) { return Json{{"shape", t.shape().parts()}, {"rows", t.rows()}}; }

Json to_json(const Coloring& c) {
  Json cells = Json::array();
  for (std::size_t i = 0; i < c.rows().size(); ++i) {
    for (std::size_t j = 0; j < c.rows()[i].size(); ++j) {
      cells.push_back(Json::array({static_cast<int>(i) + 1, static_cast<int>(j) + 1, c.rows()[i][j]}));
    }
  }
  return Json{{"shape", c.shape().parts()}, {"colors", cells}};
}

std::string outcome_kind_name(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::coloring:
      return "coloring";
    case OutcomeKind::explicit_permutation:
      return "explicit-permutation";
    case OutcomeKind::unattainable:
      return "unattainable";
  }
  return "unknown";
}

std::string search_status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::absent:
      return "absent";
    case SearchStatus::budget_exhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

Json to_json(const ColoringOutcome& outcome) {
  Json j{{"kind", outcome_kind_name(outcome.kind)}, {"construction", outcome.construction}};
  if (outcome.kind == OutcomeKind::unattainable) return j;
  if (outcome.coloring) j["coloring"] = to_json(*outcome.coloring);
  j["Q"] = to_json(outcome.q);
  j["sigma"] = to_json(outcome.sigma);
  j["sigmaCycles"] = format_cycles(outcome.sigma);
  j["P"] = to_json(outcome.witness_p);
  return j;
}

Json to_json(const ShapeSetReport& r) {
  Json j{{"alpha", r.alpha.parts()},
         {"method", method_name(r.method)},
         {"classSize", r.class_size},
         {"examined", r.examined},
         {"lowerBound", r.lower_bound},
         {"bAlpha", partition_list_json(r.b_alpha)},
         {"sAlpha", partition_list_json(r.s_alpha)},
         {"missing", partition_list_json(r.missing)},
         {"outsideBox", partition_list_json(r.outside_box)}};
  if (!r.histogram.empty()) {
    Json h = Json::array();
    for (const auto& [shape, count] : r.histogram) h.push_back(Json{{"shape", shape.parts()}, {"count", count}});
    j["histogram"] = h;
  }
  return j;
}

namespace {

std::vector<Partition> partitions_from_json(const Json& j) {
  std::vector<Partition> out;
  for (const auto& p : j) out.emplace_back(p.get<std::vector<int>>());
  return out;
}

}  // namespace

Partition partition_from_json(const Json& j) {
  if (j.is_array()) return Partition(j.get<std::vector<int>>());
  return Partition(j.at("parts").get<std::vector<int>>());
}

Tableau tableau_from_json(const Json& j) {
  Tableau t(j.at("rows").get<std::vector<std::vector<int>>>());
  if (j.contains("shape") && t.shape() != Partition(j.at("shape").get<std::vector<int>>())) {
    throw Error("tableau rows do not match the stated shape");
  }
  return t;
}

Coloring coloring_from_json(const Json& j) {
  const Partition shape(j.at("shape").get<std::vector<int>>());
  std::vector<std::vector<int>> rows;
  for (int len : shape.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
  for (const auto& cell : j.at("colors")) {
    const int r = cell.at(0).get<int>();
    const int c = cell.at(1).get<int>();
    if (r < 1 || r > shape.length() || c < 1 || c > shape.part(r)) throw Error("coloring cell outside the shape");
    rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = cell.at(2).get<int>();
  }
  for (const auto& row : rows) {
    if (std::find(row.begin(), row.end(), 0) != row.end()) throw Error("coloring leaves a cell uncolored");
  }
  return Coloring(std::move(rows));
}

ShapeSetReport report_from_json(const Json& j) {
  ShapeSetReport r;
  r.alpha = Partition(j.at("alpha").get<std::vector<int>>());
  const std::string method = j.at("method").get<std::string>();
  if (method == "brute-force") {
    r.method = Method::brute_force;
  } else if (method == "constructive") {
    r.method = Method::constructive;
  } else if (method == "sampled") {
    r.method = Method::sampled;
  } else {
    r.method = Method::cached;
  }
  r.class_size = j.at("classSize").get<std::uint64_t>();
  r.examined = j.at("examined").get<std::uint64_t>();
  r.lower_bound = j.at("lowerBound").get<bool>();
  r.b_alpha = partitions_from_json(j.at("bAlpha"));
  r.s_alpha = partitions_from_json(j.at("sAlpha"));
  r.missing = partitions_from_json(j.at("missing"));
  r.outside_box = partitions_from_json(j.at("outsideBox"));
  if (j.contains("histogram")) {
    for (const auto& h : j.at("histogram")) {
      r.histogram.emplace_back(Partition(h.at("shape").get<std::vector<int>>()), h.at("count").get<std::uint64_t>());
    }
  }
  return r;
}

namespace {

std::string grid(const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = 0;
  for (const auto& row : cells) {
    for (const auto& s : row) width = std::max(width, s.size());
  }
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += '\n';
    std::string line;
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      if (j > 0) line += ' ';
      line += cells[i][j];
      if (j + 1 < cells[i].size()) line.append(width - cells[i][j].size(), ' ');
    }
    out += line;
  }
  return out;
}

std::string ytableau(const std::vector<std::vector<std::string>>& cells) {
  std::string out = "\\begin{ytableau}\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      if (j > 0) out += " & ";
      out += cells[i][j];
    }
    out += i + 1 < cells.size() ? " \\\\\n" : "\n";
  }
  return out + "\\end{ytableau}";
}

const char* latex_color(int c) {
  static const char* palette[] = {"cyan!20", "red!20", "green!20", "yellow!30", "magenta!20", "orange!30", "gray!30"};
  return palette[static_cast<std::size_t>(c - 1) % (sizeof(palette) / sizeof(palette[0]))];
}

std::vector<std::vector<std::string>> coloring_cells(const Coloring& c, const Tableau* t, bool latex) {
  if (t && t->shape() != c.shape()) throw Error("coloring and tableau shapes differ");
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < c.rows().size(); ++i) {
    cells.emplace_back();
    for (std::size_t j = 0; j < c.rows()[i].size(); ++j) {
      const int color = c.rows()[i][j];
      const std::string entry = t ? std::to_string(t->rows()[i][j]) : std::string();
      if (latex) {
        cells.back().push_back(std::string("*(") + latex_color(color) + ")" + (entry.empty() ? "" : " " + entry));
      } else {
        cells.back().push_back(t ? entry + ":" + std::to_string(color) : std::to_string(color));
      }
    }
  }
  return cells;
}

std::vector<std::vector<std::string>> entry_cells(const Tableau& t) {
  if (t.rows().empty()) throw Error("cannot render an empty tableau");
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : t.rows()) {
    cells.emplace_back();
    for (int v : row) cells.back().push_back(std::to_string(v));
  }
  return cells;
}

}  // namespace

std::string render_ascii(const Tableau& t) { return grid(entry_cells(t)); }

std::string render_latex(const Tableau& t) { return ytableau(entry_cells(t)); }

std::string render_ascii(const Coloring& c, const Tableau* t) {
  if (c.rows().empty()) throw Error("cannot render an empty coloring");
  return grid(coloring_cells(c, t, false));
}

std::string render_latex(const Coloring& c, const Tableau* t) {
  if (c.rows().empty()) throw Error("cannot render an empty coloring");
  return ytableau(coloring_cells(c, t, true));
}

std::string render_ascii(const Partition& p) {
  if (p.empty()) throw Error("cannot render an empty partition");
  std::string out;
  for (int i = 1; i <= p.length(); ++i) {
    if (i > 1) out += '\n';
    for (int j = 0; j < p.part(i); ++j) out += j == 0 ? "#" : " #";
  }
  return out;
}

std::string render_latex(const Partition& p) {
  if (p.empty()) throw Error("cannot render an empty partition");
  std::string out = "\\ydiagram{";
  for (int i = 1; i <= p.length(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p.part(i));
  }
  return out + "}";
}

}  // namespace rsshape
