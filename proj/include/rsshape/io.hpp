#pragma once

#include <string>

#include "json.hpp"
#include "rsshape/coloring.hpp"
#include "rsshape/partition.hpp"
#include "rsshape/permutation.hpp"
#include "rsshape/shape_sets.hpp"
#include "rsshape/tableau.hpp"

namespace rsshape {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);             // {"parts":[...]}
Json to_json(const Permutation& sigma);       // {"n":7,"oneLine":[...]}
Json to_json(const Tableau& t);               // {"shape":[...],"rows":[[...],...]}
Json to_json(const Coloring& c);              // {"shape":[...],"colors":[[row,col,color],...]}
Json to_json(const ColoringOutcome& outcome);
Json to_json(const ShapeSetReport& report);   // elapsed time is left out

Partition partition_from_json(const Json& j);
Tableau tableau_from_json(const Json& j);
Coloring coloring_from_json(const Json& j);
ShapeSetReport report_from_json(const Json& j);

/// Bare list of parts, e.g. [3,2,1,1].
Json parts_json(const Partition& p);
Json partition_list_json(const std::vector<Partition>& list);

std::string outcome_kind_name(OutcomeKind kind);
std::string search_status_name(SearchStatus status);

/// One row per line, cells left aligned in columns of equal width, no
/// trailing spaces and no final newline. Throws on an empty tableau.
std::string render_ascii(const Tableau& t);
std::string render_latex(const Tableau& t);

/// Each cell as entry:color, or just the color when `t` is null.
std::string render_ascii(const Coloring& c, const Tableau* t = nullptr);
std::string render_latex(const Coloring& c, const Tableau* t = nullptr);

/// Young diagram of boxes.
std::string render_ascii(const Partition& p);
std::string render_latex(const Partition& p);

}  // namespace rsshape
