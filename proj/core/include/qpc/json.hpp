#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "qpc/collapse.hpp"
#include "qpc/ehrhart.hpp"
#include "qpc/geometry.hpp"
#include "qpc/markov.hpp"
#include "qpc/mutation.hpp"
#include "qpc/singularity.hpp"

namespace qpc {

using Json = nlohmann::ordered_json;

// Polygon interchange: {"vertices": [["p/q","r/s"], ...]}, coordinates as
// lowest-terms rational strings ("/1" omitted). Parsing is strict.
Json polygon_json(const Polygon& polygon);
Json polygon_json(const FanoPolygon& polygon);
Polygon parse_polygon(const Json& j);

// MutationData: {"w": ["a","b"], "f": ["p","q"], "m": n}
Json mutation_json(const MutationData& data);
MutationData parse_mutation(const Json& j);

Json quasi_polynomial_json(const QuasiPolynomial& qp);
Json series_json(const EhrhartSeries& series);
Json content_json(const SingularityContent& content);
Json collapse_report_json(const CollapseReport& report);
Json graph_json(const MutationGraph& graph);
Json markov_report_json(const MarkovReport& report);

}  // namespace qpc
