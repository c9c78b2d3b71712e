#pragma once

#include <json.hpp>

#include "bmg/axioms.hpp"
#include "bmg/canonical.hpp"
#include "bmg/enumeration.hpp"
#include "bmg/graph.hpp"
#include "bmg/structure.hpp"
#include "bmg/truncation.hpp"

namespace bmg {

using Json = nlohmann::ordered_json;

Json to_json(VertexSet s);
Json to_json(const AxiomReport& r);
Json to_json(const EquivalenceClasses& eq);
Json to_json(const OrientedDigraph& o);
Json to_json(const SymmetricComponents& sc);
Json to_json(const TruncationStep& s);
Json to_json(const Decomposition& d);
Json to_json(const ClassificationRow& r);

/// {"graph": "<n|...>", "colors": "colors: ... | ...", "n": .., "edges": [...]}
Json graph_summary(const ColoredDigraph& g);

}  // namespace bmg
