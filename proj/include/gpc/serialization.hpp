#pragma once

#include <json.hpp>

#include "gpc/distance.hpp"
#include "gpc/gauge.hpp"
#include "gpc/graph.hpp"
#include "gpc/inconsistency.hpp"
#include "gpc/pc_matrix.hpp"
#include "gpc/stochastic.hpp"

namespace gpc {

/// JSON wire formats. Indices are 1-based on the wire and 0-based in the
/// API; matrix files list exactly the strict upper triangle. All readers
/// throw ParseError on schema violations and let validating constructors
/// reject domain-invalid payloads.

nlohmann::json to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GroupElement& g);
GroupElement element_from_json(const nlohmann::json& j, const GroupSpec& spec);

nlohmann::json to_json(const PCMatrix& a);
PCMatrix pc_matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GaugeVector& g);
GaugeVector gauge_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PhiDecomposition& d);
PhiDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GraphPCMatrix& a);
GraphPCMatrix graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DistanceMatrix& k);
DistanceMatrix distance_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TriadReport& r);

nlohmann::json to_json(const MCEstimate& e);

nlohmann::json to_json(const EntryMeasure& m);
EntryMeasure entry_measure_from_json(const nlohmann::json& j);

/// Measure file: {"group": <spec>, "n": n, "measure": <EntryMeasure>,
/// "entries": [{"i":..,"j":..,"measure":..}, ...]} with optional overrides.
nlohmann::json to_json(const ProductMeasure& m);
ProductMeasure product_measure_from_json(const nlohmann::json& j);

/// True when the document looks like a graph file ("edges") rather than a
/// full matrix file ("entries").
bool looks_like_graph(const nlohmann::json& j);

}  // namespace gpc
