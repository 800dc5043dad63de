#include "gpc/serialization.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gpc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

double number_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) fail(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) {
    fail(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) fail(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j, int rows, int cols,
                                 const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    fail(std::string(what) + " must be an array of " + std::to_string(rows) +
         " rows");
  }
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      fail(std::string(what) + " rows must have " + std::to_string(cols) +
           " numbers");
    }
    for (int c = 0; c < cols; ++c) {
      const json& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) fail(std::string(what) + " entries must be numbers");
      m(r, c) = v.get<double>();
    }
  }
  return m;
}

Eigen::VectorXd vector_from_json(const json& j, int size, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != size) {
    fail(std::string(what) + " must be an array of " + std::to_string(size) +
         " numbers");
  }
  Eigen::VectorXd v(size);
  for (int k = 0; k < size; ++k) {
    const json& x = j[static_cast<std::size_t>(k)];
    if (!x.is_number()) fail(std::string(what) + " entries must be numbers");
    v(k) = x.get<double>();
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupSpec
// ---------------------------------------------------------------------------

json to_json(const GroupSpec& spec) {
  json j;
  switch (spec.kind()) {
    case GroupKind::RPlus:
      j["kind"] = "rplus";
      break;
    case GroupKind::GL:
      j["kind"] = "gl";
      j["n"] = spec.gl_dim();
      break;
    case GroupKind::SE2:
      j["kind"] = "se2";
      break;
    case GroupKind::SE3:
      j["kind"] = "se3";
      break;
    case GroupKind::Product: {
      j["kind"] = "product";
      json factors = json::array();
      for (const auto& f : spec.factors()) factors.push_back(to_json(f));
      j["factors"] = std::move(factors);
      break;
    }
  }
  if (spec.tolerance() != kDefaultTolerance) j["tolerance"] = spec.tolerance();
  return j;
}

GroupSpec group_spec_from_json(const json& j) {
  if (!j.is_object()) fail("group spec must be an object");
  const std::string kind = string_field(j, "kind");
  double tolerance = kDefaultTolerance;
  if (j.contains("tolerance")) {
    tolerance = number_field(j, "tolerance");
    if (!(tolerance > 0.0)) fail("tolerance must be positive");
  }
  if (kind == "rplus") return GroupSpec::rplus(tolerance);
  if (kind == "gl") return GroupSpec::gl(int_field(j, "n"), tolerance);
  if (kind == "se2") return GroupSpec::se2(tolerance);
  if (kind == "se3") return GroupSpec::se3(tolerance);
  if (kind == "product") {
    const json& factors = field(j, "factors");
    if (!factors.is_array() || factors.empty()) {
      fail("product spec requires a nonempty \"factors\" array");
    }
    std::vector<GroupSpec> parsed;
    parsed.reserve(factors.size());
    for (const auto& f : factors) parsed.push_back(group_spec_from_json(f));
    return GroupSpec::product(std::move(parsed), tolerance);
  }
  fail("unknown group kind \"" + kind + "\"");
}

// ---------------------------------------------------------------------------
// GroupElement
// ---------------------------------------------------------------------------

json to_json(const GroupElement& g) {
  json j;
  switch (g.kind()) {
    case GroupKind::RPlus:
      j["kind"] = "rplus";
      j["value"] = g.rplus_value();
      break;
    case GroupKind::GL:
      j["kind"] = "gl";
      j["n"] = g.spec().gl_dim();
      j["m"] = matrix_to_json(g.matrix());
      break;
    case GroupKind::SE2:
    case GroupKind::SE3: {
      j["kind"] = g.kind() == GroupKind::SE2 ? "se2" : "se3";
      j["r"] = matrix_to_json(g.motion().rotation);
      json t = json::array();
      for (int k = 0; k < g.motion().translation.size(); ++k) {
        t.push_back(g.motion().translation(k));
      }
      j["t"] = std::move(t);
      break;
    }
    case GroupKind::Product: {
      j["kind"] = "product";
      json parts = json::array();
      for (const auto& p : g.parts()) parts.push_back(to_json(p));
      j["parts"] = std::move(parts);
      break;
    }
  }
  return j;
}

GroupElement element_from_json(const json& j, const GroupSpec& spec) {
  if (!j.is_object()) fail("group element must be an object");
  const std::string kind = string_field(j, "kind");
  switch (spec.kind()) {
    case GroupKind::RPlus:
      if (kind != "rplus") fail("expected an rplus element, got " + kind);
      return GroupElement::rplus(number_field(j, "value"), spec);
    case GroupKind::GL: {
      if (kind != "gl") fail("expected a gl element, got " + kind);
      const int dim = int_field(j, "n");
      if (dim != spec.gl_dim()) {
        fail("gl element size does not match the group spec");
      }
      return GroupElement::gl(matrix_from_json(field(j, "m"), dim, dim, "\"m\""),
                              spec);
    }
    case GroupKind::SE2: {
      if (kind != "se2") fail("expected an se2 element, got " + kind);
      return GroupElement::se2(matrix_from_json(field(j, "r"), 2, 2, "\"r\""),
                               vector_from_json(field(j, "t"), 2, "\"t\""),
                               spec);
    }
    case GroupKind::SE3: {
      if (kind != "se3") fail("expected an se3 element, got " + kind);
      return GroupElement::se3(matrix_from_json(field(j, "r"), 3, 3, "\"r\""),
                               vector_from_json(field(j, "t"), 3, "\"t\""),
                               spec);
    }
    case GroupKind::Product: {
      if (kind != "product") fail("expected a product element, got " + kind);
      const json& parts = field(j, "parts");
      const auto& factors = spec.factors();
      if (!parts.is_array() || parts.size() != factors.size()) {
        fail("product element needs exactly " +
             std::to_string(factors.size()) + " parts");
      }
      std::vector<GroupElement> parsed;
      parsed.reserve(parts.size());
      for (std::size_t k = 0; k < parts.size(); ++k) {
        parsed.push_back(element_from_json(parts[k], factors[k]));
      }
      return GroupElement::product(std::move(parsed), spec);
    }
  }
  fail("unknown group spec kind");
}

// ---------------------------------------------------------------------------
// PCMatrix
// ---------------------------------------------------------------------------

json to_json(const PCMatrix& a) {
  json j;
  j["group"] = to_json(a.spec());
  j["n"] = a.size();
  json entries = json::array();
  for (int i = 0; i < a.size(); ++i) {
    for (int k = i + 1; k < a.size(); ++k) {
      entries.push_back(
          json{{"i", i + 1}, {"j", k + 1}, {"v", to_json(a.upper(i, k))}});
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

PCMatrix pc_matrix_from_json(const json& j) {
  if (!j.is_object()) fail("matrix document must be an object");
  const GroupSpec spec = group_spec_from_json(field(j, "group"));
  const int n = int_field(j, "n");
  if (n < 2) fail("matrix requires n >= 2");
  const json& entries = field(j, "entries");
  if (!entries.is_array()) fail("\"entries\" must be an array");
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<GroupElement> upper(expected, identity(spec));
  std::vector<bool> seen(expected, false);
  for (const auto& e : entries) {
    const int i = int_field(e, "i");
    const int k = int_field(e, "j");
    if (!(1 <= i && i < k && k <= n)) {
      fail("entry indices must satisfy 1 <= i < j <= n");
    }
    const std::size_t idx =
        static_cast<std::size_t>(i - 1) * (2 * n - i) / 2 +
        static_cast<std::size_t>(k - i - 1);
    if (seen[idx]) {
      fail("duplicate entry (" + std::to_string(i) + ", " + std::to_string(k) +
           ")");
    }
    seen[idx] = true;
    upper[idx] = element_from_json(field(e, "v"), spec);
  }
  for (std::size_t idx = 0; idx < expected; ++idx) {
    if (!seen[idx]) fail("entries must list the whole strict upper triangle");
  }
  return PCMatrix::from_upper(spec, n, std::move(upper));
}

// ---------------------------------------------------------------------------
// GaugeVector
// ---------------------------------------------------------------------------

json to_json(const GaugeVector& g) {
  json j;
  j["group"] = to_json(g.spec);
  json entries = json::array();
  for (const auto& e : g.entries) entries.push_back(to_json(e));
  j["entries"] = std::move(entries);
  return j;
}

GaugeVector gauge_from_json(const json& j) {
  if (!j.is_object()) fail("gauge document must be an object");
  GaugeVector g{group_spec_from_json(field(j, "group")), {}};
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.empty()) {
    fail("\"entries\" must be a nonempty array");
  }
  g.entries.reserve(entries.size());
  for (const auto& e : entries) {
    g.entries.push_back(element_from_json(e, g.spec));
  }
  return g;
}

// ---------------------------------------------------------------------------
// PhiDecomposition
// ---------------------------------------------------------------------------

json to_json(const PhiDecomposition& d) {
  json j;
  j["consistent"] = to_json(d.consistent_part);
  json components = json::array();
  for (const auto& [key, value] : d.components) {
    components.push_back(json{{"i", key.first + 1},
                              {"j", key.second + 1},
                              {"v", to_json(value)}});
  }
  j["components"] = std::move(components);
  return j;
}

PhiDecomposition decomposition_from_json(const json& j) {
  if (!j.is_object()) fail("decomposition document must be an object");
  PhiDecomposition d{pc_matrix_from_json(field(j, "consistent")), {}};
  const json& components = field(j, "components");
  if (!components.is_array()) fail("\"components\" must be an array");
  for (const auto& c : components) {
    const int i = int_field(c, "i");
    const int k = int_field(c, "j");
    if (!(1 <= i && i + 2 <= k && k <= d.consistent_part.size())) {
      fail("component indices must satisfy 1 <= i, i + 2 <= j <= n");
    }
    const auto key = std::make_pair(i - 1, k - 1);
    if (d.components.count(key) > 0) {
      fail("duplicate component (" + std::to_string(i) + ", " +
           std::to_string(k) + ")");
    }
    d.components.emplace(key,
                         element_from_json(field(c, "v"),
                                           d.consistent_part.spec()));
  }
  return d;
}

// ---------------------------------------------------------------------------
// GraphPCMatrix
// ---------------------------------------------------------------------------

json to_json(const GraphPCMatrix& a) {
  json j;
  j["group"] = to_json(a.spec());
  j["n"] = a.size();
  json edges = json::array();
  for (const auto& [i, k] : a.edges()) {
    edges.push_back(json{
        {"i", i + 1}, {"j", k + 1}, {"v", to_json(a.edge_value(i, k))}});
  }
  j["edges"] = std::move(edges);
  return j;
}

GraphPCMatrix graph_from_json(const json& j) {
  if (!j.is_object()) fail("graph document must be an object");
  const GroupSpec spec = group_spec_from_json(field(j, "group"));
  const int n = int_field(j, "n");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) fail("\"edges\" must be an array");
  std::vector<GraphEdge> parsed;
  parsed.reserve(edges.size());
  for (const auto& e : edges) {
    const int i = int_field(e, "i");
    const int k = int_field(e, "j");
    if (!(1 <= i && i <= n && 1 <= k && k <= n)) {
      fail("edge endpoints must lie in 1..n");
    }
    parsed.push_back(
        GraphEdge{i - 1, k - 1, element_from_json(field(e, "v"), spec)});
  }
  return GraphPCMatrix(spec, n, parsed);
}

// ---------------------------------------------------------------------------
// DistanceMatrix
// ---------------------------------------------------------------------------

json to_json(const DistanceMatrix& k) {
  json j;
  j["n"] = k.size();
  j["k"] = matrix_to_json(k.matrix());
  return j;
}

DistanceMatrix distance_from_json(const json& j) {
  if (!j.is_object()) fail("distance document must be an object");
  const int n = int_field(j, "n");
  if (n < 2) fail("distance matrix requires n >= 2");
  return DistanceMatrix::from_matrix(
      matrix_from_json(field(j, "k"), n, n, "\"k\""));
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

json to_json(const TriadReport& r) {
  return json{{"value", r.value},
              {"worst_triad", {r.i + 1, r.j + 1, r.k + 1}},
              {"defect", to_json(r.defect)}};
}

json to_json(const MCEstimate& e) {
  return json{{"estimate", e.value},
              {"stderr", e.std_error},
              {"samples", e.samples},
              {"ess", e.ess}};
}

// ---------------------------------------------------------------------------
// Measures
// ---------------------------------------------------------------------------

json to_json(const EntryMeasure& m) {
  return std::visit(
      [](const auto& measure) -> json {
        using T = std::decay_t<decltype(measure)>;
        if constexpr (std::is_same_v<T, LogNormalMeasure>) {
          return json{{"kind", "lognormal"}, {"sigma", measure.sigma}};
        } else if constexpr (std::is_same_v<T, UniformRotationMeasure>) {
          return json{{"kind", "uniform_rotation"},
                      {"sigma_t", measure.sigma_t}};
        } else {
          return json{{"kind", "matrix_gaussian"}, {"sigma", measure.sigma}};
        }
      },
      m);
}

EntryMeasure entry_measure_from_json(const json& j) {
  if (!j.is_object()) fail("measure must be an object");
  const std::string kind = string_field(j, "kind");
  if (kind == "lognormal") {
    return LogNormalMeasure{number_field(j, "sigma")};
  }
  if (kind == "uniform_rotation") {
    return UniformRotationMeasure{number_field(j, "sigma_t")};
  }
  if (kind == "matrix_gaussian") {
    return MatrixGaussianMeasure{number_field(j, "sigma")};
  }
  fail("unknown measure kind \"" + kind + "\"");
}

json to_json(const ProductMeasure& m) {
  json j;
  j["group"] = to_json(m.spec());
  j["n"] = m.size();
  j["measure"] = to_json(m.default_measure());
  if (!m.overrides().empty()) {
    json entries = json::array();
    for (const auto& [key, measure] : m.overrides()) {
      entries.push_back(json{{"i", key.first + 1},
                             {"j", key.second + 1},
                             {"measure", to_json(measure)}});
    }
    j["entries"] = std::move(entries);
  }
  return j;
}

ProductMeasure product_measure_from_json(const json& j) {
  if (!j.is_object()) fail("measure document must be an object");
  const GroupSpec spec = group_spec_from_json(field(j, "group"));
  const int n = int_field(j, "n");
  ProductMeasure m(spec, n, entry_measure_from_json(field(j, "measure")));
  if (j.contains("entries")) {
    const json& entries = field(j, "entries");
    if (!entries.is_array()) fail("\"entries\" must be an array");
    for (const auto& e : entries) {
      const int i = int_field(e, "i");
      const int k = int_field(e, "j");
      if (!(1 <= i && i < k && k <= n)) {
        fail("measure entry indices must satisfy 1 <= i < j <= n");
      }
      m.set_entry(i - 1, k - 1,
                  entry_measure_from_json(field(e, "measure")));
    }
  }
  return m;
}

bool looks_like_graph(const json& j) {
  return j.is_object() && j.contains("edges") && !j.contains("entries");
}

}  // namespace gpc
