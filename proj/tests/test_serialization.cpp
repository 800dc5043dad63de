#include <cmath>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "gpc/rng.hpp"
#include "gpc/sampling.hpp"
#include "gpc/serialization.hpp"

namespace {

using gpc::GroupElement;
using gpc::GroupSpec;
using gpc::PCMatrix;
using nlohmann::json;

}  // namespace

TEST_CASE("group specs round-trip through json") {
  const std::vector<GroupSpec> specs = {
      GroupSpec::rplus(), GroupSpec::gl(3), GroupSpec::se2(), GroupSpec::se3(),
      GroupSpec::product({GroupSpec::rplus(), GroupSpec::se3()}),
      GroupSpec::rplus(1e-6)};
  for (const auto& spec : specs) {
    const GroupSpec back = gpc::group_spec_from_json(gpc::to_json(spec));
    CHECK(back == spec);
    CHECK(back.tolerance() == spec.tolerance());
  }
  // Default tolerance stays implicit on the wire.
  CHECK_FALSE(gpc::to_json(GroupSpec::rplus()).contains("tolerance"));
  CHECK(gpc::to_json(GroupSpec::rplus(1e-6)).contains("tolerance"));
}

TEST_CASE("group elements round-trip through json for every kind") {
  gpc::Rng rng = gpc::Rng::stream(91, 0, 0);
  const std::vector<GroupSpec> specs = {
      GroupSpec::rplus(), GroupSpec::gl(2), GroupSpec::se2(), GroupSpec::se3(),
      GroupSpec::product({GroupSpec::rplus(), GroupSpec::se2()})};
  for (const auto& spec : specs) {
    for (int t = 0; t < 20; ++t) {
      const GroupElement g = gpc::random_element(spec, rng);
      const GroupElement back = gpc::element_from_json(gpc::to_json(g), spec);
      CHECK(gpc::close(back, g, 1e-12));
    }
  }
}

TEST_CASE("malformed element documents raise parse errors") {
  const GroupSpec rplus = GroupSpec::rplus();
  CHECK_THROWS_AS(gpc::element_from_json(json::parse("{}"), rplus),
                  gpc::ParseError);
  CHECK_THROWS_AS(
      gpc::element_from_json(json::parse(R"({"kind":"gl"})"), rplus),
      gpc::ParseError);
  CHECK_THROWS_AS(
      gpc::element_from_json(json::parse(R"({"kind":"rplus","value":"x"})"),
                             rplus),
      gpc::ParseError);
  // Well-formed but not a group member: domain error, not parse error.
  CHECK_THROWS_AS(
      gpc::element_from_json(json::parse(R"({"kind":"rplus","value":-1})"),
                             rplus),
      gpc::NonPositiveInput);
  CHECK_THROWS_AS(gpc::group_spec_from_json(json::parse(R"({"kind":"zz"})")),
                  gpc::ParseError);
}

TEST_CASE("pc matrices round-trip and reject incomplete triangles") {
  gpc::Rng rng = gpc::Rng::stream(92, 0, 0);
  for (const auto& spec : {GroupSpec::rplus(), GroupSpec::se3()}) {
    const PCMatrix a = gpc::random_pc_matrix(spec, 4, rng);
    const PCMatrix back = gpc::pc_matrix_from_json(gpc::to_json(a));
    CHECK(gpc::matrix_distance(back, a) <= 1e-12);
  }

  json doc = gpc::to_json(gpc::PCMatrix(GroupSpec::rplus(), 3));
  json missing = doc;
  missing["entries"].erase(1);
  CHECK_THROWS_AS(gpc::pc_matrix_from_json(missing), gpc::ParseError);

  json duplicated = doc;
  duplicated["entries"][1] = duplicated["entries"][0];
  CHECK_THROWS_AS(gpc::pc_matrix_from_json(duplicated), gpc::ParseError);

  json lower = doc;
  lower["entries"][0]["i"] = 2;
  lower["entries"][0]["j"] = 1;
  CHECK_THROWS_AS(gpc::pc_matrix_from_json(lower), gpc::ParseError);
}

TEST_CASE("wire indices are one-based") {
  const PCMatrix a = gpc::PCMatrix(GroupSpec::rplus(), 3)
                         .with_entry(0, 1, GroupElement::rplus(2.0));
  const json doc = gpc::to_json(a);
  bool found = false;
  for (const auto& e : doc["entries"]) {
    if (e["i"] == 1 && e["j"] == 2) {
      found = true;
      CHECK(e["v"]["value"] == 2.0);
    }
    CHECK(e["i"].get<int>() >= 1);
  }
  CHECK(found);
}

TEST_CASE("gauges, decompositions and graphs round-trip") {
  gpc::Rng rng = gpc::Rng::stream(93, 0, 0);
  const GroupSpec spec = GroupSpec::se2();

  gpc::GaugeVector g{spec, {}};
  for (int i = 0; i < 4; ++i) {
    g.entries.push_back(gpc::random_element(spec, rng));
  }
  const gpc::GaugeVector g2 = gpc::gauge_from_json(gpc::to_json(g));
  REQUIRE(g2.entries.size() == g.entries.size());
  for (std::size_t k = 0; k < g.entries.size(); ++k) {
    CHECK(gpc::close(g2.entries[k], g.entries[k], 1e-12));
  }

  const PCMatrix a = gpc::random_pc_matrix(spec, 4, rng);
  const gpc::PhiDecomposition d = gpc::phi_n(a);
  const gpc::PhiDecomposition d2 =
      gpc::decomposition_from_json(gpc::to_json(d));
  CHECK(gpc::matrix_distance(d2.consistent_part, d.consistent_part) <= 1e-12);
  REQUIRE(d2.components.size() == d.components.size());
  for (const auto& [key, value] : d.components) {
    CHECK(gpc::close(d2.components.at(key), value, 1e-12));
  }
  CHECK(gpc::matrix_distance(gpc::phi_n_inverse(d2), a) <= 1e-8);

  const gpc::GraphPCMatrix graph(
      spec, 3,
      {{0, 1, gpc::random_element(spec, rng)},
       {1, 2, gpc::random_element(spec, rng)}});
  const gpc::GraphPCMatrix graph2 = gpc::graph_from_json(gpc::to_json(graph));
  CHECK(graph2.edges() == graph.edges());
  for (const auto& [i, j] : graph.edges()) {
    CHECK(gpc::close(graph2.edge_value(i, j), graph.edge_value(i, j), 1e-12));
  }
  CHECK(gpc::looks_like_graph(gpc::to_json(graph)));
  CHECK_FALSE(gpc::looks_like_graph(gpc::to_json(a)));
}

TEST_CASE("distance matrices and measures round-trip") {
  const gpc::DistanceMatrix k = gpc::DistanceMatrix::from_upper(
      3, {std::log(2.0), std::log(4.0), std::log(2.0)});
  const gpc::DistanceMatrix k2 = gpc::distance_from_json(gpc::to_json(k));
  CHECK((k2.matrix() - k.matrix()).cwiseAbs().maxCoeff() == 0.0);

  gpc::ProductMeasure m(GroupSpec::rplus(), 3,
                        gpc::LogNormalMeasure{0.5});
  m.set_entry(0, 2, gpc::LogNormalMeasure{0.125});
  const gpc::ProductMeasure m2 =
      gpc::product_measure_from_json(gpc::to_json(m));
  CHECK(m2.size() == 3);
  CHECK(m2.overrides().size() == 1);
  const PCMatrix s1 = gpc::sample_pc(m, 555);
  const PCMatrix s2 = gpc::sample_pc(m2, 555);
  CHECK(gpc::matrix_distance(s1, s2) <= 1e-15);
}

TEST_CASE("reports serialize with stable field names") {
  const gpc::MCEstimate e{0.25, 0.01, 1000, 998.5};
  const json j = gpc::to_json(e);
  CHECK(j["estimate"] == 0.25);
  CHECK(j["stderr"] == 0.01);
  CHECK(j["samples"] == 1000);
  CHECK(j["ess"] == 998.5);

  const gpc::TriadReport r{0, 1, 2, 0.5, gpc::GroupElement::rplus(2.0)};
  const json jr = gpc::to_json(r);
  CHECK(jr["value"] == 0.5);
  // Triad indices are 1-based on the wire, like everything else.
  CHECK(jr["worst_triad"] == json::array({1, 2, 3}));
}
