#include <cmath>
#include <vector>

#include <doctest.h>

#include "gpc/gauge.hpp"
#include "gpc/rng.hpp"
#include "gpc/sampling.hpp"

namespace {

using gpc::GaugeVector;
using gpc::GroupElement;
using gpc::GroupSpec;
using gpc::PCMatrix;

PCMatrix rplus_matrix(int n, const std::vector<double>& upper) {
  std::vector<GroupElement> entries;
  entries.reserve(upper.size());
  for (double v : upper) entries.push_back(GroupElement::rplus(v));
  return PCMatrix::from_upper(GroupSpec::rplus(), n, std::move(entries));
}

GaugeVector random_gauge(const GroupSpec& spec, int n, gpc::Rng& rng) {
  GaugeVector g{spec, {}};
  for (int i = 0; i < n; ++i) g.entries.push_back(gpc::random_element(spec, rng));
  return g;
}

}  // namespace

TEST_CASE("gauge group law: compose, inverse, identity") {
  gpc::Rng rng = gpc::Rng::stream(31, 0, 0);
  const GroupSpec spec = GroupSpec::se2();
  const GaugeVector g = random_gauge(spec, 4, rng);
  const GaugeVector h = random_gauge(spec, 4, rng);
  const GaugeVector gh = gpc::gauge_compose(g, h);
  for (int i = 0; i < 4; ++i) {
    CHECK(gpc::close(gh.entries[i], gpc::compose(g.entries[i], h.entries[i]),
                     1e-12));
  }
  const GaugeVector e = gpc::gauge_compose(g, gpc::gauge_inverse(g));
  for (const auto& x : e.entries) CHECK(gpc::deviation(x) <= 1e-9);
}

TEST_CASE("left, right and adjoint actions compose as actions") {
  gpc::Rng rng = gpc::Rng::stream(32, 0, 0);
  for (const auto& spec : {GroupSpec::rplus(), GroupSpec::gl(2)}) {
    const PCMatrix a = gpc::random_pc_matrix(spec, 4, rng);
    const GaugeVector g = random_gauge(spec, 4, rng);
    const GaugeVector h = random_gauge(spec, 4, rng);

    // Action axiom: (gh).a = g.(h.a) for each of the three actions.
    CHECK(gpc::matrix_distance(gpc::left_action(gpc::gauge_compose(g, h), a),
                               gpc::left_action(g, gpc::left_action(h, a))) <=
          1e-8);
    // The right action composes contravariantly: a.(gh) = (a.g).h applied
    // through our g-first signature means the outer gauge is h.
    CHECK(gpc::matrix_distance(gpc::right_action(gpc::gauge_compose(g, h), a),
                               gpc::right_action(h, gpc::right_action(g, a))) <=
          1e-8);
    CHECK(gpc::matrix_distance(gpc::ad_action(gpc::gauge_compose(g, h), a),
                               gpc::ad_action(g, gpc::ad_action(h, a))) <=
          1e-8);

    // Ad is left then inverse-right.
    CHECK(gpc::matrix_distance(
              gpc::ad_action(g, a),
              gpc::right_action(gpc::gauge_inverse(g), gpc::left_action(g, a))) <=
          1e-9);

    // Identity gauge fixes everything.
    CHECK(gpc::matrix_distance(
              gpc::ad_action(gpc::identity_gauge(spec, 4), a), a) <= 1e-12);

    // coad is ad of the inverse.
    CHECK(gpc::matrix_distance(gpc::coad_action(g, a),
                               gpc::ad_action(gpc::gauge_inverse(g), a)) <=
          1e-12);
  }
}

TEST_CASE("adjoint action preserves consistency, left action does not") {
  gpc::Rng rng = gpc::Rng::stream(33, 0, 0);
  int left_breaks = 0;
  for (int t = 0; t < 20; ++t) {
    const PCMatrix a = gpc::random_consistent(GroupSpec::rplus(), 4, rng);
    const GaugeVector g = random_gauge(GroupSpec::rplus(), 4, rng);
    CHECK(gpc::is_covariant_consistent(gpc::ad_action(g, a), 1e-7));
    if (!gpc::is_covariant_consistent(gpc::left_action(g, a), 1e-7)) {
      ++left_breaks;
    }
  }
  CHECK(left_breaks >= 19);
}

TEST_CASE("orbit of the identity is exactly the consistent matrices") {
  gpc::Rng rng = gpc::Rng::stream(34, 0, 0);
  for (const auto& spec : {GroupSpec::rplus(), GroupSpec::se3()}) {
    for (int t = 0; t < 30; ++t) {
      CHECK(gpc::orbit_of_identity_contains(
          gpc::random_consistent(spec, 4, rng)));
      CHECK_FALSE(gpc::orbit_of_identity_contains(
          gpc::random_inconsistent(spec, 4, rng)));
    }
  }
}

TEST_CASE("3x3 left consistentization determines the middle gauge") {
  const double lambda = 2.0;
  const int k = 3;
  // Layered cake: a_12 = a_23 = lambda, a_13 = lambda^-k.
  const PCMatrix cake =
      rplus_matrix(3, {lambda, std::pow(lambda, -k), lambda});
  const auto r = gpc::left_consistentize_3(cake);
  CHECK(r.determined.rplus_value() == std::pow(lambda, -2 - k));
  CHECK(r.gauge.entries[0].rplus_value() == 1.0);
  CHECK(r.gauge.entries[2].rplus_value() == 1.0);
  CHECK(gpc::is_covariant_consistent(r.consistent, 1e-12));
  CHECK(gpc::matrix_distance(r.consistent,
                             gpc::left_action(r.gauge, cake)) == 0.0);

  // The family: the first coordinate is free, the last is inert.
  gpc::Rng rng = gpc::Rng::stream(35, 0, 0);
  for (int t = 0; t < 10; ++t) {
    const GroupElement first = gpc::random_element(GroupSpec::rplus(), rng);
    const GroupElement last = gpc::random_element(GroupSpec::rplus(), rng);
    const GaugeVector member = r.family(first, last);
    CHECK(gpc::is_covariant_consistent(gpc::left_action(member, cake), 1e-9));
  }
}

TEST_CASE("3x3 consistentization works over a noncommutative group") {
  gpc::Rng rng = gpc::Rng::stream(36, 0, 0);
  for (int t = 0; t < 25; ++t) {
    const PCMatrix a = gpc::random_pc_matrix(GroupSpec::se3(), 3, rng);
    const auto r = gpc::left_consistentize_3(a);
    CHECK(gpc::is_covariant_consistent(r.consistent, 1e-8));
  }
  CHECK_THROWS_AS(
      gpc::left_consistentize_3(gpc::PCMatrix(GroupSpec::rplus(), 4)),
      gpc::DimensionError);
}

TEST_CASE("4x4 left-gauge consistentization is obstructed generically") {
  gpc::Rng rng = gpc::Rng::stream(37, 0, 0);
  for (int t = 0; t < 50; ++t) {
    const PCMatrix a = gpc::random_pc_matrix(GroupSpec::rplus(), 4, rng);
    CHECK_FALSE(gpc::left_orbit_obstruction(a));

    // Forcing a_14 = a_13 a_32 a_24 (1-based) removes the obstruction.
    const GroupElement forced = gpc::compose(
        gpc::compose(a.entry(0, 2), a.entry(2, 1)), a.entry(1, 3));
    const PCMatrix fixed = a.with_entry(0, 3, forced);
    CHECK(gpc::left_orbit_obstruction(fixed));
  }
}

TEST_CASE("obstruction scans every window of four consecutive items") {
  gpc::Rng rng = gpc::Rng::stream(38, 0, 0);
  PCMatrix a = gpc::random_pc_matrix(GroupSpec::rplus(), 5, rng);
  for (int s = 0; s + 3 < 5; ++s) {
    const GroupElement forced = gpc::compose(
        gpc::compose(a.entry(s, s + 2), a.entry(s + 2, s + 1)),
        a.entry(s + 1, s + 3));
    a = a.with_entry(s, s + 3, forced);
  }
  CHECK(gpc::left_orbit_obstruction(a));
  // Breaking one window breaks the whole test.
  const PCMatrix broken = a.with_entry(
      1, 4, gpc::compose(a.entry(1, 4), GroupElement::rplus(std::exp(1.0))));
  CHECK_FALSE(gpc::left_orbit_obstruction(broken));
}

TEST_CASE("splitting map separates chain data from loop components") {
  gpc::Rng rng = gpc::Rng::stream(39, 0, 0);
  for (const auto& spec : {GroupSpec::rplus(), GroupSpec::gl(2)}) {
    for (int n = 3; n <= 6; ++n) {
      const PCMatrix a = gpc::random_pc_matrix(spec, n, rng);
      const gpc::PhiDecomposition d = gpc::phi_n(a);
      CHECK(static_cast<int>(d.components.size()) ==
            (n - 1) * (n - 2) / 2);
      CHECK(gpc::is_covariant_consistent(d.consistent_part, 1e-8));
      // Chain part agrees with a on the superdiagonal.
      for (int i = 0; i + 1 < n; ++i) {
        CHECK(gpc::close(d.consistent_part.upper(i, i + 1), a.upper(i, i + 1),
                         1e-12));
      }
      const PCMatrix back = gpc::phi_n_inverse(d);
      CHECK(gpc::matrix_distance(back, a) <= 1e-9);
    }
  }
}

TEST_CASE("components vanish exactly on consistent matrices") {
  gpc::Rng rng = gpc::Rng::stream(40, 0, 0);
  const PCMatrix a = gpc::random_consistent(GroupSpec::gl(2), 5, rng);
  const gpc::PhiDecomposition d = gpc::phi_n(a);
  for (const auto& [key, c] : d.components) {
    CHECK(gpc::deviation(c) <= 1e-7);
  }
}

TEST_CASE("splitting intertwines the adjoint action componentwise") {
  gpc::Rng rng = gpc::Rng::stream(41, 0, 0);
  const GroupSpec spec = GroupSpec::gl(2);
  const PCMatrix a = gpc::random_pc_matrix(spec, 5, rng);
  const GaugeVector g = random_gauge(spec, 5, rng);
  const gpc::PhiDecomposition direct = gpc::phi_n(gpc::ad_action(g, a));
  const gpc::PhiDecomposition mapped =
      gpc::component_ad_transform(g, gpc::phi_n(a));
  CHECK(gpc::matrix_distance(direct.consistent_part, mapped.consistent_part) <=
        1e-8);
  for (const auto& [key, c] : direct.components) {
    CHECK(gpc::close(c, mapped.components.at(key), 1e-7));
  }
}

TEST_CASE("phi_n_inverse validates its input") {
  gpc::Rng rng = gpc::Rng::stream(42, 0, 0);
  const PCMatrix a = gpc::random_pc_matrix(GroupSpec::rplus(), 4, rng);
  gpc::PhiDecomposition d = gpc::phi_n(a);
  gpc::PhiDecomposition missing = d;
  missing.components.erase({0, 2});
  CHECK_THROWS_AS(gpc::phi_n_inverse(missing), gpc::MalformedDecomposition);
  gpc::PhiDecomposition tainted = d;
  tainted.consistent_part = gpc::random_inconsistent(GroupSpec::rplus(), 4, rng);
  CHECK_THROWS_AS(gpc::phi_n_inverse(tainted), gpc::MalformedDecomposition);
}
