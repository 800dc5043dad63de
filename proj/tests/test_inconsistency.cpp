#include <cmath>
#include <vector>

#include <doctest.h>

#include "gpc/gauge.hpp"
#include "gpc/inconsistency.hpp"
#include "gpc/rng.hpp"
#include "gpc/sampling.hpp"

namespace {

using gpc::GroupElement;
using gpc::GroupSpec;
using gpc::IndicatorKind;
using gpc::PCMatrix;

PCMatrix rplus_matrix(int n, const std::vector<double>& upper) {
  std::vector<GroupElement> entries;
  entries.reserve(upper.size());
  for (double v : upper) entries.push_back(GroupElement::rplus(v));
  return PCMatrix::from_upper(GroupSpec::rplus(), n, std::move(entries));
}

}  // namespace

TEST_CASE("triad indicator reproduces the worked values") {
  CHECK(gpc::kii3(1.0, 2.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(gpc::kii3(10.0, 101.0, 10.0) ==
        doctest::Approx(1.0 - 100.0 / 101.0).epsilon(1e-12));
  CHECK(gpc::kii3(2.0, 8.0, 4.0) == 0.0);
  CHECK_THROWS_AS(gpc::kii3(0.0, 1.0, 1.0), gpc::NonPositiveInput);
}

TEST_CASE("ratio and exponential forms agree everywhere") {
  gpc::Rng rng = gpc::Rng::stream(51, 0, 0);
  for (int t = 0; t < 100000; ++t) {
    const double x = std::exp(2.0 * rng.normal());
    const double y = std::exp(2.0 * rng.normal());
    const double z = std::exp(2.0 * rng.normal());
    CHECK(std::abs(gpc::kii3(x, y, z) - gpc::kii3_exp(x, y, z)) <= 1e-12);
  }
}

TEST_CASE("triad indicator is symmetric in the two chain factors") {
  gpc::Rng rng = gpc::Rng::stream(52, 0, 0);
  for (int t = 0; t < 1000; ++t) {
    const double x = std::exp(rng.normal());
    const double y = std::exp(rng.normal());
    const double z = std::exp(rng.normal());
    CHECK(gpc::kii3(x, y, z) == doctest::Approx(gpc::kii3(z, y, x)));
  }
}

TEST_CASE("generic triad map reduces to the scalar indicator on rplus") {
  gpc::Rng rng = gpc::Rng::stream(53, 0, 0);
  for (int t = 0; t < 200; ++t) {
    const PCMatrix a = gpc::random_pc_matrix(GroupSpec::rplus(), 3, rng);
    const double scalar =
        gpc::kii3(a.upper(0, 1).rplus_value(), a.upper(0, 2).rplus_value(),
                  a.upper(1, 2).rplus_value());
    const gpc::TriadReport r = gpc::generic_triad_map(a, 0, 1, 2);
    CHECK(r.value == doctest::Approx(scalar).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gpc::generic_triad_map(rplus_matrix(3, {1, 1, 1}), 1, 0, 2),
                  gpc::IndexOutOfRange);
}

TEST_CASE("chain indicator vanishes exactly on consistent matrices") {
  gpc::Rng rng = gpc::Rng::stream(54, 0, 0);
  for (int t = 0; t < 50; ++t) {
    const PCMatrix good = gpc::random_consistent(GroupSpec::rplus(), 5, rng);
    CHECK(gpc::kii_n(good) <= 1e-12);
    const PCMatrix bad = gpc::random_inconsistent(GroupSpec::rplus(), 5, rng);
    CHECK(gpc::kii_n(bad) > 1e-6);
  }
  CHECK_THROWS_AS(gpc::kii_n(gpc::PCMatrix(GroupSpec::gl(2), 3)),
                  gpc::UnsupportedGroup);
}

TEST_CASE("worst-triad localization finds the planted defect") {
  // Start consistent, then damage entry (1, 3) only: every inconsistent
  // triad must involve the pair {1, 3}.
  gpc::Rng rng = gpc::Rng::stream(55, 0, 0);
  const PCMatrix base = gpc::random_consistent(GroupSpec::rplus(), 5, rng);
  const PCMatrix bad = base.with_entry(
      1, 3,
      gpc::compose(base.upper(1, 3), GroupElement::rplus(std::exp(2.0))));
  const auto [value, worst] = gpc::indicator_from_triads(bad);
  CHECK(value.value > 0.5);
  const bool involves_pair =
      (worst.i == 1 && (worst.j == 3 || worst.k == 3)) ||
      (worst.j == 1 && worst.k == 3);
  CHECK(involves_pair);
  CHECK(value.value == doctest::Approx(worst.value));
  CHECK(gpc::deviation(worst.defect) == doctest::Approx(2.0));
}

TEST_CASE("det indicator is blind exactly to determinant-one defects") {
  // a_12 = a_23 = I, a_13 = -I: the defect -I has |det| = 1.
  const GroupSpec spec = GroupSpec::gl(2);
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(2, 2);
  const PCMatrix counter = PCMatrix::from_upper(
      spec, 3,
      {GroupElement::gl(eye, spec), GroupElement::gl(-eye, spec),
       GroupElement::gl(eye, spec)});
  CHECK(gpc::ii_det(counter).value == 0.0);
  const auto [generic, worst] = gpc::indicator_from_triads(counter);
  CHECK(generic.value > 0.5);
  CHECK(generic.value ==
        doctest::Approx(1.0 - std::exp(-4.0 * std::sqrt(2.0))));

  // A determinant defect is caught by both.
  const PCMatrix scaled =
      counter.with_entry(0, 2, GroupElement::gl(2.0 * eye, spec));
  CHECK(gpc::ii_det(scaled).value > 0.5);
  CHECK_THROWS_AS(gpc::ii_det(rplus_matrix(3, {1, 2, 1})),
                  gpc::UnsupportedGroup);
}

TEST_CASE("indicator_value dispatches every kind") {
  const PCMatrix a = rplus_matrix(3, {1.0, 2.0, 1.0});
  CHECK(gpc::indicator_value(IndicatorKind::Generic, a) ==
        doctest::Approx(0.5));
  CHECK(gpc::indicator_value(IndicatorKind::KiiN, a) == doctest::Approx(0.5));
  CHECK(gpc::indicator_value(IndicatorKind::Zero, a) == 0.0);
  CHECK(gpc::indicator_value(IndicatorKind::FirstEntry, a) == 0.0);
  const PCMatrix b = rplus_matrix(3, {std::exp(1.0), 1.0, 1.0});
  CHECK(gpc::indicator_value(IndicatorKind::FirstEntry, b) ==
        doctest::Approx(1.0 - std::exp(-1.0)));
}

TEST_CASE("normalized indicators live in the unit interval") {
  gpc::Rng rng = gpc::Rng::stream(56, 0, 0);
  for (int t = 0; t < 100; ++t) {
    const PCMatrix a = gpc::random_pc_matrix(GroupSpec::rplus(), 4, rng, 3.0);
    const double v = gpc::indicator_value(IndicatorKind::Generic, a);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    const double k = gpc::kii_n(a);
    CHECK(k >= 0.0);
    CHECK(k <= 1.0);
  }
}

TEST_CASE("ad-invariance holds for the shipped indicators") {
  gpc::Rng rng = gpc::Rng::stream(57, 0, 0);
  const PCMatrix r3 = gpc::random_pc_matrix(GroupSpec::rplus(), 3, rng);
  const PCMatrix r5 = gpc::random_pc_matrix(GroupSpec::rplus(), 5, rng);
  const PCMatrix g4 = gpc::random_pc_matrix(GroupSpec::gl(2), 4, rng, 0.5);
  CHECK(gpc::check_ad_invariance(IndicatorKind::Generic, r3, 50));
  CHECK(gpc::check_ad_invariance(IndicatorKind::KiiN, r5, 50));
  CHECK(gpc::check_ad_invariance(IndicatorKind::Det, g4, 50));
  CHECK(gpc::check_ad_invariance(IndicatorKind::Zero, r5, 50));
}

TEST_CASE("the first-entry map is the promised gauge-dependent example") {
  gpc::Rng rng = gpc::Rng::stream(58, 0, 0);
  const PCMatrix a = gpc::random_pc_matrix(GroupSpec::rplus(), 4, rng);
  CHECK_FALSE(gpc::check_ad_invariance(IndicatorKind::FirstEntry, a, 50));
}

TEST_CASE("faithfulness report separates the generic and det indicators") {
  const auto generic = gpc::check_faithfulness(
      IndicatorKind::Generic, GroupSpec::gl(2), 3, 30);
  CHECK(generic.faithful);
  CHECK_FALSE(generic.violation.has_value());

  const auto det =
      gpc::check_faithfulness(IndicatorKind::Det, GroupSpec::gl(2), 3, 30);
  CHECK_FALSE(det.faithful);
  REQUIRE(det.violation.has_value());
  // The witness is genuinely inconsistent yet invisible to ii_det.
  CHECK_FALSE(gpc::is_covariant_consistent(*det.violation));
  CHECK(gpc::ii_det(*det.violation).value <= 1e-9);

  const auto rplus = gpc::check_faithfulness(
      IndicatorKind::Generic, GroupSpec::rplus(), 4, 30);
  CHECK(rplus.faithful);
}
