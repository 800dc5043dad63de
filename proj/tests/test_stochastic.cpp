#include <cmath>
#include <vector>

#include <doctest.h>

#include "gpc/inconsistency.hpp"
#include "gpc/stochastic.hpp"
#include "oracles.hpp"

namespace {

using gpc::GroupSpec;
using gpc::IndicatorKind;
using gpc::LogNormalMeasure;
using gpc::MCEstimate;
using gpc::PCMatrix;
using gpc::ProductMeasure;

ProductMeasure lognormal3(double sigma) {
  return ProductMeasure(GroupSpec::rplus(), 3, LogNormalMeasure{sigma});
}

}  // namespace

TEST_CASE("measure constructors validate their inputs") {
  CHECK_THROWS_AS(ProductMeasure(GroupSpec::rplus(), 1, LogNormalMeasure{1.0}),
                  gpc::DimensionError);
  CHECK_THROWS_AS(ProductMeasure(GroupSpec::rplus(), 3, LogNormalMeasure{0.0}),
                  gpc::Error);
  CHECK_THROWS_AS(
      ProductMeasure(GroupSpec::se2(), 3, LogNormalMeasure{1.0}),
      gpc::SpecMismatch);
  CHECK_THROWS_AS(
      ProductMeasure(GroupSpec::rplus(), 3, gpc::MatrixGaussianMeasure{1.0}),
      gpc::SpecMismatch);

  ProductMeasure m = lognormal3(0.5);
  CHECK_THROWS_AS(m.set_entry(1, 1, LogNormalMeasure{0.2}), gpc::Error);
  CHECK_THROWS_AS(m.set_entry(0, 3, LogNormalMeasure{0.2}),
                  gpc::IndexOutOfRange);
  m.set_entry(0, 2, LogNormalMeasure{0.01});
  CHECK(m.overrides().size() == 1);
}

TEST_CASE("sampling is reproducible and order-independent per entry") {
  const ProductMeasure m = lognormal3(0.7);
  const PCMatrix a = gpc::sample_pc(m, 12345);
  const PCMatrix b = gpc::sample_pc(m, 12345);
  CHECK(gpc::matrix_distance(a, b) <= 1e-15);
  const PCMatrix c = gpc::sample_pc(m, 12346);
  CHECK(gpc::matrix_distance(a, c) > 0.0);

  // Overriding one entry's measure leaves the other entries' draws alone.
  ProductMeasure tweaked = lognormal3(0.7);
  tweaked.set_entry(0, 1, LogNormalMeasure{2.0});
  const PCMatrix d = gpc::sample_pc(tweaked, 12345);
  CHECK(gpc::close(d.upper(0, 2), a.upper(0, 2), 1e-15));
  CHECK(gpc::close(d.upper(1, 2), a.upper(1, 2), 1e-15));
}

TEST_CASE("lognormal sample statistics match their parameters") {
  const ProductMeasure m = lognormal3(0.5);
  double sum = 0.0, sum2 = 0.0;
  const int n = 20000;
  for (int k = 0; k < n; ++k) {
    const PCMatrix a = gpc::sample_pc(m, gpc::sample_seed(777, k));
    const double x = std::log(a.upper(0, 1).rplus_value());
    sum += x;
    sum2 += x * x;
  }
  CHECK(std::abs(sum / n) < 0.02);
  CHECK(std::abs(sum2 / n - 0.25) < 0.02);
}

TEST_CASE("acceptance probability agrees with the quadrature oracle") {
  const double sigma = 0.5;
  const double eps = 0.1;
  const ProductMeasure m = lognormal3(sigma);
  const MCEstimate e = gpc::acceptance_probability(
      m, IndicatorKind::Generic, eps, 40000, 99);
  // The triad deviation is |N(0, 3 sigma^2)|, so acceptance means
  // |Normal| <= -ln(1 - eps).
  const double oracle = oracles::normal_band_probability(
      sigma * std::sqrt(3.0), -std::log1p(-eps));
  CHECK(std::abs(e.value - oracle) <= 3.0 * e.std_error);
  CHECK(e.samples == 40000);
  CHECK(e.ess == doctest::Approx(40000.0));
  CHECK(e.std_error ==
        doctest::Approx(std::sqrt(e.value * (1.0 - e.value) / 40000.0)));
}

TEST_CASE("acceptance probability is identical across thread counts") {
  const ProductMeasure m = lognormal3(0.5);
  const MCEstimate one = gpc::acceptance_probability(
      m, IndicatorKind::Generic, 0.2, 5000, 7, 1);
  for (int threads : {2, 3, 8}) {
    const MCEstimate many = gpc::acceptance_probability(
        m, IndicatorKind::Generic, 0.2, 5000, 7, threads);
    CHECK(many.value == one.value);
    CHECK(many.std_error == one.std_error);
  }
}

TEST_CASE("acceptance probability validates the threshold and sample count") {
  const ProductMeasure m = lognormal3(0.5);
  CHECK_THROWS_AS(
      gpc::acceptance_probability(m, IndicatorKind::Generic, 0.0, 1000, 1),
      gpc::InvalidInterval);
  CHECK_THROWS_AS(
      gpc::acceptance_probability(m, IndicatorKind::Generic, 1.0, 1000, 1),
      gpc::InvalidInterval);
  CHECK_THROWS_AS(
      gpc::acceptance_probability(m, IndicatorKind::Generic, 0.5, 50, 1),
      gpc::Error);
}

TEST_CASE("feynman-kac with zero potential is exactly the plain mean") {
  const ProductMeasure m = lognormal3(0.6);
  const auto f = [](const PCMatrix& a) {
    return a.upper(0, 1).rplus_value();
  };
  const std::size_t n = 3000;
  const std::uint64_t seed = 2468;
  const MCEstimate e =
      gpc::feynman_kac_expectation(f, IndicatorKind::Zero, 0.5, m, n, seed);
  double plain = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    plain += f(gpc::sample_pc(m, gpc::sample_seed(seed, k)));
  }
  plain /= static_cast<double>(n);
  CHECK(e.value == plain);
  CHECK(e.ess == doctest::Approx(static_cast<double>(n)));
}

TEST_CASE("feynman-kac reweighting shifts mass toward consistency") {
  const ProductMeasure m = lognormal3(0.6);
  const auto f = [](const PCMatrix& a) {
    return gpc::indicator_value(IndicatorKind::Generic, a);
  };
  const MCEstimate plain = gpc::feynman_kac_expectation(
      f, IndicatorKind::Zero, 1.0, m, 4000, 13579);
  const MCEstimate tilted = gpc::feynman_kac_expectation(
      f, IndicatorKind::Generic, 0.05, m, 4000, 13579);
  // Weighting by exp(-ii/eps) must pull the expected inconsistency down.
  CHECK(tilted.value < plain.value);
  CHECK(tilted.ess < plain.ess);
  CHECK(tilted.ess >= 10.0);
}

TEST_CASE("feynman-kac converges to the plain mean as eps grows") {
  const ProductMeasure m = lognormal3(0.6);
  const auto f = [](const PCMatrix& a) {
    return a.upper(1, 2).rplus_value();
  };
  const MCEstimate plain = gpc::feynman_kac_expectation(
      f, IndicatorKind::Zero, 1.0, m, 4000, 99887);
  const MCEstimate wide = gpc::feynman_kac_expectation(
      f, IndicatorKind::Generic, 1e9, m, 4000, 99887);
  CHECK(std::abs(wide.value - plain.value) <= 3.0 * wide.std_error);
  CHECK(std::abs(wide.value - plain.value) <= 1e-6);
}

TEST_CASE("degenerate importance weights are reported, not returned") {
  // A tiny eps sends almost every weight to zero.
  const ProductMeasure m = lognormal3(2.0);
  const auto f = [](const PCMatrix&) { return 1.0; };
  CHECK_THROWS_AS(gpc::feynman_kac_expectation(f, IndicatorKind::Generic,
                                               1e-12, m, 200, 31415),
                  gpc::DegenerateWeights);
}

TEST_CASE("haar quadrature agrees with its log-coordinate form") {
  const auto g = [](double x) { return std::log(x) * std::log(x); };
  const double direct = gpc::haar_integrate_rplus(g, 0.5, 4.0, 2000);
  const double viaLog = gpc::log_coordinate_integral(g, 0.5, 4.0, 2000);
  CHECK(direct == doctest::Approx(viaLog).epsilon(1e-9));
  // Exact value: integral of u^2 du from ln(1/2) to ln 4.
  const double lo = std::log(0.5), hi = std::log(4.0);
  const double exact = (hi * hi * hi - lo * lo * lo) / 3.0;
  CHECK(direct == doctest::Approx(exact).epsilon(1e-9));
  // Haar invariance: the measure dx/x is scale-invariant, so integrating
  // g(2x) over the halved interval changes nothing.
  const auto shifted = [&](double x) { return g(2.0 * x); };
  CHECK(gpc::haar_integrate_rplus(shifted, 0.25, 2.0, 2000) ==
        doctest::Approx(direct).epsilon(1e-9));
  CHECK_THROWS_AS(gpc::haar_integrate_rplus(g, -1.0, 2.0, 100),
                  gpc::InvalidInterval);
  CHECK_THROWS_AS(gpc::haar_integrate_rplus(g, 2.0, 1.0, 100),
                  gpc::InvalidInterval);
}
