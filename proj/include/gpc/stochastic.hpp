#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "gpc/inconsistency.hpp"
#include "gpc/pc_matrix.hpp"
#include "gpc/rng.hpp"

namespace gpc {

/// ln a ~ Normal(0, sigma^2) on positive reals.
struct LogNormalMeasure {
  double sigma;
};

/// Uniform rotation angle (the Haar measure on the rotation factor) with an
/// isotropic Gaussian translation; coefficient group SE2.
struct UniformRotationMeasure {
  double sigma_t;
};

/// I + sigma * Z with iid standard normal Z, near-singular draws rejected;
/// coefficient group GL(n).
struct MatrixGaussianMeasure {
  double sigma;
};

using EntryMeasure =
    std::variant<LogNormalMeasure, UniformRotationMeasure, MatrixGaussianMeasure>;

/// Independent per-entry measures on the upper triangle: the product measure
/// on PC-matrix space.
class ProductMeasure {
 public:
  /// Every entry gets the same measure; must fit the spec's group kind.
  ProductMeasure(GroupSpec spec, int n, const EntryMeasure& default_measure);

  /// Overrides one upper-triangle entry (i < j).
  ProductMeasure& set_entry(int i, int j, const EntryMeasure& m);

  const EntryMeasure& entry(int i, int j) const;
  const GroupSpec& spec() const noexcept { return spec_; }
  int size() const noexcept { return n_; }

  const EntryMeasure& default_measure() const noexcept { return default_; }
  const std::map<std::pair<int, int>, EntryMeasure>& overrides() const noexcept {
    return overrides_;
  }

 private:
  void check_pair(int i, int j) const;

  GroupSpec spec_;
  int n_;
  EntryMeasure default_;
  std::map<std::pair<int, int>, EntryMeasure> overrides_;
};

GroupElement sample_entry(const EntryMeasure& m, const GroupSpec& spec,
                          Rng& rng);

/// Draws one matrix; entry (i, j) uses its own substream keyed by (i, j), so
/// the result is independent of evaluation order and reproducible per entry.
PCMatrix sample_pc(const ProductMeasure& m, std::uint64_t seed);

/// Seed of the k-th matrix inside the estimators below; exposed so callers
/// can replay any individual draw.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t k);

struct MCEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  double ess = 0.0;  // effective sample size
};

/// Fraction of N samples with indicator <= eps, with binomial standard
/// error. eps must lie in (0, 1). Per-sample seeds are derived by index, so
/// the result is identical for every thread count.
MCEstimate acceptance_probability(const ProductMeasure& m, IndicatorKind ii,
                                  double eps, std::size_t n,
                                  std::uint64_t seed, int threads = 1);

/// Self-normalized importance estimate of E[f] under the reweighted measure
/// with density proportional to exp(-ii/eps) against the base measure:
///   sum f(A_k) w_k / sum w_k,  w_k = exp(-ii(A_k)/eps).
/// Reports the effective sample size (sum w)^2 / sum w^2 and throws
/// DegenerateWeights when it falls below 10.
MCEstimate feynman_kac_expectation(const std::function<double(const PCMatrix&)>& f,
                                   IndicatorKind ii, double eps,
                                   const ProductMeasure& base, std::size_t n,
                                   std::uint64_t seed);

/// Composite-Simpson quadrature of the multiplicative-Haar integral
/// integral of g(x)/x dx over [a, b], 0 < a < b.
double haar_integrate_rplus(const std::function<double(double)>& g, double a,
                            double b, int steps);

/// The same integral in log coordinates: integral of g(e^u) du over
/// [ln a, ln b]. Agrees with haar_integrate_rplus up to quadrature error,
/// which is the change-of-variables identity made testable.
double log_coordinate_integral(const std::function<double(double)>& g, double a,
                               double b, int steps);

}  // namespace gpc
