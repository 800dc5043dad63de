#include "gpc/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

namespace gpc {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_measure_fits(const EntryMeasure& m, const GroupSpec& spec) {
  const bool ok = std::visit(
      [&](const auto& measure) -> bool {
        using T = std::decay_t<decltype(measure)>;
        if constexpr (std::is_same_v<T, LogNormalMeasure>) {
          if (!(measure.sigma > 0.0)) {
            throw Error("lognormal measure requires sigma > 0");
          }
          return spec.kind() == GroupKind::RPlus;
        } else if constexpr (std::is_same_v<T, UniformRotationMeasure>) {
          if (!(measure.sigma_t >= 0.0)) {
            throw Error("rotation measure requires sigma_t >= 0");
          }
          return spec.kind() == GroupKind::SE2;
        } else {
          if (!(measure.sigma > 0.0)) {
            throw Error("matrix gaussian measure requires sigma > 0");
          }
          return spec.kind() == GroupKind::GL;
        }
      },
      m);
  if (!ok) {
    throw SpecMismatch("entry measure does not fit the coefficient group");
  }
}

}  // namespace

ProductMeasure::ProductMeasure(GroupSpec spec, int n,
                               const EntryMeasure& default_measure)
    : spec_(std::move(spec)), n_(n), default_(default_measure) {
  if (n < 2) {
    throw DimensionError("product measure requires n >= 2");
  }
  check_measure_fits(default_, spec_);
}

void ProductMeasure::check_pair(int i, int j) const {
  if (!(0 <= i && i < j && j < n_)) {
    throw IndexOutOfRange("product measure entry requires 0 <= i < j < n");
  }
}

ProductMeasure& ProductMeasure::set_entry(int i, int j, const EntryMeasure& m) {
  check_pair(i, j);
  check_measure_fits(m, spec_);
  overrides_.insert_or_assign({i, j}, m);
  return *this;
}

const EntryMeasure& ProductMeasure::entry(int i, int j) const {
  check_pair(i, j);
  const auto it = overrides_.find({i, j});
  return it == overrides_.end() ? default_ : it->second;
}

GroupElement sample_entry(const EntryMeasure& m, const GroupSpec& spec,
                          Rng& rng) {
  check_measure_fits(m, spec);
  return std::visit(
      [&](const auto& measure) -> GroupElement {
        using T = std::decay_t<decltype(measure)>;
        if constexpr (std::is_same_v<T, LogNormalMeasure>) {
          return GroupElement::rplus(std::exp(measure.sigma * rng.normal()),
                                     spec);
        } else if constexpr (std::is_same_v<T, UniformRotationMeasure>) {
          const double angle = rng.uniform(-kPi, kPi);
          Eigen::Matrix2d r;
          r << std::cos(angle), -std::sin(angle), std::sin(angle),
              std::cos(angle);
          const Eigen::Vector2d t(measure.sigma_t * rng.normal(),
                                  measure.sigma_t * rng.normal());
          return GroupElement::se2(r, t, spec);
        } else {
          const int dim = spec.gl_dim();
          // Same invertibility floor as the generic sampler: keeps words in
          // sampled entries and their inverses well conditioned.
          const double det_floor = std::max(spec.tolerance() * 100.0, 0.05);
          for (;;) {
            Eigen::MatrixXd z = Eigen::MatrixXd::Identity(dim, dim);
            for (int r = 0; r < dim; ++r) {
              for (int c = 0; c < dim; ++c) {
                z(r, c) += measure.sigma * rng.normal();
              }
            }
            if (std::abs(z.determinant()) > det_floor) {
              return GroupElement::gl(std::move(z), spec);
            }
          }
        }
      },
      m);
}

PCMatrix sample_pc(const ProductMeasure& m, std::uint64_t seed) {
  const int n = m.size();
  std::vector<GroupElement> upper;
  upper.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i),
                            static_cast<std::uint64_t>(j));
      upper.push_back(sample_entry(m.entry(i, j), m.spec(), rng));
    }
  }
  return PCMatrix::from_upper(m.spec(), n, std::move(upper));
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t k) {
  return Rng::stream(seed, 0x5a3e5u, static_cast<std::uint64_t>(k)).next();
}

MCEstimate acceptance_probability(const ProductMeasure& m, IndicatorKind ii,
                                  double eps, std::size_t n,
                                  std::uint64_t seed, int threads) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw InvalidInterval("acceptance threshold must lie in (0, 1)");
  }
  if (n < 100) {
    throw Error("acceptance_probability requires at least 100 samples");
  }
  const auto count_range = [&](std::size_t lo, std::size_t hi) {
    std::size_t accepted = 0;
    for (std::size_t k = lo; k < hi; ++k) {
      const PCMatrix sample = sample_pc(m, sample_seed(seed, k));
      if (indicator_value(ii, sample) <= eps) ++accepted;
    }
    return accepted;
  };
  std::size_t accepted = 0;
  const int workers = std::max(1, threads);
  if (workers == 1) {
    accepted = count_range(0, n);
  } else {
    // The acceptance count is an integer sum, so the split is exact: any
    // thread count produces the same estimate.
    std::vector<std::size_t> partial(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::size_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(n, static_cast<std::size_t>(w) * chunk);
      const std::size_t hi = std::min(n, lo + chunk);
      pool.emplace_back([&partial, &count_range, w, lo, hi] {
        partial[static_cast<std::size_t>(w)] = count_range(lo, hi);
      });
    }
    for (auto& t : pool) t.join();
    for (std::size_t c : partial) accepted += c;
  }
  const double p = static_cast<double>(accepted) / static_cast<double>(n);
  const double stderr_p =
      std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  return MCEstimate{p, stderr_p, n, static_cast<double>(n)};
}

MCEstimate feynman_kac_expectation(const std::function<double(const PCMatrix&)>& f,
                                   IndicatorKind ii, double eps,
                                   const ProductMeasure& base, std::size_t n,
                                   std::uint64_t seed) {
  if (!(eps > 0.0)) {
    throw InvalidInterval("feynman_kac_expectation requires eps > 0");
  }
  if (n == 0) {
    throw Error("feynman_kac_expectation requires at least one sample");
  }
  std::vector<double> values(n);
  std::vector<double> weights(n);
  double sum_w = 0.0;
  double sum_fw = 0.0;
  double sum_w2 = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const PCMatrix sample = sample_pc(base, sample_seed(seed, k));
    values[k] = f(sample);
    weights[k] = std::exp(-indicator_value(ii, sample) / eps);
    sum_w += weights[k];
    sum_fw += values[k] * weights[k];
    sum_w2 += weights[k] * weights[k];
  }
  const double ess = sum_w * sum_w / sum_w2;
  // Written as a negated >= so an all-underflow batch (ess = 0/0 = NaN) is
  // also rejected rather than escaping as a NaN estimate.
  if (!(ess >= 10.0)) {
    throw DegenerateWeights("effective sample size " + std::to_string(ess) +
                            " is below 10; importance weights degenerate");
  }
  const double value = sum_fw / sum_w;
  // Delta-method variance of the self-normalized ratio estimator.
  double var_acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double centered = weights[k] * (values[k] - value);
    var_acc += centered * centered;
  }
  const double stderr_v = std::sqrt(var_acc) / sum_w;
  return MCEstimate{value, stderr_v, n, ess};
}

namespace {

double simpson(const std::function<double(double)>& h, double lo, double hi,
               int steps) {
  int intervals = steps;
  if (intervals < 2) intervals = 2;
  if (intervals % 2 != 0) ++intervals;
  const double dx = (hi - lo) / intervals;
  double total = h(lo) + h(hi);
  for (int k = 1; k < intervals; ++k) {
    total += h(lo + k * dx) * (k % 2 == 0 ? 2.0 : 4.0);
  }
  return total * dx / 3.0;
}

}  // namespace

double haar_integrate_rplus(const std::function<double(double)>& g, double a,
                            double b, int steps) {
  if (!(0.0 < a && a < b)) {
    throw InvalidInterval("haar integration requires 0 < a < b");
  }
  return simpson([&](double x) { return g(x) / x; }, a, b, steps);
}

double log_coordinate_integral(const std::function<double(double)>& g, double a,
                               double b, int steps) {
  if (!(0.0 < a && a < b)) {
    throw InvalidInterval("log-coordinate integration requires 0 < a < b");
  }
  return simpson([&](double u) { return g(std::exp(u)); }, std::log(a),
                 std::log(b), steps);
}

}  // namespace gpc
