#include "gpc/inconsistency.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gpc/gauge.hpp"
#include "gpc/rng.hpp"
#include "gpc/sampling.hpp"

namespace gpc {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw NonPositiveInput(std::string("kii3: ") + name +
                           " must be a positive finite real");
  }
}

// Threshold below which an indicator is considered to vanish, and above
// which a planted defect must be reported. Pinned by the faithfulness
// contract.
constexpr double kVanishThreshold = 1e-9;
constexpr double kPlantedDefectFloor = 1e-6;

}  // namespace

double kii3(double x, double y, double z) {
  require_positive(x, "x");
  require_positive(y, "y");
  require_positive(z, "z");
  const double ratio = y / (x * z);
  return 1.0 - std::min(ratio, 1.0 / ratio);
}

double kii3_exp(double x, double y, double z) {
  require_positive(x, "x");
  require_positive(y, "y");
  require_positive(z, "z");
  return 1.0 - std::exp(-std::abs(std::log(y / (x * z))));
}

TriadReport generic_triad_map(const PCMatrix& a, int i, int j, int k) {
  if (!(0 <= i && i < j && j < k && k < a.size())) {
    throw IndexOutOfRange("generic_triad_map requires 0 <= i < j < k < n");
  }
  GroupElement defect = compose(
      a.entry(i, k), inverse(compose(a.entry(i, j), a.entry(j, k))));
  const double value = 1.0 - std::exp(-deviation(defect));
  return TriadReport{i, j, k, value, std::move(defect)};
}

double kii_n(const PCMatrix& a) {
  if (a.spec().kind() != GroupKind::RPlus) {
    throw UnsupportedGroup("kii_n is defined on rplus matrices only");
  }
  if (a.size() < 3) {
    throw DimensionError("kii_n requires n >= 3");
  }
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    double chain = 1.0;
    for (int j = i + 1; j < a.size(); ++j) {
      chain *= a.upper(j - 1, j).rplus_value();
      const double ratio = a.upper(i, j).rplus_value() / chain;
      worst = std::max(worst, 1.0 - std::min(ratio, 1.0 / ratio));
    }
  }
  return worst;
}

std::pair<InconsistencyValue, TriadReport> indicator_from_triads(
    const PCMatrix& a) {
  if (a.size() < 3) {
    throw DimensionError("indicator_from_triads requires n >= 3");
  }
  TriadReport worst = generic_triad_map(a, 0, 1, 2);
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) {
      for (int k = j + 1; k < a.size(); ++k) {
        TriadReport report = generic_triad_map(a, i, j, k);
        if (report.value > worst.value) worst = std::move(report);
      }
    }
  }
  return {InconsistencyValue{worst.value, true}, worst};
}

InconsistencyValue ii_det(const PCMatrix& a) {
  if (a.spec().kind() != GroupKind::GL) {
    throw UnsupportedGroup("ii_det is defined on gl matrices only");
  }
  return indicator_from_triads(apply_morphism(a, MorphismKind::AbsDet)).first;
}

double indicator_value(IndicatorKind kind, const PCMatrix& a) {
  switch (kind) {
    case IndicatorKind::Generic:
      return indicator_from_triads(a).first.value;
    case IndicatorKind::KiiN:
      return kii_n(a);
    case IndicatorKind::Det:
      return ii_det(a).value;
    case IndicatorKind::FirstEntry:
      return 1.0 - std::exp(-deviation(a.upper(0, 1)));
    case IndicatorKind::Zero:
      return 0.0;
  }
  throw Error("indicator_value: unknown indicator kind");
}

bool check_ad_invariance(IndicatorKind kind, const PCMatrix& a, int trials,
                         std::uint64_t seed, double tol) {
  const double base = indicator_value(kind, a);
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, 0x1adu, static_cast<std::uint64_t>(t));
    GaugeVector g{a.spec(), {}};
    g.entries.reserve(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) {
      g.entries.push_back(random_element(a.spec(), rng, 0.7));
    }
    const double translated = indicator_value(kind, ad_action(g, a));
    if (std::abs(translated - base) > tol) return false;
  }
  return true;
}

namespace {

// Determinant-one defects for GL specs: invisible to the det-composed
// indicator, visibly inconsistent to the generic one.
std::vector<Eigen::MatrixXd> det_kernel_probes(int dim) {
  std::vector<Eigen::MatrixXd> probes;
  Eigen::MatrixXd shear = Eigen::MatrixXd::Identity(dim, dim);
  shear(0, 1) = 1.0;
  probes.push_back(shear);
  Eigen::MatrixXd quarter_turn = Eigen::MatrixXd::Identity(dim, dim);
  quarter_turn(0, 0) = 0.0;
  quarter_turn(0, 1) = -1.0;
  quarter_turn(1, 0) = 1.0;
  quarter_turn(1, 1) = 0.0;
  probes.push_back(quarter_turn);
  probes.push_back(-Eigen::MatrixXd::Identity(dim, dim));
  return probes;
}

}  // namespace

FaithfulnessReport check_faithfulness(IndicatorKind kind, const GroupSpec& spec,
                                      int n, int trials, std::uint64_t seed) {
  if (n < 3) {
    throw DimensionError("check_faithfulness requires n >= 3");
  }
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, 0xfa17u, static_cast<std::uint64_t>(t));
    const PCMatrix consistent = random_consistent(spec, n, rng, 0.5);
    if (indicator_value(kind, consistent) > kVanishThreshold) {
      return FaithfulnessReport{false, consistent};
    }
    PCMatrix inconsistent = random_inconsistent(spec, n, rng, 0.5, 0.5);
    // The planted defect must register on the generic indicator; resample
    // the rare draw where conjugation shrinks it below the floor.
    for (int attempt = 0;
         indicator_value(IndicatorKind::Generic, inconsistent) <
             kPlantedDefectFloor && attempt < 100;
         ++attempt) {
      inconsistent = random_inconsistent(spec, n, rng, 0.5, 0.5);
    }
    if (indicator_value(kind, inconsistent) <= kVanishThreshold) {
      return FaithfulnessReport{false, inconsistent};
    }
  }
  if (spec.kind() == GroupKind::GL && spec.gl_dim() >= 2) {
    for (const auto& probe_matrix : det_kernel_probes(spec.gl_dim())) {
      const GroupElement probe = GroupElement::gl(probe_matrix, spec);
      Rng rng = Rng::stream(seed, 0xde70u, 0);
      for (int attempt = 0; attempt < 100; ++attempt) {
        const PCMatrix base = random_consistent(spec, n, rng, 0.5);
        const PCMatrix twisted =
            base.with_entry(0, 1, compose(base.upper(0, 1), probe));
        if (indicator_value(IndicatorKind::Generic, twisted) <
            kPlantedDefectFloor) {
          continue;
        }
        if (indicator_value(kind, twisted) <= kVanishThreshold) {
          return FaithfulnessReport{false, twisted};
        }
        break;
      }
    }
  }
  return FaithfulnessReport{true, std::nullopt};
}

}  // namespace gpc
