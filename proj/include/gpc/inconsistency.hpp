#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "gpc/pc_matrix.hpp"

namespace gpc {

/// Worst-triad localization record. Indices satisfy i < j < k; the defect is
/// the group word a_ik * (a_ij * a_jk)^-1, which is the identity exactly when
/// the triad is consistent, and value = 1 - exp(-deviation(defect)).
struct TriadReport {
  int i = 0;
  int j = 0;
  int k = 0;
  double value = 0.0;
  GroupElement defect;
};

/// A single inconsistency figure. Normalized indicators take values in [0,1].
struct InconsistencyValue {
  double value = 0.0;
  bool normalized = true;
};

/// Triad indicator on positive reals: 1 - min(y/(x*z), (x*z)/y) for the
/// triad a_ij = x, a_ik = y, a_jk = z. Zero iff y = x*z.
double kii3(double x, double y, double z);

/// Equivalent exponential form 1 - exp(-|ln(y/(x*z))|).
double kii3_exp(double x, double y, double z);

/// Triad indicator over an arbitrary coefficient group, requires i < j < k.
TriadReport generic_triad_map(const PCMatrix& a, int i, int j, int k);

/// Chain indicator on positive-real matrices: the worst discrepancy between
/// an entry a_ij and the superdiagonal chain a_{i,i+1} ... a_{j-1,j},
/// maximized over i < j. Zero iff the matrix is consistent.
double kii_n(const PCMatrix& a);

/// Supremum of the generic triad map over all triples, with the argmax.
std::pair<InconsistencyValue, TriadReport> indicator_from_triads(
    const PCMatrix& a);

/// Indicator of the |det|-image matrix; defined on GL specs. Ad-invariant
/// but not faithful: determinant-one defects are invisible.
InconsistencyValue ii_det(const PCMatrix& a);

/// Tags naming the indicator maps the library ships. FirstEntry is a
/// deliberately gauge-dependent map (it scores the (0,1) entry alone) kept
/// as a negative control; Zero ignores its input.
enum class IndicatorKind : std::uint8_t { Generic, KiiN, Det, FirstEntry, Zero };

double indicator_value(IndicatorKind kind, const PCMatrix& a);

/// Checks |ii(ad_action(g, a)) - ii(a)| <= tol for `trials` random gauges.
/// Deterministic for a fixed seed.
bool check_ad_invariance(IndicatorKind kind, const PCMatrix& a, int trials,
                         std::uint64_t seed = 2026, double tol = 1e-9);

struct FaithfulnessReport {
  bool faithful = true;
  /// A matrix on which the indicator contradicts ground truth: inconsistent
  /// with ii below threshold, or consistent with ii above it.
  std::optional<PCMatrix> violation;
};

/// Samples consistent matrices (indicator must vanish) and measurably
/// inconsistent ones (indicator must not). For the det-composed indicator on
/// GL specs, also probes determinant-one defects, which defeat it.
FaithfulnessReport check_faithfulness(IndicatorKind kind, const GroupSpec& spec,
                                      int n, int trials,
                                      std::uint64_t seed = 2026);

}  // namespace gpc
