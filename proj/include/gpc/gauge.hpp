#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gpc/pc_matrix.hpp"

namespace gpc {

/// One gauge element per compared item; the gauge group is the direct
/// product G^n acting on PC matrices.
struct GaugeVector {
  GroupSpec spec;
  std::vector<GroupElement> entries;
};

GaugeVector identity_gauge(const GroupSpec& spec, int n);

/// Componentwise product (g*h)_i = g_i * h_i, the gauge-group law.
GaugeVector gauge_compose(const GaugeVector& g, const GaugeVector& h);

GaugeVector gauge_inverse(const GaugeVector& g);

/// Left action: b_ij = g_i * a_ij for i < j (and b_ij = a_ij * g_j^-1 below
/// the diagonal, forced by reciprocity).
PCMatrix left_action(const GaugeVector& g, const PCMatrix& a);

/// Right action: b_ij = a_ij * g_j for i < j.
PCMatrix right_action(const GaugeVector& g, const PCMatrix& a);

/// Adjoint action: b_ij = g_i * a_ij * g_j^-1. Equals left_action composed
/// with right_action of the inverted gauge; preserves consistency.
PCMatrix ad_action(const GaugeVector& g, const PCMatrix& a);

/// Adjoint action of the inverted gauge.
PCMatrix coad_action(const GaugeVector& g, const PCMatrix& a);

/// True iff a lies on the adjoint orbit of the identity matrix, i.e. is
/// covariantly consistent. Uses the constructive gauge g_i = a_{i,0} and
/// compares the rebuilt matrix with a within tol.
bool orbit_of_identity_contains(const PCMatrix& a,
                                double tol = kConsistencyTolerance);

/// Result of consistentizing a 3x3 matrix by a left gauge. The solution set
/// is a family: the first gauge coordinate is free, the middle one is
/// determined by the matrix, and the last one does not act.
struct LeftConsistentize3 {
  GroupElement determined;  // middle coordinate a_21 * a_13 * a_32 (1-based)
  GaugeVector gauge;        // representative (e, determined, e)
  PCMatrix consistent;      // left_action(gauge, input)

  /// Any member of the solution family.
  GaugeVector family(const GroupElement& first, const GroupElement& last) const;
};

LeftConsistentize3 left_consistentize_3(const PCMatrix& a);

/// For n >= 4 a left-gauge consistentization exists iff the entries satisfy
/// an extra relation, a_14 = a_13 * a_32 * a_24 (1-based) on each window of
/// four consecutive indices. Returns true iff every window passes within tol.
bool left_orbit_obstruction(const PCMatrix& a,
                            double tol = kConsistencyTolerance);

/// Image of the splitting map: a consistent chain matrix plus one loop
/// coefficient per pair (i, j) with j >= i+2, (n-1)(n-2)/2 in total.
struct PhiDecomposition {
  PCMatrix consistent_part;
  std::map<std::pair<int, int>, GroupElement> components;
};

/// Splits a into (consistent part, components):
///   b_{i,i+1} = a_{i,i+1}, b_ij = superdiagonal chain product for j > i+1,
///   c_ij = (chain i -> j) * a_ji for j >= i+2.
/// a is consistent iff every component is the identity.
PhiDecomposition phi_n(const PCMatrix& a);

/// Rebuilds the unique matrix with the given chain part and loop
/// coefficients; inverse of phi_n. Throws MalformedDecomposition if the
/// consistent part fails its consistency invariant or the component index
/// set is wrong.
PCMatrix phi_n_inverse(const PhiDecomposition& d);

/// How the adjoint action looks through the splitting: the consistent part
/// transforms by ad_action and each component by conjugation with the gauge
/// coordinate at its row index, c_ij -> g_i * c_ij * g_i^-1.
PhiDecomposition component_ad_transform(const GaugeVector& g,
                                        const PhiDecomposition& d);

}  // namespace gpc
