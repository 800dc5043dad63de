#pragma once

#include <cstdint>
#include <vector>

#include "gpc/group.hpp"

namespace gpc {

/// Default tolerance for consistency predicates on PC matrices.
inline constexpr double kConsistencyTolerance = 1e-8;

/// A pairwise-comparisons matrix over a coefficient group:
/// diagonal entries are the identity and a_ji = a_ij^-1 by construction.
/// Only the strict upper triangle is stored; lower entries are derived on
/// access, so the reciprocity constraint can never be violated.
class PCMatrix {
 public:
  /// Identity matrix (every entry the group identity). Requires n >= 2.
  PCMatrix(GroupSpec spec, int n);

  /// Builds from the strict upper triangle in row-major order
  /// (a_01, a_02, ..., a_0{n-1}, a_12, ...). Throws SpecMismatch if any
  /// entry belongs to a different group, DimensionError on a size mismatch.
  static PCMatrix from_upper(GroupSpec spec, int n,
                             std::vector<GroupElement> upper);

  int size() const noexcept { return n_; }
  const GroupSpec& spec() const noexcept { return spec_; }

  /// Entry a_ij (0-based): identity on the diagonal, stored value above it,
  /// inverse of the stored value below it.
  GroupElement entry(int i, int j) const;

  /// Stored upper-triangle entry; requires i < j.
  const GroupElement& upper(int i, int j) const;

  /// Copy with a_ij (and implicitly a_ji) replaced. Setting a diagonal
  /// entry is an error.
  PCMatrix with_entry(int i, int j, const GroupElement& value) const;

  const std::vector<GroupElement>& upper_entries() const noexcept {
    return upper_;
  }

 private:
  PCMatrix(GroupSpec spec, int n, std::vector<GroupElement> upper);
  std::size_t upper_index(int i, int j) const;
  void check_index(int i, int j) const;

  GroupSpec spec_;
  int n_;
  std::vector<GroupElement> upper_;  // row-major strict upper triangle
};

/// Weights attached to the compared items; from_weights builds the exactly
/// consistent matrix a_ij = w_i * w_j^-1.
struct WeightVector {
  GroupSpec spec;
  std::vector<GroupElement> entries;
};

PCMatrix from_weights(const WeightVector& w);

/// a_ik = a_ij * a_jk for all triples, each defect within tol.
bool is_covariant_consistent(const PCMatrix& a,
                             double tol = kConsistencyTolerance);

/// a_ik = a_jk * a_ij for all triples, each defect within tol.
bool is_contravariant_consistent(const PCMatrix& a,
                                 double tol = kConsistencyTolerance);

/// Coefficientwise inverse. Swaps covariant and contravariant consistency.
PCMatrix dual(const PCMatrix& a);

enum class MorphismKind : std::uint8_t {
  Identity,  // any group, no-op
  AbsDet,    // GL(n) -> RPlus entrywise
};

/// Applies a group morphism entrywise; the result is a PC matrix over the
/// image group, and consistency is preserved.
PCMatrix apply_morphism(const PCMatrix& a, MorphismKind morphism);

/// Largest entrywise group-invariant discrepancy:
/// max over i < j of deviation(b_ij^-1 a_ij). Zero iff the matrices agree.
double matrix_distance(const PCMatrix& a, const PCMatrix& b);

/// Recovers weights w_i = a_{i,anchor} from a consistent matrix; for a
/// covariantly consistent matrix, from_weights reproduces it.
WeightVector weights_from_consistent(const PCMatrix& a, int anchor = 0);

}  // namespace gpc
