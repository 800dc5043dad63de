#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "gpc/pc_matrix.hpp"

namespace gpc {

/// Hard cap on enumerated lifts (sign assignments): 2^24.
inline constexpr int kMaxLiftBits = 24;

/// Symmetric nonnegative matrix with zero diagonal: the entrywise
/// log-distance image of a positive-real PC matrix.
class DistanceMatrix {
 public:
  static DistanceMatrix zero(int n);
  /// Validates shape, symmetry, zero diagonal and nonnegativity.
  static DistanceMatrix from_matrix(Eigen::MatrixXd k);
  /// Strict upper triangle, row-major, mirrored to the lower half.
  static DistanceMatrix from_upper(int n, const std::vector<double>& upper);

  int size() const noexcept { return static_cast<int>(k_.rows()); }
  double at(int i, int j) const;
  const Eigen::MatrixXd& matrix() const noexcept { return k_; }

  /// Off-diagonal entries that are nonzero (exact comparison with 0);
  /// even by symmetry.
  int nonzero_count() const;

 private:
  explicit DistanceMatrix(Eigen::MatrixXd k) : k_(std::move(k)) {}
  Eigen::MatrixXd k_;
};

/// k_ij = |ln a_ij|; symmetric because |ln a| = |ln a^-1|.
DistanceMatrix to_distance(const PCMatrix& a);

/// Number of PC matrices with this distance image: 2^(N/2) where N counts
/// nonzero off-diagonal entries. Throws Error if the count overflows 64 bits.
std::uint64_t count_lifts(const DistanceMatrix& k);

/// Streams every lift a_ij = e^(+-k_ij) (identity where k_ij = 0); the
/// callback returns false to stop early. Lift order is deterministic: the
/// sign mask counts up with the lowest bit on the first nonzero pair in
/// row-major order. Throws EnumerationCap beyond 2^24 lifts.
void for_each_lift(const DistanceMatrix& k,
                   const std::function<bool(const PCMatrix&)>& fn);

std::vector<PCMatrix> enumerate_lifts(const DistanceMatrix& k);

/// The lifts that are covariantly consistent: empty when K does not come
/// from any consistent matrix, otherwise {A, dual(A)}, which coincide only
/// for the zero matrix.
std::vector<PCMatrix> consistent_lifts(const DistanceMatrix& k,
                                       double tol = kConsistencyTolerance);

/// k_il <= k_ij + k_jl for all triples, with an absolute slack for roundoff.
bool triangle_check(const DistanceMatrix& k, double slack = 1e-12);

}  // namespace gpc
