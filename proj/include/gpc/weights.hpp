#pragma once

#include <vector>

#include "gpc/pc_matrix.hpp"

namespace gpc {

/// Log-domain potential on the compared items, pinned by f[0] = 0.
/// The matrix it encodes is a_ij = e^(f_j - f_i); weights are e^(f_i).
struct AffinePotential {
  std::vector<double> f;
};

/// Unique potential solving the superdiagonal chain
///   f[0] = 0, f[i+1] = f[i] + ln a_{i,i+1}.
/// For a consistent matrix, e^(f_j - f_i) reproduces every entry; for an
/// inconsistent one, the superdiagonal is still reproduced exactly.
/// RPlus matrices only.
AffinePotential solve_chain(const PCMatrix& a);

/// One chain solve per factor of a product-of-RPlus spec (an RPlus matrix
/// counts as one factor).
std::vector<AffinePotential> solve_chain_product(const PCMatrix& a);

/// lambda_i = e^(f_i). Note the orientation: from_weights(lambda) yields the
/// dual of the matrix the potential encodes; use matrix_from_potential for
/// direct reconstruction.
WeightVector weights_from_potential(const AffinePotential& p,
                                    double tolerance = kDefaultTolerance);

/// The matrix a_ij = e^(f_j - f_i); consistent by construction.
PCMatrix matrix_from_potential(const AffinePotential& p,
                               double tolerance = kDefaultTolerance);

/// Minimizes sum over i < j of (f_i - f_j + ln a_ij)^2 subject to f[0] = 0,
/// via the normal equations. Coincides with solve_chain on consistent
/// matrices. RPlus matrices only.
AffinePotential solve_least_squares(const PCMatrix& a);

/// The least-squares objective above at an arbitrary potential vector
/// (f.size() = n, f[0] need not be 0: the objective is gauge-invariant
/// only up to the pin, which callers control).
double lsq_objective(const PCMatrix& a, const std::vector<double>& f);

/// Gradient of lsq_objective in all n coordinates.
std::vector<double> lsq_gradient(const PCMatrix& a,
                                 const std::vector<double>& f);

/// Squared reconstruction residual over ordered pairs i != j:
/// sum of (f_i - f_j + ln a_ij)^2 counting each pair twice. This is the
/// figure reported alongside solved weights.
double reconstruction_residual_sq(const PCMatrix& a, const AffinePotential& p);

}  // namespace gpc
