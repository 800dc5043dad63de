#pragma once

#include "gpc/pc_matrix.hpp"
#include "gpc/rng.hpp"

namespace gpc {

struct GaugeVector;  // defined in gauge.hpp

/// Random element with deviation of order spread:
///   RPlus    exp(spread * N(0,1))
///   GL(n)    I + spread * Z, resampled while nearly singular
///   SE2/SE3  uniform rotation angle in [-spread*pi, spread*pi]
///            (uniform axis for SE3), N(0, spread^2) translation
///   Product  independent factors
GroupElement random_element(const GroupSpec& spec, Rng& rng,
                            double spread = 1.0);

/// Random element whose deviation is at least min_deviation; used to plant
/// detectable defects. Built from a rotation / scale bounded away from the
/// identity, so the bound survives conjugation for rplus and se2/se3.
GroupElement random_perturbation(const GroupSpec& spec, Rng& rng,
                                 double min_deviation);

WeightVector random_weights(const GroupSpec& spec, int n, Rng& rng,
                            double spread = 1.0);

/// Independent entries; generically inconsistent for n >= 3.
PCMatrix random_pc_matrix(const GroupSpec& spec, int n, Rng& rng,
                          double spread = 1.0);

/// from_weights of random weights: covariantly consistent by construction.
PCMatrix random_consistent(const GroupSpec& spec, int n, Rng& rng,
                           double spread = 1.0);

/// Consistent matrix with one upper entry composed with a perturbation of
/// deviation >= min_defect. The triad defect through the perturbed entry is
/// the conjugate of the perturbation, so the matrix is measurably
/// inconsistent.
PCMatrix random_inconsistent(const GroupSpec& spec, int n, Rng& rng,
                             double min_defect = 0.5, double spread = 1.0);

}  // namespace gpc
