#include "gpc/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace gpc {

namespace {

constexpr double kPi = 3.14159265358979323846;

Eigen::Matrix2d planar_rotation(double angle) {
  Eigen::Matrix2d r;
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

Eigen::Matrix3d axis_angle_rotation(const Eigen::Vector3d& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
}

Eigen::Vector3d random_unit_axis(Rng& rng) {
  for (;;) {
    Eigen::Vector3d v(rng.normal(), rng.normal(), rng.normal());
    const double norm = v.norm();
    if (norm > 1e-6) return v / norm;
  }
}

}  // namespace

GroupElement random_element(const GroupSpec& spec, Rng& rng, double spread) {
  switch (spec.kind()) {
    case GroupKind::RPlus:
      return GroupElement::rplus(std::exp(spread * rng.normal()), spec);
    case GroupKind::GL: {
      const int dim = spec.gl_dim();
      // The floor keeps sampled matrices quantitatively invertible, so group
      // words built from them (and their inverses) stay well conditioned.
      const double det_floor = std::max(spec.tolerance() * 100.0, 0.05);
      for (;;) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
        for (int r = 0; r < dim; ++r) {
          for (int c = 0; c < dim; ++c) {
            m(r, c) += spread * rng.normal();
          }
        }
        if (std::abs(m.determinant()) > det_floor) {
          return GroupElement::gl(std::move(m), spec);
        }
      }
    }
    case GroupKind::SE2: {
      const double cap = std::min(spread, 1.0) * kPi;
      const double angle = rng.uniform(-cap, cap);
      const Eigen::Vector2d t(spread * rng.normal(), spread * rng.normal());
      return GroupElement::se2(planar_rotation(angle), t, spec);
    }
    case GroupKind::SE3: {
      const double cap = std::min(spread, 1.0) * kPi;
      const double angle = rng.uniform(-cap, cap);
      const Eigen::Vector3d t(spread * rng.normal(), spread * rng.normal(),
                              spread * rng.normal());
      return GroupElement::se3(axis_angle_rotation(random_unit_axis(rng), angle),
                               t, spec);
    }
    case GroupKind::Product: {
      std::vector<GroupElement> parts;
      parts.reserve(spec.factors().size());
      for (const auto& f : spec.factors()) {
        parts.push_back(random_element(f, rng, spread));
      }
      return GroupElement::product(std::move(parts), spec);
    }
  }
  throw UnsupportedGroup("random_element: unknown group kind");
}

GroupElement random_perturbation(const GroupSpec& spec, Rng& rng,
                                 double min_deviation) {
  switch (spec.kind()) {
    case GroupKind::RPlus: {
      const double u = rng.uniform(min_deviation, min_deviation + 1.0);
      const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
      return GroupElement::rplus(std::exp(sign * u), spec);
    }
    case GroupKind::SE2:
    case GroupKind::SE3: {
      // ||R(theta) - I||_F = 2*sqrt(2)*|sin(theta/2)| in both dimensions.
      const double two_sqrt2 = 2.0 * std::sqrt(2.0);
      const double s = std::min(min_deviation / two_sqrt2, 1.0);
      const double theta_min = 2.0 * std::asin(s);
      double theta = rng.uniform(theta_min, kPi);
      if (rng.uniform() < 0.5) theta = -theta;
      const double rot_dev = two_sqrt2 * std::abs(std::sin(theta / 2.0));
      const double t_norm =
          rot_dev >= min_deviation ? 0.0 : 1.05 * (min_deviation - rot_dev);
      if (spec.kind() == GroupKind::SE2) {
        Eigen::Vector2d t = Eigen::Vector2d::Zero();
        if (t_norm > 0.0) {
          const double dir = rng.uniform(0.0, 2.0 * kPi);
          t << t_norm * std::cos(dir), t_norm * std::sin(dir);
        }
        return GroupElement::se2(planar_rotation(theta), t, spec);
      }
      Eigen::Vector3d t = Eigen::Vector3d::Zero();
      if (t_norm > 0.0) t = t_norm * random_unit_axis(rng);
      return GroupElement::se3(axis_angle_rotation(random_unit_axis(rng), theta),
                               t, spec);
    }
    case GroupKind::GL: {
      // Central element c*I: conjugation-invariant, so the planted deviation
      // survives any gauge. Grow the log-scale until the bound is met.
      const int dim = spec.gl_dim();
      const double root = std::sqrt(static_cast<double>(dim));
      auto dev_of = [&](double u) {
        return root * (std::exp(u) - 1.0) + root * (1.0 - std::exp(-u));
      };
      double u = min_deviation / (2.0 * root);
      while (dev_of(u) < min_deviation) u *= 1.5;
      const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
      const double c = std::exp(sign * u);
      return GroupElement::gl(c * Eigen::MatrixXd::Identity(dim, dim), spec);
    }
    case GroupKind::Product: {
      std::vector<GroupElement> parts;
      parts.reserve(spec.factors().size());
      for (std::size_t i = 0; i < spec.factors().size(); ++i) {
        parts.push_back(i == 0 ? random_perturbation(spec.factors()[i], rng,
                                                     min_deviation)
                               : identity(spec.factors()[i]));
      }
      return GroupElement::product(std::move(parts), spec);
    }
  }
  throw UnsupportedGroup("random_perturbation: unknown group kind");
}

WeightVector random_weights(const GroupSpec& spec, int n, Rng& rng,
                            double spread) {
  WeightVector w{spec, {}};
  w.entries.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w.entries.push_back(random_element(spec, rng, spread));
  return w;
}

PCMatrix random_pc_matrix(const GroupSpec& spec, int n, Rng& rng,
                          double spread) {
  if (n < 2) {
    throw DimensionError("random_pc_matrix requires n >= 2");
  }
  std::vector<GroupElement> upper;
  upper.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (std::size_t k = 0; k < static_cast<std::size_t>(n) * (n - 1) / 2; ++k) {
    upper.push_back(random_element(spec, rng, spread));
  }
  return PCMatrix::from_upper(spec, n, std::move(upper));
}

PCMatrix random_consistent(const GroupSpec& spec, int n, Rng& rng,
                           double spread) {
  return from_weights(random_weights(spec, n, rng, spread));
}

PCMatrix random_inconsistent(const GroupSpec& spec, int n, Rng& rng,
                             double min_defect, double spread) {
  if (n < 3) {
    throw DimensionError("random_inconsistent requires n >= 3");
  }
  const PCMatrix base = random_consistent(spec, n, rng, spread);
  const GroupElement p = random_perturbation(spec, rng, min_defect);
  return base.with_entry(0, 1, compose(base.upper(0, 1), p));
}

}  // namespace gpc
