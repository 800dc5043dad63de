#include "gpc/weights.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

namespace gpc {

namespace {

void require_rplus(const PCMatrix& a, const char* op) {
  if (a.spec().kind() != GroupKind::RPlus) {
    throw UnsupportedGroup(std::string(op) +
                           " is defined on rplus matrices only");
  }
}

void require_potential_for(const AffinePotential& p, const PCMatrix& a) {
  if (p.f.size() != static_cast<std::size_t>(a.size())) {
    throw DimensionError("potential size does not match the matrix");
  }
}

}  // namespace

AffinePotential solve_chain(const PCMatrix& a) {
  require_rplus(a, "solve_chain");
  AffinePotential p;
  p.f.assign(static_cast<std::size_t>(a.size()), 0.0);
  for (int i = 0; i + 1 < a.size(); ++i) {
    p.f[static_cast<std::size_t>(i + 1)] =
        p.f[static_cast<std::size_t>(i)] +
        std::log(a.upper(i, i + 1).rplus_value());
  }
  return p;
}

std::vector<AffinePotential> solve_chain_product(const PCMatrix& a) {
  if (a.spec().kind() == GroupKind::RPlus) {
    return {solve_chain(a)};
  }
  if (a.spec().kind() != GroupKind::Product) {
    throw UnsupportedGroup(
        "solve_chain_product requires rplus or a product of rplus factors");
  }
  const auto& factors = a.spec().factors();
  for (const auto& f : factors) {
    if (f.kind() != GroupKind::RPlus) {
      throw UnsupportedGroup("every product factor must be rplus");
    }
  }
  std::vector<AffinePotential> out;
  out.reserve(factors.size());
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    std::vector<GroupElement> upper;
    upper.reserve(a.upper_entries().size());
    for (const auto& v : a.upper_entries()) upper.push_back(v.parts()[fi]);
    out.push_back(
        solve_chain(PCMatrix::from_upper(factors[fi], a.size(), upper)));
  }
  return out;
}

WeightVector weights_from_potential(const AffinePotential& p,
                                    double tolerance) {
  const GroupSpec spec = GroupSpec::rplus(tolerance);
  WeightVector w{spec, {}};
  w.entries.reserve(p.f.size());
  for (double v : p.f) {
    w.entries.push_back(GroupElement::rplus(std::exp(v), spec));
  }
  return w;
}

PCMatrix matrix_from_potential(const AffinePotential& p, double tolerance) {
  const int n = static_cast<int>(p.f.size());
  if (n < 2) {
    throw DimensionError("potential needs at least two items");
  }
  const GroupSpec spec = GroupSpec::rplus(tolerance);
  std::vector<GroupElement> upper;
  upper.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      upper.push_back(GroupElement::rplus(
          std::exp(p.f[static_cast<std::size_t>(j)] -
                   p.f[static_cast<std::size_t>(i)]),
          spec));
    }
  }
  return PCMatrix::from_upper(spec, n, std::move(upper));
}

AffinePotential solve_least_squares(const PCMatrix& a) {
  require_rplus(a, "solve_least_squares");
  const int n = a.size();
  const int m = n - 1;  // unknowns f_1 .. f_{n-1}, with f_0 pinned to 0
  // Normal equations of the complete-graph objective: the coefficient
  // matrix is n*I - ones, the right side is -sum_j ln a_kj.
  Eigen::MatrixXd lhs = -Eigen::MatrixXd::Ones(m, m);
  lhs.diagonal().array() += static_cast<double>(n);
  Eigen::VectorXd rhs(m);
  for (int k = 1; k < n; ++k) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != k) row += std::log(a.entry(k, j).rplus_value());
    }
    rhs(k - 1) = -row;
  }
  const Eigen::VectorXd x = lhs.ldlt().solve(rhs);
  AffinePotential p;
  p.f.assign(static_cast<std::size_t>(n), 0.0);
  for (int k = 1; k < n; ++k) p.f[static_cast<std::size_t>(k)] = x(k - 1);
  return p;
}

double lsq_objective(const PCMatrix& a, const std::vector<double>& f) {
  require_rplus(a, "lsq_objective");
  if (f.size() != static_cast<std::size_t>(a.size())) {
    throw DimensionError("potential size does not match the matrix");
  }
  double total = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) {
      const double r = f[static_cast<std::size_t>(i)] -
                       f[static_cast<std::size_t>(j)] +
                       std::log(a.upper(i, j).rplus_value());
      total += r * r;
    }
  }
  return total;
}

std::vector<double> lsq_gradient(const PCMatrix& a,
                                 const std::vector<double>& f) {
  require_rplus(a, "lsq_gradient");
  if (f.size() != static_cast<std::size_t>(a.size())) {
    throw DimensionError("potential size does not match the matrix");
  }
  std::vector<double> grad(f.size(), 0.0);
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) {
      const double r = f[static_cast<std::size_t>(i)] -
                       f[static_cast<std::size_t>(j)] +
                       std::log(a.upper(i, j).rplus_value());
      grad[static_cast<std::size_t>(i)] += 2.0 * r;
      grad[static_cast<std::size_t>(j)] -= 2.0 * r;
    }
  }
  return grad;
}

double reconstruction_residual_sq(const PCMatrix& a,
                                  const AffinePotential& p) {
  require_rplus(a, "reconstruction_residual_sq");
  require_potential_for(p, a);
  // Each unordered pair contributes twice: the defect of a_ij and of a_ji
  // have equal magnitude in the log domain.
  return 2.0 * lsq_objective(a, p.f);
}

}  // namespace gpc
