#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is deliberately written against the definitions, not the
// library internals: cycles are enumerated by DFS instead of spanning trees,
// probabilities come from quadrature of the density, gradients from finite
// differences, and the least-squares solution from its closed form.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "gpc/graph.hpp"
#include "gpc/group.hpp"
#include "gpc/pc_matrix.hpp"

namespace oracles {

/// Every simple cycle of the graph has trivial holonomy within tol.
/// Cycles are enumerated by DFS: a cycle is discovered from its smallest
/// node, only larger nodes may participate, and of the two orientations the
/// one whose second node is smaller than its last is kept, so each undirected
/// cycle is checked exactly once.
inline bool all_simple_cycles_trivial(const gpc::GraphPCMatrix& a, double tol) {
  std::vector<int> path;
  bool ok = true;
  std::function<void(int)> dfs = [&](int v) {
    if (!ok) return;
    const int start = path.front();
    for (int w : a.neighbors(v)) {
      if (!ok) return;
      if (w == start && path.size() >= 3) {
        if (path[1] < path.back()) {
          gpc::GroupElement h = gpc::identity(a.spec());
          for (std::size_t m = 0; m + 1 < path.size(); ++m) {
            h = gpc::compose(h, a.edge_value(path[m], path[m + 1]));
          }
          h = gpc::compose(h, a.edge_value(path.back(), start));
          if (gpc::deviation(h) > tol) ok = false;
        }
      } else if (w > start &&
                 std::find(path.begin(), path.end(), w) == path.end()) {
        path.push_back(w);
        dfs(w);
        path.pop_back();
      }
    }
  };
  for (int s = 0; s < a.size() && ok; ++s) {
    path.assign(1, s);
    dfs(s);
  }
  return ok;
}

/// P(|X| <= c) for X ~ Normal(0, sigma^2), by composite Simpson quadrature
/// of the density over [-c, c].
inline double normal_band_probability(double sigma, double c,
                                      int steps = 20000) {
  if (steps % 2 != 0) ++steps;
  const double h = 2.0 * c / steps;
  const double norm = 1.0 / (sigma * std::sqrt(2.0 * M_PI));
  auto density = [&](double x) {
    return norm * std::exp(-0.5 * (x / sigma) * (x / sigma));
  };
  double sum = density(-c) + density(c);
  for (int k = 1; k < steps; ++k) {
    sum += (k % 2 == 1 ? 4.0 : 2.0) * density(-c + k * h);
  }
  return sum * h / 3.0;
}

/// Central-difference gradient of a scalar function of a vector.
inline std::vector<double> numeric_gradient(
    const std::function<double(const std::vector<double>&)>& fn,
    std::vector<double> x, double h = 1e-5) {
  std::vector<double> grad(x.size(), 0.0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double saved = x[k];
    x[k] = saved + h;
    const double up = fn(x);
    x[k] = saved - h;
    const double down = fn(x);
    x[k] = saved;
    grad[k] = (up - down) / (2.0 * h);
  }
  return grad;
}

/// Closed-form minimizer of sum over i < j of (f_i - f_j + ln a_ij)^2 with
/// f_0 = 0: stationarity gives n f_k = S - sum_{j != k} ln a_kj up to the
/// common shift S, so f_k - f_0 depends only on row log-sums.
inline std::vector<double> lsq_closed_form(const gpc::PCMatrix& a) {
  const int n = a.size();
  std::vector<double> row(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) row[i] += std::log(a.entry(i, j).rplus_value());
    }
  }
  std::vector<double> f(n, 0.0);
  for (int k = 1; k < n; ++k) f[k] = (row[0] - row[k]) / n;
  return f;
}

}  // namespace oracles
