#include "gpc/distance.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace gpc {

DistanceMatrix DistanceMatrix::zero(int n) {
  if (n < 2) {
    throw DimensionError("distance matrix requires n >= 2");
  }
  return DistanceMatrix(Eigen::MatrixXd::Zero(n, n));
}

DistanceMatrix DistanceMatrix::from_matrix(Eigen::MatrixXd k) {
  if (k.rows() != k.cols() || k.rows() < 2) {
    throw DimensionError("distance matrix must be square with n >= 2");
  }
  for (int i = 0; i < k.rows(); ++i) {
    if (k(i, i) != 0.0) {
      throw Error("distance matrix diagonal must be zero");
    }
    for (int j = 0; j < k.cols(); ++j) {
      if (!(k(i, j) >= 0.0) || !std::isfinite(k(i, j))) {
        throw Error("distance matrix entries must be finite and nonnegative");
      }
      if (k(i, j) != k(j, i)) {
        throw Error("distance matrix must be symmetric");
      }
    }
  }
  return DistanceMatrix(std::move(k));
}

DistanceMatrix DistanceMatrix::from_upper(int n,
                                          const std::vector<double>& upper) {
  if (n < 2) {
    throw DimensionError("distance matrix requires n >= 2");
  }
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (upper.size() != expected) {
    throw DimensionError("upper triangle has " + std::to_string(upper.size()) +
                         " entries, expected " + std::to_string(expected));
  }
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++idx) {
      k(i, j) = upper[idx];
      k(j, i) = upper[idx];
    }
  }
  return from_matrix(std::move(k));
}

double DistanceMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= size() || j >= size()) {
    throw IndexOutOfRange("distance matrix index out of range");
  }
  return k_(i, j);
}

int DistanceMatrix::nonzero_count() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (i != j && k_(i, j) != 0.0) ++count;
    }
  }
  return count;
}

DistanceMatrix to_distance(const PCMatrix& a) {
  if (a.spec().kind() != GroupKind::RPlus) {
    throw UnsupportedGroup("to_distance is defined on rplus matrices only");
  }
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(a.size(), a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) {
      const double d = std::abs(std::log(a.upper(i, j).rplus_value()));
      k(i, j) = d;
      k(j, i) = d;
    }
  }
  return DistanceMatrix::from_matrix(std::move(k));
}

namespace {

std::vector<std::pair<int, int>> nonzero_pairs(const DistanceMatrix& k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k.size(); ++i) {
    for (int j = i + 1; j < k.size(); ++j) {
      if (k.at(i, j) != 0.0) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

}  // namespace

std::uint64_t count_lifts(const DistanceMatrix& k) {
  const auto bits = nonzero_pairs(k).size();
  if (bits > 63) {
    throw Error("lift count 2^" + std::to_string(bits) +
                " exceeds the 64-bit range");
  }
  return std::uint64_t{1} << bits;
}

void for_each_lift(const DistanceMatrix& k,
                   const std::function<bool(const PCMatrix&)>& fn) {
  const auto pairs = nonzero_pairs(k);
  if (pairs.size() > static_cast<std::size_t>(kMaxLiftBits)) {
    throw EnumerationCap("lift enumeration capped at 2^" +
                         std::to_string(kMaxLiftBits) + "; this matrix has 2^" +
                         std::to_string(pairs.size()) + " lifts");
  }
  const GroupSpec spec = GroupSpec::rplus();
  const int n = k.size();
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<GroupElement> upper(
      static_cast<std::size_t>(n) * (n - 1) / 2, identity(spec));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::size_t idx = 0;
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++idx) {
        const double d = k.at(i, j);
        if (d == 0.0) {
          upper[idx] = identity(spec);
          continue;
        }
        const double sign = (mask >> bit) & 1u ? -1.0 : 1.0;
        upper[idx] = GroupElement::rplus(std::exp(sign * d), spec);
        ++bit;
      }
    }
    if (!fn(PCMatrix::from_upper(spec, n, upper))) return;
  }
}

std::vector<PCMatrix> enumerate_lifts(const DistanceMatrix& k) {
  std::vector<PCMatrix> out;
  for_each_lift(k, [&](const PCMatrix& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<PCMatrix> consistent_lifts(const DistanceMatrix& k, double tol) {
  std::vector<PCMatrix> out;
  for_each_lift(k, [&](const PCMatrix& m) {
    if (is_covariant_consistent(m, tol)) out.push_back(m);
    return true;
  });
  return out;
}

bool triangle_check(const DistanceMatrix& k, double slack) {
  const int n = k.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        if (i == j || j == l || i == l) continue;
        if (k.at(i, l) > k.at(i, j) + k.at(j, l) + slack) return false;
      }
    }
  }
  return true;
}

}  // namespace gpc
