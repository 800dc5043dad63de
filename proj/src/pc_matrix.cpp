#include "gpc/pc_matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace gpc {

// ---------------------------------------------------------------------------
// PCMatrix
// ---------------------------------------------------------------------------

PCMatrix::PCMatrix(GroupSpec spec, int n, std::vector<GroupElement> upper)
    : spec_(std::move(spec)), n_(n), upper_(std::move(upper)) {}

PCMatrix::PCMatrix(GroupSpec spec, int n)
    : spec_(std::move(spec)), n_(n) {
  if (n < 2) {
    throw DimensionError("pc matrix requires n >= 2");
  }
  const GroupElement e = identity(spec_);
  upper_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, e);
}

PCMatrix PCMatrix::from_upper(GroupSpec spec, int n,
                              std::vector<GroupElement> upper) {
  if (n < 2) {
    throw DimensionError("pc matrix requires n >= 2");
  }
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (upper.size() != expected) {
    throw DimensionError("upper triangle has " + std::to_string(upper.size()) +
                         " entries, expected " + std::to_string(expected));
  }
  for (const auto& v : upper) {
    if (v.spec() != spec) {
      throw SpecMismatch("pc matrix entry belongs to a different group");
    }
  }
  return PCMatrix(std::move(spec), n, std::move(upper));
}

void PCMatrix::check_index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw IndexOutOfRange("pc matrix index (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") out of range for n = " +
                          std::to_string(n_));
  }
}

std::size_t PCMatrix::upper_index(int i, int j) const {
  // Row-major offset into the strict upper triangle, i < j.
  const auto row_start = static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2;
  return row_start + static_cast<std::size_t>(j - i - 1);
}

GroupElement PCMatrix::entry(int i, int j) const {
  check_index(i, j);
  if (i == j) return identity(spec_);
  if (i < j) return upper_[upper_index(i, j)];
  return inverse(upper_[upper_index(j, i)]);
}

const GroupElement& PCMatrix::upper(int i, int j) const {
  check_index(i, j);
  if (i >= j) {
    throw IndexOutOfRange("upper: requires i < j");
  }
  return upper_[upper_index(i, j)];
}

PCMatrix PCMatrix::with_entry(int i, int j, const GroupElement& value) const {
  check_index(i, j);
  if (i == j) {
    throw IndexOutOfRange("with_entry: diagonal entries are fixed to the identity");
  }
  if (value.spec() != spec_) {
    throw SpecMismatch("with_entry: value belongs to a different group");
  }
  PCMatrix out = *this;
  if (i < j) {
    out.upper_[upper_index(i, j)] = value;
  } else {
    out.upper_[upper_index(j, i)] = inverse(value);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions and predicates
// ---------------------------------------------------------------------------

PCMatrix from_weights(const WeightVector& w) {
  const int n = static_cast<int>(w.entries.size());
  if (n < 2) {
    throw DimensionError("from_weights requires at least two weights");
  }
  for (const auto& e : w.entries) {
    if (e.spec() != w.spec) {
      throw SpecMismatch("weight entry belongs to a different group");
    }
  }
  std::vector<GroupElement> upper;
  upper.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      upper.push_back(compose(w.entries[i], inverse(w.entries[j])));
    }
  }
  return PCMatrix::from_upper(w.spec, n, std::move(upper));
}

namespace {

template <typename Defect>
bool all_triads_within(const PCMatrix& a, double tol, Defect defect) {
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (deviation(defect(a, i, j, k)) > tol) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_covariant_consistent(const PCMatrix& a, double tol) {
  return all_triads_within(a, tol, [](const PCMatrix& m, int i, int j, int k) {
    return compose(inverse(m.entry(i, k)),
                   compose(m.entry(i, j), m.entry(j, k)));
  });
}

bool is_contravariant_consistent(const PCMatrix& a, double tol) {
  return all_triads_within(a, tol, [](const PCMatrix& m, int i, int j, int k) {
    return compose(inverse(m.entry(i, k)),
                   compose(m.entry(j, k), m.entry(i, j)));
  });
}

PCMatrix dual(const PCMatrix& a) {
  std::vector<GroupElement> upper;
  upper.reserve(a.upper_entries().size());
  for (const auto& v : a.upper_entries()) {
    upper.push_back(inverse(v));
  }
  return PCMatrix::from_upper(a.spec(), a.size(), std::move(upper));
}

PCMatrix apply_morphism(const PCMatrix& a, MorphismKind morphism) {
  switch (morphism) {
    case MorphismKind::Identity:
      return a;
    case MorphismKind::AbsDet: {
      const GroupKind k = a.spec().kind();
      if (k != GroupKind::GL && k != GroupKind::RPlus) {
        throw UnsupportedMorphism(
            "abs-det morphism applies to gl and rplus matrices only");
      }
      std::vector<GroupElement> upper;
      upper.reserve(a.upper_entries().size());
      for (const auto& v : a.upper_entries()) {
        upper.push_back(det_morphism(v));
      }
      return PCMatrix::from_upper(GroupSpec::rplus(a.spec().tolerance()),
                                  a.size(), std::move(upper));
    }
  }
  throw UnsupportedMorphism("unknown morphism kind");
}

double matrix_distance(const PCMatrix& a, const PCMatrix& b) {
  if (a.spec() != b.spec() || a.size() != b.size()) {
    throw SpecMismatch("matrix_distance: matrices are not comparable");
  }
  double worst = 0.0;
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d =
          deviation(compose(inverse(b.upper(i, j)), a.upper(i, j)));
      worst = std::max(worst, d);
    }
  }
  return worst;
}

WeightVector weights_from_consistent(const PCMatrix& a, int anchor) {
  if (anchor < 0 || anchor >= a.size()) {
    throw IndexOutOfRange("weights_from_consistent: anchor out of range");
  }
  WeightVector w{a.spec(), {}};
  w.entries.reserve(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    w.entries.push_back(a.entry(i, anchor));
  }
  return w;
}

}  // namespace gpc
