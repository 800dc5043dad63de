#include "gpc/gauge.hpp"

#include <string>
#include <utility>

namespace gpc {

namespace {

void require_gauge_for(const GaugeVector& g, const PCMatrix& a,
                       const char* op) {
  if (g.spec != a.spec()) {
    throw SpecMismatch(std::string(op) + ": gauge and matrix specs differ");
  }
  if (static_cast<int>(g.entries.size()) != a.size()) {
    throw SpecMismatch(std::string(op) + ": gauge has " +
                       std::to_string(g.entries.size()) +
                       " entries for an n = " + std::to_string(a.size()) +
                       " matrix");
  }
  for (const auto& e : g.entries) {
    if (e.spec() != g.spec) {
      throw SpecMismatch(std::string(op) +
                         ": gauge entry belongs to a different group");
    }
  }
}

}  // namespace

GaugeVector identity_gauge(const GroupSpec& spec, int n) {
  GaugeVector g{spec, {}};
  g.entries.assign(static_cast<std::size_t>(n), identity(spec));
  return g;
}

GaugeVector gauge_compose(const GaugeVector& g, const GaugeVector& h) {
  if (g.spec != h.spec || g.entries.size() != h.entries.size()) {
    throw SpecMismatch("gauge_compose: gauges are not composable");
  }
  GaugeVector out{g.spec, {}};
  out.entries.reserve(g.entries.size());
  for (std::size_t i = 0; i < g.entries.size(); ++i) {
    out.entries.push_back(compose(g.entries[i], h.entries[i]));
  }
  return out;
}

GaugeVector gauge_inverse(const GaugeVector& g) {
  GaugeVector out{g.spec, {}};
  out.entries.reserve(g.entries.size());
  for (const auto& e : g.entries) out.entries.push_back(inverse(e));
  return out;
}

PCMatrix left_action(const GaugeVector& g, const PCMatrix& a) {
  require_gauge_for(g, a, "left_action");
  const int n = a.size();
  std::vector<GroupElement> upper;
  upper.reserve(a.upper_entries().size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      upper.push_back(compose(g.entries[static_cast<std::size_t>(i)],
                              a.upper(i, j)));
    }
  }
  return PCMatrix::from_upper(a.spec(), n, std::move(upper));
}

PCMatrix right_action(const GaugeVector& g, const PCMatrix& a) {
  require_gauge_for(g, a, "right_action");
  const int n = a.size();
  std::vector<GroupElement> upper;
  upper.reserve(a.upper_entries().size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      upper.push_back(compose(a.upper(i, j),
                              g.entries[static_cast<std::size_t>(j)]));
    }
  }
  return PCMatrix::from_upper(a.spec(), n, std::move(upper));
}

PCMatrix ad_action(const GaugeVector& g, const PCMatrix& a) {
  require_gauge_for(g, a, "ad_action");
  const int n = a.size();
  std::vector<GroupElement> upper;
  upper.reserve(a.upper_entries().size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      upper.push_back(
          compose(g.entries[static_cast<std::size_t>(i)],
                  compose(a.upper(i, j),
                          inverse(g.entries[static_cast<std::size_t>(j)]))));
    }
  }
  return PCMatrix::from_upper(a.spec(), n, std::move(upper));
}

PCMatrix coad_action(const GaugeVector& g, const PCMatrix& a) {
  return ad_action(gauge_inverse(g), a);
}

bool orbit_of_identity_contains(const PCMatrix& a, double tol) {
  GaugeVector g{a.spec(), {}};
  g.entries.reserve(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) g.entries.push_back(a.entry(i, 0));
  const PCMatrix rebuilt = ad_action(g, PCMatrix(a.spec(), a.size()));
  return matrix_distance(a, rebuilt) <= tol;
}

GaugeVector LeftConsistentize3::family(const GroupElement& first,
                                       const GroupElement& last) const {
  return GaugeVector{gauge.spec, {first, determined, last}};
}

LeftConsistentize3 left_consistentize_3(const PCMatrix& a) {
  if (a.size() != 3) {
    throw DimensionError("left_consistentize_3 requires n = 3");
  }
  const GroupElement determined =
      compose(a.entry(1, 0), compose(a.entry(0, 2), a.entry(2, 1)));
  const GroupElement e = identity(a.spec());
  const GaugeVector gauge{a.spec(), {e, determined, e}};
  return LeftConsistentize3{determined, gauge, left_action(gauge, a)};
}

bool left_orbit_obstruction(const PCMatrix& a, double tol) {
  if (a.size() < 4) {
    throw DimensionError("left_orbit_obstruction requires n >= 4");
  }
  // Window of consecutive indices (s .. s+3): the relation
  // a_{s,s+3} = a_{s,s+2} * a_{s+2,s+1} * a_{s+1,s+3} must hold.
  for (int s = 0; s + 3 < a.size(); ++s) {
    const GroupElement rhs =
        compose(a.entry(s, s + 2),
                compose(a.entry(s + 2, s + 1), a.entry(s + 1, s + 3)));
    const GroupElement defect = compose(inverse(a.entry(s, s + 3)), rhs);
    if (deviation(defect) > tol) return false;
  }
  return true;
}

PhiDecomposition phi_n(const PCMatrix& a) {
  if (a.size() < 3) {
    throw DimensionError("phi_n requires n >= 3");
  }
  const int n = a.size();
  std::vector<GroupElement> chain_upper;
  chain_upper.reserve(a.upper_entries().size());
  std::map<std::pair<int, int>, GroupElement> components;
  for (int i = 0; i + 1 < n; ++i) {
    GroupElement chain = a.upper(i, i + 1);
    chain_upper.push_back(chain);
    for (int j = i + 2; j < n; ++j) {
      chain = compose(chain, a.upper(j - 1, j));
      chain_upper.push_back(chain);
      components.emplace(std::make_pair(i, j), compose(chain, a.entry(j, i)));
    }
  }
  return PhiDecomposition{
      PCMatrix::from_upper(a.spec(), n, std::move(chain_upper)),
      std::move(components)};
}

PCMatrix phi_n_inverse(const PhiDecomposition& d) {
  const PCMatrix& b = d.consistent_part;
  const int n = b.size();
  if (n < 3) {
    throw MalformedDecomposition("decomposition requires n >= 3");
  }
  if (!is_covariant_consistent(b)) {
    throw MalformedDecomposition("consistent part fails consistency");
  }
  const std::size_t expected =
      static_cast<std::size_t>(n - 1) * (n - 2) / 2;
  if (d.components.size() != expected) {
    throw MalformedDecomposition(
        "decomposition has " + std::to_string(d.components.size()) +
        " components, expected " + std::to_string(expected));
  }
  std::vector<GroupElement> upper;
  upper.reserve(b.upper_entries().size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j == i + 1) {
        upper.push_back(b.upper(i, j));
        continue;
      }
      const auto it = d.components.find({i, j});
      if (it == d.components.end()) {
        throw MalformedDecomposition("missing component (" +
                                     std::to_string(i + 1) + ", " +
                                     std::to_string(j + 1) + ")");
      }
      if (it->second.spec() != b.spec()) {
        throw MalformedDecomposition("component belongs to a different group");
      }
      // c_ij = b_ij * a_ji, so the upper entry is a_ij = c_ij^-1 * b_ij.
      upper.push_back(compose(inverse(it->second), b.upper(i, j)));
    }
  }
  return PCMatrix::from_upper(b.spec(), n, std::move(upper));
}

PhiDecomposition component_ad_transform(const GaugeVector& g,
                                        const PhiDecomposition& d) {
  require_gauge_for(g, d.consistent_part, "component_ad_transform");
  PhiDecomposition out{ad_action(g, d.consistent_part), {}};
  for (const auto& [key, value] : d.components) {
    const auto& gi = g.entries[static_cast<std::size_t>(key.first)];
    out.components.emplace(key, compose(gi, compose(value, inverse(gi))));
  }
  return out;
}

}  // namespace gpc
