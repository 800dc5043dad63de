#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpc/gauge.hpp"
#include "gpc/pc_matrix.hpp"

namespace gpc {

/// Partial-path budget for walk enumeration; exceeding it raises
/// BudgetExceeded rather than silently truncating.
inline constexpr std::size_t kDefaultPathBudget = 1'000'000;

struct GraphEdge {
  int i;
  int j;
  GroupElement value;  // oriented i -> j
};

/// A PC matrix on a connected simple graph: comparisons exist only on the
/// edges, missing pairs are holes (never a group element). Reciprocity holds
/// on every edge by construction: traversing j -> i yields the inverse.
class GraphPCMatrix {
 public:
  GraphPCMatrix(GroupSpec spec, int n, const std::vector<GraphEdge>& edges);

  int size() const noexcept { return n_; }
  const GroupSpec& spec() const noexcept { return spec_; }

  bool has_edge(int i, int j) const;
  /// Coefficient for traversing i -> j; throws InvalidPath on a hole.
  GroupElement edge_value(int i, int j) const;
  /// Canonical (i < j) edge list, sorted.
  std::vector<std::pair<int, int>> edges() const;
  const std::vector<int>& neighbors(int v) const;
  int edge_count() const noexcept { return static_cast<int>(values_.size()); }

 private:
  void check_node(int v) const;

  GroupSpec spec_;
  int n_;
  std::map<std::pair<int, int>, GroupElement> values_;  // keyed i < j
  std::vector<std::vector<int>> adjacency_;             // sorted neighbor lists
};

/// A walk given by its node sequence; consecutive nodes must be adjacent.
using GraphPath = std::vector<int>;

/// Ordered product of edge coefficients along the path; a single-node path
/// is the empty loop with identity holonomy.
GroupElement path_holonomy(const GraphPCMatrix& a, const GraphPath& path);

struct HolonomyEntry {
  GroupElement element;
  int order;  // minimal realizing walk length (in edges)
};

/// All holonomies of backtrack-reduced walks from s to t of length <= max_length,
/// deduplicated within the spec tolerance and tagged with the minimal length.
/// Walks with backtracks contribute nothing new: they reduce to shorter walks
/// with the same holonomy.
std::vector<HolonomyEntry> holonomy_set(const GraphPCMatrix& a, int s, int t,
                                        int max_length,
                                        std::size_t budget = kDefaultPathBudget);

/// Fundamental-cycle holonomies at basepoint s: one generator per non-tree
/// edge of the canonical spanning tree, |E| - |V| + 1 in total. They generate
/// the holonomy group at s.
std::vector<GroupElement> holonomy_generators(const GraphPCMatrix& a, int s);

/// Tree-path holonomy h from s to t: conjugating the generators at t by h
/// yields the generators at s (generator by generator, same canonical tree).
GroupElement conjugacy_witness(const GraphPCMatrix& a, int s, int t);

/// True iff the holonomy group is trivial, i.e. every fundamental-cycle
/// generator has deviation <= tol. Independent of the basepoint.
bool is_graph_consistent(const GraphPCMatrix& a,
                         double tol = kConsistencyTolerance);

/// Weights with a_ij = w_i * w_j^-1 on every present edge, propagated along
/// the canonical spanning tree from w_root = e. Throws InconsistentInput if
/// the graph is not consistent within tol.
WeightVector graph_weights(const GraphPCMatrix& a,
                           double tol = kConsistencyTolerance);

/// Minimal length of a loop at s whose holonomy matches h within the spec
/// tolerance; the identity has order 0 (empty loop). Returns nullopt if no
/// loop of length <= max_length realizes h.
std::optional<int> element_order(const GraphPCMatrix& a, int s,
                                 const GroupElement& h, int max_length,
                                 std::size_t budget = kDefaultPathBudget);

/// Inconsistency spectrum graded by loop length.
struct RankedSeries {
  std::vector<double> coefficients;  // index = loop length, size N + 1

  int max_length() const { return static_cast<int>(coefficients.size()) - 1; }
  /// Polynomial text like "0.5·X^3 + 0.2·X^4"; "0" when all vanish.
  std::string text() const;
};

/// Coefficient a_n = max of score over backtrack-reduced loops at s of
/// length exactly n, for n = 0..max_length. The score must vanish at the
/// identity; the default is 1 - exp(-deviation(h)).
RankedSeries ranked_kii(const GraphPCMatrix& a, int s, int max_length,
                        const std::function<double(const GroupElement&)>& score = {},
                        std::size_t budget = kDefaultPathBudget);

/// Adjoint action on present entries only; holes stay holes.
GraphPCMatrix graph_gauge_action(const GaugeVector& g, const GraphPCMatrix& a);

}  // namespace gpc
