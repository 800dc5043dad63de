#include "gpc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <string>

namespace gpc {

// ---------------------------------------------------------------------------
// GraphPCMatrix
// ---------------------------------------------------------------------------

GraphPCMatrix::GraphPCMatrix(GroupSpec spec, int n,
                             const std::vector<GraphEdge>& edges)
    : spec_(std::move(spec)), n_(n) {
  if (n < 1) {
    throw InvalidGraph("graph requires at least one node");
  }
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n) {
      throw InvalidGraph("edge endpoint out of range");
    }
    if (e.i == e.j) {
      throw InvalidGraph("self-loops are not allowed");
    }
    if (e.value.spec() != spec_) {
      throw SpecMismatch("edge value belongs to a different group");
    }
    const auto key = std::minmax(e.i, e.j);
    const GroupElement oriented =
        e.i < e.j ? e.value : inverse(e.value);
    if (!values_.emplace(std::make_pair(key.first, key.second), oriented)
             .second) {
      throw InvalidGraph("duplicate edge {" + std::to_string(key.first + 1) +
                         ", " + std::to_string(key.second + 1) + "}");
    }
    adjacency_[static_cast<std::size_t>(e.i)].push_back(e.j);
    adjacency_[static_cast<std::size_t>(e.j)].push_back(e.i);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());

  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adjacency_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != n) {
    throw InvalidGraph("graph is not connected");
  }
}

void GraphPCMatrix::check_node(int v) const {
  if (v < 0 || v >= n_) {
    throw IndexOutOfRange("node " + std::to_string(v) + " out of range");
  }
}

bool GraphPCMatrix::has_edge(int i, int j) const {
  check_node(i);
  check_node(j);
  if (i == j) return false;
  const auto key = std::minmax(i, j);
  return values_.count({key.first, key.second}) > 0;
}

GroupElement GraphPCMatrix::edge_value(int i, int j) const {
  check_node(i);
  check_node(j);
  const auto key = std::minmax(i, j);
  const auto it = values_.find({key.first, key.second});
  if (i == j || it == values_.end()) {
    throw InvalidPath("no comparison between " + std::to_string(i + 1) +
                      " and " + std::to_string(j + 1));
  }
  return i < j ? it->second : inverse(it->second);
}

std::vector<std::pair<int, int>> GraphPCMatrix::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(values_.size());
  for (const auto& [key, value] : values_) out.push_back(key);
  return out;
}

const std::vector<int>& GraphPCMatrix::neighbors(int v) const {
  check_node(v);
  return adjacency_[static_cast<std::size_t>(v)];
}

// ---------------------------------------------------------------------------
// Walk machinery
// ---------------------------------------------------------------------------

GroupElement path_holonomy(const GraphPCMatrix& a, const GraphPath& path) {
  if (path.empty()) {
    throw InvalidPath("path needs at least one node");
  }
  if (path.front() < 0 || path.front() >= a.size()) {
    throw IndexOutOfRange("path node out of range");
  }
  GroupElement h = identity(a.spec());
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    h = compose(h, a.edge_value(path[k], path[k + 1]));
  }
  return h;
}

namespace {

// The canonical spanning tree: breadth-first from node 0 with ascending
// neighbor order. One tree serves every basepoint so that generator lists
// at different basepoints correspond generator-by-generator.
struct SpanningTree {
  std::vector<int> parent;  // -1 at the root
  std::vector<int> depth;
};

SpanningTree canonical_tree(const GraphPCMatrix& a) {
  SpanningTree tree;
  tree.parent.assign(static_cast<std::size_t>(a.size()), -2);
  tree.depth.assign(static_cast<std::size_t>(a.size()), 0);
  std::deque<int> queue{0};
  tree.parent[0] = -1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : a.neighbors(v)) {
      if (tree.parent[static_cast<std::size_t>(w)] == -2) {
        tree.parent[static_cast<std::size_t>(w)] = v;
        tree.depth[static_cast<std::size_t>(w)] =
            tree.depth[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return tree;
}

GraphPath tree_path(const SpanningTree& tree, int s, int t) {
  std::vector<int> up_s;
  std::vector<int> up_t;
  int x = s;
  int y = t;
  while (tree.depth[static_cast<std::size_t>(x)] >
         tree.depth[static_cast<std::size_t>(y)]) {
    up_s.push_back(x);
    x = tree.parent[static_cast<std::size_t>(x)];
  }
  while (tree.depth[static_cast<std::size_t>(y)] >
         tree.depth[static_cast<std::size_t>(x)]) {
    up_t.push_back(y);
    y = tree.parent[static_cast<std::size_t>(y)];
  }
  while (x != y) {
    up_s.push_back(x);
    x = tree.parent[static_cast<std::size_t>(x)];
    up_t.push_back(y);
    y = tree.parent[static_cast<std::size_t>(y)];
  }
  GraphPath path = std::move(up_s);
  path.push_back(x);
  for (auto it = up_t.rbegin(); it != up_t.rend(); ++it) path.push_back(*it);
  return path;
}

bool is_tree_edge(const SpanningTree& tree, int u, int v) {
  return tree.parent[static_cast<std::size_t>(u)] == v ||
         tree.parent[static_cast<std::size_t>(v)] == u;
}

struct WalkState {
  int node;
  int prev;  // -1 at the start; immediate reversal is excluded
  GroupElement holonomy;
};

// Breadth-first enumeration of backtrack-reduced walks from s, by length.
// visit(state, length) is called for every walk including the empty one.
// Each created walk state counts against the budget.
template <typename Visitor>
void for_each_reduced_walk(const GraphPCMatrix& a, int s, int max_length,
                           std::size_t budget, Visitor&& visit) {
  if (s < 0 || s >= a.size()) {
    throw IndexOutOfRange("basepoint out of range");
  }
  std::size_t created = 1;
  std::vector<WalkState> frontier{{s, -1, identity(a.spec())}};
  visit(frontier.front(), 0);
  for (int length = 1; length <= max_length && !frontier.empty(); ++length) {
    std::vector<WalkState> next;
    for (const auto& state : frontier) {
      for (int w : a.neighbors(state.node)) {
        if (w == state.prev) continue;
        if (++created > budget) {
          throw BudgetExceeded("walk enumeration exceeded the budget of " +
                               std::to_string(budget) + " partial paths");
        }
        next.push_back(WalkState{
            w, state.node, compose(state.holonomy,
                                   a.edge_value(state.node, w))});
        visit(next.back(), length);
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

std::vector<HolonomyEntry> holonomy_set(const GraphPCMatrix& a, int s, int t,
                                        int max_length, std::size_t budget) {
  if (t < 0 || t >= a.size()) {
    throw IndexOutOfRange("target node out of range");
  }
  const double tol = a.spec().tolerance();
  std::vector<HolonomyEntry> out;
  for_each_reduced_walk(a, s, max_length, budget,
                        [&](const WalkState& state, int length) {
                          if (state.node != t) return;
                          for (const auto& entry : out) {
                            if (close(entry.element, state.holonomy, tol)) {
                              return;  // seen at a shorter or equal length
                            }
                          }
                          out.push_back(HolonomyEntry{state.holonomy, length});
                        });
  return out;
}

std::vector<GroupElement> holonomy_generators(const GraphPCMatrix& a, int s) {
  if (s < 0 || s >= a.size()) {
    throw IndexOutOfRange("basepoint out of range");
  }
  const SpanningTree tree = canonical_tree(a);
  std::vector<GroupElement> generators;
  for (const auto& [u, v] : a.edges()) {
    if (is_tree_edge(tree, u, v)) continue;
    GraphPath loop = tree_path(tree, s, u);
    loop.push_back(v);
    const GraphPath back = tree_path(tree, v, s);
    loop.insert(loop.end(), back.begin() + 1, back.end());
    generators.push_back(path_holonomy(a, loop));
  }
  return generators;
}

GroupElement conjugacy_witness(const GraphPCMatrix& a, int s, int t) {
  if (s < 0 || s >= a.size() || t < 0 || t >= a.size()) {
    throw IndexOutOfRange("node out of range");
  }
  return path_holonomy(a, tree_path(canonical_tree(a), s, t));
}

bool is_graph_consistent(const GraphPCMatrix& a, double tol) {
  for (const auto& g : holonomy_generators(a, 0)) {
    if (deviation(g) > tol) return false;
  }
  return true;
}

WeightVector graph_weights(const GraphPCMatrix& a, double tol) {
  if (!is_graph_consistent(a, tol)) {
    throw InconsistentInput("graph_weights requires a consistent graph");
  }
  const SpanningTree tree = canonical_tree(a);
  WeightVector w{a.spec(), {}};
  w.entries.assign(static_cast<std::size_t>(a.size()), identity(a.spec()));
  // Parents precede children in breadth-first order of depth; a_uv = w_u w_v^-1
  // forces w_child = a_{parent,child}^-1 * w_parent.
  std::vector<int> order(static_cast<std::size_t>(a.size()));
  for (int v = 0; v < a.size(); ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return tree.depth[static_cast<std::size_t>(x)] <
           tree.depth[static_cast<std::size_t>(y)];
  });
  for (int v : order) {
    const int p = tree.parent[static_cast<std::size_t>(v)];
    if (p < 0) continue;
    w.entries[static_cast<std::size_t>(v)] =
        compose(inverse(a.edge_value(p, v)),
                w.entries[static_cast<std::size_t>(p)]);
  }
  return w;
}

std::optional<int> element_order(const GraphPCMatrix& a, int s,
                                 const GroupElement& h, int max_length,
                                 std::size_t budget) {
  if (h.spec() != a.spec()) {
    throw SpecMismatch("element_order: element belongs to a different group");
  }
  const double tol = a.spec().tolerance();
  std::optional<int> found;
  for_each_reduced_walk(a, s, max_length, budget,
                        [&](const WalkState& state, int length) {
                          if (found || state.node != s) return;
                          if (close(state.holonomy, h, tol)) found = length;
                        });
  return found;
}

std::string RankedSeries::text() const {
  std::string out;
  char buffer[64];
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    if (coefficients[n] == 0.0) continue;
    std::snprintf(buffer, sizeof(buffer), "%.12g", coefficients[n]);
    if (!out.empty()) out += " + ";
    out += buffer;
    out += "·X^";
    out += std::to_string(n);
  }
  return out.empty() ? "0" : out;
}

RankedSeries ranked_kii(const GraphPCMatrix& a, int s, int max_length,
                        const std::function<double(const GroupElement&)>& score,
                        std::size_t budget) {
  if (max_length < 0) {
    throw InvalidInterval("ranked_kii requires max_length >= 0");
  }
  const std::function<double(const GroupElement&)> f =
      score ? score : [](const GroupElement& h) {
        return 1.0 - std::exp(-deviation(h));
      };
  if (std::abs(f(identity(a.spec()))) > 1e-12) {
    throw Error("ranked_kii: score map must vanish at the identity");
  }
  RankedSeries series;
  series.coefficients.assign(static_cast<std::size_t>(max_length) + 1, 0.0);
  for_each_reduced_walk(
      a, s, max_length, budget, [&](const WalkState& state, int length) {
        if (state.node != s) return;
        auto& coef = series.coefficients[static_cast<std::size_t>(length)];
        coef = std::max(coef, f(state.holonomy));
      });
  return series;
}

GraphPCMatrix graph_gauge_action(const GaugeVector& g, const GraphPCMatrix& a) {
  if (g.spec != a.spec()) {
    throw SpecMismatch("graph_gauge_action: gauge and graph specs differ");
  }
  if (static_cast<int>(g.entries.size()) != a.size()) {
    throw SpecMismatch("graph_gauge_action: gauge size does not match");
  }
  std::vector<GraphEdge> edges;
  edges.reserve(static_cast<std::size_t>(a.edge_count()));
  for (const auto& [i, j] : a.edges()) {
    edges.push_back(GraphEdge{
        i, j,
        compose(g.entries[static_cast<std::size_t>(i)],
                compose(a.edge_value(i, j),
                        inverse(g.entries[static_cast<std::size_t>(j)])))});
  }
  return GraphPCMatrix(a.spec(), a.size(), edges);
}

}  // namespace gpc
