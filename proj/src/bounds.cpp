#include "plum/bounds.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace plum {

namespace {

void require_tree(const PlanarGraph& g, const SpanningTree& t) {
  if (auto problems = validate_tree(g, t); !problems.empty())
    throw std::invalid_argument("invalid spanning tree: " + problems.front());
}

// For every crossing, whether the strand met first passes over.
struct PassOrder {
  CrossingId id;
  bool earlier_over = false;
};

std::vector<PassOrder> pass_order(const Diagram& d, const EdgeOrder& order) {
  const auto chains = edge_arc_chains(d.graph, d.map);
  std::set<EdgeId> listed;
  std::map<int, std::vector<bool>> seen;  // node -> over flag of each pass, in order
  for (const auto& step : order) {
    if (step.edge < 0 || step.edge >= d.graph.edge_count()) throw std::invalid_argument("unknown edge in order");
    if (!listed.insert(step.edge).second) throw std::invalid_argument("edge listed twice in order");
    auto chain = chains[std::size_t(step.edge)];
    if (!step.forward) std::reverse(chain.begin(), chain.end());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const int a = chain[i];
      const bool aligned = d.map.arcs[std::size_t(a)].forward == step.forward;
      const ArcEnd exit{a, aligned ? 1 : 0};
      const int node = d.map.node_of(exit);
      const Crossing& x = d.crossing(CrossingId{d.map.nodes[std::size_t(node)].ref});
      seen[node].push_back(x.over[0] == exit || x.over[1] == exit);
    }
  }
  std::vector<PassOrder> out;
  for (const auto& x : d.crossings) {
    auto it = seen.find(x.node);
    if (it == seen.end() || it->second.size() != 2)
      throw std::invalid_argument("crossing " + std::to_string(x.id.value) + " is not met twice by the ordered edges");
    out.push_back({x.id, it->second[0]});
  }
  return out;
}

std::vector<PassOrder> pass_order(const LinkDiagram& d) {
  std::vector<std::vector<bool>> seen(std::size_t(d.crossing_count()));
  for (int comp = 0; comp < d.components; ++comp) {
    int start = -1;
    for (int a = 0; a < static_cast<int>(d.arcs.size()) && start < 0; ++a)
      if (d.arcs[std::size_t(a)].component == comp) start = a;
    if (start < 0) continue;
    int cur = start;
    do {
      const int node = d.arcs[std::size_t(cur)].head;
      const int p = d.position(node, {cur, 1});
      seen[std::size_t(node)].push_back(p % 2 == d.crossings[std::size_t(node)].over);
      cur = d.crossings[std::size_t(node)].rotation[std::size_t((p + 2) % 4)].arc;
    } while (cur != start);
  }
  std::vector<PassOrder> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (seen[std::size_t(c)].size() != 2) throw std::invalid_argument("crossing is not met twice");
    out.push_back({CrossingId{c}, seen[std::size_t(c)][0]});
  }
  return out;
}

DescendingChange smaller_side(const std::vector<PassOrder>& passes) {
  std::vector<CrossingId> ascending;
  std::vector<CrossingId> descending;
  for (const auto& p : passes) (p.earlier_over ? descending : ascending).push_back(p.id);
  DescendingChange out;
  out.crossing_count = static_cast<int>(passes.size());
  if (ascending.size() <= descending.size()) {
    out.changed = std::move(ascending);
  } else {
    out.changed = std::move(descending);
    out.complement = true;
  }
  std::sort(out.changed.begin(), out.changed.end());
  return out;
}

Layering classify(const std::vector<PassOrder>& passes) {
  const auto over = std::count_if(passes.begin(), passes.end(), [](const PassOrder& p) { return p.earlier_over; });
  if (over == static_cast<long>(passes.size())) return Layering::descending;
  return over == 0 ? Layering::ascending : Layering::mixed;
}

}  // namespace

std::vector<std::int64_t> branch_indices(const PlanarGraph& g, const SpanningTree& t) {
  require_tree(g, t);
  const RootedTree rooted = root_tree(g, t);
  std::vector<std::int64_t> b(std::size_t(g.edge_count()), 1);
  std::vector<VertexId> by_depth(std::size_t(g.vertex_count()));
  std::iota(by_depth.begin(), by_depth.end(), 0);
  std::stable_sort(by_depth.begin(), by_depth.end(), [&](VertexId x, VertexId y) {
    return rooted.depth[std::size_t(x)] > rooted.depth[std::size_t(y)];
  });
  for (VertexId w : by_depth) {
    const EdgeId up = rooted.parent_edge[std::size_t(w)];
    if (up < 0) continue;
    std::int64_t sum = 0;
    bool any = false;
    for (const auto& end : g.rotation(w)) {
      if (end.edge == up) continue;
      sum += b[std::size_t(end.edge)];
      any = true;
    }
    b[std::size_t(up)] = any ? sum : 1;
  }
  return b;
}

std::int64_t reorder_cost(const PlanarGraph& g, const SpanningTree& t) {
  require_tree(g, t);
  const RootedTree rooted = root_tree(g, t);
  std::int64_t total = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const int l = rooted.tree_degree[std::size_t(u)];
    if (l >= 3) total += std::int64_t(std::max(0, (g.degree(u) - 1) / 2)) * (l - 1);
  }
  return total;
}

BoundConstants tree_bound_constants(const PlanarGraph& g, const SpanningTree& t) {
  require_tree(g, t);
  const RootedTree rooted = root_tree(g, t);
  BoundConstants c;
  c.tree = t;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    c.k.push_back(std::max(0, (g.degree(u) - 1) / 2));
    c.l.push_back(rooted.tree_degree[std::size_t(u)]);
  }
  c.branch = branch_indices(g, t);
  c.b = reorder_cost(g, t);
  const std::int64_t top = c.branch.empty() ? 1 : *std::max_element(c.branch.begin(), c.branch.end());
  c.a = top * top;
  return c;
}

BoundConstants optimize_constants(const PlanarGraph& g, std::size_t tree_cap) {
  auto trees = all_spanning_trees(g, 0, tree_cap);
  std::sort(trees.begin(), trees.end());
  std::optional<BoundConstants> best;
  for (const auto& tree : trees) {
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
      SpanningTree t = tree;
      t.root = root;
      BoundConstants c = tree_bound_constants(g, t);
      if (!best || c.a < best->a || (c.a == best->a && c.a * c.b < best->a * best->b)) best = std::move(c);
    }
  }
  if (!best) throw std::invalid_argument("graph has no spanning tree");
  return *best;
}

int trivializable_bound(int crossings) {
  if (crossings < 0) throw std::invalid_argument("negative crossing count");
  return crossings / 2;
}

EdgeOrder default_edge_order(const PlanarGraph& g, const SpanningTree& t) {
  std::set<EdgeId> tree(t.edges.begin(), t.edges.end());
  EdgeOrder order;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!tree.count(e)) order.push_back({e, true});
  return order;
}

DescendingChange descending_change_set(const Diagram& d, const SpanningTree& t, const EdgeOrder& order) {
  require_tree(d.graph, t);
  std::set<EdgeId> tree(t.edges.begin(), t.edges.end());
  for (const auto& step : order)
    if (tree.count(step.edge)) throw std::invalid_argument("edge order lists a tree edge");
  return smaller_side(pass_order(d, order));
}

Layering layering(const Diagram& d, const EdgeOrder& order) { return classify(pass_order(d, order)); }

DescendingChange descending_change_set(const LinkDiagram& d) { return smaller_side(pass_order(d)); }

Layering layering(const LinkDiagram& d) { return classify(pass_order(d)); }

Diagram apply_changes(const Diagram& d, const std::vector<CrossingId>& changed) {
  Diagram out = d;
  for (CrossingId x : changed) out = crossing_change(out, x);
  return out;
}

LinkDiagram apply_changes(const LinkDiagram& d, const std::vector<CrossingId>& changed) {
  LinkDiagram out = d;
  for (CrossingId x : changed) {
    if (x.value < 0 || x.value >= out.crossing_count()) throw std::invalid_argument("unknown crossing index");
    auto& c = out.crossings[std::size_t(x.value)];
    c.over = 1 - c.over;
  }
  return out;
}

}  // namespace plum
