#include "plum/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace plum {

namespace {

std::size_t end_index(EdgeEnd end) {
  return static_cast<std::size_t>(2 * end.edge + end.side);
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[static_cast<std::size_t>(y)] = x;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Neighbour lists in edge-id order, loops skipped.
std::vector<std::vector<std::pair<EdgeId, VertexId>>> adjacency(const PlanarGraph& g) {
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj(
      static_cast<std::size_t>(g.vertex_count()));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[static_cast<std::size_t>(e.a)].emplace_back(e.id, e.b);
    adj[static_cast<std::size_t>(e.b)].emplace_back(e.id, e.a);
  }
  return adj;
}

}  // namespace

PlanarGraph::PlanarGraph(int vertex_count, std::vector<std::array<VertexId, 2>> endpoints,
                         std::vector<std::vector<EdgeEnd>> rotation)
    : vertex_count_(vertex_count), rotation_(std::move(rotation)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (static_cast<int>(rotation_.size()) != vertex_count)
    throw std::invalid_argument("rotation must list every vertex");
  edges_.reserve(endpoints.size());
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    const auto [a, b] = endpoints[i];
    if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
    edges_.push_back({static_cast<EdgeId>(i), a, b});
  }
  std::vector<int> seen(2 * edges_.size(), 0);
  for (int v = 0; v < vertex_count; ++v) {
    for (const auto& end : rotation_[static_cast<std::size_t>(v)]) {
      if (end.edge < 0 || end.edge >= edge_count() || (end.side != 0 && end.side != 1))
        throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                    " names an unknown edge end");
      if (vertex_of(end) != v)
        throw std::invalid_argument("rotation at vertex " + std::to_string(v) + " lists edge " +
                                    std::to_string(end.edge) + " which is not incident there");
      if (seen[end_index(end)]++ != 0)
        throw std::invalid_argument("edge end of edge " + std::to_string(end.edge) +
                                    " listed twice");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::invalid_argument("rotation misses an edge end");
}

PlanarGraph PlanarGraph::from_edges(int vertex_count,
                                    std::vector<std::array<VertexId, 2>> endpoints) {
  std::vector<std::vector<EdgeEnd>> rotation(static_cast<std::size_t>(std::max(vertex_count, 0)));
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    for (int side = 0; side < 2; ++side) {
      const VertexId v = endpoints[i][static_cast<std::size_t>(side)];
      if (v >= 0 && v < vertex_count)
        rotation[static_cast<std::size_t>(v)].push_back({static_cast<EdgeId>(i), side});
    }
  }
  return PlanarGraph(vertex_count, std::move(endpoints), std::move(rotation));
}

VertexId PlanarGraph::opposite(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.a == v) return ed.b;
  if (ed.b == v) return ed.a;
  throw std::invalid_argument("vertex is not an endpoint of the edge");
}

bool PlanarGraph::adjacent_edges(EdgeId e, EdgeId f) const {
  const Edge& x = edge(e);
  const Edge& y = edge(f);
  return x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
}

std::vector<std::vector<EdgeEnd>> PlanarGraph::faces() const {
  std::vector<int> position(2 * edges_.size(), 0);
  for (const auto& rot : rotation_)
    for (std::size_t i = 0; i < rot.size(); ++i) position[end_index(rot[i])] = static_cast<int>(i);

  std::vector<bool> used(2 * edges_.size(), false);
  std::vector<std::vector<EdgeEnd>> result;
  for (const auto& e : edges_) {
    for (int side = 0; side < 2; ++side) {
      EdgeEnd start{e.id, side};
      if (used[end_index(start)]) continue;
      std::vector<EdgeEnd> face;
      EdgeEnd cur = start;
      while (!used[end_index(cur)]) {
        used[end_index(cur)] = true;
        face.push_back(cur);
        const EdgeEnd arrive = cur.twin();
        const auto& rot = rotation(vertex_of(arrive));
        const auto pos = static_cast<std::size_t>(position[end_index(arrive)]);
        cur = rot[(pos + 1) % rot.size()];
      }
      result.push_back(std::move(face));
    }
  }
  return result;
}

int PlanarGraph::component_count() const {
  DisjointSets sets(vertex_count_);
  int components = vertex_count_;
  for (const auto& e : edges_)
    if (sets.unite(e.a, e.b)) --components;
  return components;
}

std::vector<std::string> PlanarGraph::validate() const {
  std::vector<std::string> problems;
  for (int v = 0; v < vertex_count_; ++v) {
    int expected = 0;
    for (const auto& e : edges_) expected += (e.a == v) + (e.b == v);
    if (degree(v) != expected)
      problems.push_back("rotation at vertex " + std::to_string(v) + " lists " +
                         std::to_string(degree(v)) + " ends, degree is " +
                         std::to_string(expected));
  }
  if (!problems.empty()) return problems;

  int isolated = 0;
  for (int v = 0; v < vertex_count_; ++v) isolated += degree(v) == 0;
  const int faces_total = static_cast<int>(faces().size()) + isolated;
  const int euler = vertex_count_ - edge_count() + faces_total;
  if (euler != 2 * component_count())
    problems.push_back("Euler characteristic " + std::to_string(euler) + " but " +
                       std::to_string(component_count()) +
                       " component(s); rotation is not a sphere embedding");
  return problems;
}

// ---------------------------------------------------------------------------

std::vector<VertexId> Cycle::vertices(const PlanarGraph& g) const {
  std::vector<VertexId> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) {
    const Edge& e = g.edge(s.edge);
    out.push_back(s.forward ? e.a : e.b);
  }
  return out;
}

bool Cycle::contains_edge(EdgeId e) const {
  return std::any_of(steps_.begin(), steps_.end(), [e](const CycleStep& s) { return s.edge == e; });
}

int Cycle::traversal_sign(EdgeId e) const {
  for (const auto& s : steps_)
    if (s.edge == e) return s.forward ? 1 : -1;
  return 0;
}

Cycle Cycle::reversed() const {
  std::vector<CycleStep> out(steps_.rbegin(), steps_.rend());
  for (auto& s : out) s.forward = !s.forward;
  return Cycle(std::move(out));
}

Cycle Cycle::canonical() const {
  if (steps_.empty()) return *this;
  std::vector<CycleStep> best;
  for (const auto& seq : {steps_, reversed().steps_}) {
    for (std::size_t r = 0; r < seq.size(); ++r) {
      std::vector<CycleStep> rotated(seq.begin() + static_cast<std::ptrdiff_t>(r), seq.end());
      rotated.insert(rotated.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(r));
      if (best.empty() || rotated < best) best = std::move(rotated);
    }
  }
  return Cycle(std::move(best));
}

std::vector<std::string> Cycle::validate(const PlanarGraph& g) const {
  std::vector<std::string> problems;
  if (steps_.empty()) return {"empty cycle"};
  for (const auto& s : steps_)
    if (s.edge < 0 || s.edge >= g.edge_count()) return {"unknown edge " + std::to_string(s.edge)};
  std::set<VertexId> seen;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Edge& e = g.edge(steps_[i].edge);
    const VertexId start = steps_[i].forward ? e.a : e.b;
    const VertexId finish = steps_[i].forward ? e.b : e.a;
    const Edge& next = g.edge(steps_[(i + 1) % steps_.size()].edge);
    const VertexId next_start = steps_[(i + 1) % steps_.size()].forward ? next.a : next.b;
    if (finish != next_start)
      problems.push_back("step " + std::to_string(i) + " does not chain into the next step");
    if (!seen.insert(start).second)
      problems.push_back("vertex " + std::to_string(start) + " repeats");
  }
  return problems;
}

bool vertex_disjoint(const PlanarGraph& g, const Cycle& x, const Cycle& y) {
  auto vx = x.vertices(g);
  auto vy = y.vertices(g);
  std::sort(vx.begin(), vx.end());
  std::sort(vy.begin(), vy.end());
  std::vector<VertexId> common;
  std::set_intersection(vx.begin(), vx.end(), vy.begin(), vy.end(), std::back_inserter(common));
  return common.empty();
}

std::vector<Cycle> enumerate_cycles(const PlanarGraph& g) {
  std::set<Cycle> found;
  for (const auto& e : g.edges())
    if (e.is_loop()) found.insert(Cycle({{e.id, true}}).canonical());

  // Cycles through start vertex s whose other vertices are all > s.
  const auto adj = adjacency(g);
  std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<CycleStep> path;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    std::function<void(VertexId)> extend = [&](VertexId v) {
      for (const auto& [eid, w] : adj[static_cast<std::size_t>(v)]) {
        const bool forward = g.edge(eid).a == v;
        if (w == s) {
          if (path.empty() || (path.size() == 1 && path.front().edge == eid)) continue;
          path.push_back({eid, forward});
          found.insert(Cycle(path).canonical());
          path.pop_back();
        } else if (w > s && !on_path[static_cast<std::size_t>(w)]) {
          on_path[static_cast<std::size_t>(w)] = true;
          path.push_back({eid, forward});
          extend(w);
          path.pop_back();
          on_path[static_cast<std::size_t>(w)] = false;
        }
      }
    };
    on_path[static_cast<std::size_t>(s)] = true;
    extend(s);
    on_path[static_cast<std::size_t>(s)] = false;
  }
  return {found.begin(), found.end()};
}

std::vector<std::pair<Cycle, Cycle>> disjoint_cycle_pairs(const PlanarGraph& g) {
  const auto cycles = enumerate_cycles(g);
  const auto words = static_cast<std::size_t>((g.vertex_count() + 63) / 64);
  std::vector<std::vector<std::uint64_t>> masks;
  masks.reserve(cycles.size());
  for (const auto& c : cycles) {
    std::vector<std::uint64_t> mask(words, 0);
    for (VertexId v : c.vertices(g))
      mask[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
    masks.push_back(std::move(mask));
  }
  std::vector<std::pair<Cycle, Cycle>> pairs;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      bool disjoint = true;
      for (std::size_t w = 0; w < words && disjoint; ++w) disjoint = (masks[i][w] & masks[j][w]) == 0;
      if (disjoint) pairs.emplace_back(cycles[i], cycles[j]);
    }
  }
  return pairs;
}

// ---------------------------------------------------------------------------

SpanningTree spanning_tree(const PlanarGraph& g, TreeStrategy strategy, VertexId root) {
  if (root < 0 || root >= g.vertex_count()) throw std::invalid_argument("root out of range");
  if (!g.connected()) throw std::invalid_argument("graph is disconnected");
  const auto adj = adjacency(g);
  std::vector<bool> reached(static_cast<std::size_t>(g.vertex_count()), false);
  SpanningTree tree{{}, root};
  reached[static_cast<std::size_t>(root)] = true;

  if (strategy == TreeStrategy::bfs) {
    std::queue<VertexId> queue;
    queue.push(root);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (const auto& [eid, w] : adj[static_cast<std::size_t>(v)]) {
        if (reached[static_cast<std::size_t>(w)]) continue;
        reached[static_cast<std::size_t>(w)] = true;
        tree.edges.push_back(eid);
        queue.push(w);
      }
    }
  } else {
    std::function<void(VertexId)> visit = [&](VertexId v) {
      for (const auto& [eid, w] : adj[static_cast<std::size_t>(v)]) {
        if (reached[static_cast<std::size_t>(w)]) continue;
        reached[static_cast<std::size_t>(w)] = true;
        tree.edges.push_back(eid);
        visit(w);
      }
    };
    visit(root);
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

std::vector<SpanningTree> all_spanning_trees(const PlanarGraph& g, VertexId root,
                                             std::size_t cap) {
  if (root < 0 || root >= g.vertex_count()) throw std::invalid_argument("root out of range");
  if (!g.connected()) throw std::invalid_argument("graph is disconnected");
  std::vector<EdgeId> candidates;
  for (const auto& e : g.edges())
    if (!e.is_loop()) candidates.push_back(e.id);

  const int needed = g.vertex_count() - 1;
  std::vector<SpanningTree> trees;
  std::vector<EdgeId> chosen;
  std::vector<int> component(static_cast<std::size_t>(g.vertex_count()));
  std::iota(component.begin(), component.end(), 0);

  std::function<void(std::size_t)> choose = [&](std::size_t next) {
    if (static_cast<int>(chosen.size()) == needed) {
      if (trees.size() >= cap)
        throw std::length_error("more than " + std::to_string(cap) + " spanning trees");
      trees.push_back({chosen, root});
      return;
    }
    if (static_cast<int>(candidates.size() - next) < needed - static_cast<int>(chosen.size()))
      return;
    const Edge& e = g.edge(candidates[next]);
    const int ca = component[static_cast<std::size_t>(e.a)];
    const int cb = component[static_cast<std::size_t>(e.b)];
    if (ca != cb) {
      const auto saved = component;
      for (auto& c : component)
        if (c == cb) c = ca;
      chosen.push_back(e.id);
      choose(next + 1);
      chosen.pop_back();
      component = saved;
    }
    choose(next + 1);
  };
  choose(0);
  return trees;
}

std::vector<std::string> validate_tree(const PlanarGraph& g, const SpanningTree& t) {
  std::vector<std::string> problems;
  if (t.root < 0 || t.root >= g.vertex_count()) problems.push_back("root is not a vertex");
  DisjointSets sets(g.vertex_count());
  for (EdgeId e : t.edges) {
    if (e < 0 || e >= g.edge_count()) {
      problems.push_back("unknown edge " + std::to_string(e));
      continue;
    }
    if (!sets.unite(g.edge(e).a, g.edge(e).b))
      problems.push_back("edge " + std::to_string(e) + " closes a cycle");
  }
  if (problems.empty() && static_cast<int>(t.edges.size()) != g.vertex_count() - 1)
    problems.push_back("tree does not span every vertex");
  return problems;
}

RootedTree root_tree(const PlanarGraph& g, const SpanningTree& t) {
  if (auto problems = validate_tree(g, t); !problems.empty())
    throw std::invalid_argument("invalid spanning tree: " + problems.front());
  const auto n = static_cast<std::size_t>(g.vertex_count());
  RootedTree rooted{std::vector<EdgeId>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, 0)};
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj(n);
  for (EdgeId e : t.edges) {
    const Edge& ed = g.edge(e);
    adj[static_cast<std::size_t>(ed.a)].emplace_back(e, ed.b);
    adj[static_cast<std::size_t>(ed.b)].emplace_back(e, ed.a);
    ++rooted.tree_degree[static_cast<std::size_t>(ed.a)];
    ++rooted.tree_degree[static_cast<std::size_t>(ed.b)];
  }
  std::queue<VertexId> queue;
  queue.push(t.root);
  rooted.depth[static_cast<std::size_t>(t.root)] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (const auto& [e, w] : adj[static_cast<std::size_t>(v)]) {
      if (rooted.depth[static_cast<std::size_t>(w)] >= 0) continue;
      rooted.depth[static_cast<std::size_t>(w)] = rooted.depth[static_cast<std::size_t>(v)] + 1;
      rooted.parent_edge[static_cast<std::size_t>(w)] = e;
      queue.push(w);
    }
  }
  return rooted;
}

}  // namespace plum
