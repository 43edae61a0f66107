#include "oracles.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace plum::check {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[std::size_t(x)] != x) x = parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::size_t(y)] = x;
    return true;
  }
};

int end_slot(ArcEnd e) { return 2 * e.arc + e.end; }

}  // namespace

std::int64_t bracket_determinant(const LinkDiagram& d) {
  const int c = d.crossing_count();
  if (c > 24) throw std::length_error("bracket oracle limited to 24 crossings");
  const int free_loops = static_cast<int>(d.crossing_free_components().size());
  std::int64_t re = 0;
  std::int64_t im = 0;
  for (std::uint32_t state = 0; state < (std::uint32_t{1} << c); ++state) {
    UnionFind uf(2 * d.arcs.size());
    int loops = static_cast<int>(2 * d.arcs.size());
    for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a) loops -= uf.unite(2 * a, 2 * a + 1);
    int a_count = 0;
    for (int x = 0; x < c; ++x) {
      const auto& cr = d.crossings[std::size_t(x)];
      const auto& r = cr.rotation;
      const int o = cr.over;
      auto at = [&](int k) { return end_slot(r[std::size_t(k % 4)]); };
      if (((state >> x) & 1u) == 0) {
        ++a_count;
        loops -= uf.unite(at(o + 1), at(o + 2));
        loops -= uf.unite(at(o + 3), at(o));
      } else {
        loops -= uf.unite(at(o), at(o + 1));
        loops -= uf.unite(at(o + 2), at(o + 3));
      }
    }
    if (loops + free_loops != 1) continue;
    switch (a_count % 4) {
      case 0: ++re; break;
      case 1: ++im; break;
      case 2: --re; break;
      default: --im; break;
    }
  }
  const std::int64_t norm = re * re + im * im;
  const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(norm))));
  if (root * root != norm) throw std::logic_error("bracket value is not an integer in modulus");
  return root;
}

std::vector<std::int64_t> memo_branch_indices(const PlanarGraph& g, const SpanningTree& t) {
  std::set<EdgeId> tree(t.edges.begin(), t.edges.end());
  std::map<EdgeId, std::int64_t> memo;
  std::function<std::int64_t(EdgeId, VertexId)> value = [&](EdgeId e, VertexId far) -> std::int64_t {
    if (!tree.count(e)) return 1;
    if (auto it = memo.find(e); it != memo.end()) return it->second;
    std::int64_t sum = 0;
    int terms = 0;
    for (const auto& end : g.rotation(far)) {
      if (end.edge == e) continue;
      sum += value(end.edge, g.opposite(end.edge, far));
      ++terms;
    }
    return memo[e] = terms == 0 ? 1 : sum;
  };
  // Walk outward from the root so every tree edge is entered from its near end.
  std::vector<bool> reached(std::size_t(g.vertex_count()), false);
  std::vector<VertexId> stack{t.root};
  reached[std::size_t(t.root)] = true;
  std::vector<std::int64_t> out(std::size_t(g.edge_count()), 1);
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& end : g.rotation(v)) {
      if (!tree.count(end.edge)) continue;
      const VertexId w = g.opposite(end.edge, v);
      if (reached[std::size_t(w)]) continue;
      reached[std::size_t(w)] = true;
      out[std::size_t(end.edge)] = value(end.edge, w);
      stack.push_back(w);
    }
  }
  return out;
}

std::int64_t brute_force_cycle_count(const PlanarGraph& g) {
  const int e = g.edge_count();
  if (e > 24) throw std::length_error("cycle oracle limited to 24 edges");
  std::int64_t count = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << e); ++mask) {
    std::vector<int> degree(std::size_t(g.vertex_count()), 0);
    UnionFind uf(std::size_t(g.vertex_count()));
    int pieces = 0;
    std::set<VertexId> support;
    for (int i = 0; i < e; ++i) {
      if (!((mask >> i) & 1u)) continue;
      const Edge& ed = g.edge(i);
      degree[std::size_t(ed.a)] += 1;
      degree[std::size_t(ed.b)] += 1;
      support.insert(ed.a);
      support.insert(ed.b);
      uf.unite(ed.a, ed.b);
    }
    bool ok = true;
    for (VertexId v : support) ok = ok && degree[std::size_t(v)] == 2;
    if (!ok) continue;
    std::set<int> roots;
    for (VertexId v : support) roots.insert(uf.find(v));
    pieces = static_cast<int>(roots.size());
    count += pieces == 1;
  }
  return count;
}

std::int64_t kirchhoff_tree_count(const PlanarGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 1;
  std::vector<std::vector<long double>> lap(std::size_t(n - 1), std::vector<long double>(std::size_t(n - 1), 0));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    for (const auto& [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
      if (x == n - 1) continue;
      lap[std::size_t(x)][std::size_t(x)] += 1;
      if (y != n - 1) lap[std::size_t(x)][std::size_t(y)] -= 1;
    }
  }
  long double det = 1;
  const int m = n - 1;
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int r = col + 1; r < m; ++r)
      if (std::fabs(lap[std::size_t(r)][std::size_t(col)]) > std::fabs(lap[std::size_t(pivot)][std::size_t(col)])) pivot = r;
    if (std::fabs(lap[std::size_t(pivot)][std::size_t(col)]) < 1e-12L) return 0;
    if (pivot != col) {
      std::swap(lap[std::size_t(pivot)], lap[std::size_t(col)]);
      det = -det;
    }
    det *= lap[std::size_t(col)][std::size_t(col)];
    for (int r = col + 1; r < m; ++r) {
      const long double f = lap[std::size_t(r)][std::size_t(col)] / lap[std::size_t(col)][std::size_t(col)];
      for (int k = col; k < m; ++k) lap[std::size_t(r)][std::size_t(k)] -= f * lap[std::size_t(col)][std::size_t(k)];
    }
  }
  return std::llround(det);
}

std::optional<int> brute_force_min_l1(const std::vector<std::vector<int>>& generators, const std::vector<int>& target,
                                      int max_cost) {
  std::optional<int> best;
  std::vector<int> sum(target.size(), 0);
  std::function<void(std::size_t, int)> visit = [&](std::size_t j, int spent) {
    if (best && spent >= *best) return;
    if (j == generators.size()) {
      if (sum == target) best = spent;
      return;
    }
    const int room = max_cost - spent;
    for (int c = -room; c <= room; ++c) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += c * generators[j][i];
      visit(j + 1, spent + std::abs(c));
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] -= c * generators[j][i];
    }
  };
  visit(0, 0);
  return best;
}

Diagram random_edit(const Diagram& d, std::mt19937& rng, const std::vector<bool>* allowed) {
  auto usable = [&](int arc) { return !allowed || (*allowed)[std::size_t(d.map.arcs[std::size_t(arc)].edge)]; };
  std::vector<int> arcs;
  for (int a = 0; a < static_cast<int>(d.map.arcs.size()); ++a)
    if (usable(a)) arcs.push_back(a);
  if (arcs.empty()) throw std::invalid_argument("no arc may be edited");
  std::bernoulli_distribution coin(0.5);

  if (coin(rng)) {
    std::vector<std::vector<ArcEnd>> candidates;
    for (const auto& face : d.map.faces()) {
      std::vector<ArcEnd> darts;
      std::set<int> distinct;
      for (const auto& dart : face)
        if (usable(dart.arc)) {
          darts.push_back(dart);
          distinct.insert(dart.arc);
        }
      if (distinct.size() >= 2) candidates.push_back(std::move(darts));
    }
    if (!candidates.empty()) {
      const auto& darts = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
      std::uniform_int_distribution<std::size_t> pick(0, darts.size() - 1);
      const ArcEnd target = darts[pick(rng)];
      ArcEnd pusher = darts[pick(rng)];
      while (pusher.arc == target.arc) pusher = darts[pick(rng)];
      return insert_finger(d, target, pusher, coin(rng));
    }
  }
  const int arc = arcs[std::uniform_int_distribution<std::size_t>(0, arcs.size() - 1)(rng)];
  return insert_kink(d, arc, coin(rng), coin(rng));
}

PlanarGraph random_multigraph(std::mt19937& rng, int max_vertices, int extra_edges) {
  const int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  std::vector<std::array<VertexId, 2>> endpoints;
  for (int v = 1; v < n; ++v) endpoints.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  const int extra = std::uniform_int_distribution<int>(0, extra_edges)(rng);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  for (int i = 0; i < extra; ++i) endpoints.push_back({vertex(rng), vertex(rng)});
  std::shuffle(endpoints.begin(), endpoints.end(), rng);
  return PlanarGraph::from_edges(n, std::move(endpoints));
}

PlanarGraph triangle_graph() { return cycle_graph(3); }

PlanarGraph theta_graph() {
  return PlanarGraph(2, {{0, 1}, {0, 1}, {0, 1}}, {{{0, 0}, {1, 0}, {2, 0}}, {{2, 1}, {1, 1}, {0, 1}}});
}

PlanarGraph cycle_graph(int length) {
  if (length < 1) throw std::invalid_argument("cycle needs at least one edge");
  std::vector<std::array<VertexId, 2>> endpoints;
  std::vector<std::vector<EdgeEnd>> rotation(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    endpoints.push_back({i, (i + 1) % length});
    rotation[std::size_t(i)].push_back({i, 0});
    rotation[std::size_t((i + 1) % length)].push_back({i, 1});
  }
  return PlanarGraph(length, std::move(endpoints), std::move(rotation));
}

}  // namespace plum::check
