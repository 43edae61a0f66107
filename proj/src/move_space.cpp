#include "plum/move_space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "plum/invariants.hpp"

namespace plum {

namespace {

struct Membership {
  bool north = false;
  int suffix = 0;
  int sign = 0;
};

// Each edge of the plum graph lies on exactly two region cycles.
std::vector<Membership> regions_of(const PlumGraph& p, EdgeId e) {
  std::vector<Membership> out;
  for (int i = 1; i <= p.order(); ++i) {
    if (int s = p.north_cycle(i).traversal_sign(e); s != 0) out.push_back({true, i, s});
    if (int s = p.south_cycle(i).traversal_sign(e); s != 0) out.push_back({false, i, s});
  }
  return out;
}

bool share_vertex(const PlanarGraph& g, EdgeId d, EdgeId e) {
  const Edge& x = g.edge(d);
  const Edge& y = g.edge(e);
  return x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
}

std::vector<int> unit(int n, int k, int value) {
  std::vector<int> v(std::size_t(n), 0);
  if (k >= 1 && k <= n) v[std::size_t(k - 1)] = value;
  return v;
}

std::vector<int> plus(std::vector<int> v, const std::vector<int>& w) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
  return v;
}

}  // namespace

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::equatorial_equatorial:
      return "equatorial-equatorial";
    case PairClass::equatorial_spoke:
      return "equatorial-spoke";
    case PairClass::north_south_spoke:
      return "north-south-spoke";
  }
  return "unknown";
}

EdgePair classify_pair(const PlumGraph& p, EdgeId d, EdgeId e) {
  if (share_vertex(p.graph, d, e)) throw std::invalid_argument("edges share a vertex");
  EdgePair pair{std::min(d, e), std::max(d, e), PairClass::equatorial_equatorial};
  const bool eq_d = p.role(d) == EdgeRole::equatorial;
  const bool eq_e = p.role(e) == EdgeRole::equatorial;
  if (eq_d && eq_e) {
    pair.kind = PairClass::equatorial_equatorial;
  } else if (eq_d || eq_e) {
    pair.kind = PairClass::equatorial_spoke;
  } else {
    pair.kind = PairClass::north_south_spoke;  // spokes at one pole always meet
  }
  return pair;
}

std::vector<EdgePair> disjoint_edge_pairs(const PlumGraph& p) {
  std::vector<EdgePair> out;
  const int edges = p.graph.edge_count();
  for (EdgeId d = 0; d < edges; ++d)
    for (EdgeId e = d + 1; e < edges; ++e)
      if (!share_vertex(p.graph, d, e)) out.push_back(classify_pair(p, d, e));
  return out;
}

MoveVector crossing_change_delta(const PlumGraph& p, EdgeId d, EdgeId e, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  MoveVector mv;
  mv.pair = classify_pair(p, d, e);
  mv.epsilon = epsilon;
  mv.value.assign(std::size_t(p.n), 0);
  const int m = p.order();
  const auto in_d = regions_of(p, d);
  const auto in_e = regions_of(p, e);
  auto accumulate = [&](const std::vector<Membership>& xs, const std::vector<Membership>& ys) {
    for (const auto& x : xs) {
      if (!x.north) continue;
      for (const auto& y : ys) {
        if (y.north) continue;
        const int r = ((y.suffix - x.suffix) % m + m) % m;
        if (r == p.n || r == p.n + 1) continue;
        mv.value[std::size_t(std::min(r, m - r))] += epsilon * x.sign * y.sign;
      }
    }
  };
  accumulate(in_d, in_e);
  accumulate(in_e, in_d);
  return mv;
}

std::vector<int> sign_normalized(std::vector<int> v) {
  auto it = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
  if (it != v.end() && *it < 0)
    for (auto& x : v) x = -x;
  return v;
}

std::vector<LabeledVector> closed_form_generators(int n) {
  if (n < 1) throw std::invalid_argument("move set needs n >= 1");
  if (n == 1) return {{"a1", {2}}, {"q", {1}}};
  std::vector<LabeledVector> out;
  for (int k = 1; k <= n; ++k) out.push_back({"a" + std::to_string(k), unit(n, k, 2)});
  for (int k = 1; k < n; ++k) out.push_back({"b" + std::to_string(k), plus(unit(n, k, 1), unit(n, k + 1, 1))});
  for (int k = 1; k < n; ++k) out.push_back({"c" + std::to_string(k), plus(unit(n, k, 1), unit(n, k + 1, -1))});
  out.push_back({"d", plus(unit(n, 1, 2), unit(n, 2, -2))});
  auto e = [n](int k) { return plus(plus(unit(n, k, 1), unit(n, k + 1, -2)), unit(n, k + 2, 1)); };
  for (int k = 1; k <= n - 2; ++k) out.push_back({"e" + std::to_string(k), e(k)});
  out.push_back({"p", e(n - 1)});
  out.push_back({"q", unit(n, n, 1)});
  return out;
}

std::vector<std::vector<int>> MoveSet::generators() const {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  for (const auto& lv : labeled)
    if (seen.insert(sign_normalized(lv.value)).second) out.push_back(lv.value);
  return out;
}

MoveSet move_set(int n) {
  const PlumGraph p = build_plum_graph(n);
  MoveSet ms;
  ms.n = n;
  ms.labeled = closed_form_generators(n);
  for (const auto& pair : disjoint_edge_pairs(p)) {
    for (int eps : {1, -1}) {
      auto v = crossing_change_delta(p, pair.first, pair.second, eps).value;
      if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) continue;
      if (sign_normalized(v) != v) continue;  // the other sign lands on the representative
      ms.realizations[v].push_back(pair);
    }
  }
  for (const auto& [v, pairs] : ms.realizations) ms.raw.push_back(v);
  std::set<std::vector<int>> closed;
  for (const auto& lv : ms.labeled) closed.insert(sign_normalized(lv.value));
  ms.matches_closed_form = std::set<std::vector<int>>(ms.raw.begin(), ms.raw.end()) == closed;
  return ms;
}

std::vector<DeltaCheck> check_crossing_deltas(const Diagram& d, const PlumGraph& p) {
  const LinkingVector base = linking_vector(d, p);
  std::vector<DeltaCheck> out;
  for (const auto& x : d.crossings) {
    DeltaCheck check;
    check.crossing = x.id;
    const auto [over, under] = crossing_edges(d, x.id);
    check.pair = {std::min(over, under), std::max(over, under), PairClass::equatorial_equatorial};
    const LinkingVector changed = linking_vector(crossing_change(d, x.id), p);
    check.observed.resize(std::size_t(p.n));
    for (int k = 0; k < p.n; ++k)
      check.observed[std::size_t(k)] = changed.entries[std::size_t(k)] - base.entries[std::size_t(k)];
    check.disjoint = !share_vertex(p.graph, over, under);
    if (check.disjoint) {
      const MoveVector mv = crossing_change_delta(p, over, under, -crossing_sign(d, x.id));
      check.pair = mv.pair;
      check.predicted = mv.value;
    } else {
      check.predicted.assign(std::size_t(p.n), 0);
    }
    check.ok = check.observed == check.predicted;
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<DeltaCheck> verify_delta_realization(int n) {
  return check_crossing_deltas(standard_plum_diagram(n), build_plum_graph(n));
}

}  // namespace plum
