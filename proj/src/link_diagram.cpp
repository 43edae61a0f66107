#include "plum/link_diagram.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace plum {

namespace {

std::size_t slot(ArcEnd e) { return std::size_t(2 * e.arc + e.end); }

}  // namespace

int LinkDiagram::position(int crossing, ArcEnd e) const {
  const auto& rot = crossings[std::size_t(crossing)].rotation;
  for (int p = 0; p < 4; ++p)
    if (rot[std::size_t(p)] == e) return p;
  throw std::invalid_argument("arc end is not at this crossing");
}

bool LinkDiagram::over_component_differs(int crossing) const {
  const int o = crossings[std::size_t(crossing)].over;
  return component_at(crossing, o) != component_at(crossing, o + 1);
}

int LinkDiagram::sign(int crossing) const {
  const auto& x = crossings[std::size_t(crossing)];
  const auto& rot = x.rotation;
  const int o = x.over;
  const int over_out = rot[std::size_t(o)].end == 0 ? o : o + 2;
  const ArcEnd under_out = rot[std::size_t(o + 1)].end == 0 ? rot[std::size_t(o + 1)] : rot[std::size_t((o + 3) % 4)];
  return rot[std::size_t((over_out + 1) % 4)] == under_out ? 1 : -1;
}

std::vector<int> LinkDiagram::crossing_free_components() const {
  std::vector<bool> touched(std::size_t(components), false);
  for (const auto& a : arcs) touched[std::size_t(a.component)] = true;
  std::vector<int> out;
  for (int c = 0; c < components; ++c)
    if (!touched[std::size_t(c)]) out.push_back(c);
  return out;
}

std::vector<std::vector<ArcEnd>> LinkDiagram::faces() const {
  std::vector<bool> used(2 * arcs.size(), false);
  std::vector<std::vector<ArcEnd>> out;
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
    for (int end = 0; end < 2; ++end) {
      ArcEnd cur{a, end};
      if (used[slot(cur)]) continue;
      std::vector<ArcEnd> face;
      while (!used[slot(cur)]) {
        used[slot(cur)] = true;
        face.push_back(cur);
        const ArcEnd arrive = cur.twin();
        const int node = node_of(arrive);
        const int pos = position(node, arrive);
        cur = crossings[std::size_t(node)].rotation[std::size_t((pos + 1) % 4)];
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

int LinkDiagram::map_component_count() const {
  std::vector<int> parent(crossings.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[std::size_t(x)] != x) x = parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
    return x;
  };
  int count = crossing_count();
  for (const auto& a : arcs) {
    const int x = find(a.tail);
    const int y = find(a.head);
    if (x != y) {
      parent[std::size_t(y)] = x;
      --count;
    }
  }
  return count;
}

std::vector<std::string> validate_link_diagram(const LinkDiagram& d) {
  std::vector<std::string> problems;
  const int nc = d.crossing_count();
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    const auto& arc = d.arcs[a];
    if (arc.tail < 0 || arc.tail >= nc || arc.head < 0 || arc.head >= nc)
      return {"arc " + std::to_string(a) + " points at a missing crossing"};
    if (arc.component < 0 || arc.component >= d.components)
      return {"arc " + std::to_string(a) + " has an unknown component"};
  }
  std::vector<int> seen(2 * d.arcs.size(), 0);
  for (int c = 0; c < nc; ++c) {
    const auto& x = d.crossings[std::size_t(c)];
    if (x.over != 0 && x.over != 1) problems.push_back("crossing " + std::to_string(c) + " has no over strand");
    for (const auto& e : x.rotation) {
      if (e.arc < 0 || e.arc >= static_cast<int>(d.arcs.size()) || (e.end != 0 && e.end != 1))
        return {"crossing " + std::to_string(c) + " names an unknown arc end"};
      if (d.node_of(e) != c)
        problems.push_back("arc end of arc " + std::to_string(e.arc) + " sits at the wrong crossing");
      ++seen[slot(e)];
    }
    for (int p = 0; p < 2; ++p) {
      const ArcEnd s = x.rotation[std::size_t(p)];
      const ArcEnd t = x.rotation[std::size_t(p + 2)];
      if (s.end == t.end)
        problems.push_back("crossing " + std::to_string(c) + " has a strand that does not pass through");
      else if (d.arcs[std::size_t(s.arc)].component != d.arcs[std::size_t(t.arc)].component)
        problems.push_back("crossing " + std::to_string(c) + " joins two components in one strand");
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != 1) problems.push_back("arc end " + std::to_string(i) + " appears " + std::to_string(seen[i]) + " times");
  if (!problems.empty()) return problems;

  const int euler = nc - static_cast<int>(d.arcs.size()) + static_cast<int>(d.faces().size());
  if (euler != 2 * d.map_component_count())
    problems.push_back("Euler characteristic " + std::to_string(euler) + " is not planar");

  // Each component must be one closed chain of arcs.
  std::vector<bool> visited(d.arcs.size(), false);
  std::set<int> closed;
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    if (visited[a]) continue;
    const int comp = d.arcs[a].component;
    if (!closed.insert(comp).second) {
      problems.push_back("component " + std::to_string(comp) + " is not a single closed curve");
      continue;
    }
    int cur = static_cast<int>(a);
    while (!visited[std::size_t(cur)]) {
      visited[std::size_t(cur)] = true;
      const int node = d.arcs[std::size_t(cur)].head;
      const int pos = d.position(node, {cur, 1});
      cur = d.crossings[std::size_t(node)].rotation[std::size_t((pos + 2) % 4)].arc;
    }
  }
  return problems;
}

LinkDiagram closed_two_braid(int crossings, bool right_handed) {
  if (crossings < 0) throw std::invalid_argument("negative crossing count");
  LinkDiagram d;
  const int c = crossings;
  d.components = c % 2 == 0 ? 2 : 1;
  if (c == 0) return d;
  // Inner arc I_s has index s, outer arc O_s index c+s; both run from
  // crossing s to crossing s+1. At crossing k the strand I_{k-1} -> O_k
  // passes through O_{k-1} -> I_k.
  for (int s = 0; s < c; ++s) {
    const int comp_inner = d.components == 1 ? 0 : s % 2;
    d.arcs.push_back({comp_inner, s, (s + 1) % c});
  }
  for (int s = 0; s < c; ++s) {
    const int comp_outer = d.components == 1 ? 0 : 1 - s % 2;
    d.arcs.push_back({comp_outer, s, (s + 1) % c});
  }
  for (int k = 0; k < c; ++k) {
    const int prev = (k + c - 1) % c;
    LinkDiagram::Crossing x;
    x.rotation = {ArcEnd{c + k, 0}, ArcEnd{c + prev, 1}, ArcEnd{prev, 1}, ArcEnd{k, 0}};
    x.over = right_handed ? 1 : 0;
    x.origin = CrossingId{k};
    d.crossings.push_back(x);
  }
  return d;
}

LinkDiagram knot_from_pd(const std::vector<std::array<int, 4>>& code) {
  const int c = static_cast<int>(code.size());
  LinkDiagram d;
  d.components = 1;
  if (c == 0) return d;
  const int labels = 2 * c;
  d.arcs.assign(std::size_t(labels), {0, -1, -1});
  auto attach = [&](int label, int end, int crossing) {
    if (label < 1 || label > labels) throw std::invalid_argument("PD label out of range");
    auto& arc = d.arcs[std::size_t(label - 1)];
    int& slot_ref = end == 0 ? arc.tail : arc.head;
    if (slot_ref != -1) throw std::invalid_argument("PD arc " + std::to_string(label) + " attached twice");
    slot_ref = crossing;
    return ArcEnd{label - 1, end};
  };
  auto succ = [&](int label) { return label % labels + 1; };
  for (int k = 0; k < c; ++k) {
    const auto [i, j, kk, l] = code[std::size_t(k)];
    LinkDiagram::Crossing x;
    x.over = 1;
    x.origin = CrossingId{k};
    x.rotation[0] = attach(i, 1, k);
    x.rotation[2] = attach(kk, 0, k);
    if (l == succ(j)) {
      x.rotation[1] = attach(j, 1, k);
      x.rotation[3] = attach(l, 0, k);
    } else if (j == succ(l)) {
      x.rotation[1] = attach(j, 0, k);
      x.rotation[3] = attach(l, 1, k);
    } else {
      throw std::invalid_argument("PD over strand labels are not consecutive");
    }
    d.crossings.push_back(x);
  }
  for (const auto& a : d.arcs)
    if (a.tail < 0 || a.head < 0) throw std::invalid_argument("PD code leaves an arc open");
  return d;
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (auto& x : out.crossings) x.over = 1 - x.over;
  return out;
}

}  // namespace plum
