#include "plum/l1_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "plum/diagram.hpp"
#include "plum/invariants.hpp"
#include "plum/move_space.hpp"

namespace plum {

namespace {

constexpr int kBits = 10;
constexpr int kOffset = 1 << (kBits - 1);
constexpr int kMaxDim = 6;

using State = std::uint64_t;

State pack(const std::vector<int>& x) {
  State s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s |= State(x[i] + kOffset) << (kBits * i);
  return s;
}

std::vector<int> unpack(State s, int dim) {
  std::vector<int> x(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) x[std::size_t(i)] = int((s >> (kBits * i)) & ((1u << kBits) - 1)) - kOffset;
  return x;
}

struct Parent {
  State from = 0;
  int generator = -1;
  int sign = 0;
};

class LayeredSearch {
 public:
  LayeredSearch(const L1Problem& p, int pinned) : p_(p), pinned_(pinned) {
    for (int i = 0; i < pinned_; ++i) {
      int m = 0;
      for (const auto& g : p_.generators) m = std::max(m, std::abs(g[std::size_t(i)]));
      coord_step_.push_back(m);
    }
    for (const auto& g : p_.generators) {
      int s = 0;
      for (int i = 0; i < pinned_; ++i) s += std::abs(g[std::size_t(i)]);
      norm_step_ = std::max(norm_step_, s);
    }
    for (std::size_t j = 0; j < p_.generators.size(); ++j)
      if (std::any_of(p_.generators[j].begin(), p_.generators[j].end(), [](int v) { return v != 0; }))
        moving_.push_back(static_cast<int>(j));
  }

  // Admissible: no generator moves coordinate i by more than coord_step_[i],
  // nor the pinned part by more than norm_step_ in L1.
  int heuristic(const std::vector<int>& x) const {
    int h = 0;
    int total = 0;
    for (int i = 0; i < pinned_; ++i) {
      const int gap = std::abs(p_.target[std::size_t(i)] - x[std::size_t(i)]);
      if (gap == 0) continue;
      if (coord_step_[std::size_t(i)] == 0) return kUnreachable;
      h = std::max(h, (gap + coord_step_[std::size_t(i)] - 1) / coord_step_[std::size_t(i)]);
      total += gap;
    }
    if (total > 0) h = std::max(h, (total + norm_step_ - 1) / norm_step_);
    return h;
  }

  bool is_goal(const std::vector<int>& x) const {
    for (int i = 0; i < pinned_; ++i)
      if (x[std::size_t(i)] != p_.target[std::size_t(i)]) return false;
    return true;
  }

  enum class Outcome { found, exhausted, over_budget, out_of_range };

  // Breadth-first layers from the origin, dropping states that cannot reach
  // a goal within `bound`.
  Outcome run(int bound, std::size_t max_states) {
    parent_.clear();
    goal_layer_.clear();
    const std::vector<int> origin(std::size_t(p_.dim), 0);
    std::vector<State> layer{pack(origin)};
    parent_.emplace(layer.front(), Parent{});
    for (int g = 0; g <= bound; ++g) {
      for (State s : layer)
        if (is_goal(unpack(s, p_.dim))) goal_layer_.push_back(s);
      if (!goal_layer_.empty()) {
        cost_ = g;
        return Outcome::found;
      }
      if (g == bound) break;
      std::vector<State> next;
      for (State s : layer) {
        const auto x = unpack(s, p_.dim);
        for (int j : moving_) {
          for (int sign : {1, -1}) {
            std::vector<int> y = x;
            bool in_range = true;
            for (int i = 0; i < p_.dim; ++i) {
              y[std::size_t(i)] += sign * p_.generators[std::size_t(j)][std::size_t(i)];
              in_range = in_range && std::abs(y[std::size_t(i)]) < kOffset;
            }
            if (!in_range) return Outcome::out_of_range;
            if (g + 1 + heuristic(y) > bound) continue;
            const State t = pack(y);
            if (parent_.emplace(t, Parent{s, j, sign}).second) next.push_back(t);
          }
        }
        if (parent_.size() > max_states) return Outcome::over_budget;
      }
      std::sort(next.begin(), next.end());
      layer = std::move(next);
      if (layer.empty()) break;
    }
    return Outcome::exhausted;
  }

  int cost() const { return cost_; }
  std::size_t visited() const { return parent_.size(); }
  std::vector<State> goals() const {
    auto g = goal_layer_;
    std::sort(g.begin(), g.end());
    return g;
  }

  std::vector<int> coefficients(State s) const {
    std::vector<int> phi(p_.generators.size(), 0);
    for (Parent step = parent_.at(s); step.generator >= 0; step = parent_.at(step.from))
      phi[std::size_t(step.generator)] += step.sign;
    return phi;
  }

  static constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

 private:
  const L1Problem& p_;
  int pinned_;
  std::vector<int> coord_step_;
  int norm_step_ = 0;
  std::vector<int> moving_;
  std::unordered_map<State, Parent> parent_;
  std::vector<State> goal_layer_;
  int cost_ = 0;
};

std::vector<int> unit_first(int dim, int value) {
  std::vector<int> v(std::size_t(dim), 0);
  v[0] = value;
  return v;
}

}  // namespace

L1Result min_l1(const L1Problem& problem, const L1Budget& budget) {
  if (problem.dim < 1 || problem.dim > kMaxDim)
    throw std::invalid_argument("dimension must be between 1 and " + std::to_string(kMaxDim));
  if (static_cast<int>(problem.target.size()) != problem.dim)
    throw std::invalid_argument("target length differs from the dimension");
  for (const auto& g : problem.generators)
    if (static_cast<int>(g.size()) != problem.dim)
      throw std::invalid_argument("generator length differs from the dimension");
  const int pinned = problem.pinned < 0 ? problem.dim : problem.pinned;
  if (pinned > problem.dim) throw std::invalid_argument("more pinned coordinates than the dimension");
  for (int i = 0; i < pinned; ++i)
    if (std::abs(problem.target[std::size_t(i)]) >= kOffset) throw std::invalid_argument("target entry out of range");

  LayeredSearch search(problem, pinned);
  L1Result result;
  const int start = search.heuristic(std::vector<int>(std::size_t(problem.dim), 0));
  if (start >= LayeredSearch::kUnreachable) {
    result.reason = "target lies outside the span of the generators on a pinned coordinate";
    result.lower_bound = budget.max_cost + 1;
    return result;
  }
  result.lower_bound = start;
  for (int bound = start; bound <= budget.max_cost; ++bound) {
    const auto outcome = search.run(bound, budget.max_states);
    result.states = search.visited();
    if (outcome == LayeredSearch::Outcome::over_budget) {
      result.reason = "state budget of " + std::to_string(budget.max_states) + " exceeded at cost bound " +
                      std::to_string(bound);
      return result;
    }
    if (outcome == LayeredSearch::Outcome::out_of_range) {
      result.reason = "coordinates left the packable range at cost bound " + std::to_string(bound);
      return result;
    }
    if (outcome == LayeredSearch::Outcome::found) {
      const auto goals = search.goals();
      result.status = L1Status::solved;
      result.cost = search.cost();
      result.lower_bound = result.cost;
      result.phi = search.coefficients(goals.front());
      result.achieved.assign(std::size_t(problem.dim), 0);
      for (std::size_t j = 0; j < problem.generators.size(); ++j)
        for (int i = 0; i < problem.dim; ++i)
          result.achieved[std::size_t(i)] += result.phi[j] * problem.generators[j][std::size_t(i)];
      for (State s : goals) result.goal_states.push_back(unpack(s, problem.dim));
      return result;
    }
    result.lower_bound = bound + 1;
  }
  result.reason = "no solution with cost at most " + std::to_string(budget.max_cost);
  return result;
}

PrefixResult prefix_min_l1(const std::vector<std::vector<int>>& generators, int n, int k, const L1Budget& budget) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("prefix search needs 1 <= k <= n");
  const int dim = std::min(k + 2, n);
  L1Problem problem;
  problem.dim = dim;
  problem.pinned = k;
  problem.target = unit_first(dim, 2 * n + 1);
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("generator length differs from n");
    problem.generators.emplace_back(g.begin(), g.begin() + dim);
  }
  PrefixResult out;
  out.search = min_l1(problem, budget);
  if (out.search.status == L1Status::solved && k + 2 <= n) {
    std::set<int> values;
    for (const auto& s : out.search.goal_states) values.insert(s[std::size_t(k + 1)]);
    out.next_values = std::move(values);
  }
  return out;
}

std::vector<std::vector<int>> unknotting_sequence(int n) {
  if (n < 1) throw std::invalid_argument("sequence needs n >= 1");
  std::vector<std::vector<int>> terms(std::size_t(n), unit_first(n, 2));
  for (int j = 1; j < n; ++j) {
    std::vector<int> b(std::size_t(n), 0);
    const int sign = j % 2 == 1 ? 1 : -1;
    b[std::size_t(j - 1)] = sign;
    b[std::size_t(j)] = sign;
    terms.push_back(std::move(b));
  }
  std::vector<int> q(std::size_t(n), 0);
  q[std::size_t(n - 1)] = n % 2 == 1 ? 1 : -1;
  terms.push_back(std::move(q));
  return terms;
}

UnknottingReport verify_unknotting_number(int n, int lower_cap, const L1Budget& budget) {
  const PlumGraph p = build_plum_graph(n);
  UnknottingReport report;
  report.n = n;
  const std::vector<int> expected = unit_first(n, 2 * n + 1);

  if (n <= lower_cap) {
    L1Problem problem;
    problem.dim = n;
    problem.generators = move_set(n).raw;
    problem.target = linking_vector(standard_plum_diagram(n), p).entries;
    const L1Result r = min_l1(problem, budget);
    if (r.status == L1Status::solved) {
      report.lower = r.cost;
    } else {
      report.lower_note = r.reason;
    }
  } else {
    report.lower_note = "exhaustive search skipped above n = " + std::to_string(lower_cap);
  }

  std::set<std::vector<int>> realized;
  for (const auto& pair : disjoint_edge_pairs(p)) {
    if (pair.kind != PairClass::equatorial_equatorial) continue;
    for (int eps : {1, -1}) realized.insert(crossing_change_delta(p, pair.first, pair.second, eps).value);
  }
  report.upper_terms = unknotting_sequence(n);
  report.upper_sum.assign(std::size_t(n), 0);
  report.upper_terms_realized = true;
  for (const auto& t : report.upper_terms) {
    for (int i = 0; i < n; ++i) report.upper_sum[std::size_t(i)] += t[std::size_t(i)];
    report.upper_terms_realized = report.upper_terms_realized && realized.count(t) > 0;
  }
  report.upper_ok = report.upper_terms_realized && static_cast<int>(report.upper_terms.size()) == 2 * n &&
                    report.upper_sum == expected;
  return report;
}

}  // namespace plum
