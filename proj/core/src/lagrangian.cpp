#include "bmwis/lagrangian.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bmwis {

namespace {

void check_config(const LagrangianConfig& cfg) {
  if (cfg.epsilon && cfg.epsilon->sign() <= 0)
    throw std::invalid_argument("epsilon must be positive");
  if (cfg.enumeration_level < 0 || cfg.enumeration_level > 3)
    throw std::invalid_argument("enumeration level must be in 0..3");
}

std::string vertex_set_label(const std::vector<int>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i] + 1);
  }
  return out + "}";
}

}  // namespace

Ratio default_epsilon(const BudgetedInstance& inst) {
  if (inst.vertex_count() == 0) return Ratio(1);
  long long w = max_vertex_weight(inst);
  if (w == 0) return Ratio(1);
  return Ratio(BigInt(1), BigInt(8) * inst.vertex_count() * w);
}

long long breakpoint_iteration_bound(const BudgetedInstance& inst) {
  if (inst.vertex_count() == 0) return 0;
  BigInt target = (BigInt(max_vertex_weight(inst)) + 1) * 2 *
                  (BigInt(inst.total_cost()) + 1) * (BigInt(inst.total_cost()) + 1);
  long long bits = 0;
  BigInt pow(1);
  while (pow < target) {
    pow <<= 1;
    ++bits;
  }
  return bits;
}

WeightAssignment adjusted_weights(const BudgetedInstance& inst, const Ratio& lambda) {
  if (lambda.sign() < 0) throw std::invalid_argument("lambda must be non-negative");
  WeightAssignment wa;
  wa.reserve(inst.vertex_count());
  for (int v = 0; v < inst.vertex_count(); ++v)
    wa.push_back(Ratio(inst.weight(v)) - lambda * Ratio(inst.cost(v)));
  return wa;
}

Solution parametric_solve(const BudgetedInstance& inst, const Ratio& lambda, TieBreak tb,
                          const LagrangianConfig& cfg) {
  check_config(cfg);
  auto picked = run_mwis_oracle(inst, adjusted_weights(inst, lambda), tb, cfg.oracle,
                                cfg.bruteforce_cap);
  return make_solution(inst, std::move(picked));
}

LagrangianTrace find_breakpoint(const BudgetedInstance& inst, const LagrangianConfig& cfg) {
  check_config(cfg);
  LagrangianTrace trace;

  Solution at_zero = parametric_solve(inst, Ratio(0), TieBreak::PreferMaxCost, cfg);
  if (at_zero.total_cost <= inst.budget())
    throw std::invalid_argument("find_breakpoint: budget does not bind at lambda 0");
  trace.outer = std::move(at_zero);
  trace.lambda_low = Ratio(0);

  Ratio hi(BigInt(max_vertex_weight(inst)) + 1);
  trace.inner = parametric_solve(inst, hi, TieBreak::PreferMinCost, cfg);
  trace.lambda_high = hi;

  // stop once the bracket is below half the minimum breakpoint spacing
  BigInt cost_bound = BigInt(inst.total_cost()) + 1;
  Ratio resolution(BigInt(1), 2 * cost_bound * cost_bound);

  while (trace.lambda_high - trace.lambda_low >= resolution) {
    Ratio mid = (trace.lambda_low + trace.lambda_high) / Ratio(2);
    Solution probe = parametric_solve(inst, mid, TieBreak::PreferMinCost, cfg);
    if (probe.total_cost <= inst.budget()) {
      trace.lambda_high = mid;
      trace.inner = std::move(probe);
    } else {
      trace.lambda_low = mid;
      trace.outer = parametric_solve(inst, mid, TieBreak::PreferMaxCost, cfg);
    }
    ++trace.iterations;
  }
  return trace;
}

Solution combine(const BudgetedInstance& inst, LagrangianTrace& trace) {
  std::vector<Solution> candidates;

  trace.candidates.push_back({"S1 " + vertex_set_label(trace.inner.vertices),
                              trace.inner.total_weight, trace.inner.total_cost});
  candidates.push_back(trace.inner);

  if (trace.outer) {
    // feasible prefix of S2 in non-increasing density order, zero cost first
    std::vector<int> order = trace.outer->vertices;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      bool za = inst.cost(a) == 0, zb = inst.cost(b) == 0;
      if (za != zb) return za;
      if (!za) {
        BigInt lhs = BigInt(inst.weight(a)) * inst.cost(b);
        BigInt rhs = BigInt(inst.weight(b)) * inst.cost(a);
        if (lhs != rhs) return lhs > rhs;
      }
      return a < b;
    });
    std::vector<int> prefix;
    long long used = 0;
    for (int v : order) {
      long long next = checked_add(used, inst.cost(v));
      if (next > inst.budget()) break;
      used = next;
      prefix.push_back(v);
    }
    Solution prefix_sol = make_solution(inst, std::move(prefix));
    trace.candidates.push_back({"S2-prefix " + vertex_set_label(prefix_sol.vertices),
                                prefix_sol.total_weight, prefix_sol.total_cost});
    candidates.push_back(std::move(prefix_sol));
  }

  int best_vertex = -1;
  for (int v = 0; v < inst.vertex_count(); ++v) {
    if (inst.cost(v) > inst.budget()) continue;
    if (best_vertex == -1 || inst.weight(v) > inst.weight(best_vertex)) best_vertex = v;
  }
  if (best_vertex != -1) {
    Solution single = make_solution(inst, {best_vertex});
    trace.candidates.push_back({"best-vertex " + vertex_set_label(single.vertices),
                                single.total_weight, single.total_cost});
    candidates.push_back(std::move(single));
  }

  Solution best;  // empty solution is always feasible
  for (const Solution& cand : candidates) {
    if (cand.total_cost > inst.budget()) continue;
    if (cand.total_weight > best.total_weight ||
        (cand.total_weight == best.total_weight &&
         std::lexicographical_compare(cand.vertices.begin(), cand.vertices.end(),
                                      best.vertices.begin(), best.vertices.end())))
      best = cand;
  }
  return best;
}

namespace {

struct ResidualInstance {
  BudgetedInstance inst;
  std::vector<int> original_id;
};

// Remove F, its neighborhood, anything heavier than the lightest forced
// vertex, and anything that no longer fits the reduced budget.
ResidualInstance make_residual(const BudgetedInstance& inst, const std::vector<int>& forced,
                               long long forced_cost) {
  long long weight_cap = 0;
  bool has_cap = !forced.empty();
  if (has_cap) {
    weight_cap = inst.weight(forced[0]);
    for (int v : forced) weight_cap = std::min(weight_cap, inst.weight(v));
  }
  long long residual_budget = inst.budget() - forced_cost;

  std::vector<char> banned(inst.vertex_count(), 0);
  for (int v : forced) {
    banned[v] = 1;
    for (int u : inst.neighbors(v)) banned[u] = 1;
  }

  std::vector<int> keep;
  std::vector<int> new_id(inst.vertex_count(), -1);
  for (int v = 0; v < inst.vertex_count(); ++v) {
    if (banned[v]) continue;
    if (has_cap && inst.weight(v) > weight_cap) continue;
    if (inst.cost(v) > residual_budget) continue;
    new_id[v] = static_cast<int>(keep.size());
    keep.push_back(v);
  }

  std::vector<long long> weights, costs;
  weights.reserve(keep.size());
  costs.reserve(keep.size());
  for (int v : keep) {
    weights.push_back(inst.weight(v));
    costs.push_back(inst.cost(v));
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : inst.edges())
    if (new_id[e.first] != -1 && new_id[e.second] != -1)
      edges.emplace_back(new_id[e.first], new_id[e.second]);
  std::optional<std::vector<Side>> sides;
  if (inst.has_sides()) {
    std::vector<Side> sub;
    sub.reserve(keep.size());
    for (int v : keep) sub.push_back((*inst.sides())[v]);
    sides = std::move(sub);
  }
  return {BudgetedInstance(static_cast<int>(keep.size()), std::move(weights), std::move(costs),
                           residual_budget, std::move(edges), std::move(sides)),
          std::move(keep)};
}

Solution map_back(const BudgetedInstance& inst, const Solution& sub,
                  const std::vector<int>& original_id) {
  std::vector<int> vs;
  vs.reserve(sub.vertices.size());
  for (int v : sub.vertices) vs.push_back(original_id[v]);
  return make_solution(inst, std::move(vs));
}

LagrangianTrace map_back(const BudgetedInstance& inst, LagrangianTrace trace,
                         const std::vector<int>& original_id) {
  trace.inner = map_back(inst, trace.inner, original_id);
  if (trace.outer) trace.outer = map_back(inst, *trace.outer, original_id);
  return trace;
}

// Enumerates independent forced sets of size <= level with cost within budget,
// ascending ids, empty set first.
void enumerate_forced(const BudgetedInstance& inst, int level, std::vector<int>& current,
                      long long current_cost, int next,
                      const std::function<void(const std::vector<int>&, long long)>& visit) {
  visit(current, current_cost);
  if (static_cast<int>(current.size()) == level) return;
  for (int v = next; v < inst.vertex_count(); ++v) {
    long long cost = checked_add(current_cost, inst.cost(v));
    if (cost > inst.budget()) continue;
    bool clash = false;
    for (int u : current)
      if (inst.adjacent(u, v)) {
        clash = true;
        break;
      }
    if (clash) continue;
    current.push_back(v);
    enumerate_forced(inst, level, current, cost, v + 1, visit);
    current.pop_back();
  }
}

bool better(const Solution& a, const Solution& b) {
  if (a.total_weight != b.total_weight) return a.total_weight > b.total_weight;
  return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                                      b.vertices.end());
}

}  // namespace

std::pair<Solution, LagrangianTrace> msp_solve(const BudgetedInstance& inst,
                                               const LagrangianConfig& cfg) {
  check_config(cfg);

  if (inst.vertex_count() == 0) return {Solution{}, LagrangianTrace{}};

  // budget not binding: the unbudgeted optimum is exact
  Solution unbudgeted = parametric_solve(inst, Ratio(0), TieBreak::PreferMinCost, cfg);
  if (unbudgeted.total_cost <= inst.budget()) {
    LagrangianTrace trace;
    trace.inner = unbudgeted;
    trace.candidates.push_back({"mwis-fits-budget " + vertex_set_label(unbudgeted.vertices),
                                unbudgeted.total_weight, unbudgeted.total_cost});
    return {std::move(unbudgeted), std::move(trace)};
  }

  Solution best;
  LagrangianTrace best_trace;
  bool have_best = false;
  std::vector<CandidateRecord> forced_records;

  std::vector<int> current;
  enumerate_forced(
      inst, cfg.enumeration_level, current, 0, 0,
      [&](const std::vector<int>& forced, long long forced_cost) {
        ResidualInstance residual = make_residual(inst, forced, forced_cost);

        Solution residual_sol;
        LagrangianTrace residual_trace;
        if (residual.inst.vertex_count() > 0) {
          Solution relaxed =
              parametric_solve(residual.inst, Ratio(0), TieBreak::PreferMinCost, cfg);
          if (relaxed.total_cost <= residual.inst.budget()) {
            residual_trace.inner = relaxed;
            residual_sol = std::move(relaxed);
          } else {
            residual_trace = find_breakpoint(residual.inst, cfg);
            residual_sol = combine(residual.inst, residual_trace);
          }
        }

        std::vector<int> vs = forced;
        for (int v : residual_sol.vertices) vs.push_back(residual.original_id[v]);
        Solution candidate = make_solution(inst, std::move(vs));
        forced_records.push_back({"F=" + vertex_set_label(forced) + " candidate " +
                                      vertex_set_label(candidate.vertices),
                                  candidate.total_weight, candidate.total_cost});
        if (!have_best || better(candidate, best)) {
          have_best = true;
          best = candidate;
          best_trace = map_back(inst, std::move(residual_trace), residual.original_id);
        }
      });

  best_trace.candidates.insert(best_trace.candidates.end(), forced_records.begin(),
                               forced_records.end());
  return {std::move(best), std::move(best_trace)};
}

}  // namespace bmwis
