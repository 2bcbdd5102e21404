#include "bmwis/mwis.hpp"

#include <algorithm>
#include <stdexcept>

#include "bmwis/maxflow.hpp"

namespace bmwis {

WeightAssignment integer_weights(const BudgetedInstance& inst) {
  WeightAssignment wa;
  wa.reserve(inst.vertex_count());
  for (int v = 0; v < inst.vertex_count(); ++v) wa.emplace_back(inst.weight(v));
  return wa;
}

Ratio assignment_value(const WeightAssignment& wa, const std::vector<int>& vs) {
  Ratio total(0);
  for (int v : vs) total += wa[v];
  return total;
}

namespace {

void check_assignment(const BudgetedInstance& inst, const WeightAssignment& wa) {
  if (static_cast<int>(wa.size()) != inst.vertex_count())
    throw std::invalid_argument("weight assignment length mismatch");
}

BigInt denominator_lcm(const BudgetedInstance& inst, const WeightAssignment& wa) {
  BigInt lcm(1);
  for (int v = 0; v < inst.vertex_count(); ++v)
    if (wa[v].sign() > 0) lcm = boost::multiprecision::lcm(lcm, wa[v].den());
  return lcm;
}

}  // namespace

WeightAssignment fold_cost_tiebreak(const BudgetedInstance& inst, const WeightAssignment& wa,
                                    TieBreak tb) {
  check_assignment(inst, wa);
  if (tb == TieBreak::None) return wa;
  // D * M makes one unit of scaled primary weight outweigh any cost total.
  Ratio scale(denominator_lcm(inst, wa) * (BigInt(inst.total_cost()) + 1));
  WeightAssignment eff(wa);
  for (int v = 0; v < inst.vertex_count(); ++v) {
    if (wa[v].sign() <= 0) continue;
    Ratio costed(inst.cost(v));
    eff[v] = tb == TieBreak::PreferMinCost ? wa[v] * scale - costed : wa[v] * scale + costed;
  }
  return eff;
}

namespace {

// Min vertex cover complement, computed on one scaled integer flow network:
// source -> positive Left vertices, positive Right vertices -> sink,
// original edges Left -> Right with effectively infinite capacity.
template <class Cap>
std::vector<int> flow_select(const BudgetedInstance& inst, const std::vector<Side>& sides,
                             const std::vector<char>& support,
                             const std::vector<BigInt>& scaled) {
  const int n = inst.vertex_count();
  const int source = n, sink = n + 1;
  MaxFlow<Cap> flow(n + 2);
  Cap inf(0);
  for (int v = 0; v < n; ++v)
    if (support[v]) inf += static_cast<Cap>(scaled[v]);
  inf += 1;
  for (int v = 0; v < n; ++v) {
    if (!support[v]) continue;
    if (sides[v] == Side::Left)
      flow.add_edge(source, v, static_cast<Cap>(scaled[v]));
    else
      flow.add_edge(v, sink, static_cast<Cap>(scaled[v]));
  }
  for (const auto& e : inst.edges()) {
    if (e.first == e.second || !support[e.first] || !support[e.second]) continue;
    int u = e.first, v = e.second;
    if (sides[u] != Side::Left) std::swap(u, v);
    if (sides[u] == sides[v]) continue;  // callers guarantee bipartite
    flow.add_edge(u, v, inf);
  }
  flow.run(source, sink);
  auto reach = flow.source_side(source);
  std::vector<int> picked;
  for (int v = 0; v < n; ++v) {
    if (!support[v]) continue;
    bool in_set = sides[v] == Side::Left ? reach[v] : !reach[v];
    if (in_set) picked.push_back(v);
  }
  return picked;
}

}  // namespace

std::vector<int> mwis_bipartite(const BudgetedInstance& inst, const WeightAssignment& wa,
                                TieBreak tb) {
  check_assignment(inst, wa);
  auto sides = bipartite_sides(inst);
  WeightAssignment eff = fold_cost_tiebreak(inst, wa, tb);

  std::vector<char> support(inst.vertex_count(), 0);
  for (int v = 0; v < inst.vertex_count(); ++v) support[v] = eff[v].sign() > 0;

  BigInt lcm = denominator_lcm(inst, eff);
  std::vector<BigInt> scaled(inst.vertex_count());
  BigInt total(0);
  for (int v = 0; v < inst.vertex_count(); ++v) {
    if (!support[v]) continue;
    scaled[v] = eff[v].num() * (lcm / eff[v].den());
    total += scaled[v];
  }
  // long long fast path when all capacities (and their sum) stay small
  static const BigInt kFastLimit = (BigInt(1) << 62) - 2;
  if (total <= kFastLimit) return flow_select<long long>(inst, sides, support, scaled);
  return flow_select<BigInt>(inst, sides, support, scaled);
}

namespace {

struct BruteState {
  const BudgetedInstance& inst;
  const WeightAssignment& wa;
  std::vector<int> best;
  Ratio best_value{0};
  std::vector<int> current;
  Ratio current_value{0};

  void search(std::vector<int> alive) {
    if (current_value > best_value) {
      best = current;
      best_value = current_value;
    }
    if (alive.empty()) return;
    Ratio bound = current_value;
    for (int v : alive) bound += wa[v];
    if (bound <= best_value) return;

    // branch on the max-degree alive vertex, lowest id on ties
    int pick = alive[0], pick_degree = -1;
    for (int v : alive) {
      int deg = 0;
      for (int u : alive)
        if (u != v && inst.adjacent(u, v)) ++deg;
      if (deg > pick_degree) {
        pick_degree = deg;
        pick = v;
      }
    }

    std::vector<int> included;
    included.reserve(alive.size());
    for (int v : alive)
      if (v != pick && !inst.adjacent(v, pick)) included.push_back(v);
    current.push_back(pick);
    current_value += wa[pick];
    search(std::move(included));
    current.pop_back();
    current_value -= wa[pick];

    std::vector<int> excluded;
    excluded.reserve(alive.size());
    for (int v : alive)
      if (v != pick) excluded.push_back(v);
    search(std::move(excluded));
  }
};

}  // namespace

std::vector<int> mwis_bruteforce(const BudgetedInstance& inst, const WeightAssignment& wa,
                                 int cap) {
  check_assignment(inst, wa);
  if (inst.vertex_count() > cap)
    throw CapExceededError("mwis_bruteforce: " + std::to_string(inst.vertex_count()) +
                           " vertices exceed cap " + std::to_string(cap));
  BruteState state{inst, wa};
  std::vector<int> alive;
  for (int v = 0; v < inst.vertex_count(); ++v)
    if (wa[v].sign() > 0 && !inst.adjacent(v, v)) alive.push_back(v);
  state.search(std::move(alive));
  std::sort(state.best.begin(), state.best.end());
  return state.best;
}

std::vector<int> run_mwis_oracle(const BudgetedInstance& inst, const WeightAssignment& wa,
                                 TieBreak tb, OracleKind oracle, int bruteforce_cap) {
  if (oracle == OracleKind::BipartiteFlow) return mwis_bipartite(inst, wa, tb);
  return mwis_bruteforce(inst, fold_cost_tiebreak(inst, wa, tb), bruteforce_cap);
}

}  // namespace bmwis
