#include "bmwis/baselines.hpp"

#include <algorithm>
#include <numeric>

#include "bmwis/rational.hpp"

namespace bmwis {

KnapsackTable knapsack_table(const std::vector<KnapsackItem>& items, long long budget,
                             long long cell_cap) {
  if (budget < 0) throw std::invalid_argument("knapsack budget must be non-negative");
  for (const auto& it : items)
    if (it.cost < 0 || it.weight < 0)
      throw std::invalid_argument("knapsack items must be non-negative");
  long long cells = checked_mul(static_cast<long long>(items.size()) + 1, budget + 1);
  if (cells > cell_cap)
    throw CapExceededError("knapsack table of " + std::to_string(cells) +
                           " cells exceeds cap " + std::to_string(cell_cap));

  KnapsackTable table;
  table.capacity = budget;
  table.best.assign(budget + 1, 0);
  table.take.assign(items.size(), std::vector<char>(budget + 1, 0));
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (long long b = budget; b >= items[i].cost; --b) {
      long long with = checked_add(table.best[b - items[i].cost], items[i].weight);
      if (with > table.best[b]) {
        table.best[b] = with;
        table.take[i][b] = 1;
      }
    }
  }
  return table;
}

std::pair<long long, std::vector<int>> knapsack_dp(const std::vector<KnapsackItem>& items,
                                                   long long budget, long long cell_cap) {
  KnapsackTable table = knapsack_table(items, budget, cell_cap);
  std::vector<int> chosen;
  long long b = budget;
  for (int i = static_cast<int>(items.size()) - 1; i >= 0; --i) {
    if (table.take[i][b]) {
      chosen.push_back(i);
      b -= items[i].cost;
    }
  }
  std::reverse(chosen.begin(), chosen.end());
  return {budget >= 0 ? table.best[budget] : 0, std::move(chosen)};
}

namespace {

struct BudgetedBrute {
  const BudgetedInstance& inst;
  std::vector<int> best;
  long long best_weight = 0;
  std::vector<int> current;
  long long current_weight = 0;
  long long current_cost = 0;

  // Fractional knapsack over the alive vertices, edges ignored.
  long long relaxation_bound(const std::vector<int>& alive) const {
    long long room = inst.budget() - current_cost;
    std::vector<int> order(alive);
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
    Ratio value(current_weight);
    for (int v : order) {
      if (inst.cost(v) == 0) {
        value += Ratio(inst.weight(v));
        continue;
      }
      if (inst.cost(v) <= room) {
        room -= inst.cost(v);
        value += Ratio(inst.weight(v));
      } else {
        value += Ratio(BigInt(inst.weight(v)) * room, BigInt(inst.cost(v)));
        break;
      }
    }
    return value.floor().convert_to<long long>();
  }

  void search(std::vector<int> alive) {
    if (current_weight > best_weight) {
      best = current;
      best_weight = current_weight;
    }
    if (alive.empty()) return;
    long long weight_left = 0;
    for (int v : alive) weight_left = checked_add(weight_left, inst.weight(v));
    if (checked_add(current_weight, weight_left) <= best_weight) return;
    if (relaxation_bound(alive) <= best_weight) return;

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

    if (current_cost + inst.cost(pick) <= inst.budget()) {
      std::vector<int> included;
      included.reserve(alive.size());
      for (int v : alive)
        if (v != pick && !inst.adjacent(v, pick) &&
            current_cost + inst.cost(pick) + inst.cost(v) <= inst.budget())
          included.push_back(v);
      current.push_back(pick);
      current_weight += inst.weight(pick);
      current_cost += inst.cost(pick);
      search(std::move(included));
      current.pop_back();
      current_weight -= inst.weight(pick);
      current_cost -= inst.cost(pick);
    }

    std::vector<int> excluded;
    excluded.reserve(alive.size());
    for (int v : alive)
      if (v != pick) excluded.push_back(v);
    search(std::move(excluded));
  }
};

}  // namespace

Solution bmwis_bruteforce(const BudgetedInstance& inst, int cap) {
  if (inst.vertex_count() > cap)
    throw CapExceededError("bmwis_bruteforce: " + std::to_string(inst.vertex_count()) +
                           " vertices exceed cap " + std::to_string(cap));
  if (inst.budget() < 0) throw std::invalid_argument("budget must be non-negative");
  BudgetedBrute state{inst};
  std::vector<int> alive;
  for (int v = 0; v < inst.vertex_count(); ++v)
    if (inst.weight(v) > 0 && inst.cost(v) <= inst.budget() && !inst.adjacent(v, v))
      alive.push_back(v);
  state.search(std::move(alive));
  return make_solution(inst, std::move(state.best));
}

Solution trim_heuristic(const BudgetedInstance& inst, OracleKind oracle, int bruteforce_cap) {
  auto mwis = run_mwis_oracle(inst, integer_weights(inst), TieBreak::PreferMinCost, oracle,
                              bruteforce_cap);
  // the MWIS is independent, so the affordable sub-selection is a pure knapsack
  std::vector<KnapsackItem> items;
  items.reserve(mwis.size());
  for (int v : mwis) items.push_back({inst.weight(v), inst.cost(v)});
  auto [weight, chosen] = knapsack_dp(items, inst.budget());
  (void)weight;
  std::vector<int> picked;
  picked.reserve(chosen.size());
  for (int idx : chosen) picked.push_back(mwis[idx]);
  return make_solution(inst, std::move(picked));
}

Solution side_knapsack(const BudgetedInstance& inst, long long cell_cap) {
  auto sides = bipartite_sides(inst);
  Solution best;
  for (Side side : {Side::Left, Side::Right}) {
    std::vector<int> members;
    std::vector<KnapsackItem> items;
    for (int v = 0; v < inst.vertex_count(); ++v) {
      if (sides[v] != side) continue;
      members.push_back(v);
      items.push_back({inst.weight(v), inst.cost(v)});
    }
    auto [weight, chosen] = knapsack_dp(items, inst.budget(), cell_cap);
    (void)weight;
    std::vector<int> picked;
    picked.reserve(chosen.size());
    for (int idx : chosen) picked.push_back(members[idx]);
    Solution sol = make_solution(inst, std::move(picked));
    if (side == Side::Left || sol.total_weight > best.total_weight) best = std::move(sol);
  }
  return best;
}

}  // namespace bmwis
