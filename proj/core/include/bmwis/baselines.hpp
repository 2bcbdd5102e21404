#ifndef BMWIS_BASELINES_HPP
#define BMWIS_BASELINES_HPP

#include <utility>
#include <vector>

#include "bmwis/instance.hpp"
#include "bmwis/mwis.hpp"

namespace bmwis {

struct KnapsackItem {
  long long weight = 0;
  long long cost = 0;
};

// Cost-indexed 0/1-knapsack DP. best[b] is the maximum weight achievable
// with total cost <= b (non-decreasing in b); take[i][b] backs reconstruction.
struct KnapsackTable {
  long long capacity = 0;
  std::vector<long long> best;
  std::vector<std::vector<char>> take;
};

KnapsackTable knapsack_table(const std::vector<KnapsackItem>& items, long long budget,
                             long long cell_cap = 10'000'000);

// Exact optimum and one optimal item subset (indices ascending).
std::pair<long long, std::vector<int>> knapsack_dp(const std::vector<KnapsackItem>& items,
                                                   long long budget,
                                                   long long cell_cap = 10'000'000);

// Exact budgeted MWIS by branch and bound on the max-degree vertex, pruned
// by the remaining-weight bound and a fractional-knapsack relaxation that
// ignores the edges.
Solution bmwis_bruteforce(const BudgetedInstance& inst, int cap = 26);

// Solve MWIS ignoring the budget, then keep the best affordable subset of it
// (a knapsack: the chosen set has no internal edges). The star family drives
// its ratio to 2/n.
Solution trim_heuristic(const BudgetedInstance& inst,
                        OracleKind oracle = OracleKind::BipartiteFlow,
                        int bruteforce_cap = 30);

// Exact knapsack on each side of a bipartite instance, better of the two;
// always within factor 2 of the optimum.
Solution side_knapsack(const BudgetedInstance& inst, long long cell_cap = 10'000'000);

}  // namespace bmwis

#endif
