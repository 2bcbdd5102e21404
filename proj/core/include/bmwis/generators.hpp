#ifndef BMWIS_GENERATORS_HPP
#define BMWIS_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bmwis/instance.hpp"
#include "bmwis/rational.hpp"

namespace bmwis {

// Star K_{1,n} where trimming the unbudgeted optimum collapses to ratio 2/n:
// center (w, c) = (n*s, s), each leaf (2s, 2s), budget 2s. The budgeted
// optimum is the center alone.
struct StarParams {
  int leaves = 2;        // n >= 2
  long long scale = 1;   // s >= 1, clears the construction to integers
};
BudgetedInstance gen_star(const StarParams& params);

// Tuple-lift of a bipartite base graph: the right side becomes all t-tuples
// over the base right side (lexicographic order), and a left vertex is
// adjacent to a tuple iff it is adjacent to at least one coordinate.
// Returned as an unweighted instance (w = c = 1) with budget 0 as sentinel.
BudgetedInstance gen_reduced_graph(const BudgetedInstance& base, int t,
                                   long long tuple_limit = 1'000'000);

// Index of a tuple in the lexicographic enumeration used by gen_reduced_graph.
long long tuple_index(const std::vector<int>& coords, int base_size);

struct BicliqueTransfer {
  BigInt fa_size;
  BigInt fb_size;            // n^t - (n - |SR|)^t
  bool verified_explicitly;  // tuple side was built and the biclique re-checked
};

// Given a biclique (SA, SR) planted in the base graph, reports the size of
// the induced biclique in the tuple lift and, at small scale, verifies it
// directly against gen_reduced_graph's output.
BicliqueTransfer biclique_transfer_check(const BudgetedInstance& base, int t,
                                         const std::vector<int>& sa,
                                         const std::vector<int>& sr,
                                         long long tuple_limit = 1'000'000);

// Uniform-cost instance with q disjoint copies of every left vertex, copies
// coupled to the right side through the *complement* of the base edges;
// right vertices carry weight p, copies weight 1, all costs 1, budget beta.
struct UmsbParams {
  long long copies = 1;   // q >= 1
  long long heavy = 1;    // p >= 1
  long long beta = 0;     // cardinality budget
  long long size_limit = 2'000'000;
};
BudgetedInstance gen_umsb(const BudgetedInstance& base, const UmsbParams& params);

// Complement-graph reduction with w = c, left weight 4k^2+2k, right weight
// 4k^2+1, budget 8k^3+2k^2+k: a weight-B solution exists iff the base graph
// has a balanced K_{k,k}.
BudgetedInstance gen_cmwis_reduction(const BudgetedInstance& base, long long k);

// Decides K_{k,k} membership through the reduction and an exact solver
// (bmwis_bruteforce by default).
bool decide_biclique(const BudgetedInstance& base, long long k,
                     const std::function<Solution(const BudgetedInstance&)>& exact_solver = {});

struct BudgetRule {
  enum class Kind { FractionOfTotal, Fixed };
  Kind kind = Kind::FractionOfTotal;
  long long num = 1, den = 2;  // FractionOfTotal: B = floor(total_cost * num / den)
  long long fixed = 0;
};

// Seeded bipartite generator; splitmix64, stream order fixed as
// vertices (planted sample) -> edges (row-major) -> values (weights, costs).
struct RandomBipartiteParams {
  int left = 1;
  int right = 1;
  Ratio edge_prob{1};
  long long weight_lo = 1, weight_hi = 10;
  long long cost_lo = 1, cost_hi = 10;
  BudgetRule budget;
  std::uint64_t seed = 0;
  std::optional<std::pair<int, int>> planted_biclique;
};
BudgetedInstance gen_random_bipartite(const RandomBipartiteParams& params);

}  // namespace bmwis

#endif
