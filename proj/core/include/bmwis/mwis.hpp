#ifndef BMWIS_MWIS_HPP
#define BMWIS_MWIS_HPP

#include <vector>

#include "bmwis/instance.hpp"
#include "bmwis/rational.hpp"

namespace bmwis {

// Per-vertex adjusted weights; entries may be negative. Length must equal
// the vertex count of the owning instance.
using WeightAssignment = std::vector<Ratio>;

// Secondary objective applied among all maximizers of the adjusted weight.
enum class TieBreak { PreferMinCost, PreferMaxCost, None };

enum class OracleKind { BipartiteFlow, BruteForce };

WeightAssignment integer_weights(const BudgetedInstance& inst);
Ratio assignment_value(const WeightAssignment& wa, const std::vector<int>& vs);

// Folds the cost tie-break into the weights so that one maximization solves
// the lexicographic objective. Vertices with wa(v) <= 0 keep their
// (non-positive) weight so every oracle still excludes them; for the rest,
// eff(v) = wa(v) * D * (1 + sum of costs) -/+ c(v), where D clears all
// denominators on the positive support. Any maximizer of eff is a maximizer
// of wa with minimum (resp. maximum) total cost on that support.
WeightAssignment fold_cost_tiebreak(const BudgetedInstance& inst, const WeightAssignment& wa,
                                    TieBreak tb);

// Maximum-weight independent set on a bipartite instance via min vertex
// cover / max flow duality; exact over rationals. Vertices with wa(v) <= 0
// are never selected. Throws NotBipartiteError when no 2-coloring exists.
std::vector<int> mwis_bipartite(const BudgetedInstance& inst, const WeightAssignment& wa,
                                TieBreak tb = TieBreak::None);

// Exact MWIS for any graph class at small scale: branch and bound on the
// max-degree vertex, pruned by the remaining positive weight.
std::vector<int> mwis_bruteforce(const BudgetedInstance& inst, const WeightAssignment& wa,
                                 int cap = 30);

// Dispatch helper used by the solvers; applies the tie-break on both paths.
std::vector<int> run_mwis_oracle(const BudgetedInstance& inst, const WeightAssignment& wa,
                                 TieBreak tb, OracleKind oracle, int bruteforce_cap = 30);

}  // namespace bmwis

#endif
