#ifndef BMWIS_LAGRANGIAN_HPP
#define BMWIS_LAGRANGIAN_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmwis/instance.hpp"
#include "bmwis/mwis.hpp"
#include "bmwis/rational.hpp"

namespace bmwis {

struct LagrangianConfig {
  // Multiplier-search precision parameter; defaults to 1 / (8 n W).
  std::optional<Ratio> epsilon;
  // Forced-set enumeration depth r in {0,1,2,3}.
  int enumeration_level = 1;
  OracleKind oracle = OracleKind::BipartiteFlow;
  int bruteforce_cap = 30;
};

struct CandidateRecord {
  std::string description;
  long long weight = 0;
  long long cost = 0;
};

// Record of one multiplier search: final bracket, the boundary solutions,
// and every candidate the combine step weighed.
struct LagrangianTrace {
  Ratio lambda_low{0};
  Ratio lambda_high{0};
  Solution inner;                  // S1, cost <= B at lambda_high
  std::optional<Solution> outer;   // S2, cost > B at lambda_low; absent if budget never binds
  long long iterations = 0;
  std::vector<CandidateRecord> candidates;
};

Ratio default_epsilon(const BudgetedInstance& inst);

// Ceiling of log2((1 + W) * 2 C^2): the multiplier search never needs more
// bisection steps than this.
long long breakpoint_iteration_bound(const BudgetedInstance& inst);

// wa(v) = w(v) - lambda * c(v), exact and unclamped.
WeightAssignment adjusted_weights(const BudgetedInstance& inst, const Ratio& lambda);

// One oracle call on the relaxed objective; budget feasibility is not enforced.
Solution parametric_solve(const BudgetedInstance& inst, const Ratio& lambda, TieBreak tb,
                          const LagrangianConfig& cfg = {});

// Bisects lambda over [0, 1 + max weight] until the bracket is narrower than
// 1 / (2 C^2), C = 1 + total cost; distinct breakpoints differ by at least
// 1 / C^2, so this pins the crossing. Requires the budget to bind at lambda 0.
LagrangianTrace find_breakpoint(const BudgetedInstance& inst, const LagrangianConfig& cfg = {});

// Best feasible candidate among S1, the density-ordered feasible prefix of
// S2, and the heaviest single affordable vertex. Appends the candidates it
// considered to the trace.
Solution combine(const BudgetedInstance& inst, LagrangianTrace& trace);

// The full solver: short-circuits when the unbudgeted optimum already fits,
// otherwise enumerates forced sets up to the configured level, runs the
// multiplier search on each residual instance, and keeps the best candidate.
// On integer instances the returned weight is at least OPT / 2.
std::pair<Solution, LagrangianTrace> msp_solve(const BudgetedInstance& inst,
                                               const LagrangianConfig& cfg = {});

}  // namespace bmwis

#endif
