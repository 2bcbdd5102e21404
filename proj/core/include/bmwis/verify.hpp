#ifndef BMWIS_VERIFY_HPP
#define BMWIS_VERIFY_HPP

#include <string>

#include "bmwis/rational.hpp"

namespace bmwis {

struct GridClaimResult {
  int grid_points = 0;
  double delta_lo = 0, delta_hi = 0;
  bool all_positive = false;
  bool inconclusive = false;  // margin below the evaluation error bound
  double min_margin = 0;
  double min_margin_delta = 0;
  std::string min_margin_str;
};

// High-precision (>= 128-bit mantissa) grid evaluation of the two coverage
// inequalities behind the tuple-lift construction:
//   yes case:  delta^0.1 - (1/2 + delta)^(1/sqrt(delta)) >= 0      on (1e-9, 0.1)
//   no case:   delta^0.1 - (1 - (1 - delta)^(1/sqrt(delta))) > 0   on (1e-12, 1e-10)
// Margins smaller than the cross-precision error bound are reported as
// inconclusive, never as falsified.
struct InequalityReport {
  GridClaimResult yes_case;
  GridClaimResult no_case;
  double log_form_anchor = 0;  // ln(x)/10 - ln(1/2+x)/sqrt(x) at x = 0.1
};

InequalityReport verify_inequalities(int grid_points);

struct GapParams {
  Ratio eps;
  long long n = 2;
  bool relaxed = false;
  // Relaxed mode instantiates the construction with this small exponent; the
  // faithful t = eps^-50 is astronomically large for every admissible eps.
  long long t = 3;
  long long digit_budget = 100'000;
};

struct GapReport {
  bool relaxed = false;
  bool admissible = false;
  std::string rejection;

  Ratio eps;
  long long n = 0;
  Ratio delta;        // eps^100
  Ratio delta_tenth;  // delta^(1/10) = eps^10

  // strict mode: exact small parameters plus order-of-magnitude strings
  BigInt t_exact;
  std::string log10_tuple_side;  // log10(n^t)
  std::string log10_sigma;

  // relaxed mode: every quantity as an exact rational
  bool exact = false;
  long long t_used = 0;
  Ratio sigma, beta, nt_p, q_delta_n, q, p;
  Ratio yes_bound, no_bound, ratio;
  bool sigma_identity = false;  // n^t * p == sigma
  bool yes_ok = false;          // yes_bound >= (2 - eps^2) sigma
  bool no_ok = false;           // no_bound  <  (1 + eps^2) sigma
  bool ratio_ok = false;        // yes/no    >  2 - eps
};

GapReport gap_calculator(const GapParams& params);

}  // namespace bmwis

#endif
