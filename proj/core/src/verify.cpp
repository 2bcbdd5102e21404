#include "bmwis/verify.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "bmwis/errors.hpp"

namespace bmwis {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;
using Float100 = boost::multiprecision::cpp_bin_float_100;

template <class F>
F yes_case_margin(const F& delta) {
  using std::pow;
  using std::sqrt;
  F exponent = 1 / sqrt(delta);
  return pow(delta, F(1) / 10) - pow(F(1) / 2 + delta, exponent);
}

template <class F>
F no_case_margin(const F& delta) {
  using std::pow;
  using std::sqrt;
  F exponent = 1 / sqrt(delta);
  return pow(delta, F(1) / 10) - (1 - pow(1 - delta, exponent));
}

template <class F>
F log_form(const F& x) {
  using std::log;
  using std::sqrt;
  return log(x) / 10 - log(F(1) / 2 + x) / sqrt(x);
}

enum class Claim { YesCase, NoCase };

GridClaimResult run_grid(Claim claim, int points, double lo, double hi) {
  GridClaimResult out;
  out.grid_points = points;
  out.delta_lo = lo;
  out.delta_hi = hi;

  Float100 log_lo = log(Float100(lo));
  Float100 log_hi = log(Float100(hi));
  Float100 min_margin;
  Float100 max_err = 0;
  bool first = true;

  for (int i = 0; i < points; ++i) {
    Float100 delta =
        points == 1 ? Float100(lo)
                    : exp(log_lo + (log_hi - log_lo) * i / (points - 1));
    Float100 precise = claim == Claim::YesCase ? yes_case_margin(delta) : no_case_margin(delta);
    Float50 rough_delta = Float50(delta);
    Float50 rough =
        claim == Claim::YesCase ? yes_case_margin(rough_delta) : no_case_margin(rough_delta);
    Float100 err = abs(precise - Float100(rough));
    if (err > max_err) max_err = err;
    if (first || precise < min_margin) {
      min_margin = precise;
      out.min_margin_delta = delta.convert_to<double>();
      first = false;
    }
  }

  // conservative error bound: cross-precision difference, padded
  Float100 guard = max_err * 8 + Float100("1e-40");
  out.min_margin = min_margin.convert_to<double>();
  {
    std::ostringstream ss;
    ss << std::scientific << min_margin;
    out.min_margin_str = ss.str();
  }
  if (min_margin > guard) {
    out.all_positive = true;
  } else if (min_margin < -guard) {
    out.all_positive = false;
  } else {
    out.inconclusive = true;
  }
  return out;
}

}  // namespace

InequalityReport verify_inequalities(int grid_points) {
  if (grid_points < 1) throw std::invalid_argument("grid needs at least one point");
  InequalityReport report;
  report.yes_case = run_grid(Claim::YesCase, grid_points, 1e-9, 0.1);
  report.no_case = run_grid(Claim::NoCase, grid_points, 1e-12, 1e-10);
  report.log_form_anchor = log_form(Float100(1) / 10).convert_to<double>();
  return report;
}

namespace {

Ratio rational_pow(const Ratio& base, long long exponent) {
  if (exponent < 0) return Ratio(1) / rational_pow(base, -exponent);
  Ratio out(1), sq = base;
  long long e = exponent;
  while (e > 0) {
    if (e & 1) out *= sq;
    sq *= sq;
    e >>= 1;
  }
  return out;
}

std::string log10_of_power(long long base, const BigInt& exponent) {
  // log10(base^exponent) as a printable magnitude
  Float100 value = Float100(exponent) * log10(Float100(base));
  std::ostringstream ss;
  ss << std::setprecision(20) << value;
  return ss.str();
}

}  // namespace

GapReport gap_calculator(const GapParams& params) {
  GapReport report;
  report.relaxed = params.relaxed;
  report.eps = params.eps;
  report.n = params.n;

  const Ratio& eps = params.eps;
  if (eps.sign() <= 0 || eps >= Ratio(1)) {
    report.rejection = "eps must lie strictly between 0 and 1";
    return report;
  }
  if (params.n < 1) {
    report.rejection = "n must be positive";
    return report;
  }

  report.delta = eps.pow(100);
  report.delta_tenth = eps.pow(10);

  if (!params.relaxed) {
    // admissibility: eps in (0, 0.1^10), 1/eps integral, n even
    Ratio bound(BigInt(1), rational_pow(Ratio(10), 10).num());
    if (!(eps < bound)) {
      report.rejection = "strict mode requires eps < 1/10^10";
      return report;
    }
    if (eps.num() != 1) {
      report.rejection = "strict mode requires 1/eps to be an integer";
      return report;
    }
    if (params.n % 2 != 0) {
      report.rejection = "strict mode requires an even n";
      return report;
    }
    report.admissible = true;
    // t = (1/eps)^50; the induced magnitudes are far beyond explicit storage
    report.t_exact = boost::multiprecision::pow(eps.den(), 50);
    report.log10_tuple_side = log10_of_power(params.n, report.t_exact);
    // sigma = eps^-3 * n^(t+1) / 2
    report.log10_sigma = log10_of_power(params.n, report.t_exact + 1);
    return report;
  }

  report.admissible = true;
  report.t_used = params.t;
  if (params.t < 1) {
    report.admissible = false;
    report.rejection = "exponent t must be at least 1";
    return report;
  }
  // digit budget: n^t needs about t*log10(n) + 1 digits
  double digits = static_cast<double>(params.t) * std::log10(static_cast<double>(params.n)) + 1;
  if (digits > static_cast<double>(params.digit_budget))
    throw CapExceededError("n^t needs ~" + std::to_string(static_cast<long long>(digits)) +
                           " digits, over the budget of " + std::to_string(params.digit_budget));

  const Ratio n(params.n);
  const Ratio inv_eps3 = rational_pow(eps, -3);
  const Ratio nt = rational_pow(n, params.t);
  const Ratio half(BigInt(1), BigInt(2));

  report.q = inv_eps3 * nt;
  report.p = inv_eps3 * n * half;
  report.nt_p = nt * report.p;
  report.sigma = inv_eps3 * rational_pow(n, params.t + 1) * half;
  report.beta = report.q * n * half + nt;
  report.q_delta_n = report.q * report.delta * n;
  report.yes_bound = report.q * (half - report.delta) * n +
                     (Ratio(1) - report.delta_tenth) * report.nt_p;
  report.no_bound = std::max(report.q_delta_n + report.nt_p,
                             report.beta + report.delta_tenth * report.nt_p);
  report.exact = true;

  report.sigma_identity = report.nt_p == report.sigma;
  Ratio eps2 = eps * eps;
  report.yes_ok = report.yes_bound >= (Ratio(2) - eps2) * report.sigma;
  report.no_ok = report.no_bound < (Ratio(1) + eps2) * report.sigma;
  report.ratio = report.yes_bound / report.no_bound;
  report.ratio_ok = report.ratio > Ratio(2) - eps;
  return report;
}

}  // namespace bmwis
