#pragma once

#include <numbers>

namespace rheo {

// Euler-Mascheroni constant, used by the large-argument path of ein().
inline constexpr double euler_gamma = std::numbers::egamma;

// Controls the series evaluation of ein(): where to hand over to the
// E1-based path, how many terms may be summed, and the truncation tolerance.
struct EvalControl {
  double series_threshold = 8.0;
  int max_terms = 200;
  double abs_tol = 1e-15;

  void validate() const;  // throws std::invalid_argument
};

// Modified exponential integral
//
//   Ein(t) = int_0^t (1 - exp(-u))/u du,   t >= 0.
//
// Entire, non-negative, strictly increasing. Evaluated by the alternating
// power series for t <= ctl.series_threshold and via
// euler_gamma + log(t) + e1(t) above it.
double ein(double t, const EvalControl& ctl = {});

// Series-only evaluation of Ein, exposed so the regime handover can be
// cross-checked against the E1 route. Terms peak near exp(t)/t before the
// alternating cancellation sets in, so the recurrence and the running sum
// are carried in double-double arithmetic; plain binary64 accumulation
// would lose ~t/ln(10) digits and miss the handover tolerance.
double ein_series(double t, const EvalControl& ctl = {});

// Exponential integral E1(t) = int_t^inf exp(-u)/u du, t > 0. Positive,
// strictly decreasing. Continued fraction for t >= 1, series route below.
double e1(double t);

// Creep rate of the Becker law: (1 - exp(-t))/t, continued with its limit
// value 1 at t = 0. Values in (0, 1].
double becker_rate(double t);

// Creep rate of the Lomnitz law: 1/(1 + t). Values in (0, 1].
double lomnitz_rate(double t);

// log(1 + t) for t >= 0 without cancellation near t = 0.
double log1p_safe(double t);

}  // namespace rheo
