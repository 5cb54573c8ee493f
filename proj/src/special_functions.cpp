#include "hyppow/special_functions.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "hyppow/detail/series_impl.hpp"

namespace hyppow {

namespace detail {

// Rounding-distance pole classification. The threshold scales with the
// magnitudes entering the nearby arithmetic so values produced by index
// sums (m + n*alpha) classify consistently.
namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool near_value(double v, double target, double scale) {
  const double tol = 16.0 * kEps * std::fmax(1.0, std::fmax(std::fabs(v), scale));
  return std::fabs(v - target) <= tol;
}
}  // namespace

bool near_nonpositive_integer(double v, double scale) {
  if (v > 0.5) return false;
  return near_value(v, std::round(v), scale) && std::round(v) <= 0.0;
}

bool near_integer(double v, double scale) {
  return near_value(v, std::round(v), scale);
}

}  // namespace detail

namespace {

// B_{2k}/(2k) for 2k = 2..14, from the exact rationals 1/6, -1/30, 1/42,
// -1/30, 5/66, -691/2730, 7/6.
constexpr double kAsymCoeff[7] = {
    1.0 / 12.0,   -1.0 / 120.0,     1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
};

// Asymptotic expansion, valid for x >= 8:
// psi(x) ~ ln x - 1/(2x) - sum_k B_{2k}/(2k x^{2k}).
double digamma_asymptotic(double x) {
  const double w = 1.0 / (x * x);
  double series = kAsymCoeff[6];
  for (int k = 5; k >= 0; --k) series = kAsymCoeff[k] + w * series;
  return std::log(x) - 0.5 / x - w * series;
}

double digamma_positive(double x) {
  // shift into the asymptotic regime: psi(x) = psi(x+k) - sum 1/(x+j)
  double shift = 0.0;
  double carry = 0.0;
  while (x < 8.0) {
    const double y = 1.0 / x - carry;
    const double t = shift + y;
    carry = (t - shift) - y;
    shift = t;
    x += 1.0;
  }
  return digamma_asymptotic(x) - shift;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double digamma(double x) {
  if (!std::isfinite(x)) throw DomainError("digamma: argument must be finite");
  if (detail::near_nonpositive_integer(x)) {
    throw PoleError("digamma: pole at x = " + format_double(x) +
                    " (nonpositive integer)");
  }
  if (x > 0.0) return digamma_positive(x);
  // reflection: psi(x) = psi(1-x) - pi cot(pi x)
  return digamma_positive(1.0 - x) - std::numbers::pi * cot_pi(x);
}

double cot_pi(double q) {
  if (!std::isfinite(q)) throw DomainError("cot_pi: argument must be finite");
  const double r = q - std::round(q);  // cot(pi q) has period 1
  if (detail::near_integer(q)) {
    throw PoleError("cot_pi: pole at q = " + format_double(q) +
                    " (integer argument)");
  }
  return std::cos(std::numbers::pi * r) / std::sin(std::numbers::pi * r);
}

namespace {

void validate_pfq(const PfqSpec& spec, const ConvergenceControl& ctrl) {
  for (double b : spec.denominator) {
    if (detail::near_nonpositive_integer(b)) {
      throw PoleError("pfq: denominator parameter " + format_double(b) +
                      " is a nonpositive integer");
    }
  }
  if (!std::isfinite(spec.argument)) {
    throw DomainError("pfq: argument must be finite");
  }
  if (spec.numerator.size() > spec.denominator.size() + 1) {
    throw DomainError("pfq: series diverges for p > q+1");
  }
  const double ax = std::fabs(spec.argument);
  if (spec.argument == -1.0) {
    if (ctrl.minus_one_policy == MinusOnePolicy::reject) {
      throw DomainError("pfq: x = -1 rejected by minus_one_policy");
    }
  } else if (ax >= 1.0) {
    throw DomainError("pfq: |x| >= 1 is outside the supported domain");
  }
}

// Smallest termination index from nonpositive-integer numerator parameters,
// or -1 when the series does not terminate.
long long termination_index(const PfqSpec& spec) {
  long long stop = -1;
  for (double a : spec.numerator) {
    if (detail::near_nonpositive_integer(a)) {
      const long long at = static_cast<long long>(-std::round(a));
      if (stop < 0 || at < stop) stop = at;
    }
  }
  return stop;
}

double term_ratio(const PfqSpec& spec, long long m) {
  double r = 1.0 / (static_cast<double>(m) + 1.0);
  for (double a : spec.numerator) r *= a + static_cast<double>(m);
  for (double b : spec.denominator) r /= b + static_cast<double>(m);
  return r;
}

}  // namespace

SeriesResult pfq_truncated(const PfqSpec& spec, const ConvergenceControl& ctrl) {
  ctrl.validate();
  validate_pfq(spec, ctrl);
  const double x = spec.argument;
  if (x == 0.0) return {1.0, 1, 0.0, true};

  const long long stop = termination_index(spec);
  if (stop >= 0) {
    // polynomial case: sum the finitely many terms directly
    detail::Kahan<double> acc;
    double term = 1.0;
    for (long long m = 0; m <= stop; ++m) {
      acc.add(term);
      term *= term_ratio(spec, m) * x;
    }
    return {acc.sum, stop + 1, 0.0, true};
  }

  if (x == -1.0) {
    for (double a : spec.numerator) {
      if (a <= 0.0) {
        throw DomainError(
            "pfq: x = -1 needs positive parameters for strict alternation");
      }
    }
    // term magnitudes via the running ratio, cached to avoid O(m) re-walks
    std::vector<double> cache{1.0};
    auto magnitude = [&](long long m) {
      while (static_cast<long long>(cache.size()) <= m) {
        const long long j = static_cast<long long>(cache.size()) - 1;
        cache.push_back(cache.back() * std::fabs(term_ratio(spec, j)));
      }
      return cache[static_cast<std::size_t>(m)];
    };
    detail::AltSumResult alt =
        detail::alternating_sum(magnitude, ctrl.tolerance, ctrl.max_terms);
    return {alt.value, alt.evaluations, alt.error_estimate, alt.converged};
  }

  const double ax = std::fabs(x);
  detail::Kahan<double> acc;
  double term = 1.0;
  double prev_mag = std::numeric_limits<double>::infinity();
  double tail = std::numeric_limits<double>::infinity();
  for (long long m = 0; m < ctrl.max_terms; ++m) {
    acc.add(term);
    const double mag = std::fabs(term);
    term *= term_ratio(spec, m) * x;
    if (m >= 4) {
      tail = detail::geometric_tail(mag, prev_mag, ax);
      if (tail <= ctrl.tolerance * std::fmax(1.0, std::fabs(acc.sum))) {
        return {acc.sum, m + 1, tail, true};
      }
    }
    prev_mag = mag;
  }
  return {acc.sum, ctrl.max_terms, tail, false};
}

}  // namespace hyppow
