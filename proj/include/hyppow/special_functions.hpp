#pragma once

#include <vector>

#include "hyppow/convergence.hpp"

namespace hyppow {

/// Digamma function psi(x) = d/dx ln Gamma(x).
///
/// Upward recurrence shifts the argument above 8, where the asymptotic
/// series ln x - 1/(2x) - sum_{k=1}^{7} B_{2k}/(2k x^{2k}) applies; negative
/// arguments go through the reflection formula
/// psi(1-x) - psi(x) = pi cot(pi x).
///
/// Throws PoleError when x is within rounding distance of a nonpositive
/// integer.
double digamma(double x);

/// cot(pi q), computed from the reduced fractional part q - round(q) so the
/// result stays accurate for large |q|. Throws PoleError when q is within
/// rounding distance of an integer.
double cot_pi(double q);

/// Parameters of a generalized hypergeometric series
/// pFq(a_1..a_p; b_1..b_q; x) = sum_m prod(a_i)_m / prod(b_j)_m * x^m / m!.
struct PfqSpec {
  std::vector<double> numerator;
  std::vector<double> denominator;
  double argument = 0.0;
};

/// Truncated evaluation of a pFq series by multiplicative term updates.
///
/// Requires p <= q+1 and |x| < 1, or x = -1 under alternating_pairing with
/// positive parameters (the terms then alternate strictly and the sum is
/// handled by the accelerated alternating-series scheme). A nonpositive
/// integer numerator parameter terminates the series, which is then summed
/// exactly as a polynomial.
///
/// Throws PoleError for nonpositive-integer denominator parameters and
/// DomainError for unsupported arguments. A cap hit is reported through
/// SeriesResult::converged, not an exception.
SeriesResult pfq_truncated(const PfqSpec& spec, const ConvergenceControl& ctrl);

namespace detail {

/// True when v is within rounding distance of a nonpositive integer.
/// The tolerance scales with the magnitudes involved so that values produced
/// by index arithmetic (m + n*alpha) are classified consistently.
bool near_nonpositive_integer(double v, double scale = 1.0);

/// True when v is within rounding distance of any integer.
bool near_integer(double v, double scale = 1.0);

}  // namespace detail

}  // namespace hyppow
