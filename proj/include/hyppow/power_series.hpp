#pragma once

#include "hyppow/coefficient_table.hpp"
#include "hyppow/convergence.hpp"

namespace hyppow {

/// Terms needed for a tolerance at abscissa x: the geometric factor gives
/// ceil(ln tol / ln |x|), plus a 64-term margin; the accelerated x = -1
/// path needs at most 128 coefficients.
long long required_terms(double x, double tolerance);

/// 2F1(1, alpha; alpha+1; x) = alpha * sum_m x^m/(alpha+m), summed with
/// compensated accumulation until the tail estimate meets ctrl.tolerance.
/// A cap hit is reported via SeriesResult::converged = false.
SeriesResult eval_base(const ParameterPoint& parameter,
                       const EvaluationPoint& point,
                       const ConvergenceControl& ctrl);

/// (2F1(1, alpha; alpha+1; x))^n via the coefficient-table single series
/// n! alpha^n sum_m x^m t_m^{n-1}/(m + n alpha). The table must be built for
/// the same alpha with n_max >= n-1 and at least required_terms(x, tol)
/// coefficients per level; a smaller table raises TableSizeError rather
/// than silently truncating.
SeriesResult eval_power(const ParameterPoint& parameter, int n,
                        const EvaluationPoint& point,
                        const CoefficientTable& table,
                        const ConvergenceControl& ctrl);

/// Brute-force n-th power by iterated Cauchy convolution of the truncated
/// base series: O(n * truncation^2) work and independent of the coefficient
/// table, so it can serve as an oracle for eval_power. Truncation error is
/// the caller's concern.
double cauchy_power_oracle(const ParameterPoint& parameter, int n,
                           const EvaluationPoint& point, long long truncation);

}  // namespace hyppow
