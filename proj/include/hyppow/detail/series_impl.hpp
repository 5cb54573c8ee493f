#pragma once

// Series evaluation kernels, templated on the scalar type so the benchmark
// can instrument them with ops::Counted while production code runs plain
// doubles. Control flow (tail estimates, stopping tests) stays in double;
// only the value arithmetic is counted.

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "hyppow/coefficient_table.hpp"
#include "hyppow/convergence.hpp"
#include "hyppow/detail/alternating.hpp"

namespace hyppow::detail {

template <typename Real>
constexpr double as_double(Real v) {
  return static_cast<double>(v);
}

/// Compensated (error-recirculating) accumulator.
template <typename Real>
struct Kahan {
  Real sum{0.0};
  Real carry{0.0};
  void add(Real term) {
    const Real y = term - carry;
    const Real t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

/// Sums sum (-1)^m f(m), trying both orientations of the smooth factor so
/// sequences with a negative decreasing tail (negative parameters) work too.
template <typename F>
AltSumResult alternating_sum_signed(F&& f, double tolerance,
                                    long long max_evals) {
  AltSumResult r = alternating_sum(f, tolerance, max_evals);
  if (r.converged) return r;
  auto negated = [&f](long long m) { return -f(m); };
  AltSumResult r2 = alternating_sum(negated, tolerance, max_evals);
  if (r2.converged) {
    r2.value = -r2.value;
    return r2;
  }
  return r;
}

/// Geometric tail bound 2 |t_m| q/(1-q) with q = max(|x|, measured ratio).
/// Returns +inf while no valid bound exists.
inline double geometric_tail(double mag, double prev_mag, double ax) {
  double q = ax;
  if (prev_mag > 0.0 && mag > 0.0) q = std::fmax(q, mag / prev_mag);
  if (q >= 0.999999) return std::numeric_limits<double>::infinity();
  return 2.0 * mag * q / (1.0 - q);
}

/// alpha * sum_m x^m / (alpha + m)  =  2F1(1, alpha; alpha+1; x).
/// Preconditions (alpha not a nonpositive integer, x in domain) are checked
/// by the public wrapper.
template <typename Real>
SeriesResult eval_base_impl(double alpha, double x,
                            const ConvergenceControl& ctrl) {
  if (x == 0.0) return {1.0, 1, 0.0, true};

  if (x == -1.0) {
    const double s = alpha > 0.0 ? 1.0 : -1.0;
    auto f = [alpha, s](long long m) {
      return s * alpha / (alpha + static_cast<double>(m));
    };
    AltSumResult alt = alternating_sum(f, ctrl.tolerance, ctrl.max_terms);
    return {s * alt.value, alt.evaluations, alt.error_estimate, alt.converged};
  }

  const double ax = std::fabs(x);
  const long long first_check =
      4 + (alpha < 0.0 ? static_cast<long long>(std::ceil(-alpha)) : 0);
  Kahan<Real> acc;
  Real pow_x{alpha};  // alpha * x^m
  double prev_mag = std::numeric_limits<double>::infinity();
  double tail = std::numeric_limits<double>::infinity();
  for (long long m = 0; m < ctrl.max_terms; ++m) {
    const Real term = pow_x / Real(alpha + static_cast<double>(m));
    acc.add(term);
    pow_x = pow_x * Real(x);
    const double mag = std::fabs(as_double(term));
    if (m >= first_check) {
      tail = geometric_tail(mag, prev_mag, ax);
      const double value = as_double(acc.sum);
      if (tail <= ctrl.tolerance * std::fmax(1.0, std::fabs(value))) {
        return {value, m + 1, tail, true};
      }
    }
    prev_mag = mag;
  }
  return {as_double(acc.sum), ctrl.max_terms, tail, false};
}

/// n! alpha^n * sum_m x^m t_m^{n-1}(alpha) / (m + n alpha), the single-series
/// form of (2F1(1, alpha; alpha+1, x))^n. O(1) work per term given the table.
/// Wrapper has validated the table size, levels and pole conditions.
template <typename Real>
SeriesResult eval_power_impl(const CoefficientTable& table, int n, double x,
                             const ConvergenceControl& ctrl) {
  const double alpha = table.alpha();
  const double n_alpha = n * alpha;
  const auto t = table.level(n - 1);
  double prefactor = 1.0;
  for (int j = 1; j <= n; ++j) prefactor *= j * alpha;  // n! alpha^n

  if (x == 0.0) {
    return {prefactor * t[0] / n_alpha, 1, 0.0, true};
  }

  if (x == -1.0) {
    auto f = [&t, &table, prefactor, n_alpha](long long m) {
      if (m > table.m_max()) {
        throw TableSizeError(
            "coefficient table too small for the x = -1 evaluation");
      }
      return prefactor * t[static_cast<std::size_t>(m)] /
             (static_cast<double>(m) + n_alpha);
    };
    AltSumResult alt =
        alternating_sum_signed(f, ctrl.tolerance, ctrl.max_terms);
    return {alt.value, alt.evaluations, alt.error_estimate, alt.converged};
  }

  const double ax = std::fabs(x);
  Kahan<Real> acc;
  Real pow_x{prefactor};  // n! alpha^n x^m
  double prev_mag = std::numeric_limits<double>::infinity();
  double tail = std::numeric_limits<double>::infinity();
  for (long long m = 0; m < ctrl.max_terms; ++m) {
    if (m > table.m_max()) {
      throw TableSizeError(
          "coefficient table exhausted before the series converged");
    }
    const Real term = pow_x * Real(t[static_cast<std::size_t>(m)]) /
                      Real(static_cast<double>(m) + n_alpha);
    acc.add(term);
    pow_x = pow_x * Real(x);
    const double mag = std::fabs(as_double(term));
    if (m >= 4) {
      tail = geometric_tail(mag, prev_mag, ax);
      const double value = as_double(acc.sum);
      if (tail <= ctrl.tolerance * std::fmax(1.0, std::fabs(value))) {
        return {value, m + 1, tail, true};
      }
    }
    prev_mag = mag;
  }
  return {as_double(acc.sum), ctrl.max_terms, tail, false};
}

/// Deliberately naive n-th power: truncate the base series at `truncation`
/// coefficients and convolve n-1 times. O(n * truncation^2) work,
/// independent of the coefficient table.
template <typename Real>
double cauchy_power_impl(double alpha, int n, double x, long long truncation) {
  const std::size_t size = static_cast<std::size_t>(truncation);
  std::vector<Real> base(size);
  for (std::size_t m = 0; m < size; ++m) {
    base[m] = Real(alpha) / Real(alpha + static_cast<double>(m));
  }
  std::vector<Real> acc = base;
  std::vector<Real> next(size);
  for (int rep = 1; rep < n; ++rep) {
    for (std::size_t k = 0; k < size; ++k) {
      Real s{0.0};
      for (std::size_t i = 0; i <= k; ++i) s += acc[i] * base[k - i];
      next[k] = s;
    }
    acc.swap(next);
  }
  Kahan<Real> sum;
  Real pow_x{1.0};
  for (std::size_t m = 0; m < size; ++m) {
    sum.add(acc[m] * pow_x);
    pow_x = pow_x * Real(x);
  }
  return as_double(sum.sum);
}

}  // namespace hyppow::detail
