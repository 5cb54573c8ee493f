#include "hyppow/power_series.hpp"

#include <cmath>
#include <string>

#include "hyppow/detail/series_impl.hpp"
#include "hyppow/special_functions.hpp"

namespace hyppow {

long long required_terms(double x, double tolerance) {
  if (x == 0.0) return 1;
  if (std::fabs(x) == 1.0) return 128;  // accelerated alternating path
  const double tol = std::fmin(tolerance, 0.1);
  const double geometric = std::ceil(std::log(tol) / std::log(std::fabs(x)));
  return std::max<long long>(8, static_cast<long long>(geometric) + 64);
}

SeriesResult eval_base(const ParameterPoint& parameter,
                       const EvaluationPoint& point,
                       const ConvergenceControl& ctrl) {
  ctrl.validate();
  point.validate(ctrl);
  if (detail::near_nonpositive_integer(parameter.alpha)) {
    throw PoleError("eval_base: alpha + m vanishes at m = " +
                    std::to_string(static_cast<long long>(
                        -std::round(parameter.alpha))));
  }
  return detail::eval_base_impl<double>(parameter.alpha, point.x, ctrl);
}

SeriesResult eval_power(const ParameterPoint& parameter, int n,
                        const EvaluationPoint& point,
                        const CoefficientTable& table,
                        const ConvergenceControl& ctrl) {
  ctrl.validate();
  point.validate(ctrl);
  if (n < 1) throw DomainError("eval_power: n must be >= 1");
  if (table.alpha() != parameter.alpha) {
    throw DomainError("eval_power: table was built for a different alpha");
  }
  if (table.n_max() < n - 1) {
    throw TableSizeError("eval_power: table has n_max = " +
                         std::to_string(table.n_max()) +
                         " but level " + std::to_string(n - 1) + " is needed");
  }
  // the table validated levels 1..n_max at build; level-n denominators
  // (m + n*alpha) may be new when n = n_max + 1
  const double na = n * parameter.alpha;
  if (detail::near_nonpositive_integer(na, std::fabs(na)) &&
      -std::round(na) <= static_cast<double>(table.m_max())) {
    throw PoleError("eval_power: denominator m + n*alpha vanishes at m = " +
                    std::to_string(static_cast<long long>(-std::round(na))) +
                    " for n = " + std::to_string(n));
  }
  const long long needed = required_terms(point.x, ctrl.tolerance);
  if (static_cast<long long>(table.m_max()) + 1 < needed) {
    throw TableSizeError(
        "eval_power: table holds " + std::to_string(table.m_max() + 1) +
        " coefficients per level but about " + std::to_string(needed) +
        " are needed at x = " + std::to_string(point.x) +
        "; rebuild with a larger m_max");
  }
  return detail::eval_power_impl<double>(table, n, point.x, ctrl);
}

double cauchy_power_oracle(const ParameterPoint& parameter, int n,
                           const EvaluationPoint& point, long long truncation) {
  if (n < 1) throw DomainError("cauchy_power_oracle: n must be >= 1");
  if (truncation < 1) {
    throw DomainError("cauchy_power_oracle: truncation must be >= 1");
  }
  if (!std::isfinite(point.x) || std::fabs(point.x) > 1.0) {
    throw DomainError("cauchy_power_oracle: |x| <= 1 required");
  }
  if (detail::near_nonpositive_integer(parameter.alpha) &&
      -std::round(parameter.alpha) < static_cast<double>(truncation)) {
    throw PoleError("cauchy_power_oracle: alpha + m vanishes at m = " +
                    std::to_string(static_cast<long long>(
                        -std::round(parameter.alpha))));
  }
  return detail::cauchy_power_impl<double>(parameter.alpha, n, point.x,
                                           truncation);
}

}  // namespace hyppow
