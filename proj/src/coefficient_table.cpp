#include "hyppow/coefficient_table.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "hyppow/special_functions.hpp"

namespace hyppow {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ParameterPoint::ParameterPoint(double a) : alpha(a) {
  if (!std::isfinite(a)) {
    throw DomainError("ParameterPoint: alpha must be finite");
  }
  if (detail::near_integer(a) && std::round(a) == 0.0) {
    throw PoleError("ParameterPoint: alpha = 0 is excluded");
  }
}

void validate_parameter(const ParameterPoint& parameter, int n_max,
                        int m_max) {
  if (n_max < 0 || m_max < 0) {
    throw DomainError("validate_parameter: n_max and m_max must be >= 0");
  }
  for (int n = 1; n <= n_max; ++n) {
    const double na = n * parameter.alpha;
    if (!detail::near_nonpositive_integer(na, std::fabs(na))) continue;
    const double m = -std::round(na);
    if (m <= static_cast<double>(m_max)) {
      throw PoleError("denominator m + n*alpha vanishes at level n = " +
                      std::to_string(n) + ", m = " +
                      std::to_string(static_cast<long long>(m)) +
                      " (alpha = " + format_double(parameter.alpha) + ")");
    }
  }
}

double CoefficientTable::get(int n, int m) const {
  if (n < 0 || n > n_max_ || m < 0 || m > m_max_) {
    throw DomainError("CoefficientTable::get: index (" + std::to_string(n) +
                      ", " + std::to_string(m) + ") out of range for table (" +
                      std::to_string(n_max_) + ", " + std::to_string(m_max_) +
                      ")");
  }
  return values_[static_cast<std::size_t>(n) * stride() +
                 static_cast<std::size_t>(m)];
}

CoefficientTable build_table(const ParameterPoint& parameter, int n_max,
                             int m_max) {
  validate_parameter(parameter, n_max, m_max);
  const double alpha = parameter.alpha;
  const std::size_t stride = static_cast<std::size_t>(m_max) + 1;
  std::vector<double> values(static_cast<std::size_t>(n_max + 1) * stride);

  for (std::size_t m = 0; m < stride; ++m) values[m] = 1.0;

  const bool compensate = alpha < 0.0;  // mixed-sign terms only for alpha < 0
  for (int n = 1; n <= n_max; ++n) {
    const double n_alpha = n * alpha;
    const double* prev = values.data() + static_cast<std::size_t>(n - 1) * stride;
    double* row = values.data() + static_cast<std::size_t>(n) * stride;
    row[0] = prev[0] / n_alpha;
    if (!compensate) {
      for (int m = 1; m <= m_max; ++m) {
        row[m] = row[m - 1] + prev[m] / (m + n_alpha);
      }
    } else {
      double sum = row[0];
      double carry = 0.0;
      for (int m = 1; m <= m_max; ++m) {
        const double y = prev[m] / (m + n_alpha) - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        row[m] = sum;
      }
    }
  }
  return CoefficientTable(alpha, n_max, m_max, std::move(values));
}

}  // namespace hyppow
