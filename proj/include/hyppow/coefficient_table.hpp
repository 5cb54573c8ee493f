#pragma once

#include <span>
#include <vector>

#include "hyppow/errors.hpp"

namespace hyppow {

/// The series parameter alpha (identities over q reuse this type).
/// alpha = 0 is rejected outright; the (n_max, m_max)-dependent pole
/// conditions are checked by validate_parameter / build_table.
struct ParameterPoint {
  double alpha = 0.0;

  explicit ParameterPoint(double a);
};

/// Checks that no denominator m + n*alpha vanishes for 1 <= n <= n_max,
/// 0 <= m <= m_max, i.e. that n*alpha is not a nonpositive integer >= -m_max
/// for any level in use. Throws PoleError naming the exact offending (n, m).
void validate_parameter(const ParameterPoint& parameter, int n_max, int m_max);

/// Triangular coefficient array t_m^n(alpha), defined by
///
///   t_m^0 = 1,   t_0^n = 1/(n! alpha^n),
///   t_m^n = t_{m-1}^n + t_m^{n-1} / (m + n alpha)
///
/// stored as a dense (n_max+1) x (m_max+1) level-major rectangle, built
/// once and immutable. Level 1 equals psi(m+1+alpha) - psi(alpha).
///
/// For alpha > 0 every entry is positive and each level is the plain prefix
/// recurrence above, bit-for-bit. For alpha < 0 terms change sign, so rows
/// are accumulated with compensated summation instead.
class CoefficientTable {
 public:
  double alpha() const { return alpha_; }
  int n_max() const { return n_max_; }
  int m_max() const { return m_max_; }

  /// Stored t_m^n(alpha); throws DomainError for out-of-range indices.
  double get(int n, int m) const;

  /// Unchecked row view for evaluation kernels.
  std::span<const double> level(int n) const {
    return {values_.data() + static_cast<std::size_t>(n) * stride(), stride()};
  }

  friend CoefficientTable build_table(const ParameterPoint& parameter,
                                      int n_max, int m_max);

 private:
  CoefficientTable(double alpha, int n_max, int m_max,
                   std::vector<double> values)
      : alpha_(alpha), n_max_(n_max), m_max_(m_max),
        values_(std::move(values)) {}

  std::size_t stride() const { return static_cast<std::size_t>(m_max_) + 1; }

  double alpha_;
  int n_max_;
  int m_max_;
  std::vector<double> values_;
};

/// Builds the table level by level in O(n_max * m_max) operations.
/// Validates the parameter eagerly; throws PoleError naming the offending
/// (n, m) when a denominator vanishes.
CoefficientTable build_table(const ParameterPoint& parameter, int n_max,
                             int m_max);

}  // namespace hyppow
