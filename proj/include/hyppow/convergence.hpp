#pragma once

#include <cmath>
#include <cstdint>

#include "hyppow/errors.hpp"

namespace hyppow {

/// Treatment of evaluations at x = -1, where the base series is alternating
/// and only conditionally convergent.
enum class MinusOnePolicy {
  reject,
  alternating_pairing,
};

/// Tolerance and budget shared by every series evaluation.
struct ConvergenceControl {
  double tolerance = 1e-12;  // relative to max(1, |value|)
  long long max_terms = 100000;
  MinusOnePolicy minus_one_policy = MinusOnePolicy::alternating_pairing;

  void validate() const {
    if (!(tolerance > 0.0)) {
      throw DomainError("ConvergenceControl: tolerance must be > 0");
    }
    if (max_terms < 8) {
      throw DomainError("ConvergenceControl: max_terms must be >= 8");
    }
  }
};

/// Outcome of a series evaluation. `converged` implies
/// tail_estimate <= tolerance * max(1, |value|).
struct SeriesResult {
  double value = 0.0;
  long long terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = false;
};

/// Evaluation abscissa for the base function and its powers.
/// |x| < 1 is always accepted; x = -1 only under alternating_pairing;
/// x = 1 is always rejected (the series has a divergent harmonic tail there).
struct EvaluationPoint {
  double x = 0.0;

  void validate(const ConvergenceControl& ctrl) const {
    if (!std::isfinite(x)) {
      throw DomainError("EvaluationPoint: x must be finite");
    }
    if (x == 1.0) {
      throw DomainError(
          "x = 1: the series 2F1(1, a; a+1; x) diverges (harmonic tail)");
    }
    if (x == -1.0) {
      if (ctrl.minus_one_policy == MinusOnePolicy::reject) {
        throw DomainError("x = -1 rejected by minus_one_policy");
      }
      return;
    }
    if (std::fabs(x) >= 1.0) {
      throw DomainError("|x| > 1 is outside the radius of convergence");
    }
  }
};

}  // namespace hyppow
