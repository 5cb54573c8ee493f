#include "hyppow/identities.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "hyppow/detail/series_impl.hpp"
#include "hyppow/power_series.hpp"
#include "hyppow/special_functions.hpp"

namespace hyppow {

const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::eq1: return "eq1";
    case IdentityId::eq2: return "eq2";
    case IdentityId::eq5: return "eq5";
    case IdentityId::eq8: return "eq8";
    case IdentityId::eq9: return "eq9";
    case IdentityId::eq10: return "eq10";
    case IdentityId::eq11: return "eq11";
    case IdentityId::eq12: return "eq12";
  }
  return "?";
}

double identity_tolerance(IdentityId id) {
  switch (id) {
    case IdentityId::eq1:
    case IdentityId::eq2:
    case IdentityId::eq5: return 1e-12;
    case IdentityId::eq8:
    case IdentityId::eq11: return 1e-8;
    case IdentityId::eq9:
    case IdentityId::eq10:
    case IdentityId::eq12: return 1e-6;
  }
  return 1e-12;
}

ConvergenceControl recommended_control(IdentityId id) {
  ConvergenceControl ctrl;
  switch (id) {
    case IdentityId::eq1:
    case IdentityId::eq2:
    case IdentityId::eq5:
      break;  // finite sums; the control is not consulted
    case IdentityId::eq8:
      ctrl.tolerance = 1e-11;
      ctrl.max_terms = 1000000;
      break;
    case IdentityId::eq11:
      ctrl.tolerance = 1e-11;
      ctrl.max_terms = 1000000;
      break;
    case IdentityId::eq9:
    case IdentityId::eq10:
      ctrl.tolerance = 1e-9;
      ctrl.max_terms = 20000000;
      break;
    case IdentityId::eq12:
      // conditionally convergent: pair-grouped partial sums gain digits
      // slowly, so the stopping tolerance sits just under the 1e-6 gate
      ctrl.tolerance = 3e-7;
      ctrl.max_terms = 60000000;
      break;
  }
  return ctrl;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_brief(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

IdentityReport finish(IdentityId id,
                      std::vector<std::pair<std::string, double>> params,
                      double lhs, double rhs, long long terms,
                      std::string notes) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
    throw DomainError(std::string("verify_") + to_string(id) +
                      ": non-finite side value escaped validation");
  }
  IdentityReport r;
  r.identity = id;
  r.parameters = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_residual = std::fabs(lhs - rhs);
  r.rel_residual = r.abs_residual /
                   std::fmax(1.0, std::fmax(std::fabs(lhs), std::fabs(rhs)));
  r.terms_used = terms;
  const double tol = identity_tolerance(id);
  r.pass = r.rel_residual <= tol;
  if (!r.pass && r.rel_residual > 50.0 * tol) {
    if (!notes.empty()) notes += "; ";
    notes +=
        "residual far above tolerance - possible domain violation or "
        "transcription issue";
  }
  r.notes = std::move(notes);
  return r;
}

struct AdaptiveTail {
  double value = 0.0;
  long long terms = 0;
  double estimate = std::numeric_limits<double>::infinity();
  bool converged = false;
};

// Truncated sum of f(0) + f(1) + ... with algebraic decay f ~ c/l^p.
// Stages double; each stage adds the tail approximation f(L) * L / (p-1)
// and convergence is judged from consecutive corrected values.
template <typename F>
AdaptiveTail sum_with_power_tail(F&& f, double decay_power,
                                 const ConvergenceControl& ctrl) {
  detail::Kahan<double> acc;
  AdaptiveTail out;
  double prev_corrected = std::numeric_limits<double>::quiet_NaN();
  double last = 0.0;
  long long l = 0;
  for (long long stage = 512; l < ctrl.max_terms; stage *= 2) {
    const long long stop = std::min(stage, ctrl.max_terms);
    for (; l < stop; ++l) {
      last = f(l);
      acc.add(last);
    }
    const double corrected =
        acc.sum + last * static_cast<double>(l - 1) / (decay_power - 1.0);
    out.value = corrected;
    out.terms = l;
    if (std::isfinite(prev_corrected)) {
      out.estimate = 2.0 * std::fabs(corrected - prev_corrected);
      if (out.estimate <=
          ctrl.tolerance * std::fmax(1.0, std::fabs(corrected))) {
        out.converged = true;
        return out;
      }
    }
    prev_corrected = corrected;
  }
  return out;
}

// sum_l (-1)^l f(l) by consecutive-pair grouping: partial sums of
// p_j = f(2j) - f(2j+1) are monotone, and for f ~ ln l / l the tail beyond
// J pairs is ~ (ln 2J + 1)/(4J), estimated from the last pair.
template <typename F>
AdaptiveTail sum_alternating_pairs(F&& f, const ConvergenceControl& ctrl) {
  detail::Kahan<double> acc;
  AdaptiveTail out;
  double pair = 0.0;
  long long j = 0;
  const long long max_pairs = ctrl.max_terms / 2;
  for (long long stage = 4096; j < max_pairs; stage *= 2) {
    const long long stop = std::min(stage, max_pairs);
    for (; j < stop; ++j) {
      pair = f(2 * j) - f(2 * j + 1);
      acc.add(pair);
    }
    out.value = acc.sum;
    out.terms = 2 * j;
    out.estimate = 2.0 * std::fabs(pair) * static_cast<double>(j + 1) *
                   (1.0 + 1.0 / std::log(2.0 * static_cast<double>(j) + 4.0));
    if (out.estimate <= ctrl.tolerance * std::fmax(1.0, std::fabs(acc.sum))) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

void require_not_nonpositive_integer(double v, const char* what,
                                     const char* id) {
  if (detail::near_nonpositive_integer(v, std::fabs(v))) {
    throw PoleError(std::string(id) + ": " + what + " = " + format_double(v) +
                    " sits at a pole (nonpositive integer)");
  }
}

// alpha + j must stay nonzero for 0 <= j <= k (denominators m + alpha and
// k - m + alpha both range over this set).
void require_shifted_alpha_nonzero(double alpha, int k, const char* id) {
  if (detail::near_nonpositive_integer(alpha, std::fabs(alpha)) &&
      -std::round(alpha) <= static_cast<double>(k)) {
    throw PoleError(std::string(id) + ": alpha + m vanishes at m = " +
                    std::to_string(static_cast<long long>(-std::round(alpha))));
  }
}

// Literal nested-sum evaluation of t_k^level, deliberately not using the
// table: the depth-`level` chain of sums with weights 1/(m_j + j alpha).
double nested_chain(double alpha, int k, int level) {
  if (level == 0) return 1.0;
  double s = 0.0;
  for (int m = 0; m <= k; ++m) {
    s += nested_chain(alpha, m, level - 1) / (m + level * alpha);
  }
  return s;
}

}  // namespace

IdentityReport verify_eq1(const ParameterPoint& alpha, int k) {
  if (k < 0) throw DomainError("verify_eq1: k must be >= 0");
  const double a = alpha.alpha;
  require_shifted_alpha_nonzero(a, k, "verify_eq1");
  if (detail::near_nonpositive_integer(2.0 * a, std::fabs(2.0 * a)) &&
      -std::round(2.0 * a) <= static_cast<double>(k)) {
    throw PoleError("verify_eq1: n + 2*alpha vanishes at n = " +
                    std::to_string(static_cast<long long>(-std::round(2.0 * a))));
  }

  detail::Kahan<double> lhs_acc;
  detail::Kahan<double> rhs_acc;
  long long terms = 0;
  for (int n = 0; n <= k; ++n) {
    detail::Kahan<double> inner;
    for (int m = 0; m <= n; ++m) {
      inner.add(1.0 / (m + a));
      ++terms;
    }
    lhs_acc.add(inner.sum / (k - n + a));
    rhs_acc.add(inner.sum / (n + 2.0 * a));
  }
  const double lhs = lhs_acc.sum;
  const double rhs = 2.0 * rhs_acc.sum;
  return finish(IdentityId::eq1,
                {{"alpha", a}, {"k", static_cast<double>(k)}}, lhs, rhs, terms,
                "direct O(k^2) nested loops on both sides");
}

IdentityReport verify_eq2(const ParameterPoint& alpha, int k, int n) {
  if (k < 0) throw DomainError("verify_eq2: k must be >= 0");
  if (n < 2) throw DomainError("verify_eq2: n must be >= 2");
  const double a = alpha.alpha;
  require_shifted_alpha_nonzero(a, k, "verify_eq2");
  const CoefficientTable table = build_table(alpha, n, k);

  detail::Kahan<double> lhs_acc;
  const auto level = table.level(n - 1);
  for (int m = 0; m <= k; ++m) {
    lhs_acc.add(level[static_cast<std::size_t>(m)] / (k - m + a));
  }
  const double lhs = lhs_acc.sum;
  const double rhs = n * table.get(n, k);

  std::string notes = "lhs from level " + std::to_string(n - 1) +
                      " of the coefficient table; rhs = n * t_k^n";
  if (k <= 12 && n <= 3) {
    // independent oracle: both sides by literal nested loops
    double brute_lhs = 0.0;
    for (int m = 0; m <= k; ++m) {
      brute_lhs += nested_chain(a, m, n - 1) / (k - m + a);
    }
    const double brute_rhs = n * nested_chain(a, k, n);
    const double scale =
        std::fmax(1.0, std::fmax(std::fabs(lhs), std::fabs(rhs)));
    const double agree = std::fmax(std::fabs(brute_lhs - lhs),
                                   std::fabs(brute_rhs - rhs)) / scale;
    notes += "; nested-loop oracle agrees to rel " + format_brief(agree);
  }
  return finish(IdentityId::eq2,
                {{"alpha", a},
                 {"k", static_cast<double>(k)},
                 {"n", static_cast<double>(n)}},
                lhs, rhs, 2LL * (k + 1), std::move(notes));
}

IdentityReport verify_eq5(const ParameterPoint& alpha, int k, int n) {
  if (k < 0) throw DomainError("verify_eq5: k must be >= 0");
  if (n < 1) throw DomainError("verify_eq5: n must be >= 1");
  const double a = alpha.alpha;
  require_shifted_alpha_nonzero(a, k, "verify_eq5");
  const double rhs_den = k + (n + 1) * a;
  if (std::fabs(rhs_den) <= 16.0 * std::numeric_limits<double>::epsilon() *
                                std::fmax(1.0, std::fmax(std::fabs(k),
                                                         std::fabs((n + 1) * a)))) {
    throw PoleError("verify_eq5: k + (n+1)*alpha vanishes");
  }
  const CoefficientTable table = build_table(alpha, n, k);

  detail::Kahan<double> lhs_acc;
  const auto level = table.level(n - 1);
  const double na = n * a;
  for (int m = 0; m <= k; ++m) {
    lhs_acc.add(level[static_cast<std::size_t>(m)] / ((k - m + a) * (m + na)));
  }
  const double lhs = lhs_acc.sum;
  const double rhs = (n + 1) * table.get(n, k) / rhs_den;
  return finish(IdentityId::eq5,
                {{"alpha", a},
                 {"k", static_cast<double>(k)},
                 {"n", static_cast<double>(n)}},
                lhs, rhs, k + 1, "partial-fraction split of eq2");
}

IdentityReport verify_eq8(const ParameterPoint& alpha,
                          const EvaluationPoint& point, int l_cap,
                          const ConvergenceControl& ctrl) {
  ctrl.validate();
  point.validate(ctrl);
  if (l_cap < 16) throw DomainError("verify_eq8: l_cap must be >= 16");
  const double a = alpha.alpha;
  require_not_nonpositive_integer(a, "alpha", "verify_eq8");
  require_not_nonpositive_integer(a + 1.0, "alpha + 1", "verify_eq8");
  require_not_nonpositive_integer(2.0 * a + 1.0, "2*alpha + 1", "verify_eq8");
  require_not_nonpositive_integer(a + 2.0, "alpha + 2", "verify_eq8");

  long long terms = 0;

  const CoefficientTable table = build_table(
      alpha, 1,
      static_cast<int>(required_terms(point.x, ctrl.tolerance)) + 128);
  const SeriesResult lhs_res = eval_power(alpha, 2, point, table, ctrl);
  if (!lhs_res.converged) {
    throw ConvergenceError("verify_eq8: lhs power series did not converge");
  }
  terms += lhs_res.terms_used;

  auto inner_3f2 = [&](long long l) {
    const PfqSpec spec{{2.0, 2.0 * a, a + 1.0 + static_cast<double>(l)},
                       {2.0 * a + 1.0, a + 2.0 + static_cast<double>(l)},
                       point.x};
    const SeriesResult r = pfq_truncated(spec, ctrl);
    if (!r.converged) {
      throw ConvergenceError("verify_eq8: inner 3F2 did not converge at l = " +
                             std::to_string(l));
    }
    terms += r.terms_used;
    return r.value;
  };
  const PfqSpec limit_spec{{2.0, 2.0 * a}, {2.0 * a + 1.0}, point.x};
  const SeriesResult limit_res = pfq_truncated(limit_spec, ctrl);
  if (!limit_res.converged) {
    throw ConvergenceError("verify_eq8: limiting 2F1 did not converge");
  }
  const double limit_2f1 = limit_res.value;
  terms += limit_res.terms_used;

  // outer sum; the tail beyond L is the limiting 2F1 times the exact
  // telescoped weight sum_{l>L} 1/((l+a)(l+a+1)) = 1/(L+1+a)
  detail::Kahan<double> acc;
  const int half = l_cap / 2;
  double rhs_half = 0.0;
  for (int l = 0; l <= l_cap; ++l) {
    acc.add(inner_3f2(l) / ((l + a) * (l + a + 1.0)));
    if (l == half) {
      rhs_half = a * (acc.sum + limit_2f1 / (half + 1 + a));
    }
  }
  const double rhs = a * (acc.sum + limit_2f1 / (l_cap + 1 + a));
  const double tail_estimate =
      2.0 * std::fabs(rhs - rhs_half) +
      4.0 * ctrl.tolerance * std::fmax(1.0, std::fabs(rhs));

  std::string notes = "outer sum to l = " + std::to_string(l_cap) +
                      " with telescoped 2F1 limit tail; outer_tail_estimate=" +
                      format_brief(tail_estimate);
  return finish(IdentityId::eq8, {{"alpha", a}, {"x", point.x}},
                lhs_res.value, rhs, terms, std::move(notes));
}

IdentityReport verify_eq9(const ParameterPoint& alpha,
                          const ConvergenceControl& ctrl) {
  ctrl.validate();
  const double a = alpha.alpha;
  if (detail::near_integer(a, std::fabs(a))) {
    throw PoleError(
        "verify_eq9: alpha must not be an integer (psi(1-alpha) pole, "
        "l+1-alpha vanishing)");
  }
  if (detail::near_nonpositive_integer(a - 0.5, std::fabs(a))) {
    throw PoleError(
        "verify_eq9: psi(alpha - 1/2) pole (alpha in {1/2, -1/2, -3/2, ...})");
  }

  auto summand = [a](long long l) {
    const double la = (a + static_cast<double>(l)) / 2.0;
    return (digamma(la) - digamma(la + 0.5)) / (static_cast<double>(l) + 1.0 - a);
  };
  const AdaptiveTail lhs_sum = sum_with_power_tail(summand, 2.0, ctrl);
  if (!lhs_sum.converged) {
    throw ConvergenceError("verify_eq9: lhs digamma sum hit the term cap");
  }

  const double bracket = digamma((1.0 + a) / 2.0) - digamma(a / 2.0);
  const double rhs = 0.25 * bracket * bracket +
                     (digamma(a) - digamma(a - 0.5)) *
                         (digamma(1.0 - a) - digamma(a));
  return finish(IdentityId::eq9, {{"alpha", a}}, lhs_sum.value, rhs,
                lhs_sum.terms,
                "lhs tail ~ c/l^2 summed with correction; estimate " +
                    format_brief(lhs_sum.estimate));
}

IdentityReport verify_eq10(const ParameterPoint& q_point,
                           const ConvergenceControl& ctrl) {
  ctrl.validate();
  const double q = q_point.alpha;
  if (detail::near_integer(2.0 * q, std::fabs(q))) {
    throw PoleError(
        "verify_eq10: q must not be an integer or half-integer (cot poles, "
        "vanishing denominators)");
  }
  if (detail::near_nonpositive_integer(2.0 * q - 0.5, std::fabs(q))) {
    throw PoleError(
        "verify_eq10: psi(2q - 1/2) pole (q in {1/4 + j/2, j <= 0})");
  }

  auto summand = [q](long long l) {
    const double ql = q + static_cast<double>(l);
    return (digamma(ql) - digamma(ql + 0.5)) /
           ((static_cast<double>(l) + 1.0 - q) *
            (static_cast<double>(l) + 0.5 - q));
  };
  const AdaptiveTail lhs_sum = sum_with_power_tail(summand, 3.0, ctrl);
  if (!lhs_sum.converged) {
    throw ConvergenceError("verify_eq10: lhs digamma sum hit the term cap");
  }

  const double bracket = digamma(0.5 + q) - digamma(q);
  const double rhs = bracket * bracket +
                     4.0 * std::numbers::pi * cot_pi(2.0 * q) *
                         (digamma(2.0 * q) - digamma(2.0 * q - 0.5)) -
                     std::numbers::pi * cot_pi(q) / (q - 0.5);
  return finish(IdentityId::eq10, {{"q", q}}, lhs_sum.value, rhs,
                lhs_sum.terms,
                "lhs tail ~ c/l^3 summed with correction; estimate " +
                    format_brief(lhs_sum.estimate));
}

IdentityReport verify_eq11(const ParameterPoint& alpha,
                           const EvaluationPoint& point, int l_cap,
                           const ConvergenceControl& ctrl) {
  ctrl.validate();
  if (l_cap < 16) throw DomainError("verify_eq11: l_cap must be >= 16");
  if (!(std::fabs(point.x) < 1.0)) {
    throw DomainError("verify_eq11: |x| < 1 required");
  }
  const double a = alpha.alpha;
  if (detail::near_integer(a, std::fabs(a))) {
    throw PoleError(
        "verify_eq11: alpha must not be an integer (psi(1-alpha) pole, "
        "l+1-alpha vanishing)");
  }
  if (std::fabs(2.0 * a - 1.0) <= 1e-12) {
    throw PoleError("verify_eq11: alpha = 1/2 excluded (factor a/(2a-1))");
  }
  require_not_nonpositive_integer(2.0 * a + 1.0, "2*alpha + 1", "verify_eq11");
  require_not_nonpositive_integer(a + 2.0, "alpha + 2", "verify_eq11");

  long long terms = 0;
  auto f21 = [&](double den) {
    const PfqSpec spec{{1.0, 2.0}, {den}, point.x};
    const SeriesResult r = pfq_truncated(spec, ctrl);
    if (!r.converged) {
      throw ConvergenceError("verify_eq11: 2F1(1,2;" + format_double(den) +
                             ";x) did not converge");
    }
    terms += r.terms_used;
    return r.value;
  };

  const PfqSpec lhs_spec{{1.0, 1.0}, {a + 1.0}, point.x};
  const SeriesResult lhs_res = pfq_truncated(lhs_spec, ctrl);
  if (!lhs_res.converged) {
    throw ConvergenceError("verify_eq11: lhs 2F1 did not converge");
  }
  terms += lhs_res.terms_used;
  const double lhs = lhs_res.value * lhs_res.value;

  ConvergenceControl outer_ctrl = ctrl;
  outer_ctrl.max_terms = l_cap;
  auto outer_term = [&](long long l) {
    const double ld = static_cast<double>(l);
    return f21(a + 2.0 + ld) / ((ld + a) * (ld + 1.0 + a) * (ld + 1.0 - a));
  };
  const AdaptiveTail outer = sum_with_power_tail(outer_term, 3.0, outer_ctrl);
  if (!outer.converged) {
    throw ConvergenceError("verify_eq11: outer sum hit l_cap before settling");
  }

  const double rhs =
      a / (2.0 * a - 1.0) * (digamma(a) - digamma(1.0 - a)) *
          f21(2.0 * a + 1.0) -
      2.0 * a * a * outer.value;
  return finish(IdentityId::eq11, {{"alpha", a}, {"x", point.x}}, lhs, rhs,
                terms,
                "outer tail ~ c/l^3 summed with correction; estimate " +
                    format_brief(outer.estimate));
}

IdentityReport verify_eq12(const ParameterPoint& q_point,
                           const ConvergenceControl& ctrl) {
  ctrl.validate();
  const double q = q_point.alpha;
  if (detail::near_nonpositive_integer(q, std::fabs(q))) {
    throw PoleError("verify_eq12: psi(l+q) pole (q a nonpositive integer)");
  }
  if (detail::near_nonpositive_integer(2.0 * q - 1.0, std::fabs(q))) {
    throw PoleError(
        "verify_eq12: l + 2q - 1 vanishes (q in {1/2, 0, -1/2, ...})");
  }

  auto magnitude = [q](long long l) {
    const double ld = static_cast<double>(l);
    return digamma(ld + q) / (ld + 2.0 * q - 1.0);
  };
  const AdaptiveTail lhs_sum = sum_alternating_pairs(magnitude, ctrl);
  if (!lhs_sum.converged) {
    throw ConvergenceError("verify_eq12: pair-grouped sum hit the term cap (" +
                           std::to_string(ctrl.max_terms) + " terms)");
  }

  const double rhs =
      digamma(q) / 2.0 * (digamma(q) - digamma(q - 0.5)) -
      0.125 * std::pow(digamma((1.0 + q) / 2.0) - digamma(q / 2.0), 2);
  return finish(IdentityId::eq12, {{"q", q}}, lhs_sum.value, rhs,
                lhs_sum.terms,
                "conditionally convergent; pair-grouped with log tail bound " +
                    format_brief(lhs_sum.estimate));
}

}  // namespace hyppow
