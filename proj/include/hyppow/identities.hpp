#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyppow/coefficient_table.hpp"
#include "hyppow/convergence.hpp"

namespace hyppow {

enum class IdentityId { eq1, eq2, eq5, eq8, eq9, eq10, eq11, eq12 };

const char* to_string(IdentityId id);

/// Structured outcome of one identity check. Both raw sides are always
/// carried so a failure stays diagnosable;
/// rel_residual = |lhs - rhs| / max(1, |lhs|, |rhs|) and
/// pass <=> rel_residual <= tolerance(identity).
struct IdentityReport {
  IdentityId identity = IdentityId::eq1;
  std::vector<std::pair<std::string, double>> parameters;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  long long terms_used = 0;
  bool pass = false;
  std::string notes;
};

/// Pass tolerance for each identity, pinned by summation class: 1e-12 for
/// the finite rational sums (eq1, eq2, eq5), 1e-8 for the absolutely
/// convergent series identities (eq8, eq11), 1e-6 for the slowly or
/// conditionally convergent digamma sums (eq9, eq10, eq12).
double identity_tolerance(IdentityId id);

/// Sub-series control suited to each identity. The type's defaults
/// (tolerance 1e-12, 1e5 terms) are unattainable for the conditionally
/// convergent digamma sums, so the slow identities get a looser stopping
/// tolerance and a far larger term budget.
ConvergenceControl recommended_control(IdentityId id);

/// Default outer summation cap for eq8 and eq11.
inline constexpr int kDefaultOuterCap = 20000;

/// sum_{n=0..k} 1/(k-n+a) sum_{m=0..n} 1/(m+a)
///   = 2 sum_{n=0..k} 1/(n+2a) sum_{m=0..n} 1/(m+a).
/// Both sides by direct O(k^2) nested loops, independent of the table.
IdentityReport verify_eq1(const ParameterPoint& alpha, int k);

/// sum_m t_m^{n-1}(a)/(k-m+a) = n t_k^n(a), the depth-n chain collapsed
/// through the coefficient table; n = 2 reduces to eq1. For k <= 12 and
/// n <= 3 both sides are recomputed by literal nested loops as an
/// independent oracle and the agreement recorded in notes.
IdentityReport verify_eq2(const ParameterPoint& alpha, int k, int n);

/// sum_m t_m^{n-1}(a) / ((k-m+a)(m+na)) = (n+1) t_k^n(a) / (k+(n+1)a),
/// the partial-fraction splitting of eq2.
IdentityReport verify_eq5(const ParameterPoint& alpha, int k, int n);

/// (2F1(1,a;a+1;x))^2 = a sum_l 3F2(2, 2a, a+1+l; 2a+1, a+2+l; x)
///                              / ((l+a)(l+a+1)).
/// The outer weights telescope (sum_l 1/((l+a)(l+a+1)) = 1/a), so the tail
/// beyond l_cap is closed with the limiting 2F1(2,2a;2a+1;x) times the exact
/// telescoped weight; the reported tail estimate compares l_cap against
/// l_cap/2 and bounds the effect of doubling l_cap.
IdentityReport verify_eq8(const ParameterPoint& alpha,
                          const EvaluationPoint& point, int l_cap,
                          const ConvergenceControl& ctrl);

/// sum_l [psi((a+l)/2) - psi((a+1+l)/2)] / (l+1-a)
///   = 1/4 [psi((1+a)/2) - psi(a/2)]^2
///     + [psi(a) - psi(a-1/2)] [psi(1-a) - psi(a)].
IdentityReport verify_eq9(const ParameterPoint& alpha,
                          const ConvergenceControl& ctrl);

/// sum_l [psi(q+l) - psi(q+l+1/2)] / ((l+1-q)(l+1/2-q))
///   = [psi(1/2+q) - psi(q)]^2
///     + 4 pi cot(2 pi q) [psi(2q) - psi(2q-1/2)]
///     - pi cot(pi q) / (q-1/2).
IdentityReport verify_eq10(const ParameterPoint& q,
                           const ConvergenceControl& ctrl);

/// (2F1(1,1;a+1;x))^2 = a/(2a-1) (psi(a) - psi(1-a)) 2F1(1,2;2a+1;x)
///   - 2a^2 sum_l 2F1(1,2;a+2+l;x) / ((l+a)(l+1+a)(l+1-a)).
IdentityReport verify_eq11(const ParameterPoint& alpha,
                           const EvaluationPoint& point, int l_cap,
                           const ConvergenceControl& ctrl);

/// sum_l (-1)^l psi(l+q)/(l+2q-1)
///   = psi(q)/2 [psi(q) - psi(q-1/2)] - 1/8 [psi((1+q)/2) - psi(q/2)]^2.
/// The sum is conditionally convergent (terms ~ ln l / l) and is summed by
/// consecutive-pair grouping with a logarithmic tail bound.
IdentityReport verify_eq12(const ParameterPoint& q,
                           const ConvergenceControl& ctrl);

}  // namespace hyppow
