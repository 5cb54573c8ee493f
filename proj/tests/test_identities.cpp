#include "hyppow/identities.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_utils.hpp"

using namespace hyppow;

namespace {

IdentityReport checked(IdentityReport r) {
  // report invariants that hold for every identity
  CHECK(r.abs_residual == std::fabs(r.lhs - r.rhs));
  CHECK(r.pass == (r.rel_residual <= identity_tolerance(r.identity)));
  CHECK(std::isfinite(r.lhs));
  CHECK(std::isfinite(r.rhs));
  return r;
}

}  // namespace

TEST_CASE("eq1: finite double-sum symmetry") {
  const IdentityReport k0 = checked(verify_eq1(ParameterPoint(0.5), 0));
  CHECK(k0.pass);
  CHECK(rel_close(k0.lhs, 4.0, 1e-15));
  CHECK(rel_close(k0.rhs, 4.0, 1e-15));

  const IdentityReport k1 = checked(verify_eq1(ParameterPoint(1.0), 1));
  CHECK(k1.pass);
  CHECK(rel_close(k1.lhs, 2.0, 1e-15));

  const IdentityReport k50 = checked(verify_eq1(ParameterPoint(0.3), 50));
  CHECK(k50.pass);
  CHECK(k50.rel_residual <= 1e-12);
}

TEST_CASE("eq2: chain collapse through the table") {
  // n = 2 reduces exactly to eq1
  const IdentityReport eq1_ref = verify_eq1(ParameterPoint(1.0), 1);
  const IdentityReport n2 = checked(verify_eq2(ParameterPoint(1.0), 1, 2));
  CHECK(n2.pass);
  CHECK(rel_close(n2.lhs, eq1_ref.lhs, 1e-14));
  CHECK(rel_close(n2.rhs, eq1_ref.rhs, 1e-14));

  const IdentityReport r3 = checked(verify_eq2(ParameterPoint(0.5), 10, 3));
  CHECK(r3.pass);
  CHECK(r3.notes.find("oracle") != std::string::npos);

  const IdentityReport r4 = checked(verify_eq2(ParameterPoint(1.25), 40, 4));
  CHECK(r4.pass);
  CHECK(r4.rel_residual <= 1e-12);
}

TEST_CASE("eq5: partial-fraction identity") {
  // k = 0 collapses to 1/(n! alpha^(n+1)) on both sides
  const IdentityReport k0 = checked(verify_eq5(ParameterPoint(0.6), 0, 3));
  CHECK(k0.pass);
  const double expected = 1.0 / (6.0 * std::pow(0.6, 4));
  CHECK(rel_close(k0.lhs, expected, 1e-13));
  CHECK(rel_close(k0.rhs, expected, 1e-13));

  CHECK(checked(verify_eq5(ParameterPoint(1.0), 5, 2)).pass);
  CHECK(checked(verify_eq5(ParameterPoint(0.25), 40, 4)).pass);
}

TEST_CASE("eq8: 3F2 re-expansion of the squared series") {
  const ConvergenceControl ctrl = recommended_control(IdentityId::eq8);

  const IdentityReport trivial = checked(
      verify_eq8(ParameterPoint(0.75), EvaluationPoint{0.0}, 64, ctrl));
  CHECK(trivial.pass);
  CHECK(rel_close(trivial.lhs, 1.0, 1e-14));
  CHECK(rel_close(trivial.rhs, 1.0, 1e-14));

  const IdentityReport mid = checked(verify_eq8(
      ParameterPoint(0.75), EvaluationPoint{0.5}, kDefaultOuterCap, ctrl));
  CHECK(mid.pass);

  const IdentityReport alt = checked(verify_eq8(
      ParameterPoint(0.5), EvaluationPoint{-1.0}, kDefaultOuterCap, ctrl));
  CHECK(alt.pass);
  const double pi4_sq = std::pow(std::numbers::pi / 4.0, 2);
  CHECK(rel_close(alt.lhs, pi4_sq, 1e-9));
  CHECK(rel_close(alt.rhs, pi4_sq, 1e-8));
}

TEST_CASE("eq8: doubling l_cap moves the rhs less than the L/2 spread") {
  const ConvergenceControl ctrl = recommended_control(IdentityId::eq8);
  const ParameterPoint a(0.75);
  const EvaluationPoint x{0.5};
  const double r_half = verify_eq8(a, x, 2000, ctrl).rhs;
  const double r_full = verify_eq8(a, x, 4000, ctrl).rhs;
  const double r_double = verify_eq8(a, x, 8000, ctrl).rhs;
  CHECK(std::fabs(r_double - r_full) <=
        2.0 * std::fabs(r_full - r_half) + 1e-11 * std::fabs(r_full));
}

TEST_CASE("eq9: digamma sum over halved arguments") {
  const ConvergenceControl ctrl = recommended_control(IdentityId::eq9);
  for (double alpha : {0.3, 0.7, 1.25}) {
    const IdentityReport r = checked(verify_eq9(ParameterPoint(alpha), ctrl));
    CAPTURE(alpha);
    CHECK(r.pass);
    CHECK(r.rel_residual <= 1e-6);
  }
}

TEST_CASE("eq10: even/odd split of eq9") {
  const ConvergenceControl ctrl = recommended_control(IdentityId::eq10);
  for (double q : {0.15, 0.3, 0.65}) {
    const IdentityReport r = checked(verify_eq10(ParameterPoint(q), ctrl));
    CAPTURE(q);
    CHECK(r.pass);
    CHECK(r.rel_residual <= 1e-6);
  }
}

TEST_CASE("eq11: squared 2F1(1,1;a+1;x)") {
  const ConvergenceControl ctrl = recommended_control(IdentityId::eq11);

  const IdentityReport at0 = checked(verify_eq11(
      ParameterPoint(0.75), EvaluationPoint{0.0}, kDefaultOuterCap, ctrl));
  CHECK(at0.pass);
  CHECK(at0.lhs == 1.0);

  CHECK(checked(verify_eq11(ParameterPoint(0.75), EvaluationPoint{0.5},
                            kDefaultOuterCap, ctrl))
            .pass);
  CHECK(checked(verify_eq11(ParameterPoint(0.6), EvaluationPoint{-0.5},
                            kDefaultOuterCap, ctrl))
            .pass);
}

TEST_CASE("eq12: alternating digamma sum at q = 1") {
  const ConvergenceControl ctrl = recommended_control(IdentityId::eq12);
  const IdentityReport r = checked(verify_eq12(ParameterPoint(1.0), ctrl));
  CHECK(r.pass);
  // q = 1 closed form: -euler_gamma ln 2 - (ln 2)^2 / 2
  const double closed = -std::numbers::egamma * std::log(2.0) -
                        0.5 * std::log(2.0) * std::log(2.0);
  CHECK(std::fabs(r.rhs - closed) <= 1e-9);
  CHECK(std::fabs(r.lhs - closed) <= 1e-6);
}

TEST_CASE("identity pole and domain guards") {
  const ConvergenceControl ctrl;

  CHECK_THROWS_AS(verify_eq1(ParameterPoint(-0.5), 2), PoleError);
  CHECK_THROWS_AS(verify_eq1(ParameterPoint(-2.0), 5), PoleError);
  CHECK_THROWS_AS(verify_eq1(ParameterPoint(0.5), -1), DomainError);

  CHECK_THROWS_AS(verify_eq2(ParameterPoint(0.5), 5, 1), DomainError);
  CHECK_THROWS_AS(verify_eq2(ParameterPoint(-0.5), 5, 2), PoleError);

  CHECK_THROWS_AS(verify_eq5(ParameterPoint(-1.0 / 3.0), 1, 3), PoleError);

  CHECK_THROWS_AS(
      verify_eq8(ParameterPoint(-1.0), EvaluationPoint{0.5}, 64, ctrl),
      PoleError);
  CHECK_THROWS_AS(
      verify_eq8(ParameterPoint(0.5), EvaluationPoint{1.0}, 64, ctrl),
      DomainError);

  CHECK_THROWS_AS(verify_eq9(ParameterPoint(0.5), ctrl), PoleError);
  CHECK_THROWS_AS(verify_eq9(ParameterPoint(2.0), ctrl), PoleError);
  CHECK_THROWS_AS(verify_eq9(ParameterPoint(-0.5), ctrl), PoleError);

  CHECK_THROWS_AS(verify_eq10(ParameterPoint(0.5), ctrl), PoleError);
  CHECK_THROWS_AS(verify_eq10(ParameterPoint(1.0), ctrl), PoleError);
  CHECK_THROWS_AS(verify_eq10(ParameterPoint(0.25), ctrl), PoleError);

  CHECK_THROWS_AS(verify_eq11(ParameterPoint(0.5), EvaluationPoint{0.5},
                              kDefaultOuterCap, ctrl),
                  PoleError);
  CHECK_THROWS_AS(verify_eq11(ParameterPoint(2.0), EvaluationPoint{0.5},
                              kDefaultOuterCap, ctrl),
                  PoleError);
  CHECK_THROWS_AS(verify_eq11(ParameterPoint(0.75), EvaluationPoint{-1.0},
                              kDefaultOuterCap, ctrl),
                  DomainError);

  CHECK_THROWS_AS(verify_eq12(ParameterPoint(0.5), ctrl), PoleError);
  CHECK_THROWS_AS(verify_eq12(ParameterPoint(-1.0), ctrl), PoleError);
}
