#include "hyppow/coefficient_table.hpp"

#include <doctest.h>

#include <cmath>

#include "hyppow/special_functions.hpp"
#include "test_utils.hpp"

using namespace hyppow;

namespace {

// Independent oracle: literal nested-sum evaluation of t_k^n, never touching
// the table implementation.
double chain_oracle(double alpha, int k, int level) {
  if (level == 0) return 1.0;
  double s = 0.0;
  for (int m = 0; m <= k; ++m) {
    s += chain_oracle(alpha, m, level - 1) / (m + level * alpha);
  }
  return s;
}

}  // namespace

TEST_CASE("table seeds") {
  const CoefficientTable t = build_table(ParameterPoint(0.7), 4, 40);
  for (int m = 0; m <= 40; ++m) {
    CHECK(t.get(0, m) == 1.0);  // level 0 is exactly all ones
  }
  // t_0^n = 1/(n! alpha^n)
  double fact_scale = 1.0;
  for (int n = 1; n <= 4; ++n) {
    fact_scale *= n * 0.7;
    CHECK(std::fabs(t.get(n, 0) * fact_scale - 1.0) <= 1e-12);
  }

  const CoefficientTable unit = build_table(ParameterPoint(1.0), 3, 3);
  CHECK(rel_close(unit.get(3, 0), 1.0 / 6.0, 1e-15));
  CHECK(rel_close(unit.get(1, 1), 1.5, 1e-15));  // 1/a + 1/(1+a) at a = 1
}

TEST_CASE("get is bounds-checked") {
  const CoefficientTable t = build_table(ParameterPoint(1.0), 1, 1);
  CHECK(t.get(0, 1) == 1.0);
  CHECK(rel_close(t.get(1, 1), 1.5, 1e-15));
  CHECK_THROWS_AS(t.get(2, 0), DomainError);
  CHECK_THROWS_AS(t.get(0, 2), DomainError);
  CHECK_THROWS_AS(t.get(-1, 0), DomainError);
}

TEST_CASE("level 1 equals psi(k+1+a) - psi(a)") {
  for (double alpha : {0.25, 1.0, 2.5}) {
    const CoefficientTable t = build_table(ParameterPoint(alpha), 1, 200);
    const double psi_a = digamma(alpha);
    for (int k = 0; k <= 200; ++k) {
      const double expected = digamma(k + 1.0 + alpha) - psi_a;
      CAPTURE(alpha);
      CAPTURE(k);
      CHECK(std::fabs(t.get(1, k) - expected) <=
            1e-10 * (1.0 + std::fabs(t.get(1, k))));
    }
  }
}

TEST_CASE("positive alpha gives positive entries increasing in m") {
  const CoefficientTable t = build_table(ParameterPoint(0.7), 4, 300);
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 300; ++m) {
      CHECK(t.get(n, m) > 0.0);
      if (m > 0 && n > 0) CHECK(t.get(n, m) > t.get(n, m - 1));
    }
  }
}

TEST_CASE("prefix recurrence is reproducible bit-for-bit (alpha > 0)") {
  const double alpha = 1.25;
  const CoefficientTable t = build_table(ParameterPoint(alpha), 3, 64);
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 64; ++m) {
      const double rebuilt = t.get(n, m - 1) + t.get(n - 1, m) / (m + n * alpha);
      CHECK(t.get(n, m) == rebuilt);
    }
  }
}

TEST_CASE("nested-loop oracle agrees with the table") {
  for (double alpha : {0.7, 1.25, -0.4}) {
    const CoefficientTable t = build_table(ParameterPoint(alpha), 3, 12);
    for (int n = 1; n <= 3; ++n) {
      for (int k = 0; k <= 12; ++k) {
        const double expected = chain_oracle(alpha, k, n);
        CAPTURE(alpha);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(rel_close(t.get(n, k), expected, 1e-12));
      }
    }
  }
}

TEST_CASE("pole validation names the offending entry") {
  CHECK_THROWS_AS(ParameterPoint(0.0), PoleError);
  CHECK_THROWS_WITH_AS(build_table(ParameterPoint(-0.5), 2, 5),
                       doctest::Contains("n = 2, m = 1"), PoleError);
  // 3 * (-1/3) = -1 vanishes at level 3, m = 1
  CHECK_THROWS_AS(build_table(ParameterPoint(-1.0 / 3.0), 3, 5), PoleError);
  // same alpha is fine when the table never reaches that level
  CHECK_NOTHROW(build_table(ParameterPoint(-1.0 / 3.0), 2, 5));
  // negative non-pole alpha builds (compensated accumulation path)
  const CoefficientTable t = build_table(ParameterPoint(-0.4), 3, 50);
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 50; ++m) CHECK(std::isfinite(t.get(n, m)));
  }
}
