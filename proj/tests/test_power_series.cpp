#include "hyppow/power_series.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hyppow/bench.hpp"
#include "test_utils.hpp"

using namespace hyppow;

namespace {

CoefficientTable table_for(double alpha, int n, double x,
                           const ConvergenceControl& ctrl) {
  // headroom above the geometric minimum for the (ln m)^n coefficient growth
  const int m_max =
      static_cast<int>(required_terms(x, ctrl.tolerance)) + 64 * n;
  return build_table(ParameterPoint(alpha), n - 1, m_max);
}

double log_power(double x, int n) {  // (-ln(1-x)/x)^n, the alpha = 1 anchor
  return std::pow(-std::log1p(-x) / x, n);
}

}  // namespace

TEST_CASE("eval_base anchors") {
  const ConvergenceControl ctrl;
  CHECK(eval_base(ParameterPoint(0.7), EvaluationPoint{0.0}, ctrl).value ==
        1.0);

  const SeriesResult log_case =
      eval_base(ParameterPoint(1.0), EvaluationPoint{0.5}, ctrl);
  CHECK(log_case.converged);
  CHECK(rel_close(log_case.value, 2.0 * std::log(2.0), 1e-12));

  // 2F1(1, 1/2; 3/2; -z^2) = arctan(z)/z at z = 1
  const SeriesResult arctan_case =
      eval_base(ParameterPoint(0.5), EvaluationPoint{-1.0}, ctrl);
  CHECK(arctan_case.converged);
  CHECK(rel_close(arctan_case.value, std::numbers::pi / 4.0, 1e-13));
}

TEST_CASE("eval_power anchors") {
  const ConvergenceControl ctrl;

  const CoefficientTable t07 = table_for(0.7, 4, 0.0, ctrl);
  const SeriesResult unit =
      eval_power(ParameterPoint(0.7), 4, EvaluationPoint{0.0}, t07, ctrl);
  CHECK(unit.converged);
  CHECK(std::fabs(unit.value - 1.0) <= 1e-13);

  const CoefficientTable t1 = table_for(1.0, 2, 0.5, ctrl);
  const SeriesResult sq =
      eval_power(ParameterPoint(1.0), 2, EvaluationPoint{0.5}, t1, ctrl);
  CHECK(sq.converged);
  CHECK(rel_close(sq.value, 4.0 * std::log(2.0) * std::log(2.0), 1e-12));
  CHECK(rel_close(sq.value, 1.9218120556728057, 1e-12));

  const CoefficientTable t05 = table_for(0.5, 3, -1.0, ctrl);
  const SeriesResult cube =
      eval_power(ParameterPoint(0.5), 3, EvaluationPoint{-1.0}, t05, ctrl);
  CHECK(cube.converged);
  CHECK(rel_close(cube.value, std::pow(std::numbers::pi / 4.0, 3), 1e-12));
}

TEST_CASE("cauchy oracle basics") {
  const ConvergenceControl ctrl;
  CHECK(cauchy_power_oracle(ParameterPoint(0.7), 3, EvaluationPoint{0.0},
                            50) == 1.0);

  // n = 1 is the truncated base series itself
  const double direct =
      cauchy_power_oracle(ParameterPoint(0.8), 1, EvaluationPoint{0.5}, 100);
  const SeriesResult base =
      eval_base(ParameterPoint(0.8), EvaluationPoint{0.5}, ctrl);
  CHECK(rel_close(direct, base.value, 1e-12));

  const double sq =
      cauchy_power_oracle(ParameterPoint(1.0), 2, EvaluationPoint{0.5}, 200);
  CHECK(rel_close(sq, 4.0 * std::log(2.0) * std::log(2.0), 1e-10));
}

TEST_CASE("power consistency: eval_power vs eval_base^n vs cauchy oracle") {
  const ConvergenceControl ctrl;
  for (double alpha : {0.25, 1.0, 1.5}) {
    for (int n : {2, 4}) {
      const CoefficientTable table = table_for(alpha, n, 0.9, ctrl);
      for (double x : {-0.5, 0.25, 0.9}) {
        CAPTURE(alpha);
        CAPTURE(n);
        CAPTURE(x);
        const EvaluationPoint pt{x};
        const ParameterPoint p(alpha);
        const SeriesResult power = eval_power(p, n, pt, table, ctrl);
        const SeriesResult base = eval_base(p, pt, ctrl);
        REQUIRE(power.converged);
        REQUIRE(base.converged);
        const double direct = std::pow(base.value, n);
        CHECK(std::fabs(power.value - direct) <=
              1e-10 * std::fmax(1.0, std::fabs(direct)));
        const double oracle = cauchy_power_oracle(p, n, pt, 3000);
        CHECK(rel_close(power.value, oracle, 1e-9));
      }
    }
  }
}

TEST_CASE("alpha = 1 and alpha = 1/2 closed forms") {
  const ConvergenceControl ctrl;
  for (int n = 1; n <= 4; ++n) {
    const CoefficientTable t = table_for(1.0, n, 0.9, ctrl);
    for (double x : {-0.9, -0.5, 0.25, 0.5, 0.9}) {
      const SeriesResult r =
          eval_power(ParameterPoint(1.0), n, EvaluationPoint{x}, t, ctrl);
      CAPTURE(n);
      CAPTURE(x);
      CHECK(rel_close(r.value, log_power(x, n), 1e-10));
    }
  }
  // arctan anchors: x = -z^2
  for (int n = 1; n <= 4; ++n) {
    for (double z : {0.5, 1.0}) {
      const double x = -z * z;
      const CoefficientTable t = table_for(0.5, n, x, ctrl);
      const SeriesResult r =
          eval_power(ParameterPoint(0.5), n, EvaluationPoint{x}, t, ctrl);
      CAPTURE(n);
      CAPTURE(z);
      CHECK(rel_close(r.value, std::pow(std::atan(z) / z, n), 1e-10));
    }
  }
}

TEST_CASE("n = 1 reduces to the base series") {
  const ConvergenceControl ctrl;
  for (double alpha : {0.25, 0.75, 1.5}) {
    const CoefficientTable t = table_for(alpha, 1, 0.9, ctrl);
    for (double x : {-0.9, -0.5, 0.25, 0.5, 0.9}) {
      const SeriesResult pw =
          eval_power(ParameterPoint(alpha), 1, EvaluationPoint{x}, t, ctrl);
      const SeriesResult base =
          eval_base(ParameterPoint(alpha), EvaluationPoint{x}, ctrl);
      CAPTURE(alpha);
      CAPTURE(x);
      CHECK(rel_close(pw.value, base.value, 1e-13));
    }
  }
}

TEST_CASE("single series matches the enumerated ordered-tuple form") {
  // sum over 0 <= m_1 <= ... <= m_n <= M of x^{m_n} / prod_j (m_j + j alpha)
  // equals the table series truncated at M.
  const double alpha = 0.6;
  const double x = 0.7;
  const int M = 12;
  const CoefficientTable table = build_table(ParameterPoint(alpha), 2, M);
  for (int n = 2; n <= 3; ++n) {
    double prefactor = 1.0;
    for (int j = 1; j <= n; ++j) prefactor *= j * alpha;

    double series = 0.0;
    for (int m = 0; m <= M; ++m) {
      series += std::pow(x, m) * table.get(n - 1, m) / (m + n * alpha);
    }
    series *= prefactor;

    double tuples = 0.0;
    if (n == 2) {
      for (int m2 = 0; m2 <= M; ++m2) {
        for (int m1 = 0; m1 <= m2; ++m1) {
          tuples += std::pow(x, m2) / ((m2 + 2.0 * alpha) * (m1 + alpha));
        }
      }
    } else {
      for (int m3 = 0; m3 <= M; ++m3) {
        for (int m2 = 0; m2 <= m3; ++m2) {
          for (int m1 = 0; m1 <= m2; ++m1) {
            tuples += std::pow(x, m3) / ((m3 + 3.0 * alpha) *
                                         (m2 + 2.0 * alpha) * (m1 + alpha));
          }
        }
      }
    }
    tuples *= prefactor;
    CAPTURE(n);
    CHECK(rel_close(series, tuples, 1e-12));
  }
}

TEST_CASE("domain and table-size errors") {
  const ConvergenceControl ctrl;
  const ParameterPoint p(0.5);

  CHECK_THROWS_AS(eval_base(p, EvaluationPoint{1.0}, ctrl), DomainError);
  CHECK_THROWS_AS(eval_base(p, EvaluationPoint{1.5}, ctrl), DomainError);
  CHECK_THROWS_AS(eval_base(ParameterPoint(-2.0), EvaluationPoint{0.5}, ctrl),
                  PoleError);

  ConvergenceControl reject = ctrl;
  reject.minus_one_policy = MinusOnePolicy::reject;
  CHECK_THROWS_AS(eval_base(p, EvaluationPoint{-1.0}, reject), DomainError);

  const CoefficientTable small = build_table(p, 2, 10);
  CHECK_THROWS_AS(
      eval_power(p, 2, EvaluationPoint{0.9}, small, ctrl), TableSizeError);
  CHECK_THROWS_AS(
      eval_power(p, 4, EvaluationPoint{0.0}, small, ctrl), TableSizeError);
  CHECK_THROWS_AS(eval_power(ParameterPoint(0.7), 2, EvaluationPoint{0.0},
                             small, ctrl),
                  DomainError);

  // level-n denominators are new when n = n_max + 1: 3 * (-1/3) = -1
  const ParameterPoint third(-1.0 / 3.0);
  const CoefficientTable t3 = build_table(third, 2, 130);
  CHECK_THROWS_AS(eval_power(third, 3, EvaluationPoint{0.25}, t3, ctrl),
                  PoleError);
}

TEST_CASE("operation counts: table series is linear, convolution quadratic") {
  std::vector<long long> eq7_counts;
  std::vector<long long> cauchy_counts;
  for (long long terms : {128LL, 256LL, 512LL}) {
    const auto records = run_bench(0.75, 4, 4, 0.5, terms);
    REQUIRE(records.size() == 3);
    long long eq7 = -1;
    long long cauchy = -1;
    double v_eq7 = 0.0;
    double v_cauchy = 0.0;
    double v_base = 0.0;
    for (const auto& r : records) {
      if (r.strategy == BenchStrategy::eq7_series) {
        eq7 = static_cast<long long>(r.multiply_add_count);
        v_eq7 = r.value;
      } else if (r.strategy == BenchStrategy::cauchy_oracle) {
        cauchy = static_cast<long long>(r.multiply_add_count);
        v_cauchy = r.value;
      } else {
        v_base = r.value;
      }
      CHECK(r.multiply_add_count > 0);
    }
    CHECK(rel_close(v_eq7, v_cauchy, 1e-9));
    CHECK(rel_close(v_eq7, v_base, 1e-9));
    eq7_counts.push_back(eq7);
    cauchy_counts.push_back(cauchy);
  }
  // doubling the terms doubles the series cost and quadruples the convolution
  for (int i = 1; i < 3; ++i) {
    const double eq7_ratio =
        static_cast<double>(eq7_counts[i]) / eq7_counts[i - 1];
    const double cauchy_ratio =
        static_cast<double>(cauchy_counts[i]) / cauchy_counts[i - 1];
    CHECK(eq7_ratio > 1.8);
    CHECK(eq7_ratio < 2.2);
    CHECK(cauchy_ratio > 3.6);
    CHECK(cauchy_ratio < 4.4);
  }
  CHECK(static_cast<double>(cauchy_counts[2]) / eq7_counts[2] > 50.0);
}
