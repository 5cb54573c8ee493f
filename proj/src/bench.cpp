#include "hyppow/bench.hpp"

#include <chrono>
#include <cmath>

#include "hyppow/detail/series_impl.hpp"
#include "hyppow/op_count.hpp"
#include "hyppow/power_series.hpp"

namespace hyppow {

const char* to_string(BenchStrategy s) {
  switch (s) {
    case BenchStrategy::eq7_series: return "eq7_series";
    case BenchStrategy::cauchy_oracle: return "cauchy_oracle";
    case BenchStrategy::base_power: return "base_power";
  }
  return "?";
}

namespace {

// Forces a fixed term count: the tolerance is unreachable, so the kernels
// run to exactly `terms` and report converged = false, which the benchmark
// treats as the intended fixed-budget evaluation.
ConvergenceControl fixed_terms_control(long long terms) {
  ConvergenceControl ctrl;
  ctrl.tolerance = 1e-300;
  ctrl.max_terms = terms;
  return ctrl;
}

template <typename F>
BenchRecord timed(BenchStrategy strategy, int n, long long terms, F&& run) {
  BenchRecord rec;
  rec.strategy = strategy;
  rec.n = n;
  rec.terms = terms;
  ops::reset_counter();
  const auto start = std::chrono::steady_clock::now();
  rec.value = run();
  const auto stop = std::chrono::steady_clock::now();
  rec.multiply_add_count = ops::mul_add_counter();
  rec.wall_nanoseconds =
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
          .count();
  return rec;
}

}  // namespace

std::vector<BenchRecord> run_bench(double alpha, int n_lo, int n_hi, double x,
                                   long long terms) {
  if (n_lo < 1 || n_hi < n_lo) {
    throw DomainError("run_bench: need 1 <= n_lo <= n_hi");
  }
  if (terms < 8) throw DomainError("run_bench: terms must be >= 8");
  if (!std::isfinite(x) || std::fabs(x) >= 1.0) {
    throw DomainError("run_bench: |x| < 1 required");
  }
  const ParameterPoint parameter(alpha);
  validate_parameter(parameter, n_hi, static_cast<int>(terms));
  const ConvergenceControl ctrl = fixed_terms_control(terms);
  // one-time table build, excluded from every counter
  const CoefficientTable table =
      build_table(parameter, n_hi - 1, static_cast<int>(terms) + 1);

  std::vector<BenchRecord> records;
  records.reserve(static_cast<std::size_t>(n_hi - n_lo + 1) * 3);
  for (int n = n_lo; n <= n_hi; ++n) {
    records.push_back(timed(BenchStrategy::eq7_series, n, terms, [&] {
      return detail::eval_power_impl<ops::Counted>(table, n, x, ctrl).value;
    }));
    records.push_back(timed(BenchStrategy::cauchy_oracle, n, terms, [&] {
      return detail::cauchy_power_impl<ops::Counted>(alpha, n, x, terms);
    }));
    records.push_back(timed(BenchStrategy::base_power, n, terms, [&] {
      const auto base =
          detail::eval_base_impl<ops::Counted>(alpha, x, ctrl).value;
      ops::Counted power{base};
      for (int j = 1; j < n; ++j) power *= ops::Counted{base};
      return static_cast<double>(power);
    }));
  }
  return records;
}

}  // namespace hyppow
