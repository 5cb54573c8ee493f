#pragma once

#include <cstdint>
#include <vector>

namespace hyppow {

enum class BenchStrategy { eq7_series, cauchy_oracle, base_power };

const char* to_string(BenchStrategy s);

/// One instrumented run: the strategy's value at a fixed term budget, its
/// arithmetic-operation count (deterministic) and its wall time (reported,
/// never asserted on).
struct BenchRecord {
  BenchStrategy strategy = BenchStrategy::eq7_series;
  int n = 1;
  long long terms = 0;
  std::uint64_t multiply_add_count = 0;
  std::int64_t wall_nanoseconds = 0;
  double value = 0.0;
};

/// Runs the three strategies at exactly `terms` terms for each n in
/// [n_lo, n_hi]. The one-time coefficient-table build is excluded from the
/// eq7_series count. All three values agree to the truncation error of the
/// shared term budget.
std::vector<BenchRecord> run_bench(double alpha, int n_lo, int n_hi, double x,
                                   long long terms);

}  // namespace hyppow
