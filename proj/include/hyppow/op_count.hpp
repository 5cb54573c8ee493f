#pragma once

#include <cstdint>

namespace hyppow::ops {

/// Thread-local floating-point operation counter backing the benchmark.
/// Counts are deterministic across runs, unlike wall time.
inline std::uint64_t& mul_add_counter() {
  thread_local std::uint64_t count = 0;
  return count;
}

inline void reset_counter() { mul_add_counter() = 0; }

/// Drop-in arithmetic wrapper: every +, -, *, / on a Counted bumps the
/// counter. Evaluation kernels are templated on the scalar type, so the
/// same code runs either as plain doubles or instrumented.
struct Counted {
  double v = 0.0;

  Counted() = default;
  explicit Counted(double d) : v(d) {}
  explicit operator double() const { return v; }

  friend Counted operator+(Counted a, Counted b) {
    ++mul_add_counter();
    return Counted{a.v + b.v};
  }
  friend Counted operator-(Counted a, Counted b) {
    ++mul_add_counter();
    return Counted{a.v - b.v};
  }
  friend Counted operator*(Counted a, Counted b) {
    ++mul_add_counter();
    return Counted{a.v * b.v};
  }
  friend Counted operator/(Counted a, Counted b) {
    ++mul_add_counter();
    return Counted{a.v / b.v};
  }
  Counted& operator+=(Counted o) { return *this = *this + o; }
  Counted& operator-=(Counted o) { return *this = *this - o; }
  Counted& operator*=(Counted o) { return *this = *this * o; }
  Counted& operator/=(Counted o) { return *this = *this / o; }
  Counted operator-() const { return Counted{-v}; }
};

}  // namespace hyppow::ops
