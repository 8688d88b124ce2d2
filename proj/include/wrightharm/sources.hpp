// Deterministic generators of test mappings f for each theorem's class.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "criteria.hpp"
#include "harmonic.hpp"

namespace wrightharm {

/// mt19937_64 with a fixed bits-to-double mapping, so that a seed produces
/// the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform on the open unit disk.
  cplx in_disk() {
    for (;;) {
      const cplx w = std::polar(std::sqrt(uniform()), 2.0 * std::numbers::pi * uniform());
      if (std::abs(w) < 1.0) return w;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// |A_n|, |B_n| <= 1 for 2 <= n <= n_max and 1 <= n <= n_max.
inline CoefficientSeq random_unit_bounded(Rng& rng, int n_max = 50) {
  CoefficientSeq f;
  f.a.resize(n_max - 1);
  f.b.resize(n_max);
  for (auto& x : f.a) x = rng.in_disk();
  for (auto& x : f.b) x = rng.in_disk();
  return f;
}

namespace detail {

inline CoefficientSeq scaled_random(Rng& rng, int n_max, double target,
                                    double (*weighted)(const CoefficientSeq&, double),
                                    double order) {
  CoefficientSeq f = random_unit_bounded(rng, n_max);
  const double s = weighted(f, order);
  const double scale = s > 0 ? target / s : 0.0;
  for (auto& x : f.a) x *= scale;
  for (auto& x : f.b) x *= scale;
  return f;
}

inline double starlike_weight(const CoefficientSeq& f, double a) {
  return lemma1_sum(f, OrderParam(a)).lhs;
}
inline double convex_weight(const CoefficientSeq& f, double a) {
  return lemma2_sum(f, OrderParam(a)).lhs;
}
inline double unit_weight(const CoefficientSeq& f, double) {
  return lemma1_sum(f, OrderParam(0.0)).lhs;
}

inline void apply_signed_pattern(CoefficientSeq& f) {
  for (auto& x : f.a) x = -std::abs(x);
  for (auto& x : f.b) x = std::abs(x);
}

}  // namespace detail

/// A mapping from the class a theorem assumes. Extremal classes (KH0, CH0,
/// CH) return their coefficient-bound sequences; the others are random.
inline CoefficientSeq random_for_class(SourceClass cls, OrderParam order, double b1, Rng& rng,
                                       int n_max = 50) {
  const double a = order.value;
  switch (cls) {
    case SourceClass::unit_bounded:
      return random_unit_bounded(rng, n_max);
    case SourceClass::srh: {
      auto f = detail::scaled_random(rng, n_max, (1 - a) * rng.uniform(), detail::starlike_weight, a);
      detail::apply_signed_pattern(f);
      return f;
    }
    case SourceClass::krh: {
      auto f = detail::scaled_random(rng, n_max, (1 - a) * rng.uniform(), detail::convex_weight, a);
      detail::apply_signed_pattern(f);
      return f;
    }
    case SourceClass::unit_weighted:
      return detail::scaled_random(rng, n_max, rng.uniform(), detail::unit_weight, 0.0);
    case SourceClass::kh0:
      return class_bound_coeffs(BoundClass::KH0, 0.0, n_max);
    case SourceClass::ch0:
      return class_bound_coeffs(BoundClass::CH0_family, 0.0, n_max);
    case SourceClass::ch:
      return class_bound_coeffs(BoundClass::CH, b1, n_max);
  }
  throw std::logic_error("unknown source class");
}

}  // namespace wrightharm
