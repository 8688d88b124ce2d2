// Harmonic mappings f = h + conj(g) held as finite coefficient sequences, the
// Wright convolution operator, and pointwise evaluation in the unit disk.

#pragma once

#include <cmath>
#include <complex>
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "special_fn.hpp"

namespace wrightharm {

/// h(z) = z + sum_{n>=2} A_n z^n, g(z) = sum_{n>=1} B_n z^n, truncated.
/// a[k] holds A_{k+2}; b[k] holds B_{k+1}. Missing coefficients are zero.
struct CoefficientSeq {
  std::vector<cplx> a;
  std::vector<cplx> b;

  cplx A(int n) const {
    return n >= 2 && n - 2 < static_cast<int>(a.size()) ? a[n - 2] : cplx{};
  }
  cplx B(int n) const {
    return n >= 1 && n - 1 < static_cast<int>(b.size()) ? b[n - 1] : cplx{};
  }
  void set_A(int n, cplx v) {
    if (n < 2) throw std::domain_error("analytic coefficients start at n = 2");
    if (static_cast<int>(a.size()) < n - 1) a.resize(n - 1);
    a[n - 2] = v;
  }
  void set_B(int n, cplx v) {
    if (n < 1) throw std::domain_error("co-analytic coefficients start at n = 1");
    if (static_cast<int>(b.size()) < n) b.resize(n);
    b[n - 1] = v;
  }
  /// Largest power carried by either part (1 for the identity map).
  int degree() const {
    return std::max({1, static_cast<int>(a.size()) + 1, static_cast<int>(b.size())});
  }

  void validate() const {
    if (!(std::abs(B(1)) < 1.0)) throw std::domain_error("harmonic mapping requires |B_1| < 1");
  }
};

struct ConvolutionSpec {
  WrightParams p1;  // analytic side
  WrightParams p2;  // co-analytic side
  cplx sigma;

  ConvolutionSpec(WrightParams analytic, WrightParams coanalytic, cplx s)
      : p1(analytic), p2(coanalytic), sigma(s) {
    if (!(std::abs(sigma) < 1.0)) throw std::domain_error("convolution requires |sigma| < 1");
  }
};

/// Coefficients of L(f) = H + conj(sigma G). ha[k] is the z^{k+2} coefficient
/// of H; gb[k] the z^{k+1} coefficient of sigma G.
struct ImageCoefficients {
  std::vector<cplx> ha;
  std::vector<cplx> gb;

  cplx H(int n) const {
    if (n == 1) return {1.0, 0.0};
    return n >= 2 && n - 2 < static_cast<int>(ha.size()) ? ha[n - 2] : cplx{};
  }
  cplx G(int n) const {
    return n >= 1 && n - 1 < static_cast<int>(gb.size()) ? gb[n - 1] : cplx{};
  }
  void set_H(int n, cplx v) {
    if (n < 2) throw std::domain_error("image analytic coefficients start at n = 2");
    if (static_cast<int>(ha.size()) < n - 1) ha.resize(n - 1);
    ha[n - 2] = v;
  }
  void set_G(int n, cplx v) {
    if (n < 1) throw std::domain_error("image co-analytic coefficients start at n = 1");
    if (static_cast<int>(gb.size()) < n) gb.resize(n);
    gb[n - 1] = v;
  }

  /// Same sequences viewed as a harmonic mapping's coefficients.
  CoefficientSeq as_coefficients() const { return {ha, gb}; }
};

/// Point z = r e^{i theta} of the open unit disk.
struct EvalPoint {
  double r = 0.0;
  double theta = 0.0;

  EvalPoint() = default;
  EvalPoint(double radius, double angle) : r(radius), theta(angle) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("EvalPoint requires 0 <= r < 1");
    if (!std::isfinite(theta)) throw std::domain_error("EvalPoint angle must be finite");
  }
  cplx z() const { return std::polar(r, theta); }
};

inline ImageCoefficients convolve(const CoefficientSeq& f, const ConvolutionSpec& spec) {
  f.validate();
  ImageCoefficients img;
  img.ha.resize(f.a.size());
  img.gb.resize(f.b.size());
  for (std::size_t k = 0; k < f.a.size(); ++k)
    img.ha[k] = norm_coeff(spec.p1, static_cast<int>(k) + 2) * f.a[k];
  for (std::size_t k = 0; k < f.b.size(); ++k)
    img.gb[k] = spec.sigma * norm_coeff(spec.p2, static_cast<int>(k) + 1) * f.b[k];
  return img;
}

/// Value and first two derivatives of a power series at z.
struct SeriesJet {
  cplx value, d1, d2;
};

/// H and sigma*G with their derivatives at z.
struct ImageJet {
  SeriesJet h;  // H
  SeriesJet g;  // sigma G
};

inline ImageJet eval_jet(const ImageCoefficients& img, cplx z) {
  ImageJet j;
  // H(z) = z + sum_{n>=2} ha z^n
  cplx v{}, d1{}, d2{};
  for (std::size_t i = img.ha.size(); i-- > 0;) {
    const double n = static_cast<double>(i) + 2.0;
    v = v * z + img.ha[i];
    d1 = d1 * z + n * img.ha[i];
    d2 = d2 * z + n * (n - 1) * img.ha[i];
  }
  j.h = {z + v * z * z, 1.0 + d1 * z, d2};
  // sigma G(z) = sum_{n>=1} gb z^n
  v = d1 = d2 = cplx{};
  for (std::size_t i = img.gb.size(); i-- > 0;) {
    const double n = static_cast<double>(i) + 1.0;
    v = v * z + img.gb[i];
    d1 = d1 * z + n * img.gb[i];
    if (i >= 1) d2 = d2 * z + n * (n - 1) * img.gb[i];
  }
  j.g = {v * z, d1, d2};
  return j;
}

/// f(z) = H(z) + conj(sigma G(z)) at an arbitrary complex z.
inline cplx eval_map_at(const ImageCoefficients& img, cplx z) {
  const ImageJet j = eval_jet(img, z);
  return j.h.value + std::conj(j.g.value);
}

inline cplx eval_map(const ImageCoefficients& img, const EvalPoint& pt) {
  return eval_map_at(img, pt.z());
}

struct MapDerivatives {
  cplx hp, hpp, gp, gpp;
};

/// H', H'', (sigma G)', (sigma G)'' at the point.
inline MapDerivatives eval_derivs(const ImageCoefficients& img, const EvalPoint& pt) {
  const ImageJet j = eval_jet(img, pt.z());
  return {j.h.d1, j.h.d2, j.g.d1, j.g.d2};
}

}  // namespace wrightharm
