// Pointwise geometric quantities of f = H + conj(sigma G) and polar-grid
// sweeps over them. These evaluate the class definitions directly and serve as
// an independent check on the coefficient criteria.

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "harmonic.hpp"

namespace wrightharm {

/// Raised where f (or its angular derivative) vanishes off the origin.
class SingularPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kSingularTol = 1e-13;

/// d/dtheta arg f(r e^{i theta}) = Re[(z H' - conj(z (sigma G)')) / f].
inline double dtheta_arg_f(const ImageCoefficients& img, const EvalPoint& pt) {
  const cplx z = pt.z();
  const ImageJet j = eval_jet(img, z);
  const cplx f = j.h.value + std::conj(j.g.value);
  if (std::abs(f) < kSingularTol) throw SingularPoint("f vanishes at sample point");
  return std::real((z * j.h.d1 - std::conj(z * j.g.d1)) / f);
}

/// d/dtheta arg (d/dtheta f(r e^{i theta})) = Im(f_tt / f_t).
inline double dtheta_arg_ftheta(const ImageCoefficients& img, const EvalPoint& pt) {
  const cplx z = pt.z();
  const ImageJet j = eval_jet(img, z);
  const cplx i(0.0, 1.0);
  const cplx zh = z * j.h.d1;
  const cplx zg = z * j.g.d1;
  const cplx ft = i * (zh - std::conj(zg));
  if (std::abs(ft) < kSingularTol) throw SingularPoint("f_theta vanishes at sample point");
  const cplx ftt = -(zh + z * z * j.h.d2 + std::conj(zg + z * z * j.g.d2));
  return std::imag(ftt / ft);
}

/// |H'(z)| - |(sigma G)'(z)|; positive means sense-preserving at the point.
inline double jacobian_margin(const ImageCoefficients& img, const EvalPoint& pt) {
  const ImageJet j = eval_jet(img, pt.z());
  return std::abs(j.h.d1) - std::abs(j.g.d1);
}

enum class OracleQuantity { dtheta_arg_f, dtheta_arg_ftheta, jacobian_margin };

inline std::string_view to_string(OracleQuantity q) {
  switch (q) {
    case OracleQuantity::dtheta_arg_f: return "dtheta_arg_f";
    case OracleQuantity::dtheta_arg_ftheta: return "dtheta_arg_ftheta";
    case OracleQuantity::jacobian_margin: return "jacobian_margin";
  }
  return "?";
}

inline double evaluate(OracleQuantity q, const ImageCoefficients& img, const EvalPoint& pt) {
  switch (q) {
    case OracleQuantity::dtheta_arg_f: return dtheta_arg_f(img, pt);
    case OracleQuantity::dtheta_arg_ftheta: return dtheta_arg_ftheta(img, pt);
    case OracleQuantity::jacobian_margin: return jacobian_margin(img, pt);
  }
  throw std::logic_error("unknown oracle quantity");
}

struct SampleGrid {
  std::vector<double> radii;
  int theta_count = 4096;

  SampleGrid(std::vector<double> rs, int count) : radii(std::move(rs)), theta_count(count) {
    if (radii.empty()) throw std::domain_error("sample grid needs at least one radius");
    for (std::size_t i = 0; i < radii.size(); ++i) {
      if (!(radii[i] > 0.0 && radii[i] < 1.0))
        throw std::domain_error("sample grid radii must lie in (0, 1)");
      if (i > 0 && !(radii[i] > radii[i - 1]))
        throw std::domain_error("sample grid radii must be strictly increasing");
    }
    if (theta_count < 8) throw std::domain_error("sample grid needs theta_count >= 8");
  }

  static SampleGrid standard() { return {{0.5, 0.9, 0.99}, 4096}; }

  double angle(int k) const { return 2.0 * std::numbers::pi * k / theta_count; }
};

struct Violation {
  EvalPoint at;
  double value = 0.0;  // -inf at singular points
  bool singular = false;
};

struct OracleReport {
  OracleQuantity quantity = OracleQuantity::dtheta_arg_f;
  double min_value = std::numeric_limits<double>::infinity();
  EvalPoint argmin;
  std::vector<Violation> violations;  // radius-major, then angle
  double threshold = 0.0;

  bool clean() const { return violations.empty(); }
};

/// Quantity at every grid point, radius-major. Singular points give -inf.
inline std::vector<double> sample_values(const ImageCoefficients& img, const SampleGrid& grid,
                                         OracleQuantity q) {
  std::vector<double> out;
  out.reserve(grid.radii.size() * grid.theta_count);
  for (double r : grid.radii)
    for (int k = 0; k < grid.theta_count; ++k) {
      try {
        out.push_back(evaluate(q, img, EvalPoint(r, grid.angle(k))));
      } catch (const SingularPoint&) {
        out.push_back(-std::numeric_limits<double>::infinity());
      }
    }
  return out;
}

inline OracleReport sweep(const ImageCoefficients& img, const SampleGrid& grid, OracleQuantity q,
                          double threshold) {
  OracleReport rep;
  rep.quantity = q;
  rep.threshold = threshold;
  const std::vector<double> values = sample_values(img, grid, q);
  std::size_t idx = 0;
  for (double r : grid.radii)
    for (int k = 0; k < grid.theta_count; ++k, ++idx) {
      const double v = values[idx];
      const EvalPoint pt(r, grid.angle(k));
      if (v < rep.min_value || idx == 0) {
        rep.min_value = v;
        rep.argmin = pt;
      }
      if (v < threshold) rep.violations.push_back({pt, v, std::isinf(v)});
    }
  return rep;
}

}  // namespace wrightharm
