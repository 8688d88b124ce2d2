// Four-parameter Wright function
//
//   W_{(a,b),(c,d)}(z) = sum_{m>=0} z^m / (Gamma(a + m b) Gamma(c + m d))
//
// and its normalized form z Gamma(a) Gamma(c) W(z) = z + sum_{n>=2} c_n z^n.
// All gamma ratios are formed in log space; the series is truncated with a
// rigorous geometric tail bound (term ratios are nonincreasing in m because
// lgamma has increasing differences).

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrightharm {

using cplx = std::complex<double>;

/// Thrown when a truncated series cannot meet its tail tolerance within the
/// allowed number of terms.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters (alpha, beta, gamma, delta) of one four-parameter Wright function.
/// alpha, gamma > 0; beta, delta >= 0 with beta + delta > 0.
class WrightParams {
 public:
  WrightParams(double alpha, double beta, double gamma, double delta)
      : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {
    if (!(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma) &&
          std::isfinite(delta)))
      throw std::domain_error("Wright parameters must be finite");
    if (!(alpha > 0.0) || !(gamma > 0.0))
      throw std::domain_error("Wright parameters require alpha > 0 and gamma > 0");
    if (beta < 0.0 || delta < 0.0)
      throw std::domain_error("Wright parameters require beta >= 0 and delta >= 0");
    if (!(beta + delta > 0.0))
      throw std::domain_error(
          "Wright parameters require beta + delta > 0 (absolute convergence)");
  }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  double delta() const { return delta_; }

  /// Same alpha, beta with gamma = delta = 1 (the classical Wright kernel).
  WrightParams classical() const { return {alpha_, beta_, 1.0, 1.0}; }

  friend bool operator==(const WrightParams&, const WrightParams&) = default;

 private:
  double alpha_, beta_, gamma_, delta_;
};

inline std::string to_string(const WrightParams& p) {
  std::ostringstream os;
  os.precision(17);
  os << p.alpha() << ',' << p.beta() << ',' << p.gamma() << ',' << p.delta();
  return os.str();
}

struct SeriesControl {
  int max_terms = 2000;
  double tail_tol = 1e-14;

  void validate() const {
    if (max_terms < 2) throw std::domain_error("SeriesControl.max_terms must be >= 2");
    if (!(tail_tol > 0.0)) throw std::domain_error("SeriesControl.tail_tol must be > 0");
  }
};

/// W(1), W'(1), W''(1), W'''(1) of the normalized function. w1_excess and
/// wp1_excess hold W(1) - 1 and W'(1) - 1 summed directly, so they keep full
/// relative accuracy when the higher coefficients are tiny.
struct DerivativeValues {
  double w1 = 0.0;
  double wp1 = 0.0;
  double wpp1 = 0.0;
  double wppp1 = 0.0;
  double w1_excess = 0.0;
  double wp1_excess = 0.0;
};

namespace detail {

inline constexpr double kHalfUlp = std::numeric_limits<double>::epsilon() / 2;

inline double log_gamma_prefactor(const WrightParams& p) {
  return std::lgamma(p.alpha()) + std::lgamma(p.gamma());
}

// log of Gamma(a)Gamma(c) / (Gamma(a + m b) Gamma(c + m d))
inline double log_shifted_coeff(const WrightParams& p, double log_prefactor, int m) {
  return log_prefactor - std::lgamma(p.alpha() + m * p.beta()) -
         std::lgamma(p.gamma() + m * p.delta());
}

// Sums sum_{m>=0} term(m) where |term(m)| <= exp(log_bound(m)) and the ratios
// exp(log_bound(m+1) - log_bound(m)) are nonincreasing in m. Stops after term
// m once the tail estimate exp(log_bound(m+1)) / (1 - q) is below ctrl.tail_tol
// and below floor(m, partial sum); the kept terms are then added smallest first.
template <class Acc, class Term, class LogBound, class Floor>
Acc sum_with_tail(const SeriesControl& ctrl, Term&& term, LogBound&& log_bound, Floor&& floor,
                  const char* what) {
  ctrl.validate();
  std::vector<Acc> terms;
  Acc partial{};
  auto total = [&terms] {
    Acc acc{};
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) acc += *it;
    return acc;
  };
  for (int m = 0; m < ctrl.max_terms; ++m) {
    terms.push_back(term(m));
    partial += terms.back();
    const double next = log_bound(m + 1);
    if (next == -std::numeric_limits<double>::infinity()) return total();
    const double q = std::exp(log_bound(m + 2) - next);
    if (q < 1.0) {
      const double tail = std::exp(next) / (1.0 - q);
      if (tail < ctrl.tail_tol && tail <= floor(m, partial)) return total();
    }
  }
  throw NonConvergence(std::string(what) + ": tail above tolerance after " +
                       std::to_string(ctrl.max_terms) + " terms");
}

// sum_{m>=0} c~_m z^m with c~_m = Gamma(a)Gamma(c)/(Gamma(a+mb)Gamma(c+md)).
inline cplx scaled_series(const WrightParams& p, cplx z, const SeriesControl& ctrl) {
  if (z == cplx(0.0, 0.0)) return {1.0, 0.0};
  const double lp = log_gamma_prefactor(p);
  const double log_r = std::log(std::abs(z));
  const double phase = std::arg(z);
  auto log_bound = [&](int m) { return m * log_r + log_shifted_coeff(p, lp, m); };
  auto term = [&](int m) { return std::polar(std::exp(log_bound(m)), m * phase); };
  auto floor = [](int, cplx partial) { return kHalfUlp * std::abs(partial); };
  return sum_with_tail<cplx>(ctrl, term, log_bound, floor, "Wright series");
}

inline DerivativeValues derivative_term(const WrightParams& p, double lp, int m) {
  const double c = m == 0 ? 1.0 : std::exp(log_shifted_coeff(p, lp, m));
  const double k = m;
  DerivativeValues v;
  v.w1 = c;
  v.wp1 = (k + 1) * c;
  v.wpp1 = (k + 1) * k * c;
  v.wppp1 = (k + 1) * k * (k - 1) * c;
  if (m > 0) {
    v.w1_excess = v.w1;
    v.wp1_excess = v.wp1;
  }
  return v;
}

struct DerivativeAcc {
  DerivativeValues v;

  DerivativeAcc& operator+=(const DerivativeAcc& o) {
    v.w1 += o.v.w1;
    v.wp1 += o.v.wp1;
    v.wpp1 += o.v.wpp1;
    v.wppp1 += o.v.wppp1;
    v.w1_excess += o.v.w1_excess;
    v.wp1_excess += o.v.wp1_excess;
    return *this;
  }
};

}  // namespace detail

/// c_n = Gamma(a)Gamma(c) / (Gamma(a + (n-1)b) Gamma(c + (n-1)d)), n >= 1.
inline double norm_coeff(const WrightParams& p, int n) {
  if (n < 1) throw std::domain_error("norm_coeff requires n >= 1");
  if (n == 1) return 1.0;
  return std::exp(detail::log_shifted_coeff(p, detail::log_gamma_prefactor(p), n - 1));
}

/// Four-parameter Wright function W_{(a,b),(c,d)}(z).
/// The tail tolerance applies to the normalized sum sum_m c~_m z^m.
inline cplx wright_eval(const WrightParams& p, cplx z, const SeriesControl& ctrl = {}) {
  return detail::scaled_series(p, z, ctrl) * std::exp(-detail::log_gamma_prefactor(p));
}

/// Normalized function z Gamma(a)Gamma(c) W(z) = sum_{n>=1} c_n z^n.
inline cplx normalized_eval(const WrightParams& p, cplx z, const SeriesControl& ctrl = {}) {
  return z * detail::scaled_series(p, z, ctrl);
}

/// Values at z = 1 of the normalized function and its first three derivatives.
/// Every sum runs until its tail is below ctrl.tail_tol and below half an ulp
/// of its own partial sum, so tiny sums keep full relative accuracy.
inline DerivativeValues derivs_at_one(const WrightParams& p, const SeriesControl& ctrl = {}) {
  const double lp = detail::log_gamma_prefactor(p);
  // (m+1)^3 dominates every polynomial weight used below.
  auto log_bound = [&](int m) {
    return 3.0 * std::log(m + 1.0) + detail::log_shifted_coeff(p, lp, m);
  };
  auto term = [&](int m) { return detail::DerivativeAcc{detail::derivative_term(p, lp, m)}; };
  // W''' has its first nonzero term at m = 2.
  auto floor = [](int m, const detail::DerivativeAcc& a) {
    if (m < 2) return 0.0;
    return detail::kHalfUlp * std::min({a.v.w1_excess, a.v.wpp1, a.v.wppp1});
  };
  return detail::sum_with_tail<detail::DerivativeAcc>(ctrl, term, log_bound, floor,
                                                      "derivative sums at 1")
      .v;
}

/// The first `terms` partial sums of derivs_at_one (no tail control).
inline DerivativeValues derivs_partial(const WrightParams& p, int terms) {
  const double lp = detail::log_gamma_prefactor(p);
  detail::DerivativeAcc acc;
  for (int m = 0; m < terms; ++m) acc += detail::DerivativeAcc{detail::derivative_term(p, lp, m)};
  return acc.v;
}

}  // namespace wrightharm
