// Coefficient criteria for harmonic starlikeness, convexity and
// close-to-convexity, and the Wright-value hypotheses of the convolution
// theorems.
//
// Every theorem hypothesis is reported twice:
//   as_stated  - the inequality exactly as printed with the theorem;
//   as_derived - the bound that the coefficient estimates actually produce
//                for the image L(f), with each index shift carried out
//                term by term. A passing as_derived report implies the
//                corresponding exact coefficient criterion for every f in the
//                theorem's class.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic.hpp"
#include "special_fn.hpp"

namespace wrightharm {

/// Order alpha in [0, 1) of the classes HS*(alpha), HK(alpha), SRH, KRH.
struct OrderParam {
  double value = 0.0;

  OrderParam() = default;
  explicit OrderParam(double a) : value(a) {
    if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("order must satisfy 0 <= order < 1");
  }
};

enum class ReportForm { as_stated, as_derived, exact };

inline std::string_view to_string(ReportForm f) {
  switch (f) {
    case ReportForm::as_stated: return "as_stated";
    case ReportForm::as_derived: return "as_derived";
    case ReportForm::exact: return "exact";
  }
  return "?";
}

/// One checked inequality lhs <= rhs. No tolerance is applied.
struct CriterionReport {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double margin = 0.0;
  ReportForm form = ReportForm::exact;

  CriterionReport() = default;
  CriterionReport(std::string name, double l, double r, ReportForm f)
      : id(std::move(name)), lhs(l), rhs(r), satisfied(l <= r), margin(r - l), form(f) {}
};

// ---------------------------------------------------------------------------
// Exact coefficient sums

namespace detail {

template <class WeightA, class WeightB>
double weighted_sum(const CoefficientSeq& c, WeightA&& wa, WeightB&& wb) {
  double s = 0.0;
  for (std::size_t k = 0; k < c.a.size(); ++k) s += wa(static_cast<double>(k) + 2) * std::abs(c.a[k]);
  for (std::size_t k = 0; k < c.b.size(); ++k) s += wb(static_cast<double>(k) + 1) * std::abs(c.b[k]);
  return s;
}

}  // namespace detail

/// sum (n - a)|A_n| + sum (n + a)|B_n| <= 1 - a (starlike of order a).
inline CriterionReport lemma1_sum(const CoefficientSeq& c, OrderParam order) {
  const double a = order.value;
  const double lhs = detail::weighted_sum(
      c, [a](double n) { return n - a; }, [a](double n) { return n + a; });
  return {"L1", lhs, 1.0 - a, ReportForm::exact};
}

/// sum n(n - a)|A_n| + sum n(n + a)|B_n| <= 1 - a (convex of order a).
inline CriterionReport lemma2_sum(const CoefficientSeq& c, OrderParam order) {
  const double a = order.value;
  const double lhs = detail::weighted_sum(
      c, [a](double n) { return n * (n - a); }, [a](double n) { return n * (n + a); });
  return {"L2", lhs, 1.0 - a, ReportForm::exact};
}

/// sum_{n>=2} n|t_n| <= 1 for q(z) = z + sum t_n z^n. t[k] holds t_{k+2}.
inline CriterionReport lemma5_sum(const std::vector<cplx>& t) {
  double lhs = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) lhs += (static_cast<double>(k) + 2) * std::abs(t[k]);
  return {"L5", lhs, 1.0, ReportForm::exact};
}

enum class SignedClass { SRH, KRH };

/// Membership in SRH(a) / KRH(a) for h = z - sum |A_n| z^n, g = sum |B_n| z^n.
/// Only magnitudes matter; the criterion is necessary and sufficient.
inline CriterionReport lemma6_membership(const CoefficientSeq& magnitudes, OrderParam order,
                                         SignedClass cls) {
  CriterionReport r = cls == SignedClass::SRH ? lemma1_sum(magnitudes, order)
                                              : lemma2_sum(magnitudes, order);
  r.id = cls == SignedClass::SRH ? "L6.SRH" : "L6.KRH";
  return r;
}

// ---------------------------------------------------------------------------
// Extremal coefficient bounds

enum class BoundClass {
  KH0,         // convex, B_1 = 0: |A_n| <= (n+1)/2, |B_n| <= (n-1)/2
  CH0_family,  // close-to-convex / starlike / typically real, B_1 = 0
  CH,          // close-to-convex with |B_1| = b1
};

/// Coefficient-bound sequences A_2..A_{n_max}, B_1..B_{n_max}, all real.
inline CoefficientSeq class_bound_coeffs(BoundClass cls, double b1, int n_max) {
  if (n_max < 2) throw std::domain_error("class_bound_coeffs requires n_max >= 2");
  const double b = std::abs(b1);
  if (!(b < 1.0)) throw std::domain_error("class_bound_coeffs requires |b1| < 1");
  auto big = [](double n) { return (2 * n + 1) * (n + 1) / 6.0; };
  auto small = [](double n) { return (2 * n - 1) * (n - 1) / 6.0; };
  CoefficientSeq c;
  c.a.resize(n_max - 1);
  c.b.resize(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const double x = n;
    double an = 0.0, bn = 0.0;
    switch (cls) {
      case BoundClass::KH0: an = (x + 1) / 2; bn = (x - 1) / 2; break;
      case BoundClass::CH0_family: an = big(x); bn = small(x); break;
      case BoundClass::CH: an = big(x) + small(x) * b; bn = small(x) + big(x) * b; break;
    }
    if (n >= 2) c.a[n - 2] = an;
    c.b[n - 1] = bn;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Theorem hypotheses

enum class TheoremId { T3_1, T3_2, T3_3, T4_1, T4_2, T4_3, T5_1, T5_2, T5_3, T5_4, C1, R1 };

/// Geometric conclusion a theorem draws about L(f).
enum class Conclusion { starlike, convex, close_to_convex };

/// Class of f assumed by a theorem.
enum class SourceClass {
  unit_bounded,   // |A_n| <= 1, |B_n| <= 1
  srh,            // Lemma-1 sum <= 1 - order, negative analytic coefficients
  krh,            // Lemma-2 sum <= 1 - order, negative analytic coefficients
  kh0,            // convex with B_1 = 0
  unit_weighted,  // sum n|A_n| + sum n|B_n| <= 1
  ch0,            // close-to-convex with B_1 = 0
  ch,             // close-to-convex
};

struct TheoremInfo {
  TheoremId id;
  std::string_view key;
  Conclusion conclusion;
  SourceClass source;
};

inline constexpr std::array<TheoremInfo, 12> kTheorems{{
    {TheoremId::T3_1, "T3.1", Conclusion::starlike, SourceClass::unit_bounded},
    {TheoremId::T3_2, "T3.2", Conclusion::starlike, SourceClass::srh},
    {TheoremId::T3_3, "T3.3", Conclusion::starlike, SourceClass::kh0},
    {TheoremId::T4_1, "T4.1", Conclusion::convex, SourceClass::unit_bounded},
    {TheoremId::T4_2, "T4.2", Conclusion::convex, SourceClass::kh0},
    {TheoremId::T4_3, "T4.3", Conclusion::convex, SourceClass::krh},
    {TheoremId::T5_1, "T5.1", Conclusion::close_to_convex, SourceClass::unit_weighted},
    {TheoremId::T5_2, "T5.2", Conclusion::close_to_convex, SourceClass::kh0},
    {TheoremId::T5_3, "T5.3", Conclusion::close_to_convex, SourceClass::ch0},
    {TheoremId::T5_4, "T5.4", Conclusion::close_to_convex, SourceClass::ch},
    {TheoremId::C1, "C1", Conclusion::starlike, SourceClass::unit_bounded},
    {TheoremId::R1, "R1", Conclusion::convex, SourceClass::unit_bounded},
}};

inline const TheoremInfo& theorem_info(TheoremId id) {
  for (const auto& t : kTheorems)
    if (t.id == id) return t;
  throw std::logic_error("unknown theorem id");
}

inline std::string_view to_string(TheoremId id) { return theorem_info(id).key; }

inline std::optional<TheoremId> parse_theorem(std::string_view key) {
  for (const auto& t : kTheorems)
    if (t.key == key) return t.id;
  return std::nullopt;
}

struct HypothesisReports {
  CriterionReport stated;
  CriterionReport derived;
};

/// Evaluates a theorem's hypothesis in both forms. b1 is |B_1| of f and is
/// read only by T5.1 and T5.4. C1 and R1 are T3.1 and T4.1 with
/// gamma = delta = 1 forced on both kernels.
inline HypothesisReports stated_hypothesis(TheoremId id, const ConvolutionSpec& spec,
                                           OrderParam order, double b1,
                                           const SeriesControl& ctrl = {}) {
  if (id == TheoremId::C1 || id == TheoremId::R1) {
    const ConvolutionSpec forced(spec.p1.classical(), spec.p2.classical(), spec.sigma);
    HypothesisReports r = stated_hypothesis(id == TheoremId::C1 ? TheoremId::T3_1 : TheoremId::T4_1,
                                            forced, order, b1, ctrl);
    r.stated.id = r.derived.id = std::string(to_string(id));
    return r;
  }
  if (!(std::abs(b1) < 1.0)) throw std::domain_error("hypothesis requires |B_1| < 1");

  const DerivativeValues d1 = derivs_at_one(spec.p1, ctrl);
  const DerivativeValues d2 = derivs_at_one(spec.p2, ctrl);
  const double a = order.value;
  const double s = std::abs(spec.sigma);
  const double bb = std::abs(b1);
  const double W1 = d1.w1, W1p = d1.wp1, W1pp = d1.wpp1, W1ppp = d1.wppp1;
  const double W2 = d2.w1, W2p = d2.wp1, W2pp = d2.wpp1, W2ppp = d2.wppp1;
  // W - 1 and W' - 1 summed without cancellation.
  const double E1 = d1.w1_excess, E1p = d1.wp1_excess, E2 = d2.w1_excess, E2p = d2.wp1_excess;

  double ls = 0, rs = 0, ld = 0, rd = 0;
  switch (id) {
    case TheoremId::T3_1:
      ls = ld = E1p - a * E1 + s * (W2p + a * W2);
      rs = rd = 1 - a;
      break;
    case TheoremId::T3_2:
      ls = W1 + s * W2;
      rs = 2;
      ld = E1 + s * W2;
      rd = 1 - a;
      break;
    case TheoremId::T3_3:
      ls = W1pp + (2 - a) * E1p - a * E1p + s * W2pp + a * (W2p - W2);
      ld = W1pp + (2 - a) * E1p - a * E1 + s * (W2pp + a * (W2p - W2));
      rs = rd = 2 * (1 - a);
      break;
    case TheoremId::T4_1:
      ls = W1pp + (1 - a) * W1p + s * (W2pp + (1 + a) * W2p);
      rs = a;
      ld = W1pp + (1 - a) * E1p + s * (W2pp + (1 + a) * W2p);
      rd = 1 - a;
      break;
    case TheoremId::T4_2:
      ls = ld = W1ppp + (4 - a) * W1pp + 2 * (1 - a) * E1p + s * (W2ppp + (2 + a) * W2pp);
      rs = rd = 2 * (1 - a);
      break;
    case TheoremId::T4_3:
      ls = W1 + s * W2;
      rs = 2 - a;
      ld = E1 + s * W2;
      rd = 1 - a;
      break;
    case TheoremId::T5_1:
      ls = E1 + E2;  // W1 + W2 - 2
      rs = 1 - bb;
      ld = E1 + s * E2;
      rd = 1 - s * bb;
      break;
    case TheoremId::T5_2:
      ls = W1pp + 2 * W1p + W2pp;
      rs = 4;
      ld = W1pp + 2 * E1p + s * W2pp;
      rd = 2;
      break;
    case TheoremId::T5_3:
      ls = 2 * W1ppp + 9 * W1pp + 6 * E2p + W2ppp + 3 * W2pp;
      ld = 2 * W1ppp + 9 * W1pp + 6 * E1p + s * (2 * W2ppp + 3 * W2pp);
      rs = rd = 6;
      break;
    case TheoremId::T5_4: {
      ls = 2 * W1ppp + 9 * W1pp + 6 * E2p + bb * (2 * W1ppp + 3 * W1pp) + 2 * W2ppp +
           3 * W2pp + bb * (2 * W2ppp + 9 * W2pp + 6 * E2p);
      rs = 6 * (1 - bb);
      const double big1 = 2 * W1ppp + 9 * W1pp + 6 * E1p;
      const double small1 = 2 * W1ppp + 3 * W1pp;
      const double big2 = 2 * W2ppp + 9 * W2pp + 6 * E2p;
      const double small2 = 2 * W2ppp + 3 * W2pp;
      ld = big1 + bb * small1 + s * (small2 + bb * big2);
      rd = 6 * (1 - s * bb);
      break;
    }
    case TheoremId::C1:
    case TheoremId::R1:
      break;  // handled above
  }
  const std::string key(to_string(id));
  return {{key, ls, rs, ReportForm::as_stated}, {key, ld, rd, ReportForm::as_derived}};
}

// ---------------------------------------------------------------------------
// Criteria on the image L(f)

enum class ImageTarget { starlike_L1, convex_L2 };

/// Lemma 1 or Lemma 2 applied to |ha|, |gb|; the ground-truth sufficiency check.
inline CriterionReport exact_image_criterion(const ImageCoefficients& img, OrderParam order,
                                             ImageTarget target) {
  const CoefficientSeq c = img.as_coefficients();
  CriterionReport r = target == ImageTarget::starlike_L1 ? lemma1_sum(c, order) : lemma2_sum(c, order);
  r.id = target == ImageTarget::starlike_L1 ? "L1(image)" : "L2(image)";
  return r;
}

/// Unit-modulus probe values: 64 angles offset by half a step plus +-1, +-i.
inline std::vector<cplx> default_epsilons() {
  std::vector<cplx> eps;
  eps.reserve(68);
  for (int k = 0; k < 64; ++k)
    eps.push_back(std::polar(1.0, (k + 0.5) * 2.0 * std::numbers::pi / 64.0));
  eps.insert(eps.end(), {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)});
  return eps;
}

/// For each epsilon, t_n = (ha_n + eps gb_n) / (1 + eps gb_1) and Lemma 5 on t.
inline std::vector<CriterionReport> close_to_convex_probe(const ImageCoefficients& img,
                                                          const std::vector<cplx>& epsilons) {
  const cplx b1 = img.G(1);
  if (!(std::abs(b1) < 1.0)) throw std::domain_error("close-to-convex probe requires |b1| < 1");
  const int top = std::max(static_cast<int>(img.ha.size()) + 1, static_cast<int>(img.gb.size()));
  std::vector<CriterionReport> out;
  out.reserve(epsilons.size());
  std::vector<cplx> t(std::max(0, top - 1));
  for (const cplx eps : epsilons) {
    if (std::abs(std::abs(eps) - 1.0) >= 1e-12)
      throw std::domain_error("close-to-convex probe requires |epsilon| = 1");
    const cplx denom = 1.0 + eps * b1;
    for (int n = 2; n <= top; ++n) t[n - 2] = (img.H(n) + eps * img.G(n)) / denom;
    CriterionReport r = lemma5_sum(t);
    r.id = "L5(eps=" + std::to_string(std::arg(eps)) + ")";
    out.push_back(std::move(r));
  }
  return out;
}

inline bool all_satisfied(const std::vector<CriterionReport>& reports) {
  for (const auto& r : reports)
    if (!r.satisfied) return false;
  return true;
}

}  // namespace wrightharm
