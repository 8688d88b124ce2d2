// Hypothesis => geometry implication check for a single mapping f.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "criteria.hpp"
#include "geometry_oracle.hpp"
#include "harmonic.hpp"

namespace wrightharm {

/// Numerical slack allowed below the order when sweeping the oracle.
inline constexpr double kOracleSlack = 1e-9;

enum class Verdict { consistent, vacuous, counterexample };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "CONSISTENT";
    case Verdict::vacuous: return "VACUOUS";
    case Verdict::counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

enum class Gate { derived, stated };

struct VerifyOutcome {
  Verdict verdict = Verdict::vacuous;
  HypothesisReports hypothesis;
  std::optional<Violation> witness;  // first oracle violation, if any
  std::string detail;
};

/// Kernels actually applied for a theorem (C1 and R1 force gamma = delta = 1).
inline ConvolutionSpec effective_spec(TheoremId id, const ConvolutionSpec& spec) {
  if (id == TheoremId::C1 || id == TheoremId::R1)
    return {spec.p1.classical(), spec.p2.classical(), spec.sigma};
  return spec;
}

/// Checks the gated hypothesis; when it holds, convolves f and sweeps the
/// oracle matching the theorem's conclusion. Close-to-convexity is certified
/// through the epsilon probe plus a sense-preservation sweep.
inline VerifyOutcome verify_one(TheoremId id, const ConvolutionSpec& spec, OrderParam order,
                                const CoefficientSeq& f, const SampleGrid& grid, Gate gate,
                                const SeriesControl& ctrl = {}) {
  VerifyOutcome out;
  out.hypothesis = stated_hypothesis(id, spec, order, std::abs(f.B(1)), ctrl);
  const CriterionReport& gated = gate == Gate::derived ? out.hypothesis.derived : out.hypothesis.stated;
  if (!gated.satisfied) {
    out.verdict = Verdict::vacuous;
    out.detail = "hypothesis not satisfied";
    return out;
  }
  const ImageCoefficients img = convolve(f, effective_spec(id, spec));

  auto fail_on = [&](OracleQuantity q, double threshold) {
    const OracleReport rep = sweep(img, grid, q, threshold);
    if (rep.clean()) return false;
    out.verdict = Verdict::counterexample;
    out.witness = rep.violations.front();
    out.detail = std::string(to_string(q)) + " below " + std::to_string(threshold);
    return true;
  };

  out.verdict = Verdict::consistent;
  if (fail_on(OracleQuantity::jacobian_margin, 0.0)) return out;
  switch (theorem_info(id).conclusion) {
    case Conclusion::starlike:
      fail_on(OracleQuantity::dtheta_arg_f, order.value - kOracleSlack);
      break;
    case Conclusion::convex:
      fail_on(OracleQuantity::dtheta_arg_ftheta, order.value - kOracleSlack);
      break;
    case Conclusion::close_to_convex: {
      const auto probes = close_to_convex_probe(img, default_epsilons());
      for (const auto& p : probes)
        if (!p.satisfied) {
          out.verdict = Verdict::counterexample;
          out.detail = "close-to-convex probe failed at " + p.id;
          break;
        }
      break;
    }
  }
  return out;
}

}  // namespace wrightharm
