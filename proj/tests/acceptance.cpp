// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wrightharm/wrightharm.hpp"

namespace {

using namespace wrightharm;
using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = true;
  std::string note;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v, int digits = 3) { return io::format_sig(v, digits); }

// 1 -------------------------------------------------------------------------
Result derivative_identities() {
  const auto t0 = Clock::now();
  Rng rng(101);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const double a = rng.uniform(0.5, 5), b = rng.uniform(0.25, 5);
    const double c = rng.uniform(0.5, 5), d = rng.uniform(0.25, 5);
    const DerivativeValues v = derivs_at_one({a, b, c, d});
    const double want[4] = {
        oracle::weighted_sum(a, b, c, d, 0, [](long double) { return 1.0L; }),
        1.0 + oracle::weighted_sum(a, b, c, d, 1, [](long double n) { return n + 1; }),
        oracle::weighted_sum(a, b, c, d, 1, [](long double n) { return n * (n + 1); }),
        oracle::weighted_sum(a, b, c, d, 2, [](long double n) { return (n + 1) * n * (n - 1); })};
    const double got[4] = {v.w1, v.wp1, v.wpp1, v.wppp1};
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(got[k] - want[k]) / std::abs(want[k]));
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-10 && t < 2.0,
          "max rel err " + num(worst) + ", " + num(t) + " s"};
}

// 2 -------------------------------------------------------------------------
Result classical_reduction() {
  const auto t0 = Clock::now();
  Rng rng(202);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform(0.5, 5), b = rng.uniform(0.25, 5);
    for (int k = 0; k < 20; ++k) {
      const cplx z = 2.0 * rng.in_disk();
      const cplx got = wright_eval({a, b, 1, 1}, z);
      worst = std::max(worst, std::abs(got - oracle::classical_wright(b, a, z)));
    }
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-12 && t < 1.0, "max abs err " + num(worst) + ", " + num(t) + " s"};
}

// 3 -------------------------------------------------------------------------
Result special_values() {
  const double w = normalized_eval({1, 1, 1, 1}, 1.0).real();
  const double wp = derivs_at_one({1, 1, 1, 1}).wp1;
  const double wp_ref = oracle::kBesselI0At2 + oracle::kBesselI1At2;
  const bool ok = std::abs(w - 2.2795853023360673) <= 1e-10 && std::abs(wp - wp_ref) <= 1e-10;
  return {ok, "W(1) = " + num(w, 17) + ", W'(1) = " + num(wp, 17) + " vs I0(2)+I1(2) = " +
                  num(wp_ref, 17)};
}

// 4 -------------------------------------------------------------------------
Result equality_cases() {
  double worst = 0;
  for (double a : {0.0, 0.25, 0.5, 0.75}) {
    CoefficientSeq f1, f2;
    f1.set_A(2, (1 - a) / (2 - a));
    f2.set_A(2, (1 - a) / (2 * (2 - a)));
    worst = std::max(worst, std::abs(lemma1_sum(f1, OrderParam(a)).margin));
    worst = std::max(worst, std::abs(lemma2_sum(f2, OrderParam(a)).margin));
  }
  return {worst < 1e-15, "max |margin| " + num(worst)};
}

// 5, 6 ----------------------------------------------------------------------
ConvolutionSpec random_spec(Rng& rng) {
  const WrightParams p1(rng.uniform(1, 3), rng.uniform(0.5, 3), rng.uniform(1, 3), rng.uniform(0.5, 3));
  const WrightParams p2(rng.uniform(1, 3), rng.uniform(0.5, 3), rng.uniform(1, 3), rng.uniform(0.5, 3));
  return {p1, p2, std::polar(rng.uniform(0, 0.5), rng.uniform(0, 2 * std::numbers::pi))};
}

Result soundness(TheoremId id, ImageTarget target, OracleQuantity q, std::uint64_t seed) {
  const auto t0 = Clock::now();
  Rng rng(seed);
  const SampleGrid grid = SampleGrid::standard();
  int passing = 0, failures = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 200; ++i) {
    const ConvolutionSpec spec = random_spec(rng);
    const OrderParam order(rng.uniform(0, 0.5));
    const CoefficientSeq f = random_unit_bounded(rng, 50);
    if (!stated_hypothesis(id, spec, order, 0.0).derived.satisfied) continue;
    ++passing;
    const ImageCoefficients img = convolve(f, spec);
    const bool exact = exact_image_criterion(img, order, target).satisfied;
    const OracleReport rep = sweep(img, grid, q, order.value - kOracleSlack);
    worst = std::min(worst, rep.min_value - order.value);
    if (!exact || !rep.clean()) ++failures;
  }
  const double t = seconds_since(t0);
  return {passing >= 50 && failures == 0 && t < 30.0,
          std::to_string(passing) + "/200 hypotheses pass, " + std::to_string(failures) +
              " failures, min(oracle - order) " + num(worst) + ", " + num(t) + " s"};
}

// 7 -------------------------------------------------------------------------
Result class_bounds() {
  Rng rng(707);
  const CoefficientSeq kh0 = class_bound_coeffs(BoundClass::KH0, 0.0, 50);
  const CoefficientSeq ch0 = class_bound_coeffs(BoundClass::CH0_family, 0.0, 50);
  const auto eps = default_epsilons();
  int n33 = 0, n42 = 0, n53 = 0, failures = 0;
  for (int i = 0; i < 300; ++i) {
    const WrightParams p1(rng.uniform(0.5, 5), rng.uniform(1, 5), rng.uniform(0.5, 5), rng.uniform(1, 5));
    const WrightParams p2(rng.uniform(0.5, 5), rng.uniform(1, 5), rng.uniform(0.5, 5), rng.uniform(1, 5));
    const ConvolutionSpec spec(p1, p2, std::polar(rng.uniform(0, 0.9), rng.uniform(0, 6.28)));
    const OrderParam order(rng.uniform(0, 0.9));
    if (stated_hypothesis(TheoremId::T3_3, spec, order, 0.0).derived.satisfied) {
      ++n33;
      if (!exact_image_criterion(convolve(kh0, spec), order, ImageTarget::starlike_L1).satisfied) ++failures;
    }
    if (stated_hypothesis(TheoremId::T4_2, spec, order, 0.0).derived.satisfied) {
      ++n42;
      if (!exact_image_criterion(convolve(kh0, spec), order, ImageTarget::convex_L2).satisfied) ++failures;
    }
    if (stated_hypothesis(TheoremId::T5_3, spec, order, 0.0).derived.satisfied) {
      ++n53;
      if (!all_satisfied(close_to_convex_probe(convolve(ch0, spec), eps))) ++failures;
    }
  }
  return {failures == 0 && n33 > 0 && n42 > 0 && n53 > 0,
          "T3.3 " + std::to_string(n33) + ", T4.2 " + std::to_string(n42) + ", T5.3 " +
              std::to_string(n53) + " passing of 300, " + std::to_string(failures) + " failures"};
}

// 8 -------------------------------------------------------------------------
Result finite_differences() {
  Rng rng(808);
  const double h = 1e-5;
  double worst1 = 0, worst2 = 0;
  auto f_theta = [](const ImageCoefficients& img, cplx z) {
    const ImageJet j = eval_jet(img, z);
    return cplx(0, 1) * (z * j.h.d1 - std::conj(z * j.g.d1));
  };
  for (int i = 0; i < 100; ++i) {
    CoefficientSeq f = random_unit_bounded(rng, 20);
    const double k = rng.uniform(0.2, 0.95) / lemma1_sum(f, OrderParam(0.0)).lhs;
    for (auto& x : f.a) x *= k;
    for (auto& x : f.b) x *= k;
    const ImageCoefficients img{f.a, f.b};
    for (int j = 0; j < 100; ++j) {
      const double r = rng.uniform(0.05, 0.95), th = rng.uniform(0, 2 * std::numbers::pi);
      const cplx zp = std::polar(r, th + h), zm = std::polar(r, th - h);
      const double fd1 = std::arg(eval_map_at(img, zp) / eval_map_at(img, zm)) / (2 * h);
      const double fd2 = std::arg(f_theta(img, zp) / f_theta(img, zm)) / (2 * h);
      worst1 = std::max(worst1, std::abs(dtheta_arg_f(img, EvalPoint(r, th)) - fd1));
      worst2 = std::max(worst2, std::abs(dtheta_arg_ftheta(img, EvalPoint(r, th)) - fd2));
    }
  }
  return {worst1 < 1e-6 && worst2 < 1e-5,
          "max dev " + num(worst1) + " (arg f), " + num(worst2) + " (arg f_theta)"};
}

// 9 -------------------------------------------------------------------------
Result t41_discrepancy() {
  int found = 0, total = 0;
  for (double beta : {1.0, 2.0, 3.0, 4.0, 5.0})
    for (double order : {0.0, 0.25, 0.5})
      for (double sigma : {0.0, 0.3}) {
        ++total;
        const WrightParams p(1, beta, 1, beta);
        const auto r = stated_hypothesis(TheoremId::T4_1, {p, p, sigma}, OrderParam(order), 0.0);
        if (r.derived.satisfied && !r.stated.satisfied) ++found;
      }
  return {found > 0, std::to_string(found) + " of " + std::to_string(total) +
                         " grid points pass as derived and fail as stated"};
}

// 10 ------------------------------------------------------------------------
struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string("\"") + WRIGHTHARM_CLI + "\" " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result cli_contract() {
  std::vector<std::string> problems;
  const std::string scan =
      "--seed 3 scan T3.1 --p1 2,1,2,1 --p2 1.5,2,1,1 --axis sigma:0:0.9:0.1 --axis order:0:0.5:0.25 --out ";
  const int c1 = cli(scan + "accept_a.csv").code, c2 = cli(scan + "accept_b.csv").code;
  const std::string a = slurp("accept_a.csv"), b = slurp("accept_b.csv");
  if (c1 != 0 || c2 != 0 || a.empty() || a != b) problems.push_back("scan not byte-identical");

  const std::pair<std::string, int> codes[] = {
      {"eval --p 1,1,1,1 --z 1,0", 0},
      {"check T3.2 --p1 1,1,1,1 --sigma 0", 1},
      {"eval --p 1,0,1,0 --z 1", 2},
      {"check T3.1 --p1 1,0.001,1,0.001", 3},
      {"render --radii 0.5 --out /nonexistent-dir/x.svg", 4},
  };
  for (const auto& [args, want] : codes)
    if (cli(args).code != want) problems.push_back("exit code of '" + args + "'");

  double worst = std::numeric_limits<double>::infinity();
  if (cli("render --radii 0.5 --angles 512 --out accept_circle.svg").code == 0) {
    const std::string svg = slurp("accept_circle.svg");
    std::smatch m;
    if (std::regex_search(svg, m, std::regex("points=\"([^\"]*)\""))) {
      worst = 0;
      std::istringstream in(m[1].str());
      std::string pair;
      while (in >> pair) {
        const auto xy = io::split(pair, ',');
        worst = std::max(worst, std::abs(std::hypot(io::parse_double(xy[0]), io::parse_double(xy[1])) - 0.5));
      }
    }
  }
  if (!(worst < 1e-12)) problems.push_back("identity circle deviation");

  std::string note = "circle deviation " + num(worst);
  for (const auto& p : problems) note += "; " + p;
  return {problems.empty(), note};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"derivative-sum identities", derivative_identities},
      {"classical Wright reduction", classical_reduction},
      {"special values at z = 1", special_values},
      {"equality-case sharpness", equality_cases},
      {"starlike soundness (T3.1 derived)",
       [] { return soundness(TheoremId::T3_1, ImageTarget::starlike_L1, OracleQuantity::dtheta_arg_f, 505); }},
      {"convex soundness (T4.1 derived)",
       [] { return soundness(TheoremId::T4_1, ImageTarget::convex_L2, OracleQuantity::dtheta_arg_ftheta, 606); }},
      {"class-bound pipelines (T3.3, T4.2, T5.3)", class_bounds},
      {"oracle finite-difference agreement", finite_differences},
      {"T4.1 stated vs derived discrepancy", t41_discrepancy},
      {"CLI contract", cli_contract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) ++failed;
    std::cout << "criterion " << i + 1 << ": " << (r.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].first << " (" << r.note << ")" << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return failed ? 1 : 0;
}
