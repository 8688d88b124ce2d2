// wrightharm command-line driver.
//
// Exit codes: 0 pass, 1 hypothesis/criterion failure, 2 domain or spec error,
// 3 non-convergence, 4 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wrightharm/wrightharm.hpp"

namespace {

using namespace wrightharm;

enum ExitCode { kPass = 0, kFail = 1, kSpecError = 2, kNoConvergence = 3, kIoError = 4 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  int max_terms = 2000;
  double tail_tol = 1e-14;
  std::string config;
  std::uint64_t seed = 1;
  bool show_config = false;

  SeriesControl ctrl() const {
    SeriesControl c{max_terms, tail_tol};
    c.validate();
    return c;
  }
};

struct MappingArgs {
  std::string p1 = "1,1,1,1";
  std::string p2 = "1,1,1,1";
  std::string sigma = "0";
  double order = 0.0;
  double b1 = 0.0;

  ConvolutionSpec spec() const {
    return {io::parse_params(p1), io::parse_params(p2), io::parse_complex(sigma)};
  }
};

void add_mapping_options(CLI::App* cmd, MappingArgs& m) {
  cmd->add_option("--p1", m.p1, "analytic-side Wright parameters alpha,beta,gamma,delta");
  cmd->add_option("--p2", m.p2, "co-analytic-side Wright parameters alpha,beta,gamma,delta");
  cmd->add_option("--sigma", m.sigma, "sigma as re,im (or a real), |sigma| < 1");
  cmd->add_option("--order", m.order, "order alpha in [0, 1)");
  cmd->add_option("--b1", m.b1, "|B_1| of f (read by T5.1 and T5.4)");
}

TheoremId theorem_from(const std::string& key) {
  const auto id = parse_theorem(key);
  if (!id) throw io::ParseError("unknown theorem id '" + key + "'");
  return *id;
}

Gate gate_from(const std::string& s) {
  if (s == "derived") return Gate::derived;
  if (s == "stated") return Gate::stated;
  throw io::ParseError("--gate must be 'derived' or 'stated'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  out.close();
  if (!out) throw IoError("failed writing " + path);
}

CoefficientSeq load_coefficients(const std::string& path) {
  std::istringstream in(read_file(path));
  return io::read_coefficients(in);
}

std::string describe(const CriterionReport& r) {
  return std::string(to_string(r.form)) + " lhs=" + io::format_sig(r.lhs, 17) +
         " rhs=" + io::format_sig(r.rhs, 17) + " margin=" + io::format_sig(r.margin, 17) +
         " satisfied=" + (r.satisfied ? "yes" : "no");
}

// ---------------------------------------------------------------------------

int cmd_eval(const Globals& g, const std::string& p, const std::string& z) {
  const WrightParams params = io::parse_params(p);
  const cplx zz = io::parse_complex(z);
  const SeriesControl ctrl = g.ctrl();
  std::cout << "wright = " << io::format_complex(wright_eval(params, zz, ctrl), 16) << '\n'
            << "normalized = " << io::format_complex(normalized_eval(params, zz, ctrl), 16)
            << '\n';
  return kPass;
}

int cmd_derivs(const Globals& g, const std::string& p) {
  const DerivativeValues d = derivs_at_one(io::parse_params(p), g.ctrl());
  std::cout << "w1 = " << io::format_sig(d.w1, 17) << '\n'
            << "wp1 = " << io::format_sig(d.wp1, 17) << '\n'
            << "wpp1 = " << io::format_sig(d.wpp1, 17) << '\n'
            << "wppp1 = " << io::format_sig(d.wppp1, 17) << '\n';
  return kPass;
}

int cmd_check(const Globals& g, const std::string& theorem, const MappingArgs& m,
              const std::string& gate) {
  const TheoremId id = theorem_from(theorem);
  const Gate which = gate_from(gate);
  const HypothesisReports r =
      stated_hypothesis(id, m.spec(), OrderParam(m.order), m.b1, g.ctrl());
  std::cout << "theorem " << to_string(id) << '\n'
            << describe(r.stated) << '\n'
            << describe(r.derived) << '\n';
  const bool ok = which == Gate::derived ? r.derived.satisfied : r.stated.satisfied;
  return ok ? kPass : kFail;
}

// scan ----------------------------------------------------------------------

const std::vector<std::string> kScanParams = {"alpha1", "beta1", "gamma1", "delta1",
                                              "alpha2", "beta2", "gamma2", "delta2",
                                              "sigma",  "order", "b1"};

struct Axis {
  std::string name;
  std::vector<double> values;
};

Axis parse_axis(const std::string& text) {
  const auto f = io::split(text, ':');
  if (f.size() != 4) throw io::ParseError("--axis must be name:start:stop:step");
  if (std::find(kScanParams.begin(), kScanParams.end(), f[0]) == kScanParams.end())
    throw io::ParseError("unknown scan parameter '" + f[0] + "'");
  const double start = io::parse_double(f[1]);
  const double stop = io::parse_double(f[2]);
  const double step = io::parse_double(f[3]);
  if (!(step > 0.0) || !(stop >= start)) throw io::ParseError("axis needs step > 0 and stop >= start");
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 1000000) throw io::ParseError("axis has too many points");
  Axis a{f[0], {}};
  for (long k = 0; k < count; ++k) a.values.push_back(start + static_cast<double>(k) * step);
  return a;
}

int cmd_scan(const Globals& g, const std::string& theorem, const MappingArgs& m,
             const std::vector<std::string>& axis_text, const std::string& out_path) {
  const TheoremId id = theorem_from(theorem);
  if (axis_text.empty()) throw io::ParseError("scan needs at least one --axis");
  std::vector<Axis> axes;
  for (const auto& t : axis_text) axes.push_back(parse_axis(t));

  const ConvolutionSpec base = m.spec();
  std::map<std::string, double> fixed = {
      {"alpha1", base.p1.alpha()}, {"beta1", base.p1.beta()},   {"gamma1", base.p1.gamma()},
      {"delta1", base.p1.delta()}, {"alpha2", base.p2.alpha()}, {"beta2", base.p2.beta()},
      {"gamma2", base.p2.gamma()}, {"delta2", base.p2.delta()}, {"sigma", std::abs(base.sigma)},
      {"order", m.order},          {"b1", m.b1}};
  const cplx phase = std::abs(base.sigma) > 0 ? base.sigma / std::abs(base.sigma) : cplx(1, 0);
  const SeriesControl ctrl = g.ctrl();

  std::vector<std::string> header = kScanParams;
  header.insert(header.begin(), "theorem");
  for (const char* c : {"lhs_stated", "rhs_stated", "sat_stated", "lhs_derived", "rhs_derived",
                        "sat_derived"})
    header.emplace_back(c);
  std::string csv = io::csv_row(header);

  // Odometer over the axes; the first axis varies slowest.
  std::vector<std::size_t> idx(axes.size(), 0);
  for (bool more = true; more;) {
    auto v = fixed;
    for (std::size_t a = 0; a < axes.size(); ++a) v[axes[a].name] = axes[a].values[idx[a]];
    const ConvolutionSpec spec(WrightParams(v["alpha1"], v["beta1"], v["gamma1"], v["delta1"]),
                               WrightParams(v["alpha2"], v["beta2"], v["gamma2"], v["delta2"]),
                               v["sigma"] * phase);
    const HypothesisReports r = stated_hypothesis(id, spec, OrderParam(v["order"]), v["b1"], ctrl);
    std::vector<std::string> row{std::string(to_string(id))};
    for (const auto& name : kScanParams) row.push_back(io::csv_number(v[name]));
    row.push_back(io::csv_number(r.stated.lhs));
    row.push_back(io::csv_number(r.stated.rhs));
    row.emplace_back(r.stated.satisfied ? "1" : "0");
    row.push_back(io::csv_number(r.derived.lhs));
    row.push_back(io::csv_number(r.derived.rhs));
    row.emplace_back(r.derived.satisfied ? "1" : "0");
    csv += io::csv_row(row);

    more = false;
    for (std::size_t a = axes.size(); a-- > 0;) {
      if (++idx[a] < axes[a].values.size()) {
        more = true;
        break;
      }
      idx[a] = 0;
    }
  }
  if (out_path.empty() || out_path == "-")
    std::cout << csv;
  else
    write_file(out_path, csv);
  return kPass;
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string source = "auto";
  std::string coeffs;
  int count = 50;
  int n_max = 50;
  std::string radii = "0.5,0.9,0.99";
  int angles = 4096;
  std::string gate = "derived";
};

int cmd_verify(const Globals& g, const std::string& theorem, const MappingArgs& m,
               const VerifyArgs& va) {
  const TheoremId id = theorem_from(theorem);
  const Gate gate = gate_from(va.gate);
  const ConvolutionSpec spec = m.spec();
  const OrderParam order(m.order);
  const SampleGrid grid(io::parse_real_list(va.radii), va.angles);
  const SeriesControl ctrl = g.ctrl();
  if (va.count < 1) throw io::ParseError("--count must be >= 1");
  if (va.n_max < 2) throw io::ParseError("--n-max must be >= 2");

  std::vector<CoefficientSeq> fs;
  Rng rng(g.seed);
  if (va.source == "file") {
    if (va.coeffs.empty()) throw io::ParseError("--source file needs --coeffs");
    fs.push_back(load_coefficients(va.coeffs));
  } else if (va.source == "identity") {
    fs.emplace_back();
  } else {
    SourceClass cls;
    if (va.source == "auto") cls = theorem_info(id).source;
    else if (va.source == "unit") cls = SourceClass::unit_bounded;
    else if (va.source == "kh0") cls = SourceClass::kh0;
    else if (va.source == "ch0") cls = SourceClass::ch0;
    else if (va.source == "ch") cls = SourceClass::ch;
    else throw io::ParseError("--source must be auto|unit|kh0|ch0|ch|identity|file");
    const bool random = cls != SourceClass::kh0 && cls != SourceClass::ch0 && cls != SourceClass::ch;
    const int n = random ? va.count : 1;
    for (int k = 0; k < n; ++k) fs.push_back(random_for_class(cls, order, m.b1, rng, va.n_max));
  }

  int consistent = 0, vacuous = 0, counter = 0;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    const VerifyOutcome o = verify_one(id, spec, order, fs[k], grid, gate, ctrl);
    std::cout << "trial " << k << ": " << to_string(o.verdict);
    if (o.witness)
      std::cout << " at r=" << io::format_sig(o.witness->at.r, 17)
                << " theta=" << io::format_sig(o.witness->at.theta, 17)
                << " value=" << io::format_sig(o.witness->value, 17);
    if (o.verdict == Verdict::counterexample && !o.witness) std::cout << " (" << o.detail << ")";
    std::cout << '\n';
    switch (o.verdict) {
      case Verdict::consistent: ++consistent; break;
      case Verdict::vacuous: ++vacuous; break;
      case Verdict::counterexample: ++counter; break;
    }
  }
  std::cout << "summary: " << consistent << " CONSISTENT, " << vacuous << " VACUOUS, " << counter
            << " COUNTEREXAMPLE\n";
  return (vacuous == 0 && counter == 0) ? kPass : kFail;
}

// render --------------------------------------------------------------------

struct RenderArgs {
  std::string coeffs;
  bool raw = false;
  std::string radii = "0.5,0.9,0.99";
  int angles = 512;
  int width = 800;
  int height = 800;
  std::string out;
};

int cmd_render(const MappingArgs& m, const RenderArgs& ra) {
  io::RenderSpec rs{io::parse_real_list(ra.radii), ra.angles, ra.width, ra.height};
  rs.validate();
  if (ra.out.empty()) throw io::ParseError("render needs --out");
  const CoefficientSeq f = ra.coeffs.empty() ? CoefficientSeq{} : load_coefficients(ra.coeffs);
  ImageCoefficients img{f.a, f.b};
  if (ra.raw)
    f.validate();
  else
    img = convolve(f, m.spec());
  write_file(ra.out, io::render_svg(img, rs));
  return kPass;
}

// config --------------------------------------------------------------------

std::string long_name(const CLI::Option* opt) {
  const auto& names = opt->get_lnames();
  return names.empty() ? std::string() : names.front();
}

std::set<std::string> option_keys(const CLI::App* app) {
  std::set<std::string> keys;
  for (const CLI::Option* o : app->get_options()) {
    const std::string k = long_name(o);
    if (!k.empty() && k != "help" && k != "config") keys.insert(k);
  }
  return keys;
}

// Splices `--key=value` entries from the config file right after the
// subcommand name, so that later command-line flags take precedence.
std::vector<std::string> merge_config(CLI::App& app, std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;

  std::istringstream in(read_file(path));
  const io::ConfigEntries entries = io::parse_config(in);

  std::size_t sub_pos = args.size();
  CLI::App* sub = nullptr;
  for (std::size_t i = 0; i < args.size() && !sub; ++i)
    for (CLI::App* s : app.get_subcommands({}))
      if (s->get_name() == args[i]) {
        sub = s;
        sub_pos = i;
        break;
      }

  std::set<std::string> all = option_keys(&app);
  for (CLI::App* s : app.get_subcommands({})) {
    const auto k = option_keys(s);
    all.insert(k.begin(), k.end());
  }
  std::set<std::string> active = option_keys(&app);
  if (sub) {
    const auto k = option_keys(sub);
    active.insert(k.begin(), k.end());
  }

  std::vector<std::string> injected;
  for (const auto& [key, value] : entries) {
    if (!all.count(key)) throw io::ParseError("unknown config key '" + key + "'");
    if (!active.count(key)) continue;
    const std::string flag = "--" + key;
    const bool on_command_line = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (key == "axis" && on_command_line) continue;
    injected.push_back(flag + "=" + value);
  }
  const auto at = sub ? args.begin() + static_cast<std::ptrdiff_t>(sub_pos) + 1 : args.end();
  args.insert(at, injected.begin(), injected.end());
  return args;
}

std::string option_value(const CLI::Option* o) {
  if (o->count() == 0) return o->get_default_str();
  // Config values are injected ahead of the command line, so the last one wins.
  return o->results().back();
}

void print_config(const CLI::App& app, const CLI::App* sub) {
  auto dump = [](const CLI::App* a) {
    for (const CLI::Option* o : a->get_options()) {
      const std::string k = long_name(o);
      if (k.empty() || k == "help" || k == "config" || k == "show-config") continue;
      std::cout << k << " = " << option_value(o) << '\n';
    }
  };
  dump(&app);
  if (sub) {
    std::cout << "# " << sub->get_name() << '\n';
    dump(sub);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-parameter Wright functions and harmonic convolution criteria"};
  app.option_defaults()->always_capture_default()->multi_option_policy(
      CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--ctrl-max-terms", g.max_terms, "series term limit");
  app.add_option("--ctrl-tol", g.tail_tol, "absolute tail tolerance");
  app.add_option("--config", g.config, "key = value configuration file");
  app.add_option("--seed", g.seed, "random seed");
  app.add_flag("--show-config", g.show_config, "print the effective configuration and exit");

  std::string p = "1,1,1,1", z = "0,0";
  auto* eval = app.add_subcommand("eval", "evaluate the Wright function and its normalized form");
  eval->add_option("--p", p, "alpha,beta,gamma,delta");
  eval->add_option("--z", z, "argument re,im");

  auto* derivs = app.add_subcommand("derivs", "W(1), W'(1), W''(1), W'''(1) of the normalized form");
  derivs->add_option("--p", p, "alpha,beta,gamma,delta");

  std::string theorem, gate = "derived";
  MappingArgs m;
  auto* check = app.add_subcommand("check", "evaluate a theorem hypothesis");
  check->add_option("theorem,--theorem", theorem, "T3.1 ... T5.4, C1, R1")->required();
  add_mapping_options(check, m);
  check->add_option("--gate", gate, "derived|stated");

  std::vector<std::string> axes;
  std::string out;
  auto* scan = app.add_subcommand("scan", "grid-scan a theorem hypothesis to CSV");
  scan->add_option("theorem,--theorem", theorem, "theorem id")->required();
  add_mapping_options(scan, m);
  scan->add_option("--axis", axes, "name:start:stop:step (repeatable)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  scan->add_option("--out", out, "CSV path ('-' for stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check hypothesis => oracle on sample mappings");
  verify->add_option("theorem,--theorem", theorem, "theorem id")->required();
  add_mapping_options(verify, m);
  verify->add_option("--source", va.source, "auto|unit|kh0|ch0|ch|identity|file");
  verify->add_option("--coeffs", va.coeffs, "coefficient CSV for --source file");
  verify->add_option("--count", va.count, "random mappings to draw");
  verify->add_option("--n-max", va.n_max, "truncation degree of random mappings");
  verify->add_option("--radii", va.radii, "oracle radii");
  verify->add_option("--angles", va.angles, "oracle angles per radius");
  verify->add_option("--gate", va.gate, "derived|stated");

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "write image curves of L(f) as SVG");
  add_mapping_options(render, m);
  render->add_option("--coeffs", ra.coeffs, "coefficient CSV of f (identity if omitted)");
  render->add_flag("--raw", ra.raw, "treat --coeffs as the image coefficients");
  render->add_option("--radii", ra.radii, "circle radii");
  render->add_option("--angles", ra.angles, "samples per circle");
  render->add_option("--width", ra.width, "SVG width in pixels");
  render->add_option("--height", ra.height, "SVG height in pixels");
  render->add_option("--out", ra.out, "output SVG path");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (g.show_config) {
      const auto subs = app.get_subcommands();
      print_config(app, subs.empty() ? nullptr : subs.front());
      return kPass;
    }
    if (eval->parsed()) return cmd_eval(g, p, z);
    if (derivs->parsed()) return cmd_derivs(g, p);
    if (check->parsed()) return cmd_check(g, theorem, m, gate);
    if (scan->parsed()) return cmd_scan(g, theorem, m, axes, out);
    if (verify->parsed()) return cmd_verify(g, theorem, m, va);
    if (render->parsed()) return cmd_render(m, ra);
    return kSpecError;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kSpecError;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSpecError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSpecError;
  }
}
