// Text formats: parameter/complex syntax, locale-free number output, the
// coefficient CSV, `key = value` config files and SVG boundary renderings.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "harmonic.hpp"
#include "special_fn.hpp"

namespace wrightharm::io {

/// Malformed text input (bad number, wrong field count, unknown key).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline double parse_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("not a number: '" + std::string(s) + "'");
  return v;
}

inline int parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("not an integer: '" + std::string(s) + "'");
  return v;
}

/// `alpha,beta,gamma,delta`; domain violations raise std::domain_error.
inline WrightParams parse_params(std::string_view s) {
  const auto f = split(s, ',');
  if (f.size() != 4) throw ParseError("Wright parameters must be alpha,beta,gamma,delta");
  return {parse_double(f[0]), parse_double(f[1]), parse_double(f[2]), parse_double(f[3])};
}

/// `re,im` or a bare real.
inline cplx parse_complex(std::string_view s) {
  const auto f = split(s, ',');
  if (f.size() == 1) return {parse_double(f[0]), 0.0};
  if (f.size() == 2) return {parse_double(f[0]), parse_double(f[1])};
  throw ParseError("complex values must be re,im");
}

inline std::vector<double> parse_real_list(std::string_view s) {
  std::vector<double> out;
  if (trim(s).empty()) return out;
  for (const auto& x : split(s, ',')) out.push_back(parse_double(x));
  return out;
}

/// Shortest round-trip decimal form (locale independent).
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

/// Fixed number of significant digits, scientific notation only when needed.
inline std::string format_sig(double v, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

inline std::string format_complex(cplx z, int digits) {
  return format_sig(z.real(), digits) + "," + format_sig(z.imag(), digits);
}

// ---------------------------------------------------------------------------
// Coefficient CSV:  part,n,re,im  with part A (n >= 2) or B (n >= 1).

inline std::string write_coefficients(const CoefficientSeq& f) {
  std::string out = "part,n,re,im\n";
  auto row = [&out](char part, int n, cplx v) {
    out += part;
    out += ',' + std::to_string(n) + ',' + format_sig(v.real(), 17) + ',' +
           format_sig(v.imag(), 17) + '\n';
  };
  for (std::size_t k = 0; k < f.a.size(); ++k) row('A', static_cast<int>(k) + 2, f.a[k]);
  for (std::size_t k = 0; k < f.b.size(); ++k) row('B', static_cast<int>(k) + 1, f.b[k]);
  return out;
}

inline CoefficientSeq read_coefficients(std::istream& in) {
  CoefficientSeq f;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (lineno == 1 && t == "part,n,re,im") continue;
    const auto fields = split(t, ',');
    if (fields.size() != 4 || (fields[0] != "A" && fields[0] != "B"))
      throw ParseError("coefficient line " + std::to_string(lineno) + ": expected A|B,n,re,im");
    const int n = parse_int(fields[1]);
    const cplx v(parse_double(fields[2]), parse_double(fields[3]));
    if (fields[0] == "A") {
      if (n < 2) throw ParseError("coefficient line " + std::to_string(lineno) + ": A needs n >= 2");
      f.set_A(n, v);
    } else {
      if (n < 1) throw ParseError("coefficient line " + std::to_string(lineno) + ": B needs n >= 1");
      f.set_B(n, v);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Config files: one `key = value` per line, `#` starts a comment.

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

inline ConfigEntries parse_config(std::istream& in) {
  ConfigEntries out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    const auto key = trim(t.substr(0, eq));
    if (key.empty()) throw ParseError("config line " + std::to_string(lineno) + ": empty key");
    out.emplace_back(std::string(key), std::string(trim(t.substr(eq + 1))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV rows

inline std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
  return out;
}

inline std::string csv_number(double v) { return format_sig(v, 17); }

// ---------------------------------------------------------------------------
// SVG rendering of the image curves {L(f)(r e^{i theta})}

/// Image of the circle |z| = r sampled at `count` equally spaced angles.
inline std::vector<cplx> boundary_curve(const ImageCoefficients& img, double r, int count) {
  std::vector<cplx> pts;
  pts.reserve(count);
  for (int k = 0; k < count; ++k)
    pts.push_back(eval_map_at(img, std::polar(r, 2.0 * std::numbers::pi * k / count)));
  return pts;
}

struct RenderSpec {
  std::vector<double> radii;
  int theta_count = 512;
  int width = 800;
  int height = 800;

  void validate() const {
    if (radii.empty()) throw std::domain_error("render needs at least one radius");
    for (double r : radii)
      if (!(r > 0.0 && r < 1.0)) throw std::domain_error("render radii must lie in (0, 1)");
    if (theta_count < 64) throw std::domain_error("render needs theta_count >= 64");
    if (width <= 0 || height <= 0) throw std::domain_error("render size must be positive");
  }
};

/// SVG 1.1 document: one closed polyline per radius plus coordinate axes.
/// Image coordinates are written unscaled with the y axis flipped.
inline std::string render_svg(const ImageCoefficients& img, const RenderSpec& spec) {
  spec.validate();
  std::vector<std::vector<cplx>> curves;
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (double r : spec.radii) {
    curves.push_back(boundary_curve(img, r, spec.theta_count));
    for (const cplx p : curves.back()) {
      xmin = std::min(xmin, p.real());
      xmax = std::max(xmax, p.real());
      ymin = std::min(ymin, -p.imag());
      ymax = std::max(ymax, -p.imag());
    }
  }
  const double extent = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double pad = 0.05 * extent;
  xmin -= pad, xmax += pad, ymin -= pad, ymax += pad;
  const std::string stroke = format_sig(extent / 400.0, 6);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width
     << "\" height=\"" << spec.height << "\" viewBox=\"" << format_sig(xmin, 17) << ' '
     << format_sig(ymin, 17) << ' ' << format_sig(xmax - xmin, 17) << ' '
     << format_sig(ymax - ymin, 17) << "\">\n";
  os << "<g stroke=\"#999999\" stroke-width=\"" << stroke << "\">\n"
     << "<line x1=\"" << format_sig(xmin, 17) << "\" y1=\"0\" x2=\"" << format_sig(xmax, 17)
     << "\" y2=\"0\"/>\n"
     << "<line x1=\"0\" y1=\"" << format_sig(ymin, 17) << "\" x2=\"0\" y2=\"" << format_sig(ymax, 17)
     << "\"/>\n</g>\n";
  for (std::size_t c = 0; c < curves.size(); ++c) {
    os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"" << stroke
       << "\" data-radius=\"" << format_sig(spec.radii[c], 17) << "\" points=\"";
    const auto& pts = curves[c];
    for (std::size_t k = 0; k <= pts.size(); ++k) {
      const cplx p = pts[k % pts.size()];
      if (k) os << ' ';
      os << format_sig(p.real(), 17) << ',' << format_sig(-p.imag(), 17);
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace wrightharm::io
