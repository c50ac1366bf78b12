#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kmat {

// Exact scalars. All symbolic-side arithmetic is done on these; doubles
// appear only in the numeric oracle and in emitted float columns.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical "p/q" form, q >= 1, lowest terms.
inline std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "p", "p/q", and plain decimals like "-0.37".
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rat r(s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rat r(s);
    r.canonicalize();
    return r;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  Rat num(digits);
  Rat den(1);
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  Rat r = num / den;
  r.canonicalize();
  return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }

// Nearest rational with denominator <= max_den (continued fractions).
// Returns nullopt if the reconstruction misses x by more than tol.
inline std::optional<Rat> rationalize(double x, long max_den = 10000,
                                      double tol = 1e-6) {
  double v = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(v);
    if (fl > 1e17 || fl < -1e17) break;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = v - static_cast<double>(a);
    if (rem < 1e-13) break;
    v = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  Rat r(p1, q1);
  r.canonicalize();
  if (std::abs(to_double(r) - x) > tol) return std::nullopt;
  return r;
}

// Rapidity value theta = re + i*pi*im_pi, kept exact so that pole
// positions (rational multiples of i*pi) can be represented precisely.
struct ComplexTheta {
  Rat re{0};
  Rat im_pi{0};

  std::complex<double> value() const {
    return {to_double(re), to_double(im_pi) * 3.14159265358979323846};
  }
  static ComplexTheta real(const Rat& r) { return {r, Rat(0)}; }
};

}  // namespace kmat
