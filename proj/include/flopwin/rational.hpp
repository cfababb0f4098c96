#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flopwin {

using Rational = mpq_class;
using Integer = mpz_class;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// num/den in canonical form (mpq_class(num, den) does not reduce).
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical "p/q" rendering; integers render without a denominator.
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Accepts "p", "p/q", or a finite decimal such as "-0.25".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string& v) {
    while (!v.empty() && (v.front() == ' ')) v.erase(v.begin());
    while (!v.empty() && (v.back() == ' ')) v.pop_back();
  };
  strip(s);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    bool neg = s[0] == '-';
    std::string digits = s.substr(neg ? 1 : 0);
    dot = digits.find('.');
    std::string whole = digits.substr(0, dot);
    std::string frac = digits.substr(dot + 1);
    if (whole.empty()) whole = "0";
    Integer num(whole + frac, 10);
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline Rational floor_div_frac(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

/// Representative of q modulo 1 in [0, 1).
inline Rational mod1(const Rational& q) { return Rational(q - floor_div_frac(q)); }

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
  return z.get_si();
}

using RVec = std::vector<Rational>;
using IVec = std::vector<long>;

inline long gcd_of(const IVec& v) {
  long g = 0;
  for (long x : v) {
    long a = x < 0 ? -x : x;
    while (a != 0) {
      long t = g % a;
      g = a;
      a = t;
    }
  }
  return g;
}

/// Scales a rational vector to the primitive integer vector on the same ray.
inline IVec primitive_integer(const RVec& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Rational s = x * l;
    out.push_back(to_long(s.get_num()));
  }
  long g = gcd_of(out);
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

inline RVec to_rvec(const IVec& v) {
  RVec out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace flopwin
