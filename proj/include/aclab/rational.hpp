#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace aclab {

/// Exact rational scalar. GMP keeps values in lowest terms with positive
/// denominator as long as they are built through rat()/parse_rational() and
/// field arithmetic, which is the only way this codebase constructs them.
using Rational = mpq_class;

/// Canonical rational from a numerator/denominator pair. Throws
/// std::invalid_argument on a zero denominator.
Rational rat(long num, long den = 1);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// "p/q" with q > 1, plain "p" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p" and "p/q" with optional leading sign; normalizes to lowest
/// terms. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Element of Q(i): re + im*i.
struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  GaussianRational() = default;
  GaussianRational(Rational real, Rational imag = Rational(0))
      : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(long real) : re(real) {}

  bool operator==(const GaussianRational&) const = default;

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }
inline bool is_zero(const GaussianRational& z) { return is_zero(z.re) && is_zero(z.im); }

GaussianRational imaginary_unit();

/// "2", "i", "-3/2*i", "(1+2*i)", "(1/2-i)".
std::string to_string(const GaussianRational& z);

}  // namespace aclab
