#include "aclab/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "aclab/errors.hpp"

namespace aclab {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  bool seen_digit = false;
  bool seen_slash = false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit && i + 1 < text.size()) {
      seen_slash = true;
    } else {
      throw ParseError("bad rational literal '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw ParseError("bad rational literal '" + std::string(text) + "'");
  Rational q{std::string(text)};
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational norm = o.re * o.re + o.im * o.im;
  if (is_zero(norm)) throw std::invalid_argument("division by zero Gaussian rational");
  Rational r = (re * o.re + im * o.im) / norm;
  Rational i = (im * o.re - re * o.im) / norm;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

std::string to_string(const GaussianRational& z) {
  if (is_zero(z.im)) return to_string(z.re);
  std::string im_part;
  if (z.im == 1) {
    im_part = "i";
  } else if (z.im == -1) {
    im_part = "-i";
  } else {
    im_part = to_string(z.im) + "*i";
  }
  if (is_zero(z.re)) return im_part;
  std::string out = "(" + to_string(z.re);
  if (sgn(z.im) > 0) out += "+";
  out += im_part + ")";
  return out;
}

}  // namespace aclab
