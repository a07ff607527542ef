#include "aclab/exterior.hpp"

#include <cctype>
#include <sstream>

namespace aclab {

ComplexKForm complexify(const KForm& a) {
  ComplexKForm out(a.dim(), a.degree());
  for (const auto& [idx, c] : a.terms()) out.add_term(idx, GaussianRational(c));
  return out;
}

ComplexKForm conjugate(const ComplexKForm& a) {
  ComplexKForm out(a.dim(), a.degree());
  for (const auto& [idx, c] : a.terms()) out.add_term(idx, conj(c));
  return out;
}

std::pair<KForm, KForm> realify(const ComplexKForm& c) {
  KForm re(c.dim(), c.degree());
  KForm im(c.dim(), c.degree());
  for (const auto& [idx, z] : c.terms()) {
    re.add_term(idx, z.re);
    im.add_term(idx, z.im);
  }
  return {std::move(re), std::move(im)};
}

namespace {

std::string index_text(const MultiIndex& idx, int dim) {
  std::string out = "e";
  if (dim <= 9) {
    for (int i : idx) out += std::to_string(i);
  } else {
    out += '{';
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(idx[k]);
    }
    out += '}';
  }
  return out;
}

// (negative?, printable absolute value, needs '*' before a basis factor)
struct CoeffText {
  bool negative = false;
  std::string text;
  bool unit = false;
};

CoeffText coeff_text(const Rational& c) {
  CoeffText out;
  out.negative = sgn(c) < 0;
  Rational a = abs(c);
  out.unit = (a == 1);
  out.text = to_string(a);
  return out;
}

CoeffText coeff_text(const GaussianRational& z) {
  CoeffText out;
  if (is_zero(z.im)) return coeff_text(z.re);
  if (is_zero(z.re)) {
    out.negative = sgn(z.im) < 0;
    Rational a = abs(z.im);
    out.text = (a == 1) ? "i" : to_string(a) + "*i";
    return out;
  }
  out.text = to_string(z);  // "(a+b*i)"
  return out;
}

template <typename S>
std::string form_text(const BasicKForm<S>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : f.terms()) {
    CoeffText ct = coeff_text(c);
    if (first) {
      if (ct.negative) out += "-";
      first = false;
    } else {
      out += ct.negative ? " - " : " + ";
    }
    if (idx.empty()) {
      out += ct.text;
    } else if (ct.unit) {
      out += index_text(idx, f.dim());
    } else {
      out += ct.text + "*" + index_text(idx, f.dim());
    }
  }
  return out;
}

class FormParser {
 public:
  FormParser(std::string_view text, int dim) : text_(text), dim_(dim) {}

  ComplexKForm parse() {
    skip_ws();
    std::vector<std::pair<MultiIndex, GaussianRational>> terms;
    bool negative = consume_sign();
    terms.push_back(parse_term(negative));
    skip_ws();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      terms.push_back(parse_term(c == '-'));
      skip_ws();
    }
    int degree = static_cast<int>(terms.front().first.size());
    ComplexKForm out(dim_, degree);
    for (auto& [idx, c] : terms) {
      if (static_cast<int>(idx.size()) != degree) fail("terms of different degree in one form");
      if (!is_zero(c)) out.add_term(std::move(idx), std::move(c));
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in form '" + std::string(text_) + "'", 1, static_cast<int>(pos_) + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool consume_sign() {
    bool negative = false;
    while (!at_end() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') negative = !negative;
      ++pos_;
      skip_ws();
    }
    return negative;
  }

  std::pair<MultiIndex, GaussianRational> parse_term(bool negative) {
    GaussianRational coeff(Rational(1));
    if (negative) coeff = -coeff;
    MultiIndex idx;
    bool have_basis = false;
    bool expect_factor = true;
    while (expect_factor) {
      parse_factor(coeff, idx, have_basis);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (have_basis) fail("basis factor must come last in a term");
      } else {
        expect_factor = false;
      }
    }
    return {std::move(idx), std::move(coeff)};
  }

  void parse_factor(GaussianRational& coeff, MultiIndex& idx, bool& have_basis) {
    if (at_end()) fail("missing factor");
    char c = peek();
    if (c == 'e') {
      if (have_basis) fail("two basis factors in one term");
      idx = parse_basis();
      have_basis = true;
    } else if (c == 'i') {
      ++pos_;
      coeff *= imaginary_unit();
    } else if (c == '(') {
      ++pos_;
      coeff *= parse_scalar_expr();
      skip_ws();
      if (at_end() || peek() != ')') fail("missing ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= GaussianRational(parse_rational_lit());
    } else {
      fail("unexpected character");
    }
  }

  GaussianRational parse_scalar_expr() {
    GaussianRational total(Rational(0));
    while (true) {
      skip_ws();
      bool negative = consume_sign();
      GaussianRational term(Rational(1));
      if (negative) term = -term;
      bool expect_factor = true;
      while (expect_factor) {
        if (at_end()) fail("unterminated scalar expression");
        char c = peek();
        if (c == 'i') {
          ++pos_;
          term *= imaginary_unit();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          term *= GaussianRational(parse_rational_lit());
        } else {
          fail("expected scalar factor");
        }
        skip_ws();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_ws();
        } else {
          expect_factor = false;
        }
      }
      total += term;
      skip_ws();
      if (at_end() || (peek() != '+' && peek() != '-')) return total;
    }
  }

  Rational parse_rational_lit() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t den_start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den_start == pos_) fail("expected denominator digits");
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  MultiIndex parse_basis() {
    ++pos_;  // consume 'e'
    MultiIndex idx;
    if (!at_end() && peek() == '{') {
      ++pos_;
      while (true) {
        skip_ws();
        idx.push_back(parse_int());
        skip_ws();
        if (at_end()) fail("unterminated index list");
        if (peek() == ',') {
          ++pos_;
        } else if (peek() == '}') {
          ++pos_;
          break;
        } else {
          fail("expected ',' or '}'");
        }
      }
    } else {
      if (dim_ > 9) fail("digit-string indices need dimension <= 9; use e{..}");
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        idx.push_back(peek() - '0');
        ++pos_;
      }
      if (idx.empty()) fail("expected basis indices after 'e'");
    }
    for (int i : idx)
      if (i < 1 || i > dim_) fail("basis index out of range");
    return idx;
  }

  int parse_int() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected index");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const KForm& f) { return form_text(f); }
std::string to_string(const ComplexKForm& f) { return form_text(f); }

ComplexKForm parse_complex_form(std::string_view text, int dim) {
  return FormParser(text, dim).parse();
}

KForm parse_form(std::string_view text, int dim) {
  ComplexKForm c = FormParser(text, dim).parse();
  auto [re, im] = realify(c);
  if (!im.is_zero())
    throw ParseError("complex coefficient in real form '" + std::string(text) + "'");
  return re;
}

}  // namespace aclab
