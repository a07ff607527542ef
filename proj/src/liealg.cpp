#include "aclab/liealg.hpp"

#include <cctype>

#include "aclab/linalg.hpp"

namespace aclab {

namespace {

template <typename S>
BasicKForm<S> differential_impl(const std::vector<KForm>& d_of_basis, const BasicKForm<S>& a) {
  const int dim = static_cast<int>(d_of_basis.size());
  if (a.dim() != dim) throw DimensionMismatch("form dimension differs from algebra dimension");
  BasicKForm<S> out(dim, a.degree() + 1);
  MultiIndex merged;
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const KForm& de = d_of_basis[static_cast<std::size_t>(idx[pos] - 1)];
      if (de.is_zero()) continue;
      MultiIndex rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t t = 0; t < idx.size(); ++t)
        if (t != pos) rest.push_back(idx[t]);
      const bool negate = (pos % 2) == 1;
      // d(e^{i_1..i_k}) = sum_j (-1)^{j-1} de^{i_j} ^ e^{rest_j}; the 2-form
      // de^{i_j} commutes past the prefix.
      for (const auto& [didx, dc] : de.terms()) {
        int sign = merge_sign(didx, rest, merged);
        if (sign == 0) continue;
        S coeff = c * S(dc);
        if ((sign < 0) != negate) coeff = -coeff;
        out.add_term(merged, std::move(coeff));
      }
    }
  }
  return out;
}

class SalamonParser {
 public:
  explicit SalamonParser(std::string_view text) : text_(text) {}

  std::vector<KForm> parse() {
    std::vector<std::string_view> entries = split_entries();
    const int dim = static_cast<int>(entries.size());
    if (dim == 0) throw ParseError("empty structure-constant string");
    std::vector<KForm> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(parse_entry(e, dim));
    return out;
  }

 private:
  std::vector<std::string_view> split_entries() const {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= text_.size(); ++i) {
      if (i == text_.size() || (text_[i] == ',' && depth == 0)) {
        out.push_back(text_.substr(start, i - start));
        start = i + 1;
      } else if (text_[i] == '{') {
        ++depth;
      } else if (text_[i] == '}') {
        --depth;
      }
    }
    return out;
  }

  static KForm parse_entry(std::string_view e, int dim) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < e.size() && std::isspace(static_cast<unsigned char>(e[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> void {
      throw ParseError(msg + " in structure entry '" + std::string(e) + "'", 1,
                       static_cast<int>(pos) + 1);
    };
    KForm out(dim, 2);
    skip_ws();
    if (pos >= e.size()) fail("empty structure entry");
    if (e[pos] == '0') {
      ++pos;
      skip_ws();
      if (pos != e.size()) fail("trailing text after '0'");
      return out;
    }
    auto parse_digits = [&]() -> Rational {
      std::size_t start = pos;
      while (pos < e.size() && std::isdigit(static_cast<unsigned char>(e[pos]))) ++pos;
      if (pos < e.size() && e[pos] == '/') {
        ++pos;
        while (pos < e.size() && std::isdigit(static_cast<unsigned char>(e[pos]))) ++pos;
      }
      return parse_rational(e.substr(start, pos - start));
    };
    auto parse_int = [&]() -> int {
      std::size_t start = pos;
      while (pos < e.size() && std::isdigit(static_cast<unsigned char>(e[pos]))) ++pos;
      if (start == pos) fail("expected index");
      return std::stoi(std::string(e.substr(start, pos - start)));
    };
    while (true) {
      bool negative = false;
      while (pos < e.size() && (e[pos] == '+' || e[pos] == '-')) {
        if (e[pos] == '-') negative = !negative;
        ++pos;
        skip_ws();
      }
      if (pos >= e.size()) fail("dangling sign");
      Rational coeff(1);
      MultiIndex idx;
      if (e[pos] == '{') {
        ++pos;
        skip_ws();
        idx.push_back(parse_int());
        skip_ws();
        if (pos >= e.size() || e[pos] != ',') fail("expected ','");
        ++pos;
        skip_ws();
        idx.push_back(parse_int());
        skip_ws();
        if (pos >= e.size() || e[pos] != '}') fail("expected '}'");
        ++pos;
      } else if (std::isdigit(static_cast<unsigned char>(e[pos]))) {
        std::size_t mark = pos;
        Rational lead = parse_digits();
        skip_ws();
        if (pos < e.size() && e[pos] == '*') {
          coeff = lead;
          ++pos;
          skip_ws();
          if (pos < e.size() && e[pos] == '{') {
            ++pos;
            skip_ws();
            idx.push_back(parse_int());
            skip_ws();
            if (pos >= e.size() || e[pos] != ',') fail("expected ','");
            ++pos;
            skip_ws();
            idx.push_back(parse_int());
            skip_ws();
            if (pos >= e.size() || e[pos] != '}') fail("expected '}'");
            ++pos;
          } else {
            if (dim > 9) fail("digit-pair indices need dimension <= 9; use {i,j}");
            if (pos + 1 >= e.size() || !std::isdigit(static_cast<unsigned char>(e[pos])) ||
                !std::isdigit(static_cast<unsigned char>(e[pos + 1])))
              fail("expected a digit pair");
            idx = {e[pos] - '0', e[pos + 1] - '0'};
            pos += 2;
          }
        } else {
          // No '*': the digits themselves are the index pair.
          if (dim > 9) fail("digit-pair indices need dimension <= 9; use {i,j}");
          if (pos - mark != 2) fail("expected exactly two juxtaposed digits");
          idx = {e[mark] - '0', e[mark + 1] - '0'};
        }
      } else {
        fail("expected structure term");
      }
      for (int i : idx)
        if (i < 1 || i > dim) fail("index out of range");
      if (idx[0] == idx[1]) fail("repeated index in structure term");
      if (negative) coeff = -coeff;
      out.add_term(std::move(idx), std::move(coeff));
      skip_ws();
      if (pos == e.size()) break;
      if (e[pos] != '+' && e[pos] != '-') fail("expected '+' or '-'");
    }
    return out;
  }

  std::string_view text_;
};

std::string entry_text(const KForm& de, int dim) {
  if (de.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : de.terms()) {
    const bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? "-" : "+";
    }
    if (a != 1) out += to_string(a) + "*";
    if (dim <= 9) {
      out += std::to_string(idx[0]) + std::to_string(idx[1]);
    } else {
      out += "{" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "}";
    }
  }
  return out;
}

}  // namespace

LieAlgebraSpec LieAlgebraSpec::validate(std::vector<KForm> d_of_basis) {
  const int dim = static_cast<int>(d_of_basis.size());
  if (dim == 0) throw DimensionMismatch("empty structure equation list");
  for (int i = 0; i < dim; ++i) {
    if (d_of_basis[i].dim() != dim)
      throw DimensionMismatch("de^" + std::to_string(i + 1) + " has wrong ambient dimension");
    if (d_of_basis[i].degree() != 2)
      throw DegreeError("de^" + std::to_string(i + 1) + " is not a 2-form");
  }
  for (int i = 0; i < dim; ++i) {
    KForm dd = differential_impl(d_of_basis, d_of_basis[i]);
    if (!dd.is_zero()) throw JacobiError(i + 1, to_string(dd));
  }
  return LieAlgebraSpec(dim, std::move(d_of_basis));
}

LieAlgebraSpec LieAlgebraSpec::parse_salamon(std::string_view text) {
  return validate(SalamonParser(text).parse());
}

bool LieAlgebraSpec::is_abelian() const {
  for (const auto& de : d_of_basis_)
    if (!de.is_zero()) return false;
  return true;
}

std::string LieAlgebraSpec::salamon_string() const {
  std::string out;
  for (int i = 0; i < dim_; ++i) {
    if (i) out += ",";
    out += entry_text(d_of_basis_[static_cast<std::size_t>(i)], dim_);
  }
  return out;
}

KForm ce_differential(const LieAlgebraSpec& g, const KForm& a) {
  return differential_impl(g.d_of_basis(), a);
}

ComplexKForm ce_differential(const LieAlgebraSpec& g, const ComplexKForm& a) {
  return differential_impl(g.d_of_basis(), a);
}

Vec<Rational> bracket(const LieAlgebraSpec& g, int i, int j) {
  Vec<Rational> out(static_cast<std::size_t>(g.dim()), Rational(0));
  if (i == j) return out;
  const bool flip = i > j;
  MultiIndex idx = flip ? MultiIndex{j, i} : MultiIndex{i, j};
  for (int k = 1; k <= g.dim(); ++k) {
    Rational c = g.d_of(k).coefficient(idx);
    if (is_zero(c)) continue;
    if (flip) c = -c;
    out[static_cast<std::size_t>(k - 1)] = -c;
  }
  return out;
}

}  // namespace aclab
