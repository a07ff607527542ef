#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aclab/exterior.hpp"
#include "aclab/linalg.hpp"

namespace aclab {

/// Lie algebra presented by its Maurer-Cartan structure equations: entry i of
/// d_of_basis is de^i as a 2-form. Construction validates d∘d = 0 on every
/// basis 1-form, so a value of this type always satisfies the Jacobi identity.
class LieAlgebraSpec {
 public:
  /// Throws JacobiError (first offending index, residual 3-form) or
  /// DimensionMismatch / DegreeError on malformed input.
  static LieAlgebraSpec validate(std::vector<KForm> d_of_basis);

  /// Salamon-style compact notation, e.g. "0,0,12,13,14,23" for the algebra
  /// with de^3 = e^12 and so on. Entries are signed multi-term sums of
  /// juxtaposed digit pairs ("12-2*34") or "{i,j}" pairs above dimension 9.
  static LieAlgebraSpec parse_salamon(std::string_view text);

  int dim() const { return dim_; }
  const std::vector<KForm>& d_of_basis() const { return d_of_basis_; }
  const KForm& d_of(int i) const { return d_of_basis_.at(static_cast<std::size_t>(i - 1)); }
  bool is_abelian() const;

  /// Structure constants in the Salamon notation this parser accepts.
  std::string salamon_string() const;

  bool operator==(const LieAlgebraSpec& o) const = default;

 private:
  LieAlgebraSpec(int dim, std::vector<KForm> d) : dim_(dim), d_of_basis_(std::move(d)) {}

  int dim_;
  std::vector<KForm> d_of_basis_;
};

/// Chevalley-Eilenberg differential, extended from the structure equations by
/// the graded Leibniz rule. Linear, squares to zero.
KForm ce_differential(const LieAlgebraSpec& g, const KForm& a);
ComplexKForm ce_differential(const LieAlgebraSpec& g, const ComplexKForm& a);

/// [e_i, e_j] read off the structure constants: de^k(e_i,e_j) = -e^k([e_i,e_j]).
Vec<Rational> bracket(const LieAlgebraSpec& g, int i, int j);

}  // namespace aclab
