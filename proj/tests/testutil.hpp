#pragma once

#include <random>

#include "aclab/acs.hpp"
#include "aclab/exterior.hpp"
#include "aclab/liealg.hpp"
#include "aclab/linalg.hpp"

namespace aclab::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int lo = -3, int hi = 3, int den_max = 3) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, den_max);
  return rat(num(rng), den(rng));
}

inline KForm random_form(Rng& rng, int dim, int degree, int max_terms = 4) {
  auto basis = multi_index_basis(dim, degree);
  std::uniform_int_distribution<std::size_t> pick(0, basis.empty() ? 0 : basis.size() - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  KForm f(dim, degree);
  if (basis.empty()) return f;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) f.add_term(basis[pick(rng)], random_rational(rng));
  return f;
}

inline Mat<Rational> random_matrix(Rng& rng, int rows, int cols) {
  Mat<Rational> m(static_cast<std::size_t>(rows), Vec<Rational>(cols));
  for (auto& row : m)
    for (auto& x : row) x = random_rational(rng);
  return m;
}

inline Mat<Rational> random_invertible(Rng& rng, int n) {
  while (true) {
    Mat<Rational> m = random_matrix(rng, n, n);
    if (!is_zero(determinant(m))) return m;
  }
}

/// J e_{2i-1} = e_{2i}, J e_{2i} = -e_{2i-1}.
inline AlmostComplexStructure standard_acs(int dim) {
  Mat<Rational> m(static_cast<std::size_t>(dim), Vec<Rational>(dim, Rational(0)));
  for (int i = 0; i < dim / 2; ++i) {
    m[2 * i + 1][2 * i] = Rational(1);
    m[2 * i][2 * i + 1] = Rational(-1);
  }
  return AlmostComplexStructure::from_matrix(std::move(m));
}

/// Conjugate of the standard structure by a random invertible matrix.
inline AlmostComplexStructure random_acs(Rng& rng, int dim) {
  Mat<Rational> p = random_invertible(rng, dim);
  Mat<Rational> j0 = standard_acs(dim).matrix();
  Mat<Rational> j = mat_mul(mat_mul(p, j0), *inverse(p));
  return AlmostComplexStructure::from_matrix(std::move(j));
}

/// Random (g, J) with g(J.,J.) = g and J inducing the standard orientation,
/// so the star built from g and the standard volume satisfies the self-dual
/// span identity. Returns the conjugating matrix's inverse too.
struct CompatiblePair {
  Mat<Rational> p;  // det > 0
  Mat<Rational> g;  // p^{-T} p^{-1}
  Mat<Rational> j;  // p j0 p^{-1}
};

inline CompatiblePair random_compatible_pair(Rng& rng) {
  Mat<Rational> p = random_invertible(rng, 4);
  if (sgn(determinant(p)) < 0)
    for (auto& row : p) std::swap(row[0], row[1]);  // p <- p * swap, det > 0
  Mat<Rational> pinv = *inverse(p);
  CompatiblePair out;
  out.p = p;
  out.g = mat_mul(transpose(pinv, 4), pinv);
  out.j = mat_mul(mat_mul(p, standard_acs(4).matrix()), pinv);
  return out;
}

inline LieAlgebraSpec torus_algebra(int dim) {
  std::vector<KForm> d(static_cast<std::size_t>(dim), KForm(dim, 2));
  return LieAlgebraSpec::validate(std::move(d));
}

inline LieAlgebraSpec example_nilmanifold() {
  return LieAlgebraSpec::parse_salamon("0,0,12,13,14,23");
}

inline LieAlgebraSpec su2xt3() { return LieAlgebraSpec::parse_salamon("23,-13,12,0,0,0"); }

inline std::vector<ComplexKForm> example_psis() {
  return {parse_complex_form("e1+i*e2", 6), parse_complex_form("e4+i*e6", 6),
          parse_complex_form("e3+i*e5", 6)};
}

inline std::vector<ComplexKForm> su2_psis() {
  return {parse_complex_form("e1+i*e4", 6), parse_complex_form("e2+i*e5", 6),
          parse_complex_form("e3+i*e6", 6)};
}

}  // namespace aclab::testing
