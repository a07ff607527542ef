#pragma once

// Brute-force reference implementations used only by the test suites. This
// code deliberately shares no algorithms with the library: forms are plain
// ordered maps, signs come from bubble sorting, ranks from textbook
// Gauss-Jordan over rationals with immediate division. Slow and simple, so
// the fast engine can be checked against it.

#include <map>
#include <vector>

#include "aclab/rational.hpp"

namespace oracle {

using aclab::Rational;
using Index = std::vector<int>;
using Form = std::map<Index, Rational>;  // sorted index tuple -> coefficient
using Matrix = std::vector<std::vector<Rational>>;

void add_term(Form& f, Index idx, Rational c);
Form wedge(const Form& a, const Form& b);
Form scale(Form f, const Rational& c);
Form add(Form a, const Form& b);
bool is_zero_form(const Form& f);

std::vector<Index> combinations(int dim, int k);
std::vector<Rational> coords(const Form& f, const std::vector<Index>& basis);

/// Structure data: entry i is de^{i+1}.
using Structure = std::vector<Form>;
Form d(const Structure& s, const Form& f);

int naive_rank(Matrix m);
std::vector<std::vector<Rational>> naive_nullspace(Matrix m);

/// Betti number of degree k by dense kernel/image ranks.
int betti(const Structure& s, int dim, int k);

/// Dual action of the matrix J on a 2-form: (J a)(X,Y) = a(JX, JY).
Form act2(const Matrix& jmat, const Form& a, int dim);

struct PurityDims {
  int betti2 = 0;
  int dim_z_plus = 0, dim_z_minus = 0;
  int dim_h_plus = 0, dim_h_minus = 0;
  int dim_sum = 0, dim_intersection = 0;
  bool pure = false, full = false;
};

/// All the degree-2 invariants of (g, J) by brute-force rank computations.
PurityDims purity_dims(const Structure& s, int dim, const Matrix& jmat);

}  // namespace oracle
