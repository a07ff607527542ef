#include "aclab/acs.hpp"

namespace aclab {

namespace {

bool square_is_minus_identity(const Mat<Rational>& m) {
  const int n = static_cast<int>(m.size());
  Mat<Rational> sq = mat_mul(m, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational want = (i == j) ? Rational(-1) : Rational(0);
      if (sq[i][j] != want) return false;
    }
  return true;
}

}  // namespace

AlmostComplexStructure AlmostComplexStructure::from_matrix(Mat<Rational> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0 || n % 2 != 0) throw NotAComplexStructure("matrix dimension must be even");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw NotAComplexStructure("matrix is not square");
  if (!square_is_minus_identity(m))
    throw NotAComplexStructure("matrix does not square to -Id");
  return AlmostComplexStructure(n, std::move(m));
}

AlmostComplexStructure AlmostComplexStructure::from_one_zero_forms(
    int dim, const std::vector<ComplexKForm>& psis) {
  const int n = dim / 2;
  if (dim <= 0 || dim % 2 != 0) throw NotACoframe("dimension must be even");
  if (static_cast<int>(psis.size()) != n)
    throw NotACoframe("expected dim/2 forms of degree 1");
  Mat<GaussianRational> stacked(2 * static_cast<std::size_t>(n),
                                Vec<GaussianRational>(dim, GaussianRational(Rational(0))));
  for (int j = 0; j < n; ++j) {
    const ComplexKForm& psi = psis[static_cast<std::size_t>(j)];
    if (psi.dim() != dim || psi.degree() != 1)
      throw NotACoframe("each defining form must be a 1-form on the model");
    for (const auto& [idx, c] : psi.terms()) {
      stacked[j][idx[0] - 1] = c;
      stacked[n + j][idx[0] - 1] = conj(c);
    }
  }
  // psi ∘ J = i psi and its conjugate stack to S J = D S with D = diag(i,-i).
  auto inv = inverse(stacked);
  if (!inv) throw NotACoframe("forms and conjugates do not span the complexified dual");
  Mat<GaussianRational> d(2 * static_cast<std::size_t>(n),
                          Vec<GaussianRational>(2 * n, GaussianRational(Rational(0))));
  for (int j = 0; j < n; ++j) {
    d[j][j] = imaginary_unit();
    d[n + j][n + j] = -imaginary_unit();
  }
  Mat<GaussianRational> jc = mat_mul(mat_mul(*inv, d), stacked);
  Mat<Rational> jr(static_cast<std::size_t>(dim), Vec<Rational>(dim, Rational(0)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (!is_zero(jc[i][j].im))
        throw NotACoframe("eigenvalue system produced a non-real structure");
      jr[i][j] = jc[i][j].re;
    }
  return from_matrix(std::move(jr));
}

std::vector<ComplexKForm> AlmostComplexStructure::one_zero_coframe() const {
  // +i eigenspace of the dual action: rows x with x (J - i Id) = 0, i.e.
  // kernel of (J^T - i Id) acting on column vectors.
  Mat<GaussianRational> m(static_cast<std::size_t>(dim_),
                          Vec<GaussianRational>(dim_, GaussianRational(Rational(0))));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      m[j][i] = GaussianRational(mat_[i][j]);
      if (i == j) m[j][i] -= imaginary_unit();
    }
  Mat<GaussianRational> basis = kernel_basis(m, dim_);
  std::vector<ComplexKForm> out;
  out.reserve(basis.size());
  for (const auto& row : basis) {
    ComplexKForm f(dim_, 1);
    for (int j = 0; j < dim_; ++j)
      if (!is_zero(row[j])) f.add_term({j + 1}, row[j]);
    out.push_back(std::move(f));
  }
  return out;
}

KForm act_on_form(const AlmostComplexStructure& J, const KForm& a) {
  if (a.dim() != J.dim()) throw DimensionMismatch("form and structure dimensions differ");
  const Mat<Rational>& m = J.matrix();
  KForm out(a.dim(), a.degree());
  for (const auto& [idx, c] : a.terms()) {
    KForm partial = KForm::scalar(a.dim(), c);
    for (int i : idx) {
      KForm dual_image(a.dim(), 1);
      for (int col = 0; col < J.dim(); ++col)
        if (!is_zero(m[i - 1][col])) dual_image.add_term({col + 1}, m[i - 1][col]);
      partial = wedge(partial, dual_image);
      if (partial.is_zero()) break;
    }
    out += partial;
  }
  return out;
}

std::pair<KForm, KForm> decompose_2form(const AlmostComplexStructure& J, const KForm& a) {
  if (a.degree() != 2) throw DegreeError("type decomposition is defined on 2-forms");
  KForm ja = act_on_form(J, a);
  const Rational half = rat(1, 2);
  KForm plus = (a + ja) * half;
  KForm minus = (a - ja) * half;
  return {std::move(plus), std::move(minus)};
}

Mat<Rational> induced_2form_matrix(const AlmostComplexStructure& J) {
  const auto basis = multi_index_basis(J.dim(), 2);
  Mat<Rational> m(basis.size(), Vec<Rational>(basis.size(), Rational(0)));
  std::map<MultiIndex, std::size_t> pos;
  for (std::size_t r = 0; r < basis.size(); ++r) pos[basis[r]] = r;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    KForm image = act_on_form(J, KForm::basis(J.dim(), basis[j]));
    for (const auto& [idx, c] : image.terms()) m[pos.at(idx)][j] = c;
  }
  return m;
}

std::vector<KForm> lambda_eigenspace_basis(const AlmostComplexStructure& J, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const auto basis = multi_index_basis(J.dim(), 2);
  Mat<Rational> m = induced_2form_matrix(J);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= Rational(sign);
  Mat<Rational> null = kernel_basis(m, static_cast<int>(basis.size()));
  std::vector<KForm> out;
  out.reserve(null.size());
  for (const auto& row : null) out.push_back(form_from_row(row, basis, J.dim(), 2));
  return out;
}

bool NijenhuisTable::is_zero() const {
  for (const auto& row : entry)
    for (const auto& v : row)
      for (const auto& x : v)
        if (!aclab::is_zero(x)) return false;
  return true;
}

NijenhuisTable nijenhuis(const LieAlgebraSpec& g, const AlmostComplexStructure& J) {
  if (g.dim() != J.dim()) throw DimensionMismatch("algebra and structure dimensions differ");
  const int n = g.dim();
  auto bracket_vectors = [&](const Vec<Rational>& u, const Vec<Rational>& v) {
    Vec<Rational> out(static_cast<std::size_t>(n), Rational(0));
    for (int a = 0; a < n; ++a) {
      if (is_zero(u[a])) continue;
      for (int b = 0; b < n; ++b) {
        if (is_zero(v[b])) continue;
        Vec<Rational> br = bracket(g, a + 1, b + 1);
        for (int k = 0; k < n; ++k) out[k] += u[a] * v[b] * br[k];
      }
    }
    return out;
  };
  auto j_of = [&](const Vec<Rational>& v) { return mat_vec(J.matrix(), v); };
  NijenhuisTable table;
  table.dim = n;
  table.entry.assign(n, std::vector<Vec<Rational>>(n, Vec<Rational>(n, Rational(0))));
  for (int i = 0; i < n; ++i) {
    Vec<Rational> ei(static_cast<std::size_t>(n), Rational(0));
    ei[i] = Rational(1);
    for (int j = i + 1; j < n; ++j) {
      Vec<Rational> ej(static_cast<std::size_t>(n), Rational(0));
      ej[j] = Rational(1);
      Vec<Rational> jei = j_of(ei), jej = j_of(ej);
      Vec<Rational> val = bracket_vectors(jei, jej);
      Vec<Rational> t2 = j_of(bracket_vectors(jei, ej));
      Vec<Rational> t3 = j_of(bracket_vectors(ei, jej));
      Vec<Rational> t4 = bracket_vectors(ei, ej);
      for (int k = 0; k < n; ++k) {
        val[k] -= t2[k] + t3[k] + t4[k];
        table.entry[i][j][k] = val[k];
        table.entry[j][i][k] = -val[k];
      }
    }
  }
  return table;
}

MetricSpec MetricSpec::validate(Mat<Rational> g) {
  if (g.size() != 4) throw MetricError("metric must be 4x4");
  for (const auto& row : g)
    if (row.size() != 4) throw MetricError("metric must be 4x4");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g[i][j] != g[j][i]) throw MetricError("metric is not symmetric");
  for (int k = 1; k <= 4; ++k) {
    Mat<Rational> minor(static_cast<std::size_t>(k), Vec<Rational>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = g[i][j];
    if (sgn(determinant(std::move(minor))) <= 0)
      throw MetricError("metric is not positive definite (leading minor " + std::to_string(k) +
                        " is not positive)");
  }
  return MetricSpec(std::move(g));
}

bool MetricSpec::compatible_with(const AlmostComplexStructure& J) const {
  if (J.dim() != 4) return false;
  Mat<Rational> jt = transpose(J.matrix(), 4);
  Mat<Rational> pulled = mat_mul(mat_mul(jt, g_), J.matrix());
  return pulled == g_;
}

KForm fundamental_2form(const MetricSpec& g, const AlmostComplexStructure& J) {
  if (J.dim() != 4) throw DimensionMismatch("fundamental form needs a 4-dimensional structure");
  if (!g.compatible_with(J)) throw MetricError("metric is not compatible with the structure");
  Mat<Rational> omega = mat_mul(transpose(J.matrix(), 4), g.matrix());
  KForm out(4, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) out.add_term({i + 1, j + 1}, omega[i][j]);
  return out;
}

namespace {

// Rational square root of a positive rational, if it exists.
std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2) == 0) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

int wedge_pairing_sign(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex merged;
  return merge_sign(a, b, merged);
}

}  // namespace

Mat<Rational> hodge_star_2_matrix(const MetricSpec& g) {
  const auto basis = multi_index_basis(4, 2);  // 6 indices
  const int m = static_cast<int>(basis.size());
  auto ginv_opt = inverse(g.matrix());
  const Mat<Rational>& ginv = *ginv_opt;  // SPD, always invertible
  Rational det = determinant(g.matrix());
  auto vol = rational_sqrt(det);
  if (!vol)
    throw MetricError("volume normalization sqrt(det g) is irrational for this metric");
  // Gram matrix of Λ^2 and the wedge pairing into e^{1234}.
  Mat<Rational> gram(m, Vec<Rational>(m, Rational(0)));
  Mat<Rational> pairing(m, Vec<Rational>(m, Rational(0)));
  for (int r = 0; r < m; ++r) {
    const auto& [i, j] = std::pair(basis[r][0], basis[r][1]);
    for (int c = 0; c < m; ++c) {
      const auto& [k, l] = std::pair(basis[c][0], basis[c][1]);
      gram[r][c] = ginv[i - 1][k - 1] * ginv[j - 1][l - 1] - ginv[i - 1][l - 1] * ginv[j - 1][k - 1];
      pairing[r][c] = Rational(wedge_pairing_sign(basis[r], basis[c]));
    }
  }
  auto pairing_inv = inverse(pairing);
  Mat<Rational> star = mat_mul(*pairing_inv, gram);
  for (auto& row : star)
    for (auto& x : row) x *= *vol;
  return star;
}

KForm hodge_star_2(const MetricSpec& g, const KForm& a) {
  if (a.dim() != 4 || a.degree() != 2)
    throw DimensionMismatch("star is implemented on 2-forms in dimension 4");
  const auto basis = multi_index_basis(4, 2);
  Mat<Rational> star = hodge_star_2_matrix(g);
  Vec<Rational> x = coordinate_row(a, basis);
  Vec<Rational> y = mat_vec(star, x);
  return form_from_row(y, basis, 4, 2);
}

}  // namespace aclab
