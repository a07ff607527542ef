#include "aclab/frames.hpp"

#include <algorithm>

namespace aclab {

namespace {

Rational pair_value(const Vec<Rational>& x, const Vec<Rational>& y, const Mat<Rational>& omega) {
  Rational out(0);
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(omega[i][j]) && !is_zero(y[j])) out += x[i] * omega[i][j] * y[j];
  }
  return out;
}

void require_skew(const Mat<Rational>& omega) {
  const std::size_t n = omega.size();
  for (const auto& row : omega)
    if (row.size() != n) throw FrameError("pairing matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (omega[i][j] != -omega[j][i]) throw FrameError("pairing matrix is not skew-symmetric");
}

}  // namespace

Mat<Rational> pairing_matrix(const Mat<Rational>& vectors, const Mat<Rational>& omega) {
  const std::size_t m = vectors.size();
  Mat<Rational> out(m, Vec<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[i][j] = pair_value(vectors[i], vectors[j], omega);
  return out;
}

FrameSet symplectic_gram_schmidt(Mat<Rational> vectors, const Mat<Rational>& omega) {
  require_skew(omega);
  const int dim = static_cast<int>(omega.size());
  if (dim == 0 || dim % 2 != 0) throw FrameError("ambient dimension must be even and positive");
  if (is_zero(determinant(omega))) throw FrameError("pairing matrix is degenerate");
  if (static_cast<int>(vectors.size()) != dim || rank_of(vectors, dim) != dim)
    throw FrameError("input vectors do not form a basis");

  std::vector<Vec<Rational>> pool(vectors.begin(), vectors.end());
  std::vector<Vec<Rational>> v_half, w_half;
  while (!pool.empty()) {
    Vec<Rational> u = std::move(pool.front());
    pool.erase(pool.begin());
    std::size_t partner = pool.size();
    for (std::size_t t = 0; t < pool.size(); ++t) {
      if (!is_zero(pair_value(u, pool[t], omega))) {
        partner = t;
        break;
      }
    }
    if (partner == pool.size())
      throw FrameError("pairing degenerate on the remaining span");  // unreachable for valid input
    Vec<Rational> w = std::move(pool[partner]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    const Rational scale = pair_value(u, w, omega);
    for (auto& x : w) x /= scale;
    for (auto& x : pool) {
      const Rational a = pair_value(u, x, omega);
      const Rational b = pair_value(w, x, omega);
      // x := x - a w + b u kills both pairings against the new plane.
      for (std::size_t c = 0; c < x.size(); ++c) x[c] += b * u[c] - a * w[c];
    }
    v_half.push_back(std::move(u));
    w_half.push_back(std::move(w));
  }

  FrameSet out;
  out.dim = dim;
  out.vectors.reserve(static_cast<std::size_t>(dim));
  for (auto& v : v_half) out.vectors.push_back(std::move(v));
  for (auto& w : w_half) out.vectors.push_back(std::move(w));
  out.pairing = pairing_matrix(out.vectors, omega);

  const int n = dim / 2;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Rational want(0);
      if (j == i + n) want = Rational(1);
      if (j == i - n) want = Rational(-1);
      if (out.pairing[i][j] != want)
        throw FrameError("constructed frame is not symplectic");  // guards the algorithm itself
    }
  return out;
}

AntiInvariantPair anti_invariant_pair_from_frame(const FrameSet& frame) {
  const int dim = frame.dim;
  const int n = dim / 2;
  if (n % 2 != 0)
    throw FrameError("anti-invariant construction needs n even: with n odd the built form "
                     "would satisfy J(omega) = -omega and omega^n != 0 simultaneously, "
                     "which is impossible");
  // Canonical action in frame coordinates: J V_{2i-1} = V_{2i}, J W_{2i-1} = -W_{2i}.
  Mat<Rational> k(static_cast<std::size_t>(dim), Vec<Rational>(dim, Rational(0)));
  for (int i = 0; i < n / 2; ++i) {
    const int a = 2 * i, b = 2 * i + 1;
    k[b][a] = Rational(1);    // J V_{a} = V_{b}
    k[a][b] = Rational(-1);   // J V_{b} = -V_{a}
    k[n + b][n + a] = Rational(-1);  // J W_{a} = -W_{b}
    k[n + a][n + b] = Rational(1);   // J W_{b} = W_{a}
  }
  Mat<Rational> f = transpose(frame.vectors, dim);  // columns = frame vectors
  auto f_inv = inverse(f);
  if (!f_inv) throw FrameError("frame vectors are not independent");
  Mat<Rational> j_ambient = mat_mul(mat_mul(f, k), *f_inv);
  AlmostComplexStructure structure = AlmostComplexStructure::from_matrix(std::move(j_ambient));

  // Dual frame covectors are the rows of F^{-1}; omega = sum_i V^i ∧ W^i.
  KForm omega(dim, 2);
  for (int i = 0; i < n; ++i) {
    KForm vi(dim, 1), wi(dim, 1);
    for (int c = 0; c < dim; ++c) {
      if (!is_zero((*f_inv)[i][c])) vi.add_term({c + 1}, (*f_inv)[i][c]);
      if (!is_zero((*f_inv)[n + i][c])) wi.add_term({c + 1}, (*f_inv)[n + i][c]);
    }
    omega += wedge(vi, wi);
  }

  KForm j_omega = act_on_form(structure, omega);
  if (!(j_omega == -omega))
    throw FrameError("constructed structure failed the anti-invariance identity");
  return AntiInvariantPair{std::move(structure), std::move(omega),
                           "construction: block-wise pairing of symplectic planes "
                           "(valid for n even)"};
}

Mat<Rational> skew_matrix_of(const KForm& omega) {
  if (omega.degree() != 2) throw DegreeError("coefficient matrix needs a 2-form");
  const int dim = omega.dim();
  Mat<Rational> m(static_cast<std::size_t>(dim), Vec<Rational>(dim, Rational(0)));
  for (const auto& [idx, c] : omega.terms()) {
    m[idx[0] - 1][idx[1] - 1] = c;
    m[idx[1] - 1][idx[0] - 1] = -c;
  }
  return m;
}

KForm form_from_skew_matrix(const Mat<Rational>& m) {
  const int dim = static_cast<int>(m.size());
  KForm out(dim, 2);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) out.add_term({i + 1, j + 1}, m[i][j]);
  return out;
}

ReverseDirectionReport verify_reverse_direction(const KForm& omega,
                                                const AlmostComplexStructure& J,
                                                const AlmostComplexStructure& K,
                                                const Vec<Rational>& v1) {
  if (omega.dim() != 4 || J.dim() != 4 || K.dim() != 4 || v1.size() != 4)
    throw FrameError("reverse-direction check is a 4-dimensional statement");
  if (!(act_on_form(J, omega) == -omega))
    throw FrameError("J is not anti-invariant for omega");
  bool v1_zero = true;
  for (const auto& x : v1)
    if (!is_zero(x)) {
      v1_zero = false;
      break;
    }
  if (v1_zero) throw FrameError("V1 must be nonzero");

  Mat<Rational> om = skew_matrix_of(omega);
  // Calibration: the symmetrized form g(X,Y) = omega(X,KY) must be positive
  // definite.
  Mat<Rational> g = mat_mul(om, K.matrix());
  Mat<Rational> gs(4, Vec<Rational>(4, Rational(0)));
  const Rational half = rat(1, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gs[i][j] = (g[i][j] + g[j][i]) * half;
  for (int k = 1; k <= 4; ++k) {
    Mat<Rational> minor(static_cast<std::size_t>(k), Vec<Rational>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = gs[i][j];
    if (sgn(determinant(std::move(minor))) <= 0)
      throw FrameError("K is not calibrated by omega");
  }

  auto j_of = [&](const Vec<Rational>& v) { return mat_vec(J.matrix(), v); };
  Vec<Rational> jv1 = j_of(v1);
  Vec<Rational> kv1 = mat_vec(K.matrix(), v1);
  Vec<Rational> jkv1 = j_of(kv1);

  ReverseDirectionReport rep;
  rep.omega_v1_jv1 = pair_value(v1, jv1, om);
  rep.omega_kv1_jkv1 = pair_value(kv1, jkv1, om);
  rep.omega_v1_kv1 = pair_value(v1, kv1, om);
  rep.omega_jv1_jkv1 = pair_value(jv1, jkv1, om);
  rep.first_vanishes = is_zero(rep.omega_v1_jv1);
  rep.second_vanishes = is_zero(rep.omega_kv1_jkv1);
  rep.third_positive = sgn(rep.omega_v1_kv1) > 0;
  rep.fourth_negative = sgn(rep.omega_jv1_jkv1) < 0;
  Mat<Rational> four{v1, jv1, kv1, jkv1};
  rep.independent = rank_of(four, 4) == 4;
  if (!rep.first_vanishes) rep.failures.push_back("omega(V1, JV1) = 0");
  if (!rep.second_vanishes) rep.failures.push_back("omega(KV1, JKV1) = 0");
  if (!rep.third_positive) rep.failures.push_back("omega(V1, KV1) > 0");
  if (!rep.fourth_negative) rep.failures.push_back("omega(JV1, JKV1) < 0");
  if (!rep.independent) rep.failures.push_back("{V1, JV1, KV1, JKV1} independent");
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace aclab
