#pragma once

#include <optional>
#include <vector>

#include "aclab/rational.hpp"

namespace aclab {

template <typename S>
using Vec = std::vector<S>;
template <typename S>
using Mat = std::vector<Vec<S>>;  // row-major; possibly zero rows

/// Reduced row echelon form: pivot entries are 1, pivot columns are cleared,
/// pivots strictly increase, zero rows dropped. With lowest-index pivot
/// selection this is a canonical basis of the row space.
template <typename S>
struct Echelon {
  Mat<S> rows;
  std::vector<int> pivots;
  int cols = 0;
  int rank() const { return static_cast<int>(rows.size()); }
};

namespace detail {

inline void lcm_with_denominator(mpz_class& l, const Rational& x) {
  if (is_zero(x)) return;
  mpz_class d = x.get_den();
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
}

inline void clear_denominators_row(Vec<Rational>& row) {
  mpz_class l(1);
  for (const auto& x : row) lcm_with_denominator(l, x);
  if (l == 1) return;
  Rational f(l);
  for (auto& x : row) x *= f;
}

inline void clear_denominators_row(Vec<GaussianRational>& row) {
  mpz_class l(1);
  for (const auto& z : row) {
    lcm_with_denominator(l, z.re);
    lcm_with_denominator(l, z.im);
  }
  if (l == 1) return;
  GaussianRational f{Rational(l)};
  for (auto& z : row) z *= f;
}

}  // namespace detail

/// Fraction-free forward elimination (denominators cleared per row, then
/// Bareiss two-by-two determinant updates with exact division), followed by
/// pivot normalization and upward reduction. Pivot selection is always the
/// lowest column index, then the lowest row index.
template <typename S>
Echelon<S> rref(Mat<S> m, int cols) {
  for (auto& row : m) detail::clear_denominators_row(row);
  const int nrows = static_cast<int>(m.size());
  std::vector<int> pivots;
  S prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < nrows; ++c) {
    int pr = -1;
    for (int i = r; i < nrows; ++i) {
      if (!is_zero(m[i][c])) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    const S pivot = m[r][c];
    for (int i = r + 1; i < nrows; ++i) {
      for (int j = c + 1; j < cols; ++j) m[i][j] = (m[i][j] * pivot - m[i][c] * m[r][j]) / prev;
      m[i][c] = S(0);
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  // Normalize pivots to 1 and clear entries above them.
  for (int i = 0; i < r; ++i) {
    const S inv_pivot = S(1) / m[i][pivots[i]];
    for (int j = pivots[i]; j < cols; ++j) m[i][j] = m[i][j] * inv_pivot;
  }
  for (int i = r - 1; i >= 0; --i) {
    for (int k = 0; k < i; ++k) {
      const S f = m[k][pivots[i]];
      if (is_zero(f)) continue;
      for (int j = pivots[i]; j < cols; ++j) m[k][j] -= f * m[i][j];
    }
  }
  return Echelon<S>{std::move(m), std::move(pivots), cols};
}

template <typename S>
int rank_of(const Mat<S>& m, int cols) {
  return rref(m, cols).rank();
}

/// Remainder of v after eliminating every pivot coordinate of e. The result
/// is zero iff v lies in the row space.
template <typename S>
Vec<S> reduce_against(Vec<S> v, const Echelon<S>& e) {
  for (int i = 0; i < e.rank(); ++i) {
    const S f = v[e.pivots[i]];
    if (is_zero(f)) continue;
    for (int j = 0; j < e.cols; ++j) v[j] -= f * e.rows[i][j];
  }
  return v;
}

/// Coordinates of v in the echelon basis, or nullopt if v is outside the
/// row space.
template <typename S>
std::optional<Vec<S>> coordinates_in(const Vec<S>& v, const Echelon<S>& e) {
  Vec<S> coords;
  coords.reserve(e.rank());
  Vec<S> w = v;
  for (int i = 0; i < e.rank(); ++i) {
    const S f = w[e.pivots[i]];
    coords.push_back(f);
    if (is_zero(f)) continue;
    for (int j = 0; j < e.cols; ++j) w[j] -= f * e.rows[i][j];
  }
  for (const auto& x : w)
    if (!is_zero(x)) return std::nullopt;
  return coords;
}

/// Canonical basis of {x : A x = 0} for A given as rows over `cols` unknowns.
template <typename S>
Mat<S> kernel_basis(const Mat<S>& a, int cols) {
  Echelon<S> e = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  Mat<S> raw;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<S> x(cols, S(0));
    x[f] = S(1);
    for (int i = 0; i < e.rank(); ++i) x[e.pivots[i]] = -e.rows[i][f];
    raw.push_back(std::move(x));
  }
  return rref(std::move(raw), cols).rows;
}

template <typename S>
Mat<S> identity_matrix(int n) {
  Mat<S> m(n, Vec<S>(n, S(0)));
  for (int i = 0; i < n; ++i) m[i][i] = S(1);
  return m;
}

template <typename S>
Mat<S> mat_mul(const Mat<S>& a, const Mat<S>& b) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int p = k ? static_cast<int>(b[0].size()) : 0;
  Mat<S> out(n, Vec<S>(p, S(0)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (is_zero(a[i][t])) continue;
      for (int j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

template <typename S>
Vec<S> mat_vec(const Mat<S>& a, const Vec<S>& x) {
  Vec<S> out(a.size(), S(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!is_zero(a[i][j])) out[i] += a[i][j] * x[j];
  return out;
}

template <typename S>
Mat<S> transpose(const Mat<S>& a, int cols) {
  Mat<S> out(cols, Vec<S>(a.size(), S(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < cols; ++j) out[j][i] = a[i][j];
  return out;
}

/// Inverse via elimination on [A | I]; nullopt when singular.
template <typename S>
std::optional<Mat<S>> inverse(const Mat<S>& a) {
  const int n = static_cast<int>(a.size());
  Mat<S> aug(n, Vec<S>(2 * n, S(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = S(1);
  }
  Echelon<S> e = rref(std::move(aug), 2 * n);
  if (e.rank() != n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat<S> inv(n, Vec<S>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  return inv;
}

/// Fraction-free determinant.
template <typename S>
S determinant(Mat<S> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return S(1);
  S scale(1);
  for (auto& row : m) {
    Vec<S> before = row;
    detail::clear_denominators_row(row);
    for (int j = 0; j < n; ++j) {
      if (!is_zero(before[j])) {
        scale = scale * (row[j] / before[j]);
        break;
      }
    }
  }
  S prev(1);
  bool flip = false;
  for (int k = 0; k < n; ++k) {
    int pr = -1;
    for (int i = k; i < n; ++i)
      if (!is_zero(m[i][k])) {
        pr = i;
        break;
      }
    if (pr < 0) return S(0);
    if (pr != k) {
      std::swap(m[pr], m[k]);
      flip = !flip;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = S(0);
    }
    prev = m[k][k];
  }
  S det = m[n - 1][n - 1] / scale;
  return flip ? -det : det;
}

/// Row space of the concatenation, echelonized.
template <typename S>
Echelon<S> rowspace_sum(const Mat<S>& a, const Mat<S>& b, int cols) {
  Mat<S> stacked = a;
  stacked.insert(stacked.end(), b.begin(), b.end());
  return rref(std::move(stacked), cols);
}

/// Zassenhaus: echelonized basis of rowspace(a) ∩ rowspace(b).
template <typename S>
Mat<S> rowspace_intersection(const Mat<S>& a, const Mat<S>& b, int cols) {
  Mat<S> block;
  block.reserve(a.size() + b.size());
  for (const auto& u : a) {
    Vec<S> row(2 * cols, S(0));
    for (int j = 0; j < cols; ++j) {
      row[j] = u[j];
      row[cols + j] = u[j];
    }
    block.push_back(std::move(row));
  }
  for (const auto& w : b) {
    Vec<S> row(2 * cols, S(0));
    for (int j = 0; j < cols; ++j) row[j] = w[j];
    block.push_back(std::move(row));
  }
  Echelon<S> e = rref(std::move(block), 2 * cols);
  Mat<S> inter;
  for (int i = 0; i < e.rank(); ++i) {
    if (e.pivots[i] < cols) continue;
    inter.emplace_back(e.rows[i].begin() + cols, e.rows[i].end());
  }
  return rref(std::move(inter), cols).rows;
}

}  // namespace aclab
