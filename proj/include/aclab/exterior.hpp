#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aclab/errors.hpp"
#include "aclab/rational.hpp"

namespace aclab {

/// Strictly increasing tuple of 1-based basis indices. The empty tuple is the
/// degree-0 index. std::vector's lexicographic operator< is the basis order
/// used everywhere downstream (matrix columns, echelon pivots, printing).
using MultiIndex = std::vector<int>;

inline bool valid_multi_index(const MultiIndex& idx, int dim) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > dim) return false;
    if (i > 0 && idx[i] <= idx[i - 1]) return false;
  }
  return true;
}

/// Merge two strictly increasing tuples into `out`; returns the sign of the
/// permutation sorting their concatenation, or 0 if they share an index.
inline int merge_sign(const MultiIndex& a, const MultiIndex& b, MultiIndex& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  long crossings = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      crossings += static_cast<long>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return (crossings % 2 == 0) ? 1 : -1;
}

/// Sparse alternating k-form over a fixed dual basis e^1..e^dim. Zero
/// coefficients are never stored, so equality is map equality. Values are
/// immutable in spirit: every mutating helper is private to construction
/// paths and all public operations are pure.
template <typename S>
class BasicKForm {
 public:
  BasicKForm(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0 || degree < 0) throw DegreeError("negative dimension or degree");
  }

  static BasicKForm basis(int dim, MultiIndex idx) {
    BasicKForm f(dim, static_cast<int>(idx.size()));
    f.add_term(std::move(idx), S(1));
    return f;
  }

  static BasicKForm scalar(int dim, S value) {
    BasicKForm f(dim, 0);
    f.add_term({}, std::move(value));
    return f;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<MultiIndex, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? S(0) : it->second;
  }

  /// Accumulate c * e^{idx}; idx may arrive unsorted and is normalized with
  /// the matching sign. Terms that cancel to zero are dropped.
  void add_term(MultiIndex idx, S c) {
    if (aclab::is_zero(c)) return;
    int sign = normalize_index(idx);
    if (sign == 0) return;
    if (static_cast<int>(idx.size()) != degree_)
      throw DegreeError("term degree does not match form degree");
    if (!valid_multi_index(idx, dim_)) throw DimensionMismatch("index out of range for dimension");
    if (sign < 0) c = -c;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
      terms_.emplace(std::move(idx), std::move(c));
    } else {
      it->second += c;
      if (aclab::is_zero(it->second)) terms_.erase(it);
    }
  }

  bool operator==(const BasicKForm& o) const {
    return dim_ == o.dim_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

  BasicKForm& operator+=(const BasicKForm& o) {
    require_same_shape(o);
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
  }
  BasicKForm& operator-=(const BasicKForm& o) {
    require_same_shape(o);
    for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
    return *this;
  }
  BasicKForm& operator*=(const S& c) {
    if (aclab::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [idx, v] : terms_) v *= c;
    return *this;
  }

  friend BasicKForm operator+(BasicKForm a, const BasicKForm& b) { return a += b; }
  friend BasicKForm operator-(BasicKForm a, const BasicKForm& b) { return a -= b; }
  friend BasicKForm operator*(BasicKForm a, const S& c) { return a *= c; }
  friend BasicKForm operator*(const S& c, BasicKForm a) { return a *= c; }
  friend BasicKForm operator-(BasicKForm a) { return a *= S(-1); }

 private:
  void require_same_shape(const BasicKForm& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("forms live in different dimensions");
    if (degree_ != o.degree_) throw DegreeError("forms have different degrees");
  }

  // Sorts idx in place; returns permutation sign, or 0 on a repeated index.
  static int normalize_index(MultiIndex& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
      for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
        std::swap(idx[j], idx[j - 1]);
        sign = -sign;
      }
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (idx[i] == idx[i - 1]) return 0;
    return sign;
  }

  int dim_;
  int degree_;
  std::map<MultiIndex, S> terms_;
};

using KForm = BasicKForm<Rational>;
using ComplexKForm = BasicKForm<GaussianRational>;

template <typename S>
BasicKForm<S> wedge(const BasicKForm<S>& a, const BasicKForm<S>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge of forms from different dimensions");
  BasicKForm<S> out(a.dim(), a.degree() + b.degree());
  MultiIndex merged;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      int sign = merge_sign(ia, ib, merged);
      if (sign == 0) continue;
      S c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(merged, std::move(c));
    }
  }
  return out;
}

template <typename S>
BasicKForm<S> wedge_power(const BasicKForm<S>& a, int m) {
  if (m < 0) throw std::invalid_argument("negative wedge power");
  BasicKForm<S> out = BasicKForm<S>::scalar(a.dim(), S(1));
  for (int i = 0; i < m; ++i) out = wedge(out, a);
  return out;
}

/// All degree-k multi-indices on 1..dim in lexicographic order; the column
/// order of every matrix built downstream.
inline std::vector<MultiIndex> multi_index_basis(int dim, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > dim) return out;
  MultiIndex cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == dim - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

template <typename S>
std::vector<S> coordinate_row(const BasicKForm<S>& f, const std::vector<MultiIndex>& basis) {
  std::vector<S> row;
  row.reserve(basis.size());
  for (const auto& idx : basis) row.push_back(f.coefficient(idx));
  return row;
}

template <typename S>
BasicKForm<S> form_from_row(const std::vector<S>& row, const std::vector<MultiIndex>& basis,
                            int dim, int degree) {
  BasicKForm<S> f(dim, degree);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!is_zero(row[j])) f.add_term(basis[j], row[j]);
  return f;
}

ComplexKForm complexify(const KForm& a);
ComplexKForm conjugate(const ComplexKForm& a);

/// Splits c = re + i*im into real coefficient forms.
std::pair<KForm, KForm> realify(const ComplexKForm& c);

std::string to_string(const KForm& f);
std::string to_string(const ComplexKForm& f);

/// Inverse of to_string, and tolerant of whitespace: `3/2*e12 - e34`,
/// `e{1,12}` above dimension 9, `i*e2`, `(1+2*i)*e13`. Degree is inferred
/// from the first term; a bare scalar parses as a degree-0 form.
ComplexKForm parse_complex_form(std::string_view text, int dim);

/// parse_complex_form restricted to real coefficients; complex input throws.
KForm parse_form(std::string_view text, int dim);

}  // namespace aclab
