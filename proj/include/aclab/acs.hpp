#pragma once

#include <utility>
#include <vector>

#include "aclab/exterior.hpp"
#include "aclab/liealg.hpp"
#include "aclab/linalg.hpp"

namespace aclab {

/// Constant almost complex structure on the model: a rational matrix J with
/// J^2 = -Id, columns = images of the tangent basis vectors. The induced dual
/// action on covectors is (J*e^i)(X) = e^i(JX), i.e. row i of the matrix.
class AlmostComplexStructure {
 public:
  /// Throws NotAComplexStructure unless m is square with m^2 = -Id.
  static AlmostComplexStructure from_matrix(Mat<Rational> m);

  /// Unique J whose dual action has the given forms as +i eigenvectors
  /// (psi ∘ J = i psi). Requires the psis and their conjugates to span the
  /// complexified dual space; throws NotACoframe otherwise.
  static AlmostComplexStructure from_one_zero_forms(int dim,
                                                    const std::vector<ComplexKForm>& psis);

  int dim() const { return dim_; }
  const Mat<Rational>& matrix() const { return mat_; }

  /// Echelonized basis of the +i eigenspace of the dual action; spans the
  /// same space as any defining family of (1,0)-forms.
  std::vector<ComplexKForm> one_zero_coframe() const;

  bool operator==(const AlmostComplexStructure& o) const = default;

 private:
  AlmostComplexStructure(int dim, Mat<Rational> m) : dim_(dim), mat_(std::move(m)) {}

  int dim_;
  Mat<Rational> mat_;
};

/// (J a)(X_1,..,X_k) = a(J X_1,.., J X_k): substitute J*e^i for each index.
KForm act_on_form(const AlmostComplexStructure& J, const KForm& a);

/// a = plus + minus with J(plus) = plus, J(minus) = -minus; the projections
/// are (a ± Ja)/2. Degree-2 input only.
std::pair<KForm, KForm> decompose_2form(const AlmostComplexStructure& J, const KForm& a);

/// Matrix of act_on_form on Λ^2, one column per lexicographic 2-index.
Mat<Rational> induced_2form_matrix(const AlmostComplexStructure& J);

/// Echelonized basis of the (sign)-eigenspace of the induced action on Λ^2;
/// sign=+1 picks the invariant forms, sign=-1 the anti-invariant ones.
std::vector<KForm> lambda_eigenspace_basis(const AlmostComplexStructure& J, int sign);

/// N(e_i,e_j) = [Je_i,Je_j] - J[Je_i,e_j] - J[e_i,Je_j] - [e_i,e_j] on
/// left-invariant fields; antisymmetric table of coordinate vectors.
struct NijenhuisTable {
  int dim = 0;
  std::vector<std::vector<Vec<Rational>>> entry;  // entry[i][j], 0-based
  bool is_zero() const;
};

NijenhuisTable nijenhuis(const LieAlgebraSpec& g, const AlmostComplexStructure& J);

/// Rational symmetric positive definite 4x4 metric; the only dimension where
/// the star identity below is used.
class MetricSpec {
 public:
  /// Throws MetricError unless g is 4x4, symmetric, with positive leading
  /// principal minors.
  static MetricSpec validate(Mat<Rational> g);

  const Mat<Rational>& matrix() const { return g_; }
  int dim() const { return 4; }

  /// g(JX, JY) = g(X, Y).
  bool compatible_with(const AlmostComplexStructure& J) const;

 private:
  explicit MetricSpec(Mat<Rational> g) : g_(std::move(g)) {}
  Mat<Rational> g_;
};

/// Fundamental form ω(X,Y) = g(JX, Y); requires the pair to be compatible so
/// that the result is skew.
KForm fundamental_2form(const MetricSpec& g, const AlmostComplexStructure& J);

/// Star operator on Λ^2 in dimension 4. Needs sqrt(det g) rational, which
/// holds automatically for J-compatible metrics; throws MetricError when the
/// volume normalization is irrational.
Mat<Rational> hodge_star_2_matrix(const MetricSpec& g);
KForm hodge_star_2(const MetricSpec& g, const KForm& a);

}  // namespace aclab
