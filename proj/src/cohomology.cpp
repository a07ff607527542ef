#include "aclab/cohomology.hpp"

namespace aclab {

Mat<Rational> differential_matrix(const LieAlgebraSpec& g, int k) {
  const auto dom = multi_index_basis(g.dim(), k);
  const auto cod = multi_index_basis(g.dim(), k + 1);
  Mat<Rational> m(cod.size(), Vec<Rational>(dom.size(), Rational(0)));
  std::map<MultiIndex, std::size_t> cod_pos;
  for (std::size_t r = 0; r < cod.size(); ++r) cod_pos[cod[r]] = r;
  for (std::size_t j = 0; j < dom.size(); ++j) {
    KForm d = ce_differential(g, KForm::basis(g.dim(), dom[j]));
    for (const auto& [idx, c] : d.terms()) m[cod_pos.at(idx)][j] = c;
  }
  return m;
}

CohomologySpace cohomology(const LieAlgebraSpec& g, int k) {
  if (k < 0 || k > g.dim()) throw DegreeError("cohomology degree out of range");
  CohomologySpace out{g};
  out.degree = k;
  out.index_basis = multi_index_basis(g.dim(), k);
  const int cols = static_cast<int>(out.index_basis.size());

  Mat<Rational> dk = differential_matrix(g, k);
  Mat<Rational> z_rows = kernel_basis(dk, cols);
  out.z_echelon = rref(z_rows, cols);

  Mat<Rational> image_rows;
  if (k > 0) {
    const auto below = multi_index_basis(g.dim(), k - 1);
    for (const auto& idx : below) {
      KForm d = ce_differential(g, KForm::basis(g.dim(), idx));
      if (!d.is_zero()) image_rows.push_back(coordinate_row(d, out.index_basis));
    }
  }
  out.b_echelon = rref(std::move(image_rows), cols);

  Mat<Rational> reduced;
  for (const auto& z : out.z_echelon.rows) {
    Vec<Rational> r = reduce_against(z, out.b_echelon);
    bool zero = true;
    for (const auto& x : r)
      if (!is_zero(x)) {
        zero = false;
        break;
      }
    if (!zero) reduced.push_back(std::move(r));
  }
  out.quotient_echelon = rref(std::move(reduced), cols);
  out.betti = out.z_echelon.rank() - out.b_echelon.rank();

  for (const auto& row : out.z_echelon.rows)
    out.basis_Z.push_back(form_from_row(row, out.index_basis, g.dim(), k));
  for (const auto& row : out.b_echelon.rows)
    out.basis_B.push_back(form_from_row(row, out.index_basis, g.dim(), k));
  for (const auto& row : out.quotient_echelon.rows)
    out.quotient_basis.push_back(form_from_row(row, out.index_basis, g.dim(), k));
  return out;
}

CohomologyClass class_of(const CohomologySpace& space, const KForm& a) {
  if (a.dim() != space.algebra.dim())
    throw DimensionMismatch("form dimension differs from algebra dimension");
  if (a.degree() != space.degree) throw DegreeError("form degree differs from space degree");
  KForm da = ce_differential(space.algebra, a);
  if (!da.is_zero()) throw NotClosedError(to_string(da));
  Vec<Rational> row = coordinate_row(a, space.index_basis);
  Vec<Rational> canonical = reduce_against(std::move(row), space.b_echelon);
  auto coords = coordinates_in(canonical, space.quotient_echelon);
  if (!coords)
    throw NotClosedError("cocycle escapes the quotient basis (corrupted space)");
  CohomologyClass out;
  out.degree = space.degree;
  out.representative =
      form_from_row(canonical, space.index_basis, space.algebra.dim(), space.degree);
  out.coordinates = std::move(*coords);
  return out;
}

SubspaceOfH span_in_H(const CohomologySpace& space, const std::vector<KForm>& reps) {
  Mat<Rational> rows;
  rows.reserve(reps.size());
  for (const auto& r : reps) rows.push_back(class_of(space, r).coordinates);
  SubspaceOfH out;
  out.degree = space.degree;
  out.ambient = space.betti;
  out.coords = rref(std::move(rows), space.betti);
  return out;
}

namespace {
void require_same_ambient(const SubspaceOfH& a, const SubspaceOfH& b) {
  if (a.degree != b.degree || a.ambient != b.ambient)
    throw DimensionMismatch("subspaces live in different cohomology spaces");
}
}  // namespace

SubspaceOfH intersect(const SubspaceOfH& a, const SubspaceOfH& b) {
  require_same_ambient(a, b);
  SubspaceOfH out;
  out.degree = a.degree;
  out.ambient = a.ambient;
  out.coords = rref(rowspace_intersection(a.coords.rows, b.coords.rows, a.ambient), a.ambient);
  return out;
}

SubspaceOfH sum(const SubspaceOfH& a, const SubspaceOfH& b) {
  require_same_ambient(a, b);
  SubspaceOfH out;
  out.degree = a.degree;
  out.ambient = a.ambient;
  out.coords = rowspace_sum(a.coords.rows, b.coords.rows, a.ambient);
  return out;
}

bool contains(const SubspaceOfH& s, const CohomologyClass& c) {
  if (static_cast<int>(c.coordinates.size()) != s.ambient)
    throw DimensionMismatch("class coordinates do not match subspace ambient");
  Vec<Rational> r = reduce_against(c.coordinates, s.coords);
  for (const auto& x : r)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace aclab
