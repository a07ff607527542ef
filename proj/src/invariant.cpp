#include "aclab/invariant.hpp"

namespace aclab {

std::vector<KForm> invariant_cocycles(const LieAlgebraSpec& g, const AlmostComplexStructure& J,
                                      int sign) {
  if (g.dim() != J.dim()) throw DimensionMismatch("algebra and structure dimensions differ");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const auto basis = multi_index_basis(g.dim(), 2);
  const int cols = static_cast<int>(basis.size());
  // Solutions of (action - sign * Id) x = 0 and d x = 0 simultaneously.
  Mat<Rational> stacked = induced_2form_matrix(J);
  for (int i = 0; i < cols; ++i) stacked[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -= Rational(sign);
  Mat<Rational> d2 = differential_matrix(g, 2);
  stacked.insert(stacked.end(), d2.begin(), d2.end());
  Mat<Rational> null = kernel_basis(stacked, cols);
  std::vector<KForm> out;
  out.reserve(null.size());
  for (const auto& row : null) out.push_back(form_from_row(row, basis, g.dim(), 2));
  return out;
}

SubspaceOfH h_subgroup(const CohomologySpace& h2, const AlmostComplexStructure& J, int sign) {
  return span_in_H(h2, invariant_cocycles(h2.algebra, J, sign));
}

PurityReport purity_report(const CohomologySpace& h2, const AlmostComplexStructure& J) {
  PurityReport rep;
  rep.betti2 = h2.betti;
  rep.h_plus = h_subgroup(h2, J, +1);
  rep.h_minus = h_subgroup(h2, J, -1);
  rep.intersection = intersect(rep.h_plus, rep.h_minus);
  rep.span_sum = sum(rep.h_plus, rep.h_minus);
  rep.dim_intersection = rep.intersection.dim();
  rep.dim_sum = rep.span_sum.dim();
  rep.is_pure = rep.dim_intersection == 0;
  rep.is_full = rep.dim_sum == rep.betti2;
  rep.is_pure_and_full = rep.is_pure && rep.is_full;
  return rep;
}

PurityReport purity_report(const LieAlgebraSpec& g, const AlmostComplexStructure& J) {
  return purity_report(cohomology(g, 2), J);
}

ClassPowerResult class_power_check(const LieAlgebraSpec& g, const KForm& a, int m) {
  if (m < 0) throw std::invalid_argument("negative power");
  KForm da = ce_differential(g, a);
  if (!da.is_zero()) throw NotClosedError(to_string(da));
  KForm power = wedge_power(a, m);
  const int degree = power.degree();
  ClassPowerResult out;
  out.power = m;
  if (degree > g.dim()) {
    out.power_class = CohomologyClass{degree, KForm(g.dim(), degree), {}};
    out.is_zero = true;
    return out;
  }
  CohomologySpace space = cohomology(g, degree);
  out.power_class = class_of(space, power);
  out.is_zero = out.power_class.is_zero();
  return out;
}

PowerObstructionReport power_obstruction_audit(const LieAlgebraSpec& g, const AlmostComplexStructure& J,
                                    const KForm& a) {
  if (a.degree() != 2) throw DegreeError("power obstruction audit needs a 2-form");
  const int n = g.dim() / 2;
  CohomologySpace h2 = cohomology(g, 2);
  CohomologyClass cls = class_of(h2, a);  // throws NotClosedError when da != 0
  SubspaceOfH plus = h_subgroup(h2, J, +1);
  SubspaceOfH minus = h_subgroup(h2, J, -1);

  PowerObstructionReport rep;
  rep.n = n;
  rep.in_h_plus = contains(plus, cls);
  rep.in_h_minus = contains(minus, cls);
  rep.in_intersection = rep.in_h_plus && rep.in_h_minus;
  ClassPowerResult power = class_power_check(g, a, n);
  rep.power_class_zero = power.is_zero;
  rep.power_form_zero = wedge_power(a, n).is_zero();
  rep.intersection_case_applies = rep.in_intersection;
  rep.odd_case_applies = (n % 2 == 1) && rep.in_h_minus;

  bool violation = false;
  if (rep.intersection_case_applies && !rep.power_class_zero) violation = true;
  if (rep.odd_case_applies && !rep.power_class_zero) violation = true;
  rep.consistent = !violation;

  std::string s;
  s += "[a] in H+: " + std::string(rep.in_h_plus ? "yes" : "no");
  s += "; [a] in H-: " + std::string(rep.in_h_minus ? "yes" : "no");
  s += "; [a]^" + std::to_string(n) + (rep.power_class_zero ? " = 0" : " != 0");
  if (rep.intersection_case_applies)
    s += "; intersection membership forces the vanishing power: " +
         std::string(rep.power_class_zero ? "confirmed" : "VIOLATED");
  if (rep.odd_case_applies)
    s += "; n odd and anti-invariant membership force the vanishing power: " +
         std::string(rep.power_class_zero ? "confirmed" : "VIOLATED");
  if (!rep.intersection_case_applies && !rep.odd_case_applies)
    s += "; no obstruction hypothesis applies";
  rep.summary = std::move(s);
  return rep;
}

}  // namespace aclab
