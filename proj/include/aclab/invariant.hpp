#pragma once

#include <string>
#include <vector>

#include "aclab/acs.hpp"
#include "aclab/cohomology.hpp"

namespace aclab {

/// Echelon basis of the closed forms inside the (sign)-eigenspace of the
/// action on 2-forms: sign=+1 gives the invariant cocycles, sign=-1 the
/// anti-invariant ones. All computations are at the left-invariant
/// (Lie-algebra) level.
std::vector<KForm> invariant_cocycles(const LieAlgebraSpec& g, const AlmostComplexStructure& J,
                                      int sign);

/// Image of the (sign)-cocycles in H^2: the subgroup of classes with an
/// eigenform representative.
SubspaceOfH h_subgroup(const CohomologySpace& h2, const AlmostComplexStructure& J, int sign);

/// Purity/fullness classification of (g, J) at degree 2. The subgroups
/// intersect trivially iff pure; they span H^2 iff full.
struct PurityReport {
  int betti2 = 0;
  SubspaceOfH h_plus;
  SubspaceOfH h_minus;
  SubspaceOfH intersection;
  SubspaceOfH span_sum;
  int dim_intersection = 0;
  int dim_sum = 0;
  bool is_pure = false;
  bool is_full = false;
  bool is_pure_and_full = false;
};

PurityReport purity_report(const LieAlgebraSpec& g, const AlmostComplexStructure& J);
PurityReport purity_report(const CohomologySpace& h2, const AlmostComplexStructure& J);

/// Class of a^m in H^{2m} together with its vanishing flag.
struct ClassPowerResult {
  int power = 0;
  CohomologyClass power_class;
  bool is_zero = false;
};

ClassPowerResult class_power_check(const LieAlgebraSpec& g, const KForm& a, int m);

/// Consistency audit of the power obstruction for a closed 2-form a on a
/// 2n-dimensional algebra: membership of [a] in H+ ∩ H- forces [a]^n = 0,
/// and for n odd membership in H- alone already forces it. The audit never
/// proves the implication; it confirms that the data exhibits no violation.
struct PowerObstructionReport {
  int n = 0;  // half the dimension
  bool in_h_plus = false;
  bool in_h_minus = false;
  bool in_intersection = false;
  bool power_class_zero = false;       // [a]^n = 0
  bool power_form_zero = false;        // a^n = 0 as a form
  bool intersection_case_applies = false;
  bool odd_case_applies = false;
  bool consistent = false;
  std::string summary;
};

PowerObstructionReport power_obstruction_audit(const LieAlgebraSpec& g, const AlmostComplexStructure& J,
                                    const KForm& a);

}  // namespace aclab
