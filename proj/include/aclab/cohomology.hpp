#pragma once

#include <vector>

#include "aclab/exterior.hpp"
#include "aclab/liealg.hpp"
#include "aclab/linalg.hpp"

namespace aclab {

/// H^k of a validated algebra: exact echelon bases for cocycles, coboundaries
/// and a canonical set of quotient representatives. Compute once, share
/// read-only.
struct CohomologySpace {
  LieAlgebraSpec algebra;
  int degree = 0;
  std::vector<MultiIndex> index_basis;  // lexicographic basis of Λ^degree
  std::vector<KForm> basis_Z;
  std::vector<KForm> basis_B;
  std::vector<KForm> quotient_basis;
  int betti = 0;

  // Echelon machinery shared by class reduction and subspace construction.
  Echelon<Rational> z_echelon;
  Echelon<Rational> b_echelon;
  Echelon<Rational> quotient_echelon;
};

CohomologySpace cohomology(const LieAlgebraSpec& g, int k);

/// Matrix of d: Λ^k → Λ^{k+1} with one column per lexicographic k-index.
Mat<Rational> differential_matrix(const LieAlgebraSpec& g, int k);

struct CohomologyClass {
  int degree = 0;
  KForm representative{0, 0};  // canonical: input reduced mod coboundaries
  Vec<Rational> coordinates;   // in quotient_basis
  bool is_zero() const { return representative.is_zero(); }
  bool operator==(const CohomologyClass& o) const {
    return degree == o.degree && representative == o.representative;
  }
};

/// Throws NotClosedError (carrying da) when a is not a cocycle.
CohomologyClass class_of(const CohomologySpace& space, const KForm& a);

/// Subspace of H^degree stored as a reduced echelon coordinate matrix over
/// the quotient basis.
struct SubspaceOfH {
  int degree = 0;
  int ambient = 0;           // betti of the ambient cohomology space
  Echelon<Rational> coords;  // rows = spanning classes in quotient coordinates
  int dim() const { return coords.rank(); }
};

SubspaceOfH span_in_H(const CohomologySpace& space, const std::vector<KForm>& reps);
SubspaceOfH intersect(const SubspaceOfH& a, const SubspaceOfH& b);
SubspaceOfH sum(const SubspaceOfH& a, const SubspaceOfH& b);
bool contains(const SubspaceOfH& s, const CohomologyClass& c);

}  // namespace aclab
