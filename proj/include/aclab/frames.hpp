#pragma once

#include <string>
#include <vector>

#include "aclab/acs.hpp"
#include "aclab/exterior.hpp"
#include "aclab/linalg.hpp"

namespace aclab {

/// A symplectic frame V_1..V_n, W_1..W_n (rows of `vectors`, in that order)
/// together with the recomputed pairing matrix, which equals the standard
/// block form omega(V_i,W_j) = delta_ij exactly.
struct FrameSet {
  int dim = 0;
  Mat<Rational> vectors;  // row i = coordinates of the i-th frame vector
  Mat<Rational> pairing;  // pairing[i][j] = omega(vectors[i], vectors[j])
};

/// Pairing matrix of a vector family under the skew form x^T omega y.
Mat<Rational> pairing_matrix(const Mat<Rational>& vectors, const Mat<Rational>& omega);

/// Standard symplectic Gram-Schmidt. `vectors` (rows) must span; `omega` must
/// be skew and nondegenerate. Deterministic: vectors are processed in the
/// given order and each partner is the first remaining vector with nonzero
/// pairing. Throws FrameError on degenerate input.
FrameSet symplectic_gram_schmidt(Mat<Rational> vectors, const Mat<Rational>& omega);

/// Result of the frame construction: J with J^2 = -Id and J(omega) = -omega,
/// omega = sum_i V^i ∧ W^i in the dual frame. Only defined for n even; the
/// planes are paired block-wise, (V_1,V_2), (V_3,V_4), ...
struct AntiInvariantPair {
  AlmostComplexStructure structure;
  KForm omega;
  std::string construction_note;  // names the block-wise even-n reading
};

AntiInvariantPair anti_invariant_pair_from_frame(const FrameSet& frame);

/// Checks the four pairing identities behind extracting a symplectic frame
/// from {V1, JV1, KV1, JKV1}: omega(V1,JV1)=0, omega(KV1,JKV1)=0,
/// omega(V1,KV1)>0, omega(JV1,JKV1)<0, plus linear independence.
/// Preconditions (dim 4, J anti-invariant for omega, K calibrated, V1 != 0)
/// throw FrameError; the identity outcomes land in the report.
struct ReverseDirectionReport {
  Rational omega_v1_jv1;
  Rational omega_kv1_jkv1;
  Rational omega_v1_kv1;
  Rational omega_jv1_jkv1;
  bool first_vanishes = false;
  bool second_vanishes = false;
  bool third_positive = false;
  bool fourth_negative = false;
  bool independent = false;
  bool ok = false;
  std::vector<std::string> failures;  // names of failed identities, if any
};

ReverseDirectionReport verify_reverse_direction(const KForm& omega,
                                                const AlmostComplexStructure& J,
                                                const AlmostComplexStructure& K,
                                                const Vec<Rational>& v1);

/// Coefficient matrix of a 2-form: omega(e_i, e_j).
Mat<Rational> skew_matrix_of(const KForm& omega);

/// 2-form with the given skew coefficient matrix.
KForm form_from_skew_matrix(const Mat<Rational>& m);

}  // namespace aclab
