#include "aclab/frames.hpp"

#include "doctest.h"
#include "testutil.hpp"

using namespace aclab;
using aclab::testing::Rng;

namespace {

Mat<Rational> standard_omega(int dim) {
  const int n = dim / 2;
  Mat<Rational> m(static_cast<std::size_t>(dim), Vec<Rational>(dim, Rational(0)));
  for (int i = 0; i < n; ++i) {
    m[i][n + i] = Rational(1);
    m[n + i][i] = Rational(-1);
  }
  return m;
}

Mat<Rational> random_skew_nondegenerate(Rng& rng, int dim) {
  Mat<Rational> q = aclab::testing::random_invertible(rng, dim);
  return mat_mul(mat_mul(transpose(q, dim), standard_omega(dim)), q);
}

bool standard_pairing(const Mat<Rational>& pairing) {
  const int dim = static_cast<int>(pairing.size());
  const int n = dim / 2;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Rational want(0);
      if (j == i + n) want = Rational(1);
      if (j == i - n) want = Rational(-1);
      if (pairing[i][j] != want) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("Gram-Schmidt on the standard data returns the identity frame") {
  FrameSet f = symplectic_gram_schmidt(identity_matrix<Rational>(4), standard_omega(4));
  CHECK(f.vectors == identity_matrix<Rational>(4));
  CHECK(standard_pairing(f.pairing));
}

TEST_CASE("Gram-Schmidt on the proof configuration {V1, JV1, KV1, JKV1}") {
  // omega = e13 + e24; J anti-invariant; K calibrated; V1 = e1.
  Mat<Rational> omega(4, Vec<Rational>(4, Rational(0)));
  omega[0][2] = Rational(1);
  omega[2][0] = Rational(-1);
  omega[1][3] = Rational(1);
  omega[3][1] = Rational(-1);
  Mat<Rational> vectors{{Rational(1), Rational(0), Rational(0), Rational(0)},    // V1
                        {Rational(0), Rational(1), Rational(0), Rational(0)},    // JV1
                        {Rational(0), Rational(0), Rational(1), Rational(0)},    // KV1
                        {Rational(0), Rational(0), Rational(0), Rational(-1)}};  // JKV1
  FrameSet f = symplectic_gram_schmidt(vectors, omega);
  CHECK(standard_pairing(f.pairing));
  CHECK(f.vectors[0][0] == Rational(1));  // V1 kept first
}

TEST_CASE("Gram-Schmidt normalizes random nondegenerate pairings") {
  Rng rng(606);
  for (int dim : {4, 6, 8}) {
    for (int trial = 0; trial < 8; ++trial) {
      Mat<Rational> omega = random_skew_nondegenerate(rng, dim);
      FrameSet f = symplectic_gram_schmidt(identity_matrix<Rational>(dim), omega);
      CHECK(standard_pairing(f.pairing));
      CHECK(standard_pairing(pairing_matrix(f.vectors, omega)));
    }
  }
}

TEST_CASE("Gram-Schmidt rejects bad input") {
  Mat<Rational> degenerate(4, Vec<Rational>(4, Rational(0)));
  CHECK_THROWS_AS(symplectic_gram_schmidt(identity_matrix<Rational>(4), degenerate), FrameError);

  Mat<Rational> dependent = identity_matrix<Rational>(4);
  dependent[3] = dependent[0];
  CHECK_THROWS_AS(symplectic_gram_schmidt(dependent, standard_omega(4)), FrameError);

  Mat<Rational> not_skew = identity_matrix<Rational>(4);
  CHECK_THROWS_AS(symplectic_gram_schmidt(identity_matrix<Rational>(4), not_skew), FrameError);
}

TEST_CASE("anti-invariant pair from the standard 4-frame") {
  FrameSet f = symplectic_gram_schmidt(identity_matrix<Rational>(4), standard_omega(4));
  AntiInvariantPair pair = anti_invariant_pair_from_frame(f);
  CHECK(pair.omega == parse_form("e13+e24", 4));
  CHECK(act_on_form(pair.structure, pair.omega) == -pair.omega);
  CHECK_FALSE(wedge_power(pair.omega, 2).is_zero());  // nondegeneracy survives
  CHECK(pair.construction_note.find("block-wise") != std::string::npos);
}

TEST_CASE("anti-invariant pair in dimension 8 and the odd rejection") {
  Rng rng(707);
  for (int trial = 0; trial < 5; ++trial) {
    Mat<Rational> omega = random_skew_nondegenerate(rng, 8);
    FrameSet f = symplectic_gram_schmidt(identity_matrix<Rational>(8), omega);
    AntiInvariantPair pair = anti_invariant_pair_from_frame(f);
    CHECK(act_on_form(pair.structure, pair.omega) == -pair.omega);
    CHECK_FALSE(wedge_power(pair.omega, 4).is_zero());
  }

  FrameSet f6 = symplectic_gram_schmidt(identity_matrix<Rational>(6), standard_omega(6));
  CHECK_THROWS_WITH_AS(anti_invariant_pair_from_frame(f6),
                       doctest::Contains("n even"), FrameError);
}

TEST_CASE("construction commutes with transport by a basis change") {
  Rng rng(808);
  for (int trial = 0; trial < 6; ++trial) {
    Mat<Rational> omega = random_skew_nondegenerate(rng, 4);
    FrameSet f = symplectic_gram_schmidt(identity_matrix<Rational>(4), omega);
    AntiInvariantPair base = anti_invariant_pair_from_frame(f);

    Mat<Rational> t = aclab::testing::random_invertible(rng, 4);
    auto tinv = inverse(t);
    // transported frame vectors and pairing: omega'(x, y) = omega(T^{-1}x, T^{-1}y)
    Mat<Rational> moved;
    for (const auto& v : f.vectors) moved.push_back(mat_vec(t, v));
    Mat<Rational> omega_moved = mat_mul(mat_mul(transpose(*tinv, 4), omega), *tinv);
    FrameSet g;
    g.dim = 4;
    g.vectors = moved;
    g.pairing = pairing_matrix(moved, omega_moved);
    REQUIRE(standard_pairing(g.pairing));
    AntiInvariantPair transported = anti_invariant_pair_from_frame(g);

    CHECK(transported.structure.matrix() == mat_mul(mat_mul(t, base.structure.matrix()), *tinv));
    CHECK(act_on_form(transported.structure, transported.omega) == -transported.omega);
  }
}

TEST_CASE("reverse direction checks") {
  // the proof's own configuration
  KForm omega = parse_form("e13+e24", 4);
  FrameSet f = symplectic_gram_schmidt(identity_matrix<Rational>(4), standard_omega(4));
  AntiInvariantPair pair = anti_invariant_pair_from_frame(f);
  REQUIRE(pair.omega == omega);

  Mat<Rational> k(4, Vec<Rational>(4, Rational(0)));
  k[2][0] = Rational(1);   // K e1 = e3
  k[0][2] = Rational(-1);  // K e3 = -e1
  k[3][1] = Rational(1);   // K e2 = e4
  k[1][3] = Rational(-1);  // K e4 = -e2
  auto kj = AlmostComplexStructure::from_matrix(k);

  Vec<Rational> v1{Rational(1), Rational(0), Rational(0), Rational(0)};
  ReverseDirectionReport rep = verify_reverse_direction(omega, pair.structure, kj, v1);
  CHECK(rep.ok);
  CHECK(rep.omega_v1_kv1 == Rational(1));
  CHECK(rep.omega_jv1_jkv1 == Rational(-1));

  // conjugation invariance
  Rng rng(909);
  for (int trial = 0; trial < 6; ++trial) {
    Mat<Rational> t = aclab::testing::random_invertible(rng, 4);
    auto tinv = inverse(t);
    Mat<Rational> om = skew_matrix_of(omega);
    Mat<Rational> om_moved = mat_mul(mat_mul(transpose(*tinv, 4), om), *tinv);
    KForm omega_moved = form_from_skew_matrix(om_moved);
    auto j_moved =
        AlmostComplexStructure::from_matrix(mat_mul(mat_mul(t, pair.structure.matrix()), *tinv));
    auto k_moved = AlmostComplexStructure::from_matrix(mat_mul(mat_mul(t, k), *tinv));
    ReverseDirectionReport moved_rep =
        verify_reverse_direction(omega_moved, j_moved, k_moved, mat_vec(t, v1));
    CHECK(moved_rep.ok);
  }

  // rejections
  CHECK_THROWS_AS(verify_reverse_direction(omega, pair.structure, kj,
                                           Vec<Rational>(4, Rational(0))),
                  FrameError);
  CHECK_THROWS_AS(verify_reverse_direction(omega, kj, kj, v1), FrameError);  // kj not anti-inv
  // K not calibrated: reversing its sign makes the pairing negative definite
  Mat<Rational> kneg = k;
  for (auto& row : kneg)
    for (auto& x : row) x = -x;
  CHECK_THROWS_AS(verify_reverse_direction(omega, pair.structure,
                                           AlmostComplexStructure::from_matrix(kneg), v1),
                  FrameError);
}
