#include "aclab/liealg.hpp"

#include "doctest.h"
#include "testutil.hpp"

using namespace aclab;
using aclab::testing::Rng;

TEST_CASE("structure equations of the 6-dimensional example algebra") {
  LieAlgebraSpec g = aclab::testing::example_nilmanifold();
  CHECK(g.dim() == 6);
  CHECK(ce_differential(g, KForm::basis(6, {3})) == KForm::basis(6, {1, 2}));
  CHECK(ce_differential(g, KForm::basis(6, {2, 6})).is_zero());
  CHECK(g.salamon_string() == "0,0,12,13,14,23");
}

TEST_CASE("su(2) x T^3 structure equations") {
  LieAlgebraSpec g = aclab::testing::su2xt3();
  CHECK(ce_differential(g, KForm::basis(6, {1})) == KForm::basis(6, {2, 3}));
  CHECK(ce_differential(g, KForm::basis(6, {2})) == -KForm::basis(6, {1, 3}));
  CHECK(g.salamon_string() == "23,-13,12,0,0,0");
}

TEST_CASE("Jacobi validation rejects d^2 != 0") {
  // de4 = e13 + e24 has d(de4) = e123 != 0.
  std::vector<KForm> d{KForm(4, 2), KForm(4, 2), parse_form("e12", 4), parse_form("e13+e24", 4)};
  try {
    LieAlgebraSpec::validate(std::move(d));
    FAIL("expected JacobiError");
  } catch (const JacobiError& e) {
    CHECK(e.basis_index == 4);
    CHECK(e.residual == "e123");
  }
  CHECK_THROWS_AS(LieAlgebraSpec::parse_salamon("0,0,12,13+24"), JacobiError);
}

TEST_CASE("abelian algebras validate") {
  LieAlgebraSpec t6 = aclab::testing::torus_algebra(6);
  CHECK(t6.is_abelian());
  CHECK(LieAlgebraSpec::parse_salamon("0,0,0,0,0,0") == t6);
}

TEST_CASE("d squares to zero on random forms") {
  Rng rng(2024);
  std::vector<LieAlgebraSpec> corpus{
      aclab::testing::example_nilmanifold(), aclab::testing::su2xt3(),
      aclab::testing::torus_algebra(6), LieAlgebraSpec::parse_salamon("0,0,12,13")};
  for (const auto& g : corpus) {
    for (int trial = 0; trial < 25; ++trial) {
      const int k = 1 + static_cast<int>(rng() % (g.dim() - 1));
      KForm a = aclab::testing::random_form(rng, g.dim(), k);
      CHECK(ce_differential(g, ce_differential(g, a)).is_zero());
    }
  }
}

TEST_CASE("graded Leibniz rule on random pairs") {
  Rng rng(77);
  std::vector<LieAlgebraSpec> corpus{aclab::testing::example_nilmanifold(),
                                     aclab::testing::su2xt3()};
  for (const auto& g : corpus) {
    for (int trial = 0; trial < 40; ++trial) {
      const int p = 1 + static_cast<int>(rng() % 3);
      const int q = 1 + static_cast<int>(rng() % (g.dim() - p - 1));
      KForm a = aclab::testing::random_form(rng, g.dim(), p);
      KForm b = aclab::testing::random_form(rng, g.dim(), q);
      KForm lhs = ce_differential(g, wedge(a, b));
      KForm rhs = wedge(ce_differential(g, a), b);
      KForm tail = wedge(a, ce_differential(g, b));
      if (p % 2 == 1) {
        rhs -= tail;
      } else {
        rhs += tail;
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("nilpotent filtration of the corpus algebras") {
  // de^i only involves e^{jk} with j, k < i.
  for (const char* s : {"0,0,12,13,14,23", "0,0,12,13"}) {
    LieAlgebraSpec g = LieAlgebraSpec::parse_salamon(s);
    for (int i = 1; i <= g.dim(); ++i)
      for (const auto& [idx, c] : g.d_of(i).terms()) CHECK(idx[1] < i);
  }
}

TEST_CASE("Salamon parser accepts signed rational multi-terms") {
  LieAlgebraSpec g = LieAlgebraSpec::parse_salamon("0,0,12+2*14,0");
  CHECK(g.d_of(3) == parse_form("e12+2*e14", 4));
  CHECK(LieAlgebraSpec::parse_salamon(g.salamon_string()) == g);

  LieAlgebraSpec h = LieAlgebraSpec::parse_salamon("0,0,0,0,0,0,0,0,0,0,{1,2},0");
  CHECK(h.dim() == 12);
  CHECK(h.d_of(11) == KForm::basis(12, {1, 2}));
  CHECK(LieAlgebraSpec::parse_salamon(h.salamon_string()) == h);

  CHECK_THROWS_AS(LieAlgebraSpec::parse_salamon("0,0,123,0"), ParseError);
  CHECK_THROWS_AS(LieAlgebraSpec::parse_salamon("0,0,12,15"), ParseError);  // index range
  CHECK_THROWS_AS(LieAlgebraSpec::parse_salamon(""), ParseError);
}

TEST_CASE("brackets read off the structure constants") {
  LieAlgebraSpec g = aclab::testing::su2xt3();
  // de^1 = e^23 gives e^1([e_2,e_3]) = -1.
  Vec<Rational> b23 = bracket(g, 2, 3);
  CHECK(b23[0] == Rational(-1));
  Vec<Rational> b32 = bracket(g, 3, 2);
  CHECK(b32[0] == Rational(1));
  Vec<Rational> b45 = bracket(g, 4, 5);
  for (const auto& x : b45) CHECK(is_zero(x));
}
