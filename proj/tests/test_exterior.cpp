#include "aclab/exterior.hpp"

#include "doctest.h"
#include "testutil.hpp"

using namespace aclab;
using aclab::testing::Rng;

namespace {
KForm basis6(std::initializer_list<int> idx) { return KForm::basis(6, MultiIndex(idx)); }
}  // namespace

TEST_CASE("wedge of basis forms") {
  CHECK(wedge(KForm::basis(6, {1}), KForm::basis(6, {2})) == basis6({1, 2}));
  CHECK(wedge(basis6({1, 2}), basis6({1, 2})).is_zero());

  // anti-invariant square with one cross term
  KForm a = basis6({2, 6}) - basis6({1, 5});
  KForm sq = wedge(a, a);
  KForm expected = KForm::basis(6, {1, 2, 5, 6}) * Rational(2);
  CHECK(sq == expected);
}

TEST_CASE("wedge_power") {
  KForm sympl = KForm::basis(4, {1, 2}) + KForm::basis(4, {3, 4});
  CHECK(wedge_power(sympl, 2) == KForm::basis(4, {1, 2, 3, 4}) * Rational(2));

  KForm a = basis6({2, 6}) - basis6({1, 5});
  CHECK(wedge_power(a, 3).is_zero());

  Rng rng(7);
  KForm any = aclab::testing::random_form(rng, 6, 2);
  CHECK(wedge_power(any, 0) == KForm::scalar(6, Rational(1)));
}

TEST_CASE("wedge on mismatched dimensions is rejected") {
  CHECK_THROWS_AS(wedge(KForm::basis(4, {1}), KForm::basis(6, {1})), DimensionMismatch);
}

TEST_CASE("realify of (1,0)-form products") {
  auto psi1 = parse_complex_form("e1+i*e2", 6);
  auto psi2 = parse_complex_form("e4+i*e6", 6);

  auto [re12, im12] = realify(wedge(psi1, psi2));
  CHECK(re12 == basis6({1, 4}) - basis6({2, 6}));
  CHECK(im12 == basis6({1, 6}) + basis6({2, 4}));

  auto [rec, imc] = realify(wedge(psi1, conjugate(psi2)));
  CHECK(rec == basis6({1, 4}) + basis6({2, 6}));
  CHECK(imc == basis6({2, 4}) - basis6({1, 6}));

  auto [rer, imr] = realify(complexify(basis6({1, 2})));
  CHECK(rer == basis6({1, 2}));
  CHECK(imr.is_zero());
}

TEST_CASE("graded commutativity, associativity, bilinearity on random forms") {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 4 + static_cast<int>(rng() % 5);  // 4..8
    const int p = 1 + static_cast<int>(rng() % 3);
    const int q = 1 + static_cast<int>(rng() % 3);
    const int r = 1 + static_cast<int>(rng() % 2);
    KForm a = aclab::testing::random_form(rng, dim, p);
    KForm b = aclab::testing::random_form(rng, dim, q);
    KForm c = aclab::testing::random_form(rng, dim, r);

    KForm ab = wedge(a, b);
    KForm ba = wedge(b, a);
    if ((p * q) % 2 == 1) {
      CHECK(ab == -ba);
    } else {
      CHECK(ab == ba);
    }
    CHECK(wedge(ab, c) == wedge(a, wedge(b, c)));
    KForm a2 = aclab::testing::random_form(rng, dim, p);  // same degree for linearity
    CHECK(wedge(a + a2 * rat(2), c) == wedge(a, c) + wedge(a2, c) * rat(2));
    CHECK(wedge(a, KForm(dim, q)).is_zero());
  }
}

TEST_CASE("2-form powers vanish above the dimension") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 4 + static_cast<int>(rng() % 5);
    KForm a = aclab::testing::random_form(rng, dim, 2);
    for (int m = 0; m <= dim / 2 + 1; ++m) {
      KForm pw = wedge_power(a, m);
      CHECK(pw.degree() == 2 * m);
      if (2 * m > dim) CHECK(pw.is_zero());
    }
  }
}

TEST_CASE("realify respects conjugation") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    ComplexKForm c(6, 2);
    auto basis = multi_index_basis(6, 2);
    for (int t = 0; t < 4; ++t)
      c.add_term(basis[rng() % basis.size()],
                 GaussianRational(aclab::testing::random_rational(rng),
                                  aclab::testing::random_rational(rng)));
    auto [re, im] = realify(c);
    auto [rec, imc] = realify(conjugate(c));
    CHECK(rec == re);
    CHECK(imc == -im);
  }
}

TEST_CASE("term normalization") {
  KForm f(6, 2);
  f.add_term({2, 1}, Rational(1));
  CHECK(f == -basis6({1, 2}));
  f.add_term({1, 2}, Rational(1));
  CHECK(f.is_zero());
  CHECK(f.terms().empty());
  f.add_term({1, 1}, Rational(5));  // repeated index dies
  CHECK(f.is_zero());
}

TEST_CASE("print/parse round trip") {
  CHECK(to_string(parse_form("3/2*e12 - e34", 6)) == "3/2*e12 - e34");
  CHECK(parse_form("0", 6).is_zero());
  CHECK(to_string(KForm(6, 2)) == "0");

  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 4 + static_cast<int>(rng() % 9);  // up to 12 exercises e{..}
    const int deg = 1 + static_cast<int>(rng() % 3);
    KForm f = aclab::testing::random_form(rng, dim, deg);
    if (f.is_zero()) continue;  // "0" cannot carry the degree back
    CHECK(parse_form(to_string(f), dim) == f);
  }
  for (int trial = 0; trial < 30; ++trial) {
    ComplexKForm c(6, 1);
    auto basis = multi_index_basis(6, 1);
    for (int t = 0; t < 3; ++t)
      c.add_term(basis[rng() % basis.size()],
                 GaussianRational(aclab::testing::random_rational(rng),
                                  aclab::testing::random_rational(rng)));
    CHECK(parse_complex_form(to_string(c), 6) == c);
  }
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_form("e12 + e1", 6), ParseError);   // mixed degree
  CHECK_THROWS_AS(parse_form("e17", 6), ParseError);        // index out of range
  CHECK_THROWS_AS(parse_form("2*", 6), ParseError);
  CHECK_THROWS_AS(parse_form("e12", 12), ParseError);       // digits need dim <= 9
  CHECK_THROWS_AS(parse_form("i*e12", 6), ParseError);      // complex coefficient in real form
  CHECK(parse_complex_form("e{1,12}", 12).degree() == 2);
}
