#include <doctest.h>

#include <random>

#include "mosaic/laurent.hpp"

using namespace mosaic;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-6, 6), coeff(-3, 3), terms(0, 4);
  LaurentPoly p;
  for (int i = terms(rng); i > 0; --i) p += LaurentPoly::monomial(coeff(rng), exp(rng));
  return p;
}

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("basic arithmetic") {
    const LaurentPoly a = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
    const LaurentPoly sq = a * a;
    CHECK(sq == LaurentPoly::monomial(1, 2) + LaurentPoly(2) + LaurentPoly::monomial(1, -2));
    CHECK(sq.min_exponent() == -2);
    CHECK(sq.max_exponent() == 2);
    CHECK(sq.coeff(0) == 2);
    CHECK(sq.coeff(1) == 0);
    CHECK((a - a).is_zero());
    CHECK(a.pow(2) == sq);
    CHECK(a.pow(0) == LaurentPoly(1));
  }

  TEST_CASE("text form") {
    const LaurentPoly p = LaurentPoly::monomial(-1, -7) + LaurentPoly::monomial(1, -3) + LaurentPoly::monomial(1, 5);
    CHECK(p.to_string() == "-A^-7 + A^-3 + A^5");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly::monomial(2, 4).to_string() == "2A^4");
    CHECK((LaurentPoly(1) - LaurentPoly::monomial(1, 1)).to_string('t') == "1 - t");
  }

  TEST_CASE("substitutions") {
    const LaurentPoly p = LaurentPoly::monomial(3, 2) + LaurentPoly::monomial(-1, -1);
    CHECK(p.inverted() == LaurentPoly::monomial(3, -2) + LaurentPoly::monomial(-1, 1));
    CHECK(p.substituted_power(-4) == LaurentPoly::monomial(3, -8) + LaurentPoly::monomial(-1, 4));
    CHECK(p.shifted(3) == LaurentPoly::monomial(3, 5) + LaurentPoly::monomial(-1, 2));
    CHECK(p.inverted().inverted() == p);
  }

  TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(3);
    for (int i = 0; i < 500; ++i) {
      const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == LaurentPoly());
      CHECK(-(-a) == a);
      CHECK((a * b).inverted() == a.inverted() * b.inverted());
      if (a == b) CHECK(a.hash() == b.hash());
    }
  }
}
