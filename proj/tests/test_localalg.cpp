#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quotidx/localalg.hpp"

using namespace quotidx;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kX{"x"};
const MonomialOrder kLocal{OrderKind::LocalNegDegRevLex};
const MonomialOrder kGlobal{OrderKind::GlobalDegRevLex};

}  // namespace

TEST_CASE("local order: 1 is the largest monomial") {
  CHECK(kLocal.greater({0}, {1}));
  CHECK(kLocal.greater({1}, {2}));
  CHECK_FALSE(kLocal.greater({2}, {1}));
  // Same degree falls back to revlex.
  CHECK(kLocal.greater({2, 0}, {0, 2}));
}

TEST_CASE("global order is a well-order refining degree") {
  CHECK(kGlobal.greater({1}, {0}));
  CHECK(kGlobal.greater({2, 0}, {1, 1}) == kLocal.greater({2, 0}, {1, 1}));
  CHECK(kGlobal.greater({0, 3}, {2, 0}));
}

TEST_CASE("standard basis properties") {
  std::vector<Poly> gens{parse_poly("x^3 + x*y", kXY), parse_poly("y^2 + x^2*y", kXY)};
  for (const MonomialOrder &ord : {kLocal, kGlobal}) {
    auto sb = standard_basis(gens, ord);
    REQUIRE(!sb.empty());
    // Unit leading coefficients, pairwise non-divisible leads.
    for (std::size_t i = 0; i < sb.size(); ++i) {
      CHECK(leading_coeff(sb[i], ord) == Rat(1));
      for (std::size_t j = 0; j < sb.size(); ++j)
        if (i != j)
          CHECK_FALSE(divides(leading_monomial(sb[i], ord),
                              leading_monomial(sb[j], ord)));
    }
  }
}

TEST_CASE("Milnor numbers of one-variable germs") {
  // d(x^2): dim 1.
  QuotientAlgebra q2({parse_poly("2*x", kX)}, kLocal);
  CHECK(q2.dim() == 1);
  // d(x^4): dim 3, basis 1, x, x^2.
  QuotientAlgebra q4({parse_poly("4*x^3", kX)}, kLocal);
  CHECK(q4.dim() == 3);
}

TEST_CASE("Milnor number of cusp and Fermat germs") {
  QuotientAlgebra cusp({parse_poly("3*x^2", kXY), parse_poly("2*y", kXY)}, kLocal);
  CHECK(cusp.dim() == 2);
  // x^3 + y^3: mu = 4.
  QuotientAlgebra fermat({parse_poly("3*x^2", kXY), parse_poly("3*y^2", kXY)}, kLocal);
  CHECK(fermat.dim() == 4);
  // x^4 + y^4: mu = 9.
  QuotientAlgebra quartic({parse_poly("4*x^3", kXY), parse_poly("4*y^3", kXY)}, kLocal);
  CHECK(quartic.dim() == 9);
}

TEST_CASE("local germ ignores far-away zeros") {
  // f = x^2 (x-1)^2 has gradient 4x^3 - 6x^2 + 2x; locally <x>, dim 1.
  Poly g = parse_poly("4*x^3 - 6*x^2 + 2*x", kX);
  QuotientAlgebra local({g}, kLocal);
  CHECK(local.dim() == 1);
  // Globally all three roots count.
  QuotientAlgebra global({g}, kGlobal);
  CHECK(global.dim() == 3);
}

TEST_CASE("local units give the zero algebra") {
  // 3x^2 - t with t != 0 is a unit at the origin together with y.
  QuotientAlgebra q({parse_poly("3*x^2 + 1", kXY), parse_poly("2*y", kXY)}, kLocal);
  CHECK(q.dim() == 0);
}

TEST_CASE("non-isolated singularity is detected") {
  CHECK_THROWS_AS(
      QuotientAlgebra({parse_poly("x*y", kXY), parse_poly("x*y", kXY)}, kLocal),
      NonIsolatedError);
  CHECK_THROWS_AS(QuotientAlgebra({parse_poly("x^2*y", kXY),
                                   parse_poly("x*y^2", kXY)},
                                  kGlobal),
                  NonIsolatedError);
}

TEST_CASE("normal form is linear and kills the ideal") {
  std::vector<Poly> gens{parse_poly("4*x^3", kXY), parse_poly("4*y^3", kXY)};
  QuotientAlgebra q(gens, kLocal);
  Poly a = parse_poly("x^2*y + 3*x", kXY);
  Poly b = parse_poly("y^2 - 1/2", kXY);
  RatVec na = q.normal_form(a);
  RatVec nb = q.normal_form(b);
  RatVec nsum = q.normal_form(a + b * Rat(3));
  for (std::size_t i = 0; i < q.dim(); ++i)
    CHECK(nsum[i] == na[i] + Rat(3) * nb[i]);
  // Generators reduce to zero.
  for (const Poly &g : gens)
    for (const Rat &c : q.normal_form(g * parse_poly("1 + x + y^2", kXY)))
      CHECK(c == 0);
}

TEST_CASE("basis monomials reduce to themselves") {
  QuotientAlgebra q({parse_poly("4*x^3", kXY), parse_poly("4*y^3", kXY)}, kLocal);
  for (std::size_t j = 0; j < q.dim(); ++j) {
    RatVec nf = q.normal_form(Poly::term(q.monomial_basis()[j], Rat(1)));
    for (std::size_t i = 0; i < q.dim(); ++i)
      CHECK(nf[i] == (i == j ? Rat(1) : Rat(0)));
  }
}

TEST_CASE("multiplication matrices commute and satisfy the defining relations") {
  QuotientAlgebra q({parse_poly("4*x^3 + y", kXY), parse_poly("4*y^3 + x", kXY)},
                    kGlobal);
  const RatMatrix &mx = q.mult_matrix(0);
  const RatMatrix &my = q.mult_matrix(1);
  CHECK(mx * my == my * mx);
  // The generators vanish on the algebra: 4 Mx^3 + My = 0.
  RatMatrix rel = mx.pow(3) * Rat(4) + my;
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = 0; j < q.dim(); ++j) CHECK(rel.at(i, j) == 0);
}

TEST_CASE("mult matrix columns are normal forms of x * basis") {
  QuotientAlgebra q({parse_poly("4*x^3", kX)}, kLocal);
  REQUIRE(q.dim() == 3);
  Poly x = Poly::variable(1, 0);
  for (std::size_t j = 0; j < q.dim(); ++j) {
    RatVec nf = q.normal_form(x * Poly::term(q.monomial_basis()[j], Rat(1)));
    for (std::size_t i = 0; i < q.dim(); ++i)
      CHECK(q.mult_matrix(0).at(i, j) == nf[i]);
  }
}

TEST_CASE("global dimension counts solutions of a nondegenerate system") {
  // (x^2 - 1)(x^2 - 4) style: 3x^2 - 3 has two roots; pair with y.
  QuotientAlgebra q({parse_poly("3*x^2 - 3", kXY), parse_poly("2*y", kXY)}, kGlobal);
  CHECK(q.dim() == 2);
}

TEST_CASE("quotient_algebra wraps the coefficient ideal of a form") {
  OneForm omega = differential(parse_poly("x^4 + y^4", kXY));
  QuotientAlgebra q = quotient_algebra(omega, kLocal);
  CHECK(q.dim() == 9);
}
