#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "quotidx/oracle.hpp"
#include "quotidx/residue.hpp"

using namespace quotidx;

namespace {

std::vector<std::string> vars(std::size_t n) {
  static const std::vector<std::string> names{"x", "y", "z", "w"};
  return {names.begin(), names.begin() + n};
}

MatrixAction antipodal(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(-1);
  return MatrixAction(AbelianGroup({2}), {m});
}

MatrixAction sign_flips(std::size_t n) {
  std::vector<long> factors(n, 2);
  std::vector<RatMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.at(j, j) = Rat(i == j ? -1 : 1);
    gens.push_back(m);
  }
  return MatrixAction(AbelianGroup(factors), gens);
}

MatrixAction trivial(std::size_t n) {
  RatMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id.at(i, i) = Rat(1);
  return MatrixAction(AbelianGroup({1}), {id});
}

Poly sum_of_powers(std::size_t n, int p) {
  Poly f(n);
  for (std::size_t i = 0; i < n; ++i) f = f + Poly::variable(n, i).pow(p);
  return f;
}

bool contains_degree_profile(const std::vector<Poly> &gens, const Poly &p) {
  return std::any_of(gens.begin(), gens.end(), [&p](const Poly &g) { return g == p; });
}

bool near(const Cplx &a, double re, double im, double tol = 1e-8) {
  return std::abs(a - Cplx(re, im)) < tol;
}

}  // namespace

TEST_CASE("invariant generators of sign actions are the even monomials") {
  auto gens = invariant_generators(sign_flips(1), 4);
  REQUIRE(gens.size() == 2);
  CHECK(contains_degree_profile(gens, parse_poly("x^2", vars(1))));
  CHECK(contains_degree_profile(gens, parse_poly("x^4", vars(1))));

  // Trivial group keeps every monomial.
  auto all = invariant_generators(trivial(1), 4);
  CHECK(all.size() == 4);

  // Antipodal plane: the three quadrics plus all quartics.
  auto plane = invariant_generators(antipodal(2), 2);
  CHECK(plane.size() == 3);
}

TEST_CASE("invariant generators are exactly invariant") {
  MatrixAction act = sign_flips(2);
  for (const Poly &g : invariant_generators(act, 4))
    for (const GroupElem &a : act.group().elements())
      CHECK(act_linear(g, act.element_matrix(a)) == g);
}

TEST_CASE("perturbation is built from invariant differentials") {
  MatrixAction act = antipodal(2);
  OneForm omega = differential(sum_of_powers(2, 4));
  auto gens = invariant_generators(act, 4);
  Perturbation p = perturb(omega, gens, Rat(1, 16), 5);
  CHECK(p.t == Rat(1, 16));
  REQUIRE(p.lambdas.size() == gens.size());
  // Every generator used is exactly invariant.
  for (const Poly &z : p.generators)
    for (const GroupElem &a : act.group().elements())
      CHECK(act_linear(z, act.element_matrix(a)) == z);
  // The perturbed form equals omega + t * sum lambda_j d z_j by construction.
  OneForm rebuilt = omega;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    OneForm dz = differential(p.generators[j]);
    for (std::size_t i = 0; i < rebuilt.components.size(); ++i)
      rebuilt.components[i] =
          rebuilt.components[i] + dz.components[i] * (p.t * p.lambdas[j]);
  }
  for (std::size_t i = 0; i < rebuilt.components.size(); ++i)
    CHECK(rebuilt.components[i] == p.form.components[i]);
}

TEST_CASE("singular points of shifted quadratics") {
  // (2x + 1) dx vanishes at -1/2.
  OneForm omega{{parse_poly("2*x + 1", vars(1))}};
  auto pts = singular_points(omega, 1e-10, 1);
  REQUIRE(pts.size() == 1);
  CHECK(near(pts[0].coordinates[0], -0.5, 0.0));
}

TEST_CASE("singular points of a double well") {
  // d(x^3 - x)/3 = (x^2 - 1/3) dx: zeros at +-1/sqrt(3).
  OneForm omega{{parse_poly("x^2 - 1/3", vars(1))}};
  auto pts = singular_points(omega, 1e-10, 2);
  REQUIRE(pts.size() == 2);
  double r = 1.0 / std::sqrt(3.0);
  CHECK(near(pts[0].coordinates[0], -r, 0.0));
  CHECK(near(pts[1].coordinates[0], r, 0.0));
}

TEST_CASE("singular points of the perturbed quartic") {
  // 4x^3 - 2x: zeros 0, +-1/sqrt(2).
  OneForm omega{{parse_poly("4*x^3 - 2*x", vars(1))}};
  auto pts = singular_points(omega, 1e-10, 3);
  REQUIRE(pts.size() == 3);
  double r = 1.0 / std::sqrt(2.0);
  CHECK(near(pts[0].coordinates[0], -r, 0.0));
  CHECK(near(pts[1].coordinates[0], 0.0, 0.0));
  CHECK(near(pts[2].coordinates[0], r, 0.0));
}

TEST_CASE("point count equals the global algebra dimension") {
  // A perturbed two-variable gradient with distinct roots.
  OneForm omega = differential(parse_poly("x^4 + y^4 - 1/2*x^2 - 1/3*y^2", vars(2)));
  auto pts = singular_points(omega, 1e-10, 4);
  MonomialOrder global{OrderKind::GlobalDegRevLex};
  CHECK(pts.size() == quotient_algebra(omega, global).dim());
  // All residuals certified small.
  for (const auto &p : pts) CHECK(p.residual < 1e-10);
}

TEST_CASE("infinite global quotients are reported as non-isolated") {
  OneForm omega{{parse_poly("x*y", vars(2)), parse_poly("x*y", vars(2))}};
  CHECK_THROWS_AS(singular_points(omega, 1e-10, 1), NonIsolatedError);
}

TEST_CASE("classification of the double well under the trivial group") {
  // Two nondegenerate real points with opposite Jacobian signs: sum 0, the
  // index of d(x^3/3 - x/3) at the origin.
  OneForm omega{{parse_poly("x^2 - 1/3", vars(1))}};
  auto pts = singular_points(omega, 1e-10, 2);
  auto orbits = classify(pts, omega, trivial(1), 1e-6);
  REQUIRE(orbits.size() == 2);
  for (const auto &o : orbits) {
    CHECK(o.point_indices.size() == 1);
    CHECK(o.real_in_closure);
    CHECK(o.stratum_k == 0);
  }
  // Points come sorted: -1/sqrt(3) has negative slope, +1/sqrt(3) positive.
  CHECK(orbits[0].contribution + orbits[1].contribution == 0);
  CHECK(conservation_sum(orbits) == 0);
}

TEST_CASE("classification of the perturbed quartic under the sign flip") {
  // Zeros 0, +-1/sqrt(2). The flip has det -1, so ker(det) = {e} and the
  // origin orbit (isotropy Z2) contributes 0; the pair contributes its sign.
  OneForm omega{{parse_poly("4*x^3 - 2*x", vars(1))}};
  auto pts = singular_points(omega, 1e-10, 2);
  auto orbits = classify(pts, omega, sign_flips(1), 1e-6);
  REQUIRE(orbits.size() == 2);
  long sum = 0;
  for (const auto &o : orbits) {
    if (o.point_indices.size() == 1) {
      CHECK(o.isotropy.size() == 2);
      CHECK_FALSE(o.isotropy_in_kernel);
      CHECK(o.contribution == 0);
    } else {
      CHECK(o.point_indices.size() == 2);
      CHECK(o.contribution == 1);
    }
    sum += o.contribution;
  }
  CHECK(conservation_sum(orbits) == sum);
  CHECK(sum == 1);
}

TEST_CASE("conjugate pairs contribute zero") {
  // (x^2 + 1) dx has only the conjugate pair +-i.
  OneForm omega{{parse_poly("x^2 + 1", vars(1))}};
  auto pts = singular_points(omega, 1e-10, 1);
  auto orbits = classify(pts, omega, trivial(1), 1e-6);
  REQUIRE(orbits.size() == 2);
  for (const auto &o : orbits) {
    CHECK_FALSE(o.real_in_closure);
    CHECK(o.contribution == 0);
  }
  CHECK(conservation_sum(orbits) == 0);
}

TEST_CASE("imaginary points become real in the closure under the antipodal map") {
  // (x^3 + x) dx is sign-flip invariant with zeros 0, +-i. The flip maps i
  // to its conjugate, so the pair lives on the imaginary stratum (k = 1) and
  // contributes sign((-1) * J(i)) = sign(-(3i^2 + 1)) = +1; the origin has
  // isotropy Z2 outside ker(det) and contributes 0.
  OneForm omega{{parse_poly("x^3 + x", vars(1))}};
  auto pts = singular_points(omega, 1e-10, 1);
  auto orbits = classify(pts, omega, antipodal(1), 1e-6);
  REQUIRE(orbits.size() == 2);
  long sum = 0;
  for (const auto &o : orbits) {
    if (o.point_indices.size() == 2) {
      CHECK(o.real_in_closure);
      CHECK(o.stratum_k == 1);
      CHECK(o.jacobian_sign == 1);
      CHECK(o.contribution == 1);
    } else {
      CHECK(o.isotropy.size() == 2);
      CHECK(o.contribution == 0);
    }
    sum += o.contribution;
  }
  CHECK(sum == 1);
}

TEST_CASE("ball radius flags far-away orbits") {
  OneForm omega{{parse_poly("x^2 - 9", vars(1))}};  // zeros +-3
  auto pts = singular_points(omega, 1e-10, 1);
  auto orbits = classify(pts, omega, sign_flips(1), 1e-6, 1.0);
  REQUIRE(orbits.size() == 1);
  CHECK_FALSE(orbits[0].inside_ball);
  CHECK(orbits[0].contribution == 0);
  CHECK(conservation_sum(orbits) == 0);
}

TEST_CASE("near-boundary points are ambiguous rather than silently kept") {
  OneForm omega{{parse_poly("x^2 - 1", vars(1))}};  // zeros exactly at +-1
  auto pts = singular_points(omega, 1e-10, 1);
  CHECK_THROWS_AS(classify(pts, omega, sign_flips(1), 1e-6, 1.0),
                  AmbiguousClassificationError);
}

TEST_CASE("oracle agrees with the symbolic signature on the catalog") {
  struct Case {
    const char *f;
    std::size_t n;
    bool anti;  // antipodal vs independent sign flips
  };
  const Case cases[] = {
      {"x^2", 1, true},
      {"x^2 + y^2", 2, true},
      {"x^4 + y^4", 2, false},
      {"x^2 - y^2", 2, true},
  };
  for (const Case &c : cases) {
    OneForm omega = differential(parse_poly(c.f, vars(c.n)));
    MatrixAction act = c.anti ? antipodal(c.n) : sign_flips(c.n);
    long sym = radial_index_report(omega, act).index;
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      OracleOptions opt;
      opt.seed = seed;
      OracleReport rep = oracle_check(omega, act, opt);
      CHECK(rep.sum == sym);
    }
  }
}

TEST_CASE("oracle sum is seed-independent on the quartic") {
  OneForm omega = differential(parse_poly("x^4 + y^2", vars(2)));
  MatrixAction act(AbelianGroup({2}), {[] {
                     RatMatrix m(2, 2);
                     m.at(0, 0) = Rat(-1);
                     m.at(1, 1) = Rat(1);
                     return m;
                   }()});
  long expected = radial_index_report(omega, act).index;
  for (std::uint64_t seed : {7ull, 8ull, 9ull}) {
    OracleOptions opt;
    opt.seed = seed;
    CHECK(oracle_check(omega, act, opt).sum == expected);
  }
}

TEST_CASE("report totals are internally consistent") {
  OneForm omega = differential(parse_poly("x^4 + y^4", vars(2)));
  OracleOptions opt;
  OracleReport rep = oracle_check(omega, sign_flips(2), opt);
  std::size_t escapees = 0;
  long sum = 0;
  for (const auto &o : rep.orbits) {
    if (!o.inside_ball) ++escapees;
    sum += o.contribution;
  }
  CHECK(escapees == rep.escapees);
  CHECK(sum == rep.sum);
  // Orbits partition the points.
  std::size_t covered = 0;
  for (const auto &o : rep.orbits) covered += o.point_indices.size();
  CHECK(covered == rep.points.size());
}
