#ifndef QUOTIDX_ROOTS_HPP
#define QUOTIDX_ROOTS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "quotidx/matrix.hpp"

namespace quotidx {

using Cplx = std::complex<double>;

struct ComplexRoot {
  Cplx value;
  std::size_t multiplicity = 1;
  double residual = 0.0;  // scaled |p(root)| of the squarefree factor
};

struct ComplexPoint {
  std::vector<Cplx> coordinates;
  double residual = 0.0;
};

// Univariate polynomial helpers; coefficients are stored low degree first.
RatVec poly_derivative_1v(const RatVec &p);
RatVec poly_mul_1v(const RatVec &a, const RatVec &b);
// Euclidean division; returns {quotient, remainder}.
std::pair<RatVec, RatVec> poly_divmod_1v(const RatVec &a, const RatVec &b);
RatVec poly_gcd_1v(RatVec a, RatVec b);  // monic gcd
// Yun squarefree decomposition: result[i] has the factors of multiplicity i+1.
std::vector<RatVec> squarefree_decomposition(const RatVec &p);

// All complex roots of a nonzero polynomial, with multiplicities, by
// Aberth-Ehrlich simultaneous iteration on each squarefree factor.
// Throws std::runtime_error when the iteration fails to converge.
std::vector<ComplexRoot> complex_roots(const RatVec &p, double tol,
                                       std::uint64_t seed = 0);

}  // namespace quotidx

#endif
