#ifndef QUOTIDX_ORACLE_HPP
#define QUOTIDX_ORACLE_HPP

#include <cstdint>
#include <limits>

#include "quotidx/group.hpp"
#include "quotidx/localalg.hpp"

namespace quotidx {

// Raised when a numerical decision lands too close to a tolerance boundary;
// callers resample the perturbation and retry.
struct AmbiguousClassificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invariant polynomials up to the given total degree: Reynolds averages of
// all monomials, filtered to a linearly independent set.
std::vector<Poly> invariant_generators(const MatrixAction &action, int max_degree);

struct Perturbation {
  Rat t;
  RatVec lambdas;
  std::vector<Poly> generators;
  OneForm form;  // omega + t * sum lambda_j d(z_j)
};

Perturbation perturb(const OneForm &omega, const std::vector<Poly> &generators,
                     const Rat &t, std::uint64_t seed);

// All complex zeros of the coefficient ideal via eigenvalues of the
// multiplication matrix of a random linear form on the global quotient
// algebra, coordinates recovered from left eigenvectors. Throws
// AmbiguousClassificationError on clustered eigenvalues or residuals above
// tol (callers resample), NonIsolatedError when the global quotient is
// infinite-dimensional.
std::vector<ComplexPoint> singular_points(const OneForm &omega, double tol,
                                          std::uint64_t seed);

struct ClassifiedOrbit {
  std::vector<std::size_t> point_indices;  // into the singular point list
  ComplexPoint representative;
  Subgroup isotropy;
  bool isotropy_in_kernel = false;  // isotropy inside ker(det)
  bool real_in_closure = false;     // some g maps the point to its conjugate
  GroupElem witness;                // such a g (smallest minus-eigenspace)
  std::size_t stratum_k = 0;        // dim of the witness's minus eigenspace
  int jacobian_sign = 0;            // sign of (-1)^k * Jacobian at the point
  bool inside_ball = true;
  long contribution = 0;
};

// Groups the points into orbits and applies the counting rule: conjugate
// pairs and orbits with isotropy outside ker(det) contribute zero; orbits
// mapped to their conjugate contribute the stratum-twisted Jacobian sign.
// Orbits outside the ball are kept but flagged and excluded from the sum.
std::vector<ClassifiedOrbit> classify(const std::vector<ComplexPoint> &points,
                                      const OneForm &omega,
                                      const MatrixAction &action, double tol,
                                      double ball_radius =
                                          std::numeric_limits<double>::infinity());

long conservation_sum(const std::vector<ClassifiedOrbit> &orbits);

struct OracleOptions {
  std::uint64_t seed = 1;
  Rat t = Rat(1, 64);
  int max_degree = 4;
  double tol_root = 1e-10;
  double tol_classify = 1e-6;
  double ball_radius = 1.0;
  int max_resample = 12;
};

struct OracleReport {
  Perturbation perturbation;
  std::vector<ComplexPoint> points;
  std::vector<ClassifiedOrbit> orbits;
  std::size_t escapees = 0;  // orbits outside the ball
  long sum = 0;
};

// Full cross-check pipeline with resampling on degenerate or ambiguous draws.
OracleReport oracle_check(const OneForm &omega, const MatrixAction &action,
                          const OracleOptions &options = {});

}  // namespace quotidx

#endif
