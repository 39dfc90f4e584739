#ifndef QUOTIDX_QUANTUM_HPP
#define QUOTIDX_QUANTUM_HPP

#include "quotidx/residue.hpp"

namespace quotidx {

struct Sector {
  GroupElem g;
  std::vector<RatVec> fixed_basis;  // rational basis of ker(g - I)
  std::size_t n_g = 0;
  Poly restricted_f;                // in n_g variables
  std::size_t inv_dim = 0;
  InertiaTriple inertia;            // (1,0,0) by convention when n_g = 0
};

struct QuantumReport {
  std::vector<Sector> sectors;
  std::size_t total_dim = 0;
  long orbifold_dim = 0;   // sum of (-1)^{n_g} inv_dim
  long real_signature = 0; // sum of sector signatures
};

struct Restriction {
  std::vector<RatVec> fixed_basis;
  std::size_t n_g = 0;
  Poly restricted_f;
  MatrixAction residual_action;  // same group, acting on the fixed subspace
};

// f composed with the inclusion of the fixed subspace of g, together with the
// G-action restricted to that subspace.
Restriction restrict_to_fixed(const Poly &f, const GroupElem &g, const MatrixAction &action);

Sector sector(const Poly &f, const GroupElem &g, const MatrixAction &action);

QuantumReport quantum_report(const Poly &f, const MatrixAction &action);

// Diagonal route: the group is a subgroup of the diagonal torus given by
// integer character vectors mod m; element a acts by x_j -> zeta_m^{a_j} x_j.
struct DiagonalAction {
  long modulus = 1;
  std::size_t nvars = 0;
  std::vector<std::vector<long>> generators;  // character vectors mod m

  std::vector<std::vector<long>> elements() const;  // closure of the generators
};

struct DiagonalSector {
  std::vector<long> g;      // character vector of the sector element
  std::size_t n_g = 0;
  std::size_t dim = 0;
};

struct DiagonalReport {
  std::vector<DiagonalSector> sectors;
  std::size_t total_dim = 0;
  long orbifold_dim = 0;
};

// Per-sector invariant dimensions by pure congruence counting on the monomial
// basis of the restricted Milnor algebra: x^k survives iff for every group
// element a, sum_j a_j (k_j + 1) = 0 mod m over the fixed coordinates.
DiagonalReport diagonal_sector_dims(const Poly &f, const DiagonalAction &action);

// True iff the exponential grading element (w_j * m / d mod m) lies in the
// diagonal group. Throws when d does not divide m.
bool admissibility_check(const std::vector<long> &weights, long degree,
                         const DiagonalAction &action);

}  // namespace quotidx

#endif
