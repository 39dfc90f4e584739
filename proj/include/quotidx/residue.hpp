#ifndef QUOTIDX_RESIDUE_HPP
#define QUOTIDX_RESIDUE_HPP

#include <memory>

#include "quotidx/group.hpp"
#include "quotidx/localalg.hpp"

namespace quotidx {

// Raised when a pairing that the theory asserts non-degenerate turns out
// degenerate; carries the diagnostic Gram matrix.
struct DegeneratePairingError : std::runtime_error {
  explicit DegeneratePairingError(const std::string &msg) : std::runtime_error(msg) {}
};

struct NonInvariantFormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The module of top forms modulo omega ^ (top-1 forms), with the
// det-twisted action of the group on the monomial basis.
class OmegaModule {
 public:
  // Verifies exact invariance of omega under the action.
  OmegaModule(OneForm omega, MatrixAction action);

  const OneForm &omega() const { return omega_; }
  const MatrixAction &action() const { return action_; }
  const QuotientAlgebra &algebra() const { return *algebra_; }
  std::size_t dim() const { return algebra_->dim(); }

  // Twisted action phi -> det(g) * (phi o g^{-1}) on the monomial basis.
  RatMatrix twist_matrix(const GroupElem &g) const;
  // Untwisted action phi -> phi o g^{-1}.
  RatMatrix untwisted_matrix(const GroupElem &g) const;

  // Coordinates of the Jacobian class.
  const RatVec &jacobian_class() const { return jac_class_; }

  // Basis of the fixed space of every twist matrix.
  std::vector<RatVec> invariant_basis() const;

 private:
  RatMatrix action_on_basis(const GroupElem &g, bool twisted) const;

  OneForm omega_;
  MatrixAction action_;
  std::shared_ptr<QuotientAlgebra> algebra_;
  RatVec jac_class_;
  mutable std::map<GroupElem, RatMatrix> twist_cache_;
  mutable std::map<GroupElem, RatMatrix> untwist_cache_;
};

struct ResiduePairing {
  RatVec functional;            // the G-invariant covector ell
  RatMatrix gram_full;          // ell(b_i b_j) on the full module
  RatMatrix gram_invariant;     // restriction to the invariant basis
  std::vector<RatVec> invariant_basis;
  InertiaTriple inertia_full;
  InertiaTriple inertia_invariant;

  long signature() const { return inertia_invariant.signature(); }
};

// Canonical G-invariant functional with ell(Jacobian class) = 1: dual
// completion in descending local order, then averaging over the untwisted
// action. Throws on zero Jacobian class.
RatVec residue_functional(const OmegaModule &m);

// Gram matrices and exact inertias of B(phi,psi) = ell(phi psi); asserts
// non-degeneracy of both forms (DegeneratePairingError otherwise).
ResiduePairing residue_pairing(const OmegaModule &m);

// Same but with a caller-supplied functional (symmetrized and rescaled here);
// used for the ell-independence checks. Does not assert non-degeneracy.
ResiduePairing residue_pairing_with_functional(const OmegaModule &m, RatVec ell_raw);

// Isotypic block of the G-signature report.
struct SignatureBlock {
  std::vector<long> cyclotomic_orders;  // per generator
  std::vector<RatVec> basis;
  InertiaTriple inertia;
  bool is_sign_character = false;  // all orders in {1,2}
  std::vector<int> character;      // +-1 per generator when is_sign_character
};

// Restricts the full pairing to the common cyclotomic blocks of the twist
// action and reports the inertia of each block.
std::vector<SignatureBlock> g_signature(const OmegaModule &m, const ResiduePairing &p);

struct RadialIndexReport {
  std::size_t dim = 0;
  std::size_t invariant_dim = 0;
  ResiduePairing pairing;      // meaningful when dim > 0
  long index = 0;              // sgn of the invariant pairing = radial index
  std::vector<SignatureBlock> blocks;
};

// Full symbolic pipeline: quotient algebra, invariant pairing, signature
// (= the radial index of the pushed-down form on the real quotient).
RadialIndexReport radial_index_report(const OneForm &omega, const MatrixAction &action);

}  // namespace quotidx

#endif
