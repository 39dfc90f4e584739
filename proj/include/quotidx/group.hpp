#ifndef QUOTIDX_GROUP_HPP
#define QUOTIDX_GROUP_HPP

#include <map>
#include <set>
#include <vector>

#include "quotidx/matrix.hpp"

namespace quotidx {

// Element of Z/m_1 x ... x Z/m_k as an exponent tuple.
using GroupElem = std::vector<long>;

class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<long> invariant_factors);

  const std::vector<long> &invariant_factors() const { return factors_; }
  std::size_t order() const { return order_; }
  long exponent() const;  // lcm of the invariant factors

  GroupElem identity() const { return GroupElem(factors_.size(), 0); }
  GroupElem add(const GroupElem &a, const GroupElem &b) const;
  GroupElem neg(const GroupElem &a) const;
  long elem_order(const GroupElem &a) const;
  std::vector<GroupElem> elements() const;  // deterministic enumeration

 private:
  std::vector<long> factors_;
  std::size_t order_;
};

// A subgroup as a canonical sorted element list.
using Subgroup = std::vector<GroupElem>;

struct SubgroupLattice {
  std::vector<Subgroup> subgroups;  // sorted by (size, elements); [0] is trivial
  // inclusion[i][j] = true iff subgroups[i] <= subgroups[j]
  std::vector<std::vector<bool>> inclusion;

  std::size_t index_of(const Subgroup &h) const;  // throws if absent
};

// All subgroups of an abelian group; throws when |G| exceeds the bound.
SubgroupLattice subgroup_lattice(const AbelianGroup &g, std::size_t max_order = 256);

Subgroup subgroup_closure(const AbelianGroup &g, std::vector<GroupElem> gens);

// Linear action of an abelian group on R^n by one rational matrix per
// invariant-factor generator.
class MatrixAction {
 public:
  // Validates commutativity and generator orders; throws std::invalid_argument.
  MatrixAction(AbelianGroup group, std::vector<RatMatrix> generators);

  const AbelianGroup &group() const { return group_; }
  std::size_t nvars() const { return n_; }
  const std::vector<RatMatrix> &generators() const { return generators_; }

  RatMatrix element_matrix(const GroupElem &a) const;
  // Determinant sign of an element (+1/-1).
  int det_sign(const GroupElem &a) const;
  // Kernel of det as a subgroup.
  Subgroup det_kernel() const;
  bool is_in_sl(const GroupElem &a) const { return det_sign(a) == 1; }

 private:
  AbelianGroup group_;
  std::size_t n_;
  std::vector<RatMatrix> generators_;
  std::vector<std::vector<RatMatrix>> gen_powers_;  // [i][k] = generators_[i]^k
};

// Exact kernels of (g - I) and (g + I).
struct PmEigenspaces {
  std::vector<RatVec> plus;
  std::vector<RatVec> minus;
};
PmEigenspaces pm_eigenspaces(const RatMatrix &g);

struct Stratum {
  GroupElem g;                   // witnessing element (first found)
  std::vector<RatVec> plus_basis;
  std::vector<RatVec> minus_basis;
  std::size_t k = 0;             // dim R^n_{g-}
};

// Strata R^n_{g+} + i R^n_{g-} over even-order elements plus the real stratum
// g = e; deduplicated by the row-reduced (plus, minus) bases.
std::vector<Stratum> stratify(const MatrixAction &action);

// Cyclotomic polynomial Phi_d, coefficients low degree first.
RatVec cyclotomic_poly(long d);

// Common refinement of ker Phi_d(M) over all matrices in `ops` (which must
// commute and have finite order). Each returned subspace basis is invariant
// under every op. `labels[i][j]` is the d with Phi_d(op_j)|block_i = 0.
struct IsotypicBlock {
  std::vector<RatVec> basis;
  std::vector<long> cyclotomic_orders;  // one per operator
};
std::vector<IsotypicBlock> cyclotomic_refinement(const std::vector<RatMatrix> &ops);

// Refinement of R^n under the generator matrices of the action.
std::vector<IsotypicBlock> isotypic_refinement(const MatrixAction &action);

}  // namespace quotidx

#endif
