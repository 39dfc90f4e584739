#ifndef QUOTIDX_LOCALALG_HPP
#define QUOTIDX_LOCALALG_HPP

#include <stdexcept>

#include "quotidx/poly.hpp"

namespace quotidx {

// Raised when the quotient by the given ideal is not finite-dimensional.
struct NonIsolatedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OrderKind {
  LocalNegDegRevLex,  // 1 is the largest monomial; germ at the origin
  GlobalDegRevLex,    // well-order; total multiplicity over C^n
};

struct MonomialOrder {
  OrderKind kind = OrderKind::GlobalDegRevLex;

  // a > b in the order?
  bool greater(const Monomial &a, const Monomial &b) const;
};

// Leading monomial/coefficient of p under the order. p must be nonzero.
Monomial leading_monomial(const Poly &p, const MonomialOrder &order);
Rat leading_coeff(const Poly &p, const MonomialOrder &order);

// Buchberger completion. For the local order, reductions use Mora's weak
// normal form with ecart selection so that termination holds. The result has
// pairwise non-divisible leading monomials and unit leading coefficients.
std::vector<Poly> standard_basis(const std::vector<Poly> &gens, const MonomialOrder &order);

// Finite-dimensional quotient algebra R/<A_1..A_n> with monomial basis and
// exact multiplication matrices.
class QuotientAlgebra {
 public:
  // Throws NonIsolatedError when the quotient is infinite-dimensional.
  QuotientAlgebra(const std::vector<Poly> &gens, const MonomialOrder &order);

  const MonomialOrder &order() const { return order_; }
  const std::vector<Poly> &basis_polys() const { return sb_; }
  const std::vector<Monomial> &monomial_basis() const { return monos_; }
  std::size_t dim() const { return monos_.size(); }
  std::size_t nvars() const { return nvars_; }

  // Exact coordinates of the class of p in the monomial basis.
  RatVec normal_form(const Poly &p) const;

  // Matrix of multiplication by x_i on the monomial basis (columns = images).
  const RatMatrix &mult_matrix(std::size_t var) const { return mult_[var]; }

  // Index of a monomial in the basis, or npos.
  std::size_t basis_index(const Monomial &m) const;

 private:
  Poly reduce(Poly p) const;

  MonomialOrder order_;
  std::size_t nvars_;
  std::vector<Poly> sb_;          // reduced standard basis
  std::vector<Monomial> leads_;   // leading monomials of sb_
  std::vector<Monomial> monos_;   // standard monomials (quotient basis)
  std::vector<RatMatrix> mult_;
  int trunc_degree_ = -1;  // local order: monomials of degree >= this lie in the ideal
};

// Quotient algebra of the 1-form's coefficient ideal.
QuotientAlgebra quotient_algebra(const OneForm &omega, const MonomialOrder &order);

}  // namespace quotidx

#endif
