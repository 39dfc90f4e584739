#ifndef QUOTIDX_POLY_HPP
#define QUOTIDX_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "quotidx/matrix.hpp"
#include "quotidx/roots.hpp"

namespace quotidx {

// Exponent vector; length is the ambient variable count.
using Monomial = std::vector<int>;

int total_degree(const Monomial &m);
bool divides(const Monomial &a, const Monomial &b);  // a | b
Monomial mono_mul(const Monomial &a, const Monomial &b);
Monomial mono_div(const Monomial &a, const Monomial &b);  // a / b, assumes b | a
Monomial mono_lcm(const Monomial &a, const Monomial &b);

// Multivariate polynomial over exact rationals.
class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rat &c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly term(const Monomial &m, const Rat &c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat> &terms() const { return terms_; }

  void add_term(const Monomial &m, const Rat &c);
  Rat coeff(const Monomial &m) const;

  Poly operator+(const Poly &other) const;
  Poly operator-(const Poly &other) const;
  Poly operator-() const;
  Poly operator*(const Poly &other) const;
  Poly operator*(const Rat &c) const;
  Poly pow(unsigned e) const;
  bool operator==(const Poly &other) const = default;

  Poly derivative(std::size_t var) const;
  int degree() const;  // max total degree, -1 for zero

  // Drops every term of total degree >= bound.
  Poly truncate_degree(int bound) const;

  Cplx eval(const std::vector<Cplx> &point) const;
  Rat eval_rat(const RatVec &point) const;

  // Composition with the linear map x -> m*x (exact substitution).
  Poly substitute_linear(const RatMatrix &m) const;

  // Substitute each variable by the given polynomial.
  Poly substitute(const std::vector<Poly> &values, std::size_t out_nvars) const;

  std::string to_string(const std::vector<std::string> &var_names) const;

 private:
  std::size_t nvars_;
  std::map<Monomial, Rat> terms_;  // nonzero coefficients only
};

// A 1-form sum A_i dx_i stored by its coefficient polynomials.
struct OneForm {
  std::vector<Poly> components;

  std::size_t nvars() const { return components.size(); }
};

// Gradient 1-form df.
OneForm differential(const Poly &f);

// det(dA_i/dx_j), exact.
Poly jacobian_det(const OneForm &omega);

// p composed with g^{-1}; throws on singular g.
Poly act_linear(const Poly &p, const RatMatrix &g);

// Parses the polynomial syntax: signed sums of terms "c * x^a * y^b", rational
// coefficients "p/q", "^" exponents, implicit coefficient 1. Throws
// std::invalid_argument with a description on bad input.
Poly parse_poly(const std::string &text, const std::vector<std::string> &var_names);

}  // namespace quotidx

#endif
