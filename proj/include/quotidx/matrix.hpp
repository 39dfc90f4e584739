#ifndef QUOTIDX_MATRIX_HPP
#define QUOTIDX_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "quotidx/rational.hpp"

namespace quotidx {

using RatVec = std::vector<Rat>;

// Dense matrix over exact rationals.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat &at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat &at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RatMatrix &other) const = default;

  RatMatrix operator+(const RatMatrix &other) const;
  RatMatrix operator-(const RatMatrix &other) const;
  RatMatrix operator*(const RatMatrix &other) const;
  RatMatrix operator*(const Rat &c) const;
  RatMatrix transpose() const;
  RatMatrix pow(unsigned long e) const;

  bool is_identity() const;
  bool is_symmetric() const;

  // Column j as a vector.
  RatVec col(std::size_t j) const;

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

RatVec mat_vec(const RatMatrix &m, const RatVec &v);
RatVec vec_mat(const RatVec &v, const RatMatrix &m);  // row vector times matrix
Rat dot(const RatVec &a, const RatVec &b);

struct InertiaTriple {
  std::size_t n_plus = 0;
  std::size_t n_zero = 0;
  std::size_t n_minus = 0;

  long signature() const {
    return static_cast<long>(n_plus) - static_cast<long>(n_minus);
  }
  std::size_t dim() const { return n_plus + n_zero + n_minus; }
  bool operator==(const InertiaTriple &) const = default;
};

// Row-reduce in place; returns pivot column indices.
std::vector<std::size_t> rref(RatMatrix &m);

std::size_t rank(const RatMatrix &m);

// Exact basis of the null space of m.
std::vector<RatVec> kernel_basis(const RatMatrix &m);

Rat determinant(const RatMatrix &m);

// Inverse of a square matrix; throws std::invalid_argument if singular.
RatMatrix inverse(const RatMatrix &m);

// Solves m*x = b exactly. Returns nullopt when inconsistent; when the system is
// underdetermined an arbitrary particular solution is returned.
std::optional<RatVec> solve(const RatMatrix &m, const RatVec &b);

// Inertia of a symmetric matrix by congruence elimination: 1x1 pivots on
// nonzero diagonal entries, hyperbolic 2x2 pivots when the remaining diagonal
// vanishes.
InertiaTriple inertia(const RatMatrix &s);

// Monic characteristic polynomial, coefficients low degree first
// (c[0] + c[1] t + ... + t^n). Faddeev-LeVerrier.
RatVec char_poly(const RatMatrix &m);

}  // namespace quotidx

#endif
