#include "quotidx/matrix.hpp"

#include <sstream>

namespace quotidx {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec> &rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix &other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("dimension mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + other.data_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix &other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("dimension mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - other.data_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix &other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch");
  RatMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat &a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        r.at(i, j) += a * other.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator*(const Rat &c) const {
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

RatMatrix RatMatrix::pow(unsigned long e) const {
  if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
  RatMatrix result = identity(rows_);
  RatMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool RatMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RatVec RatMatrix::col(std::size_t j) const {
  RatVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::string RatMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      out << (j ? ", " : "") << rat_to_string(at(i, j));
    out << "]";
  }
  out << "]";
  return out.str();
}

RatVec mat_vec(const RatMatrix &m, const RatVec &v) {
  if (m.cols() != v.size()) throw std::invalid_argument("dimension mismatch");
  RatVec r(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

RatVec vec_mat(const RatVec &v, const RatMatrix &m) {
  if (m.rows() != v.size()) throw std::invalid_argument("dimension mismatch");
  RatVec r(m.cols(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m.at(i, j);
  }
  return r;
}

Rat dot(const RatVec &a, const RatVec &b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<std::size_t> rref(RatMatrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const RatMatrix &m) {
  RatMatrix c = m;
  return rref(c).size();
}

std::vector<RatVec> kernel_basis(const RatMatrix &m) {
  RatMatrix c = m;
  std::vector<std::size_t> pivots = rref(c);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(m.cols(), Rat(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -c.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat determinant(const RatMatrix &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix c = m;
  std::size_t n = c.rows();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && c.at(p, col) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(c.at(p, j), c.at(col, j));
      det = -det;
    }
    det *= c.at(col, col);
    Rat inv = 1 / c.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (c.at(i, col) == 0) continue;
      Rat f = c.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) c.at(i, j) -= f * c.at(col, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::invalid_argument("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<RatVec> solve(const RatMatrix &m, const RatVec &b) {
  if (m.rows() != b.size()) throw std::invalid_argument("dimension mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVec x(m.cols(), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols());
  return x;
}

InertiaTriple inertia(const RatMatrix &s) {
  if (!s.is_symmetric()) throw std::invalid_argument("inertia requires a symmetric matrix");
  RatMatrix a = s;
  std::vector<std::size_t> live(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) live[i] = i;
  InertiaTriple t;
  while (!live.empty()) {
    // 1x1 pivot on a nonzero diagonal entry.
    std::size_t pk = live.size();
    for (std::size_t k = 0; k < live.size(); ++k)
      if (a.at(live[k], live[k]) != 0) { pk = k; break; }
    if (pk < live.size()) {
      std::size_t p = live[pk];
      Rat d = a.at(p, p);
      if (d > 0) ++t.n_plus; else ++t.n_minus;
      live.erase(live.begin() + pk);
      for (std::size_t ri = 0; ri < live.size(); ++ri)
        for (std::size_t ci = ri; ci < live.size(); ++ci) {
          std::size_t r = live[ri], c = live[ci];
          Rat v = a.at(r, c) - a.at(r, p) * a.at(p, c) / d;
          a.at(r, c) = v;
          a.at(c, r) = v;
        }
      continue;
    }
    // Diagonal is zero on the remaining block: look for a hyperbolic pair.
    bool found = false;
    for (std::size_t ki = 0; ki < live.size() && !found; ++ki)
      for (std::size_t kj = ki + 1; kj < live.size() && !found; ++kj) {
        std::size_t i = live[ki], j = live[kj];
        if (a.at(i, j) == 0) continue;
        found = true;
        Rat b = a.at(i, j);
        ++t.n_plus;
        ++t.n_minus;
        std::vector<std::size_t> rest;
        for (std::size_t m2 : live)
          if (m2 != i && m2 != j) rest.push_back(m2);
        // Schur complement of the block [[0,b],[b,0]].
        for (std::size_t ri = 0; ri < rest.size(); ++ri)
          for (std::size_t ci = ri; ci < rest.size(); ++ci) {
            std::size_t r = rest[ri], c = rest[ci];
            Rat v = a.at(r, c) -
                    (a.at(r, j) * a.at(i, c) + a.at(r, i) * a.at(j, c)) / b;
            a.at(r, c) = v;
            a.at(c, r) = v;
          }
        live = rest;
      }
    if (!found) {
      t.n_zero += live.size();
      break;
    }
  }
  return t;
}

RatVec char_poly(const RatMatrix &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly of non-square matrix");
  std::size_t n = m.rows();
  RatVec coeffs(n + 1, Rat(0));
  coeffs[n] = 1;
  // Faddeev-LeVerrier: M_1 = M, c_{n-k} = -tr(M_k)/k, M_{k+1} = M (M_k + c_{n-k} I).
  RatMatrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    Rat tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
    Rat c = -tr / Rat(static_cast<long>(k));
    coeffs[n - k] = c;
    if (k < n) {
      RatMatrix next = mk;
      for (std::size_t i = 0; i < n; ++i) next.at(i, i) += c;
      mk = m * next;
    }
  }
  return coeffs;
}

}  // namespace quotidx
