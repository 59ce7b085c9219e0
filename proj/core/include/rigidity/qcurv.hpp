#pragma once

#include <string>
#include <vector>

#include "rigidity/exact.hpp"

namespace rigidity {

using RationalVector = std::vector<ExactScalar>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);
  static RationalMatrix outer(const RationalVector& u, const RationalVector& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  ExactScalar& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const ExactScalar& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix operator*(const ExactScalar& c) const;
  // Hidden friend: found only through RationalMatrix arguments, so it never competes with Eigen products.
  friend RationalMatrix operator*(const ExactScalar& c, const RationalMatrix& m) { return m * c; }
  bool operator==(const RationalMatrix& o) const = default;

  RationalMatrix transpose() const;
  ExactScalar trace() const;
  bool is_symmetric() const;
  bool is_zero() const;
  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<ExactScalar> data_;
};

ExactScalar dot(const RationalVector& u, const RationalVector& v);
// Frobenius pairing tr(A^T B).
ExactScalar frobenius(const RationalMatrix& a, const RationalMatrix& b);

// Symbol conventions, sigma(d_j) = i xi_j: every operator below routes through these two.
ExactScalar sigma_laplacian(const RationalVector& xi);       // -|xi|^2
RationalMatrix sigma_hessian(const RationalVector& xi);      // -xi xi^T

ExactScalar lin_scalar_symbol(const RationalVector& xi, const RationalMatrix& k);
// Leading symbol of the linearized Ricci tensor for arbitrary symmetric k.
RationalMatrix lin_ricci_symbol(const RationalVector& xi, const RationalMatrix& k);
// Linearized Schouten tensor assembled from the Ricci and scalar symbols.
RationalMatrix lin_schouten_symbol_full(const RationalVector& xi, const RationalMatrix& k);
// -sigma(Delta) k / (2(n-2)); k must be trace-free and transverse.
RationalMatrix lin_schouten_symbol(const RationalVector& xi, const RationalMatrix& k);
RationalMatrix lin_obstruction_symbol(const RationalVector& xi, const RationalMatrix& k);
// -(1/(2(n-2))) sigma(Delta)^{n/2} k, written out directly.
RationalMatrix obstruction_symbol_direct(const RationalVector& xi, const RationalMatrix& k);
RationalMatrix q_hessian_symbol(const RationalVector& xi, const RationalMatrix& k);

RationalMatrix ahlfors_symbol(const RationalVector& xi, const RationalVector& X);

bool is_trace_free(const RationalMatrix& k);
bool is_transverse(const RationalMatrix& k, const RationalVector& xi);

}  // namespace rigidity
