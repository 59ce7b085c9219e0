#include "rigidity/qcurv.hpp"

#include <sstream>

#include "rigidity/errors.hpp"

namespace rigidity {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), ExactScalar(0)) {}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::outer(const RationalVector& u, const RationalVector& v) {
  const int r = static_cast<int>(u.size()), c = static_cast<int>(v.size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
  return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  RationalMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  RationalMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch");
  RationalMatrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const ExactScalar& a = (*this)(i, l);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) m(i, j) += a * o(l, j);
    }
  return m;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  RationalVector out(static_cast<std::size_t>(rows_), ExactScalar(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

RationalMatrix RationalMatrix::operator*(const ExactScalar& c) const {
  RationalMatrix m = *this;
  for (auto& x : m.data_) x *= c;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ExactScalar RationalMatrix::trace() const {
  ExactScalar t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << '[';
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << to_string((*this)(i, j));
    os << "]\n";
  }
  return os.str();
}

ExactScalar dot(const RationalVector& u, const RationalVector& v) {
  ExactScalar s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

ExactScalar frobenius(const RationalMatrix& a, const RationalMatrix& b) { return (a.transpose() * b).trace(); }

ExactScalar sigma_laplacian(const RationalVector& xi) { return -dot(xi, xi); }

RationalMatrix sigma_hessian(const RationalVector& xi) { return RationalMatrix::outer(xi, xi) * ExactScalar(-1); }

bool is_trace_free(const RationalMatrix& k) { return k.trace() == 0; }

bool is_transverse(const RationalMatrix& k, const RationalVector& xi) {
  for (const auto& x : k * xi)
    if (x != 0) return false;
  return true;
}

namespace {

int dim_of(const RationalVector& xi, const RationalMatrix& k) {
  const int n = static_cast<int>(xi.size());
  if (k.rows() != n || k.cols() != n) throw std::invalid_argument("k must be n x n with n = dim xi");
  if (!k.is_symmetric()) throw PreconditionViolation("k must be symmetric");
  return n;
}

void require_tt(const RationalVector& xi, const RationalMatrix& k) {
  if (!is_trace_free(k)) throw PreconditionViolation("k must be trace-free");
  if (!is_transverse(k, xi)) throw PreconditionViolation("k must be transverse (k xi = 0)");
}

int require_even_dim(const RationalVector& xi, const RationalMatrix& k) {
  const int n = dim_of(xi, k);
  if (n < 4 || n % 2 != 0) throw DomainError("the obstruction and Q-curvature symbols need even n >= 4");
  return n;
}

}  // namespace

// dScal = -<Ric,k> + div div k - Delta tr k; the first term is lower order.
ExactScalar lin_scalar_symbol(const RationalVector& xi, const RationalMatrix& k) {
  dim_of(xi, k);
  const ExactScalar div_div = -dot(xi, k * xi);  // (i xi)(i xi) k
  return div_div - sigma_laplacian(xi) * k.trace();
}

// Symbol of the linearized Ricci tensor,
//   1/2 |xi|^2 k - 1/2 (xi (k xi)^T + (k xi) xi^T) + 1/2 xi xi^T tr k,
// with the divergence sign chosen so that its trace reproduces lin_scalar_symbol.
RationalMatrix lin_ricci_symbol(const RationalVector& xi, const RationalMatrix& k) {
  dim_of(xi, k);
  const ExactScalar half(1, 2);
  const RationalVector kxi = k * xi;
  const RationalMatrix sym = RationalMatrix::outer(xi, kxi) + RationalMatrix::outer(kxi, xi);
  return (ExactScalar(-1) * sigma_laplacian(xi) * half) * k - half * sym - half * k.trace() * sigma_hessian(xi);
}

RationalMatrix lin_schouten_symbol_full(const RationalVector& xi, const RationalMatrix& k) {
  const int n = dim_of(xi, k);
  if (n < 3) throw DomainError("Schouten tensor needs n >= 3");
  const RationalMatrix g = RationalMatrix::identity(n);
  const ExactScalar scal = lin_scalar_symbol(xi, k);
  return (lin_ricci_symbol(xi, k) - (scal / (2 * (n - 1))) * g) * ExactScalar(1, n - 2);
}

RationalMatrix lin_schouten_symbol(const RationalVector& xi, const RationalMatrix& k) {
  const int n = dim_of(xi, k);
  if (n < 3) throw DomainError("Schouten tensor needs n >= 3");
  require_tt(xi, k);
  return (-sigma_laplacian(xi) / (2 * (n - 2))) * k;
}

// dO = Delta^{n/2-2} (Delta dP - 1/(2(n-1)) Hess dScal) + lower order
RationalMatrix lin_obstruction_symbol(const RationalVector& xi, const RationalMatrix& k) {
  const int n = require_even_dim(xi, k);
  require_tt(xi, k);
  const ExactScalar lap = sigma_laplacian(xi);
  const RationalMatrix inner =
      lap * lin_schouten_symbol(xi, k) - (lin_scalar_symbol(xi, k) / (2 * (n - 1))) * sigma_hessian(xi);
  return pow_int(lap, n / 2 - 2) * inner;
}

RationalMatrix obstruction_symbol_direct(const RationalVector& xi, const RationalMatrix& k) {
  const int n = require_even_dim(xi, k);
  return (-pow_int(sigma_laplacian(xi), n / 2) / (2 * (n - 2))) * k;
}

RationalMatrix q_hessian_symbol(const RationalVector& xi, const RationalMatrix& k) {
  const int n = require_even_dim(xi, k);
  const ExactScalar sign = (n / 2) % 2 == 0 ? 1 : -1;
  return (sign * ExactScalar(n - 2, 2)) * lin_obstruction_symbol(xi, k);
}

RationalMatrix ahlfors_symbol(const RationalVector& xi, const RationalVector& X) {
  const int n = static_cast<int>(xi.size());
  if (static_cast<int>(X.size()) != n) throw std::invalid_argument("ahlfors_symbol: dimension mismatch");
  return RationalMatrix::outer(xi, X) + RationalMatrix::outer(X, xi) -
         (ExactScalar(2, n) * dot(xi, X)) * RationalMatrix::identity(n);
}

}  // namespace rigidity
