#include <cmath>
#include <random>

#include "rigidity/confgroup.hpp"
#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

Eigen::MatrixXd lorentz_form(int n) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Identity(n + 2, n + 2);
  J(n + 1, n + 1) = -1;
  return J;
}

Eigen::VectorXd lift(const Eigen::VectorXd& y) {
  Eigen::VectorXd Y(y.size() + 1);
  Y << y, 1.0;
  return Y;
}

Eigen::MatrixXd random_orthogonal(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd M(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) M(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
  Eigen::MatrixXd Q = qr.householderQ();
  if (Q.determinant() < 0) Q.col(0) *= -1;
  return Q;
}

}  // namespace

MoebiusElement::MoebiusElement(Eigen::MatrixXd matrix, GeneratorTag tag)
    : n_(static_cast<int>(matrix.rows()) - 2), m_(std::move(matrix)), tag_(tag) {
  if (m_.rows() != m_.cols() || n_ < 1) throw std::invalid_argument("Moebius matrix must be (n+2) x (n+2)");
}

MoebiusElement MoebiusElement::identity(int n) {
  return MoebiusElement(Eigen::MatrixXd::Identity(n + 2, n + 2), GeneratorTag::ROTATION);
}

MoebiusElement MoebiusElement::rotation(int n, int i, int j, double angle) {
  if (i < 0 || j < 0 || i > n || j > n || i == j) throw std::invalid_argument("rotation plane must use two of the first n+1 axes");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 2, n + 2);
  const double c = std::cos(angle), s = std::sin(angle);
  m(i, i) = c;
  m(j, j) = c;
  m(i, j) = -s;
  m(j, i) = s;
  return MoebiusElement(m, GeneratorTag::ROTATION);
}

MoebiusElement MoebiusElement::rotation(const Eigen::MatrixXd& orthogonal) {
  const int d = static_cast<int>(orthogonal.rows());
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d + 1, d + 1);
  m.topLeftCorner(d, d) = orthogonal;
  return MoebiusElement(m, GeneratorTag::ROTATION);
}

MoebiusElement MoebiusElement::boost(int n, double rapidity, int axis) {
  if (axis < 0) axis = n;
  if (axis > n) throw std::invalid_argument("boost axis must be one of the first n+1 axes");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 2, n + 2);
  const double c = std::cosh(rapidity), s = std::sinh(rapidity);
  m(axis, axis) = c;
  m(n + 1, n + 1) = c;
  m(axis, n + 1) = s;
  m(n + 1, axis) = s;
  return MoebiusElement(m, GeneratorTag::BOOST);
}

MoebiusElement MoebiusElement::random(int n, double rapidity, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const MoebiusElement r1 = rotation(random_orthogonal(n + 1, rng));
  const MoebiusElement r2 = rotation(random_orthogonal(n + 1, rng));
  return r1 * boost(n, rapidity) * r2;
}

MoebiusElement MoebiusElement::operator*(const MoebiusElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("Moebius elements of different dimension");
  const GeneratorTag t = (tag_ == GeneratorTag::ROTATION && o.tag_ == GeneratorTag::ROTATION) ? GeneratorTag::ROTATION
                                                                                             : GeneratorTag::COMPOSITE;
  return MoebiusElement(m_ * o.m_, t);
}

MoebiusElement MoebiusElement::inverse() const {
  const Eigen::MatrixXd J = lorentz_form(n_);
  return MoebiusElement(J * m_.transpose() * J, tag_);
}

double MoebiusElement::lorentz_defect() const {
  const Eigen::MatrixXd J = lorentz_form(n_);
  return (m_.transpose() * J * m_ - J).cwiseAbs().maxCoeff();
}

Eigen::VectorXd act(const MoebiusElement& A, const Eigen::VectorXd& y) {
  const int n = A.dim();
  if (y.size() != n + 1) throw std::invalid_argument("point must lie in R^{n+1}");
  const Eigen::VectorXd Y = A.matrix() * lift(y);
  const double tau = Y(n + 1);
  if (std::abs(tau) < 1e-300) throw Degenerate("projective normalization vanished");
  return Y.head(n + 1) / tau;
}

double conformal_factor(const MoebiusElement& A, const Eigen::VectorXd& y) {
  const int n = A.dim();
  const double tau = A.matrix().row(n + 1).dot(lift(y));
  if (std::abs(tau) < 1e-300) throw Degenerate("projective normalization vanished");
  return 1.0 / tau;
}

Eigen::MatrixXd differential(const MoebiusElement& A, const Eigen::VectorXd& y) {
  const int n = A.dim();
  const Eigen::MatrixXd& M = A.matrix();
  const Eigen::VectorXd Y = M * lift(y);
  const double tau = Y(n + 1);
  if (std::abs(tau) < 1e-300) throw Degenerate("projective normalization vanished");
  const Eigen::VectorXd phi = Y.head(n + 1) / tau;
  return (M.topLeftCorner(n + 1, n + 1) - phi * M.row(n + 1).head(n + 1)) / tau;
}

Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& y) {
  const int d = static_cast<int>(y.size());
  Eigen::MatrixXd M(d, d + 1);
  M << y, Eigen::MatrixXd::Identity(d, d);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
  const Eigen::MatrixXd Q = qr.householderQ();
  return Q.rightCols(d - 1);
}

Eigen::MatrixXd differential_fd(const MoebiusElement& A, const Eigen::VectorXd& y, double h) {
  const Eigen::MatrixXd E = tangent_frame(y);
  Eigen::MatrixXd D(y.size(), E.cols());
  for (int i = 0; i < E.cols(); ++i) {
    const Eigen::VectorXd yp = std::cos(h) * y + std::sin(h) * E.col(i);
    const Eigen::VectorXd ym = std::cos(h) * y - std::sin(h) * E.col(i);
    D.col(i) = (act(A, yp) - act(A, ym)) / (2 * h);
  }
  return D;
}

double conformal_factor_fd(const MoebiusElement& A, const Eigen::VectorXd& y, double h) {
  const Eigen::MatrixXd D = differential_fd(A, y, h);
  return std::sqrt((D.transpose() * D).trace() / static_cast<double>(D.cols()));
}

}  // namespace rigidity
