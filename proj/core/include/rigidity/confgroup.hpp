#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

namespace rigidity {

enum class GeneratorTag { ROTATION, BOOST, COMPOSITE };

// Element of SO_0(n+1,1) acting on S^n in R^{n+1}, form diag(1,...,1,-1).
class MoebiusElement {
 public:
  MoebiusElement(Eigen::MatrixXd matrix, GeneratorTag tag);

  static MoebiusElement identity(int n);
  // Rotation by `angle` in the (i, j) coordinate plane of R^{n+1}.
  static MoebiusElement rotation(int n, int i, int j, double angle);
  static MoebiusElement rotation(const Eigen::MatrixXd& orthogonal);
  // Hyperbolic rotation with rapidity t in the (axis, n+1) plane; axis defaults to n.
  static MoebiusElement boost(int n, double rapidity, int axis = -1);
  // Random rotation followed by a boost of the given rapidity along a random axis.
  static MoebiusElement random(int n, double rapidity, std::uint64_t seed);

  int dim() const { return n_; }
  const Eigen::MatrixXd& matrix() const { return m_; }
  GeneratorTag tag() const { return tag_; }

  MoebiusElement operator*(const MoebiusElement& o) const;
  MoebiusElement inverse() const;
  double lorentz_defect() const;

 private:
  int n_;
  Eigen::MatrixXd m_;
  GeneratorTag tag_;
};

Eigen::VectorXd act(const MoebiusElement& A, const Eigen::VectorXd& y);
// Omega with phi^* g0 = Omega^2 g0, from the projective formula.
double conformal_factor(const MoebiusElement& A, const Eigen::VectorXd& y);
// Derivative of y -> A.y as a map of R^{n+1} (restrict to tangent vectors at y).
Eigen::MatrixXd differential(const MoebiusElement& A, const Eigen::VectorXd& y);
// Columns of the differential on an orthonormal tangent frame at y, by central differences
// along great circles.
Eigen::MatrixXd differential_fd(const MoebiusElement& A, const Eigen::VectorXd& y, double h = 1e-5);
// Omega recovered from the finite-difference Gram matrix.
double conformal_factor_fd(const MoebiusElement& A, const Eigen::VectorXd& y, double h = 1e-5);

// Orthonormal basis of the tangent space y^perp, as an (n+1) x n matrix.
Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& y);

struct SphereGrid {
  int n = 0;
  int order = 0;
  std::vector<Eigen::VectorXd> nodes;
  std::vector<double> weights;

  double total_weight() const;
  double integrate(const std::function<double(const Eigen::VectorXd&)>& f) const;
};

// n = 2: Gauss-Legendre in cos(theta) times 2*order uniform longitudes.
// n = 3: Chebyshev (second kind) in cos(chi) times the n = 2 grid.
SphereGrid make_sphere_grid(int n, int order);

// Symmetric two-tensor field given by ambient (n+1) x (n+1) matrix values.
using TensorField = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

// Tangential, trace-free part P K P - tr(P K P)/n P with P = I - y y^T.
Eigen::MatrixXd tangent_tracefree(const Eigen::MatrixXd& K, const Eigen::VectorXd& y);
TensorField project_tangent_tracefree(TensorField field);
// Entries are random polynomials of degree <= `degree` in the ambient coordinates.
TensorField random_polynomial_field(int n, int degree, std::uint64_t seed);
TensorField round_metric_field(int n);

struct RepWeight {
  int n = 0;
  double rho = 0;
  double nu = 0;

  RepWeight(int n_, double nu_) : n(n_), rho(0.5 * n_), nu(nu_) {}
};

// (u_nu(phi) k)(y) = Omega(y)^{rho + nu - 2} (phi^* k)(y).
TensorField u_action(const RepWeight& w, const MoebiusElement& A, TensorField field);

// Field components in the tangent frame at each node.
struct SampledField {
  std::vector<Eigen::MatrixXd> values;
};

SampledField sample(const TensorField& field, const SphereGrid& grid);
SampledField u_action(const RepWeight& w, const MoebiusElement& A, const TensorField& field, const SphereGrid& grid);
double pairing(const SampledField& h, const SampledField& k, const SphereGrid& grid);

struct PairingInvariance {
  double original = 0;
  double transformed = 0;
  double residual = 0;  // |original - transformed| / (1 + |original|)
};

PairingInvariance check_pairing_invariance(const TensorField& h, const TensorField& k, const MoebiusElement& A,
                                           const SphereGrid& grid);

// Stereographic chart from the pole e_n: x = y' / (1 - y_n), metric lambda^2 delta, lambda = 2/(1+|x|^2).
Eigen::VectorXd to_chart(const Eigen::VectorXd& y);
Eigen::VectorXd from_chart(const Eigen::VectorXd& x);
Eigen::MatrixXd from_chart_jacobian(const Eigen::VectorXd& x);
double chart_lambda(const Eigen::VectorXd& x);

struct ChartVectorField {
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> value;
  // Optional exact Jacobian (dX^i/dx^j); finite differences are used when empty.
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;
};

Eigen::MatrixXd jacobian_fd(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x,
                            double h);

// S X = L_X g - (2/n)(div_g X) g in chart components.
Eigen::MatrixXd ahlfors_chart(const ChartVectorField& X, const Eigen::VectorXd& x, double h = 1e-5);

// Chart realization of a Moebius map with its Jacobian.
struct ChartMap {
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> map;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;

  static ChartMap translation(const Eigen::VectorXd& b);
  static ChartMap dilation(int n, double s);
  static ChartMap rotation(const Eigen::MatrixXd& R);
  static ChartMap inversion(int n);
  static ChartMap from_moebius(const MoebiusElement& A);
  // (this o inner)(x) = this(inner(x)).
  ChartMap compose(const ChartMap& inner) const;
};

// max over points of |Omega^{-2} phi^*(S X) - S(phi^* X)| / (1 + |S(phi^* X)|).
double check_ahlfors_covariance(const ChartVectorField& X, const ChartMap& phi, const std::vector<Eigen::VectorXd>& points,
                                double h = 1e-5);

// Rotation, Killing and conformal-gradient fields of the chart: (n+1)(n+2)/2 of them.
std::vector<ChartVectorField> conformal_killing_fields(int n);

}  // namespace rigidity
