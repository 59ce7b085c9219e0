#include <boost/math/special_functions/legendre.hpp>

#include <cmath>
#include <numbers>

#include "rigidity/confgroup.hpp"
#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& x, std::vector<double>& w) {
  const std::vector<double> pos = boost::math::legendre_p_zeros<double>(order);
  x.clear();
  w.clear();
  for (double r : pos) {
    const double dp = boost::math::legendre_p_prime<double>(order, r);
    const double wt = 2.0 / ((1.0 - r * r) * dp * dp);
    x.push_back(r);
    w.push_back(wt);
    if (r != 0.0) {
      x.push_back(-r);
      w.push_back(wt);
    }
  }
}

}  // namespace

double SphereGrid::total_weight() const {
  double s = 0;
  for (double w : weights) s += w;
  return s;
}

double SphereGrid::integrate(const std::function<double(const Eigen::VectorXd&)>& f) const {
  double s = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
  return s;
}

SphereGrid make_sphere_grid(int n, int order) {
  if (n != 2 && n != 3) throw DomainError("sphere grids are provided for n = 2 and n = 3");
  if (order < 1) throw DomainError("grid order must be positive");
  std::vector<double> ct, wt;
  gauss_legendre(order, ct, wt);
  const int nphi = 2 * order;
  SphereGrid s2;
  s2.n = 2;
  s2.order = order;
  for (std::size_t a = 0; a < ct.size(); ++a) {
    const double st = std::sqrt(std::max(0.0, 1.0 - ct[a] * ct[a]));
    for (int b = 0; b < nphi; ++b) {
      const double phi = 2 * kPi * b / nphi;
      Eigen::VectorXd y(3);
      y << st * std::cos(phi), st * std::sin(phi), ct[a];
      s2.nodes.push_back(y);
      s2.weights.push_back(wt[a] * 2 * kPi / nphi);
    }
  }
  if (n == 2) return s2;

  // S^3: y = (sin(chi) s, cos(chi)), measure sqrt(1 - t^2) dt dS^2 with t = cos(chi)
  SphereGrid s3;
  s3.n = 3;
  s3.order = order;
  for (int i = 1; i <= order; ++i) {
    const double theta = kPi * i / (order + 1);
    const double t = std::cos(theta), st = std::sin(theta);
    const double w = kPi / (order + 1) * st * st;
    for (std::size_t m = 0; m < s2.nodes.size(); ++m) {
      Eigen::VectorXd y(4);
      y << st * s2.nodes[m], t;
      s3.nodes.push_back(y);
      s3.weights.push_back(w * s2.weights[m]);
    }
  }
  return s3;
}

}  // namespace rigidity
