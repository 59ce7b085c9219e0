#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "rigidity/errors.hpp"
#include "rigidity/greens.hpp"

namespace rigidity {

namespace {

// Least-squares constant term on a geometric grid over [lo, hi].
double fit_constant(const RadialGreen& g, const std::vector<int>& orders, double lo, double hi, int nodes, int degree,
                    double& data_scale) {
  const int cols = static_cast<int>(orders.size()) + degree + 1;
  if (nodes < cols) throw FitUnstable("fit has fewer nodes than unknowns");
  Eigen::MatrixXd A(nodes, cols);
  Eigen::VectorXd b(nodes);
  const double ratio = std::pow(hi / lo, 1.0 / (nodes - 1));
  for (int i = 0; i < nodes; ++i) {
    const double r = lo * std::pow(ratio, i);
    int c = 0;
    for (int s : orders) A(i, c++) = std::pow(r, s);
    for (int d = 0; d <= degree; ++d) A(i, c++) = std::pow(r, d);
    b(i) = g(r);
    data_scale = std::max(data_scale, std::abs(b(i)));
  }
  const Eigen::VectorXd scale = A.colwise().norm().cwiseInverse();
  const Eigen::MatrixXd As = A * scale.asDiagonal();
  const Eigen::VectorXd x = As.colPivHouseholderQr().solve(b);
  const int constant_col = static_cast<int>(orders.size());
  return x(constant_col) * scale(constant_col);
}

}  // namespace

RegularPart regular_part(const RadialGreen& g, const RegularPartOptions& opt) {
  if (!(opt.r_lo > 0 && opt.r_hi > opt.r_lo)) throw DomainError("regular_part needs 0 < r_lo < r_hi");
  const int levels = std::max(0, opt.richardson_levels);
  // Windows shrink by 1/2; the fit error then scales like (1/2)^{d+1}, (1/2)^{d+2}, ...
  std::vector<std::vector<double>> R(static_cast<std::size_t>(levels + 1));
  double data_scale = 0;
  for (int i = 0; i <= levels; ++i) {
    const double f = std::ldexp(1.0, -i);
    R[i].push_back(fit_constant(g, g.singular_orders(), opt.r_lo * f, opt.r_hi * f, opt.nodes, opt.poly_degree,
                                data_scale));
    for (int l = 1; l <= i; ++l) {
      const double w = std::ldexp(1.0, opt.poly_degree + l);
      R[i].push_back((w * R[i][l - 1] - R[i - 1][l - 1]) / (w - 1));
    }
  }
  RegularPart out;
  out.value = R[levels][levels];
  out.error = levels > 0 ? std::abs(R[levels][levels] - R[levels - 1][levels - 1]) : 0.0;
  // cancellation of the singular terms limits the constant to roughly ten digits of the largest sample
  const double floor = 1e-10 * data_scale;
  if (!std::isfinite(out.value) || out.error > opt.tolerance * std::max(std::abs(out.value), floor))
    throw FitUnstable("regular part error estimate " + std::to_string(out.error) + " exceeds tolerance");
  return out;
}

}  // namespace rigidity
