#include <cmath>
#include <random>

#include "rigidity/confgroup.hpp"

namespace rigidity {

namespace {

void monomials(int vars, int degree, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == vars) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (int e : cur) used += e;
  for (int e = 0; e + used <= degree; ++e) {
    cur.push_back(e);
    monomials(vars, degree, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Eigen::MatrixXd tangent_tracefree(const Eigen::MatrixXd& K, const Eigen::VectorXd& y) {
  const int d = static_cast<int>(y.size());
  const Eigen::MatrixXd P = Eigen::MatrixXd::Identity(d, d) - y * y.transpose();
  const Eigen::MatrixXd T = P * (0.5 * (K + K.transpose())) * P;
  return T - (T.trace() / (d - 1)) * P;
}

TensorField project_tangent_tracefree(TensorField field) {
  return [f = std::move(field)](const Eigen::VectorXd& y) { return tangent_tracefree(f(y), y); };
}

TensorField random_polynomial_field(int n, int degree, std::uint64_t seed) {
  const int d = n + 1;
  std::vector<std::vector<int>> mons;
  std::vector<int> cur;
  monomials(d, degree, cur, mons);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  // coefficient matrices, one per monomial
  std::vector<Eigen::MatrixXd> C;
  for (std::size_t m = 0; m < mons.size(); ++m) {
    Eigen::MatrixXd M(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) M(i, j) = M(j, i) = coef(rng);
    C.push_back(M);
  }
  return [mons, C, d](const Eigen::VectorXd& y) {
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(d, d);
    for (std::size_t m = 0; m < mons.size(); ++m) {
      double v = 1;
      for (int i = 0; i < d; ++i)
        if (mons[m][static_cast<std::size_t>(i)]) v *= std::pow(y(i), mons[m][static_cast<std::size_t>(i)]);
      K += v * C[m];
    }
    return K;
  };
}

TensorField round_metric_field(int n) {
  return [n](const Eigen::VectorXd& y) {
    return Eigen::MatrixXd(Eigen::MatrixXd::Identity(n + 1, n + 1) - y * y.transpose());
  };
}

TensorField u_action(const RepWeight& w, const MoebiusElement& A, TensorField field) {
  const double exponent = w.rho + w.nu - 2.0;
  return [A, exponent, f = std::move(field)](const Eigen::VectorXd& y) {
    const int d = static_cast<int>(y.size());
    const Eigen::MatrixXd P = Eigen::MatrixXd::Identity(d, d) - y * y.transpose();
    const Eigen::MatrixXd D = differential(A, y) * P;
    const Eigen::MatrixXd pulled = D.transpose() * f(act(A, y)) * D;
    return Eigen::MatrixXd(std::pow(conformal_factor(A, y), exponent) * pulled);
  };
}

SampledField sample(const TensorField& field, const SphereGrid& grid) {
  SampledField s;
  s.values.reserve(grid.nodes.size());
  for (const auto& y : grid.nodes) {
    const Eigen::MatrixXd E = tangent_frame(y);
    s.values.push_back(E.transpose() * field(y) * E);
  }
  return s;
}

SampledField u_action(const RepWeight& w, const MoebiusElement& A, const TensorField& field, const SphereGrid& grid) {
  return sample(u_action(w, A, field), grid);
}

double pairing(const SampledField& h, const SampledField& k, const SphereGrid& grid) {
  if (h.values.size() != grid.nodes.size() || k.values.size() != grid.nodes.size())
    throw std::invalid_argument("sampled fields do not match the grid");
  double s = 0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) s += grid.weights[i] * h.values[i].cwiseProduct(k.values[i]).sum();
  return s;
}

PairingInvariance check_pairing_invariance(const TensorField& h, const TensorField& k, const MoebiusElement& A,
                                           const SphereGrid& grid) {
  const int n = grid.n;
  PairingInvariance r;
  r.original = pairing(sample(h, grid), sample(k, grid), grid);
  r.transformed = pairing(u_action(RepWeight(n, -0.5 * n), A, h, grid), u_action(RepWeight(n, 0.5 * n), A, k, grid), grid);
  r.residual = std::abs(r.original - r.transformed) / (1.0 + std::abs(r.original));
  return r;
}

}  // namespace rigidity
