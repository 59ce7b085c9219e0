#include <cmath>

#include "rigidity/confgroup.hpp"
#include "rigidity/errors.hpp"

namespace rigidity {

Eigen::VectorXd to_chart(const Eigen::VectorXd& y) {
  const int n = static_cast<int>(y.size()) - 1;
  const double den = 1.0 - y(n);
  if (std::abs(den) < 1e-14) throw Degenerate("the chart pole has no finite chart image");
  return y.head(n) / den;
}

Eigen::VectorXd from_chart(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  const double r2 = x.squaredNorm();
  Eigen::VectorXd y(n + 1);
  y << 2.0 * x / (1.0 + r2), (r2 - 1.0) / (1.0 + r2);
  return y;
}

Eigen::MatrixXd from_chart_jacobian(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  const double q = 1.0 + x.squaredNorm();
  Eigen::MatrixXd J(n + 1, n);
  J.topRows(n) = 2.0 / q * Eigen::MatrixXd::Identity(n, n) - 4.0 / (q * q) * x * x.transpose();
  J.row(n) = 4.0 / (q * q) * x.transpose();
  return J;
}

double chart_lambda(const Eigen::VectorXd& x) { return 2.0 / (1.0 + x.squaredNorm()); }

namespace {

Eigen::MatrixXd to_chart_jacobian(const Eigen::VectorXd& y) {
  const int n = static_cast<int>(y.size()) - 1;
  const double den = 1.0 - y(n);
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n + 1);
  J.leftCols(n) = Eigen::MatrixXd::Identity(n, n) / den;
  J.col(n) = y.head(n) / (den * den);
  return J;
}

Eigen::MatrixXd field_jacobian(const ChartVectorField& X, const Eigen::VectorXd& x, double h) {
  return X.jacobian ? X.jacobian(x) : jacobian_fd(X.value, x, h);
}

}  // namespace

Eigen::MatrixXd jacobian_fd(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x,
                            double h) {
  const Eigen::VectorXd f0 = f(x);
  Eigen::MatrixXd J(f0.size(), x.size());
  for (int j = 0; j < x.size(); ++j) {
    Eigen::VectorXd xp = x, xm = x;
    xp(j) += h;
    xm(j) -= h;
    J.col(j) = (f(xp) - f(xm)) / (2 * h);
  }
  return J;
}

// Levi-Civita connection of lambda^2 delta, omega = log lambda:
//   nabla_U V = D_U V + (U omega) V + (V omega) U - <U, V> grad omega.
Eigen::MatrixXd ahlfors_chart(const ChartVectorField& X, const Eigen::VectorXd& x, double h) {
  const int n = static_cast<int>(x.size());
  const Eigen::VectorXd v = X.value(x);
  const Eigen::MatrixXd DX = field_jacobian(X, x, h);
  const double q = 1.0 + x.squaredNorm();
  const Eigen::VectorXd grad_omega = -2.0 * x / q;
  const double lam2 = 4.0 / (q * q);
  Eigen::MatrixXd M(n, n);  // column i is nabla_{e_i} X
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd c = DX.col(i) + grad_omega(i) * v - v(i) * grad_omega;
    c(i) += v.dot(grad_omega);
    M.col(i) = c;
  }
  return lam2 * (M + M.transpose()) - (2.0 / n) * M.trace() * lam2 * Eigen::MatrixXd::Identity(n, n);
}

ChartMap ChartMap::translation(const Eigen::VectorXd& b) {
  const int n = static_cast<int>(b.size());
  return {[b](const Eigen::VectorXd& x) { return Eigen::VectorXd(x + b); },
          [n](const Eigen::VectorXd&) { return Eigen::MatrixXd(Eigen::MatrixXd::Identity(n, n)); }};
}

ChartMap ChartMap::dilation(int n, double s) {
  return {[s](const Eigen::VectorXd& x) { return Eigen::VectorXd(s * x); },
          [n, s](const Eigen::VectorXd&) { return Eigen::MatrixXd(s * Eigen::MatrixXd::Identity(n, n)); }};
}

ChartMap ChartMap::rotation(const Eigen::MatrixXd& R) {
  return {[R](const Eigen::VectorXd& x) { return Eigen::VectorXd(R * x); },
          [R](const Eigen::VectorXd&) { return R; }};
}

ChartMap ChartMap::inversion(int n) {
  return {[](const Eigen::VectorXd& x) {
            const double r2 = x.squaredNorm();
            if (r2 == 0.0) throw Degenerate("inversion at the origin");
            return Eigen::VectorXd(x / r2);
          },
          [n](const Eigen::VectorXd& x) {
            const double r2 = x.squaredNorm();
            if (r2 == 0.0) throw Degenerate("inversion at the origin");
            return Eigen::MatrixXd((Eigen::MatrixXd::Identity(n, n) - 2.0 * x * x.transpose() / r2) / r2);
          }};
}

ChartMap ChartMap::from_moebius(const MoebiusElement& A) {
  return {[A](const Eigen::VectorXd& x) { return to_chart(act(A, from_chart(x))); },
          [A](const Eigen::VectorXd& x) {
            const Eigen::VectorXd y = from_chart(x);
            return Eigen::MatrixXd(to_chart_jacobian(act(A, y)) * differential(A, y) * from_chart_jacobian(x));
          }};
}

ChartMap ChartMap::compose(const ChartMap& inner) const {
  const ChartMap outer = *this;
  return {[outer, inner](const Eigen::VectorXd& x) { return outer.map(inner.map(x)); },
          [outer, inner](const Eigen::VectorXd& x) {
            return Eigen::MatrixXd(outer.jacobian(inner.map(x)) * inner.jacobian(x));
          }};
}

double check_ahlfors_covariance(const ChartVectorField& X, const ChartMap& phi, const std::vector<Eigen::VectorXd>& points,
                                double h) {
  double worst = 0;
  // phi^* X = (D phi)^{-1} X o phi
  ChartVectorField pulled;
  pulled.value = [&](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(phi.jacobian(x).lu().solve(X.value(phi.map(x))));
  };
  for (const auto& x : points) {
    const Eigen::VectorXd px = phi.map(x);
    const Eigen::MatrixXd D = phi.jacobian(x);
    const int n = static_cast<int>(x.size());
    const double scale = std::sqrt((D.transpose() * D).trace() / n);
    const double omega = chart_lambda(px) * scale / chart_lambda(x);
    const Eigen::MatrixXd lhs = D.transpose() * ahlfors_chart(X, px, h) * D / (omega * omega);
    const Eigen::MatrixXd rhs = ahlfors_chart(pulled, x, h);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff() / (1.0 + rhs.cwiseAbs().maxCoeff()));
  }
  return worst;
}

std::vector<ChartVectorField> conformal_killing_fields(int n) {
  using Vec = Eigen::VectorXd;
  using Mat = Eigen::MatrixXd;
  std::vector<ChartVectorField> out;
  const Mat I = Mat::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.push_back({[i, j](const Vec& x) {
                       Vec v = Vec::Zero(x.size());
                       v(j) += x(i);
                       v(i) -= x(j);
                       return v;
                     },
                     [i, j, I](const Vec&) {
                       return Mat(I.col(j) * I.col(i).transpose() - I.col(i) * I.col(j).transpose());
                     }});
  for (int i = 0; i < n; ++i)
    out.push_back({[i, I](const Vec& x) { return Vec((1.0 - x.squaredNorm()) * I.col(i) + 2.0 * x(i) * x); },
                   [i, I](const Vec& x) {
                     return Mat(-2.0 * I.col(i) * x.transpose() + 2.0 * x * I.col(i).transpose() + 2.0 * x(i) * I);
                   }});
  out.push_back({[](const Vec& x) { return x; }, [I](const Vec&) { return I; }});
  for (int i = 0; i < n; ++i)
    out.push_back({[i, I](const Vec& x) { return Vec((1.0 + x.squaredNorm()) * I.col(i) - 2.0 * x(i) * x); },
                   [i, I](const Vec& x) {
                     return Mat(2.0 * I.col(i) * x.transpose() - 2.0 * x * I.col(i).transpose() - 2.0 * x(i) * I);
                   }});
  return out;
}

}  // namespace rigidity
