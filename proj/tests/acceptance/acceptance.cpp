// Acceptance gate: one PASS/FAIL line per criterion. Run with --criterion <id>, or without
// arguments to run all of them. Exit code is 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rigidity/confgroup.hpp"
#include "rigidity/greens.hpp"
#include "rigidity/ktypes.hpp"
#include "rigidity/qcurv.hpp"
#include "rigidity/spectrum.hpp"
#include "rigidity/symbols.hpp"

using namespace rigidity;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Detail {
 public:
  template <typename T>
  Detail& operator<<(const T& v) {
    os_ << v;
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

Outcome exact_spectrum() {
  const auto start = std::chrono::steady_clock::now();
  long checked = 0;
  bool ok = true;
  for (int n = 4; n <= 12; ++n) {
    const auto table = spectrum_generate(n, 100, t0_eigenvalue(KType(n, 0, 2)));
    for (int j = 0; j <= 100; ++j)
      for (int q = 0; q <= 2; ++q) {
        const KType t(n, j, q);
        ok = ok && table.at(t) == t0_eigenvalue(t);
        ++checked;
      }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = ok && secs < 5.0;
  o.detail = (Detail() << checked << " K-types exact, " << secs << " s (limit 5 s)").str();
  return o;
}

Outcome kernel_structure() {
  bool ok = true;
  for (int n = 4; n <= 12; ++n)
    for (int j = 0; j <= 100; ++j)
      for (int q = 0; q <= 2; ++q) {
        const int s = sign(t0_eigenvalue(KType(n, j, q)));
        ok = ok && (q == 2 ? s > 0 : s == 0);
      }
  const auto plus = spectrum_generate_dim3(100, Branch::PLUS);
  const auto minus = spectrum_generate_dim3(100, Branch::MINUS);
  bool flips = true;
  for (int j = 0; j <= 100; ++j) {
    const int sp = sign(t0_eigenvalue(KType(3, j, 2))), sm = sign(t0_eigenvalue(KType(3, j, -2)));
    flips = flips && sp * sm < 0;
    flips = flips && plus.at(KType(3, j, 2)) == t0_eigenvalue(KType(3, j, 2));
    flips = flips && minus.at(KType(3, j, -2)) == t0_eigenvalue(KType(3, j, -2));
  }
  return {ok && flips, (Detail() << "kernel = {q in {0,1}} for n in 4..12: " << (ok ? "yes" : "no")
                                 << "; n=3 sign change q=+-2, j<=100: " << (flips ? "yes" : "no"))
                           .str()};
}

Outcome kappa_consistency() {
  long checked = 0;
  bool ok = true;
  for (int n = 3; n <= 12; ++n) {
    const int qlo = n == 3 ? -2 : 0;
    for (int j = 0; j <= 50; ++j)
      for (int q = qlo; q <= 2; ++q) {
        const KType t(n, j, q);
        ok = ok && kappa(t) == oracle::kappa_inner_product(n, j, q);
        ok = ok && kappa_step(t, Step::J_UP) == ExactScalar(n + 2 * j + 4);
        ok = ok && kappa(KType(n, j + 1, q)) - kappa(t) == ExactScalar(n + 2 * j + 4);
        if (q < 2) {
          ok = ok && kappa_step(t, Step::Q_UP) == ExactScalar(n + 2 * q - 2);
          ok = ok && kappa(KType(n, j, q + 1)) - kappa(t) == ExactScalar(n + 2 * q - 2);
        }
        ++checked;
      }
  }
  return {ok, (Detail() << checked << " (n, j, q) triples against the inner-product oracle").str()};
}

Outcome branching() {
  const int bound = 12;
  bool ok = true;
  for (int n = 4; n <= 8; ++n)
    for (int s : {1, 2}) {
      const DominantWeight sigma({s}, n);
      std::set<DominantWeight> brute;
      for (const auto& b : oracle::brute_force_branching(sigma, n, bound)) brute.insert(b);
      std::set<DominantWeight> family;
      for (int a = s; a <= bound; ++a)
        for (int b = 0; b <= s; ++b) family.insert(DominantWeight({a, b}, n + 1));
      const auto got = enumerate_bundle_ktypes(sigma, n, bound - s);
      const std::set<DominantWeight> mine(got.begin(), got.end());
      ok = ok && brute == family && mine == family && mine.size() == got.size();
    }
  return {ok, "brute-force interlacing, n in 4..8, sigma in {(1), (2)}, bound 12"};
}

Outcome q_symbol() {
  std::mt19937_64 rng(5);
  int checked = 0;
  bool ok = true;
  for (int n : {4, 6, 8})
    for (int rep = 0; rep < 100; ++rep) {
      RationalVector xi;
      RationalMatrix k;
      oracle::random_tt(rng, n, xi, k);
      ok = ok && q_hessian_symbol(xi, k) == k * (-pow_int(dot(xi, xi), n / 2) / 4);
      ++checked;
    }
  return {ok, (Detail() << checked << " random transverse trace-free rational samples, exact").str()};
}

Outcome sign_theorems() {
  bool ok = true;
  int rows = 0;
  for (int n = 3; n <= 13; ++n)
    for (auto f : {Functional::DET_L, Functional::ZETA0_L, Functional::DET_D2, Functional::ZETA0_D2}) {
      if (!applicable(f, n)) continue;
      const auto st = extremal_classification(f, n);
      ok = ok && st.maximized_sign == printed_maximized_sign(f, n);
      const int pk = (n / 2) % 2 == 0 ? 1 : -1;
      if (f == Functional::DET_L) ok = ok && st.c_sign == pk;
      if (f == Functional::DET_D2) ok = ok && st.c_sign == -pk;
      ++rows;
    }
  return {ok, (Detail() << rows << " (functional, n) rows, n in 3..13").str()};
}

Outcome prefactors() {
  using oracle::HighFloat;
  const double d3 = gamma_prefactor(3, PrefactorMode::DET_DERIVATIVE_AT_ZERO).value;
  const double z4 = gamma_prefactor(4, PrefactorMode::ZETA0_LIMIT_AT_ZERO).value;
  const double pi = std::acos(-1.0);
  const double e1 = rel(d3, static_cast<double>(oracle::det_prefactor_hp(3)));
  const double e1b = rel(d3, 1.0 / 256);
  const HighFloat s1("1e-6"), s2("1e-7");
  const HighFloat p1 = oracle::prefactor_hp(4, s1), p2 = oracle::prefactor_hp(4, s2);
  const double hp0 = static_cast<double>((s1 * p2 - s2 * p1) / (s1 - s2));
  const double e2 = rel(z4, 1.0 / (960 * pi * pi));
  const double e3 = rel(z4, hp0);
  const bool ok = e1 <= 1e-12 && e1b <= 1e-12 && e2 <= 1e-12 && e3 <= 1e-6;
  return {ok, (Detail() << "det n=3 rel err " << std::max(e1, e1b) << ", zeta0 n=4 rel err " << e2
                        << ", Richardson rel err " << e3)
                  .str()};
}

Outcome green_ode() {
  double worst_l = 0, worst_l2 = 0;
  for (int n : {3, 5, 7})
    for (int i = 0; i <= 270; ++i) {
      const double r = 0.3 + 0.01 * i;
      const double gl = green_L(n, r);
      worst_l = std::max(worst_l, std::abs(radial_L_apply(n, green_L_jet(n, r), r)) / gl);
      worst_l2 = std::max(worst_l2, std::abs(radial_L_apply(n, green_L2_jet(n, r), r) - gl) / gl);
    }
  return {worst_l <= 1e-8 && worst_l2 <= 1e-8,
          (Detail() << "max rel residual L G_L " << worst_l << ", L G_L2 - G_L " << worst_l2 << " (tol 1e-8)").str()};
}

Outcome green_quadrature() {
  double worst_l2 = 0, worst_d2 = 0;
  for (int n : {3, 5, 7}) {
    for (int i = 0; i <= 27; ++i) {
      const double r = 0.3 + 0.1 * i;
      worst_l2 = std::max(worst_l2, rel(green_L2(n, r), green_L2_quadrature(n, r)));
    }
    for (double x : {0.25, 0.5, 1.0, 2.0, 5.0}) {
      worst_d2 = std::max(worst_d2, rel(green_D2(n, x), green_D2_quadrature(n, x)));
      if (n > 3) worst_l2 = std::max(worst_l2, rel(tau_integral(n - 3, 2)(x), tau_integral_quadrature(n - 3, 2, x)));
      worst_d2 = std::max(worst_d2, rel(tau_integral(n - 1, 1)(x), tau_integral_quadrature(n - 1, 1, x)));
    }
  }
  return {worst_l2 <= 1e-10 && worst_d2 <= 1e-10,
          (Detail() << "max rel diff L2 " << worst_l2 << ", D2 " << worst_d2 << " (tol 1e-10)").str()};
}

Outcome trace_values() {
  bool ok = kv_trace_L2(1) == Monomial(ExactScalar(3, 128), 2) && kv_trace_L2(2) == Monomial(ExactScalar(-5, 2048), 2) &&
            kv_trace_D2(1) == Monomial(ExactScalar(-1, 4), 2) && kv_trace_D2(2) == Monomial(ExactScalar(3, 16), 2);
  for (int k = 1; k <= 10; ++k) {
    ok = ok && sign(kv_trace_L2(k).coeff) == (k % 2 ? 1 : -1);
    ok = ok && sign(kv_trace_D2(k).coeff) == (k % 2 ? -1 : 1);
  }
  return {ok, (Detail() << "L2: " << kv_trace_L2(1).str() << ", " << kv_trace_L2(2).str() << "; D2: "
                        << kv_trace_D2(1).str() << ", " << kv_trace_D2(2).str() << "; signs k<=10")
                  .str()};
}

Outcome regular_ratio() {
  bool ok = true;
  Detail d;
  for (auto kind : {GreenKind::L2, GreenKind::D2}) {
    const auto r1 = regular_part_ratio(kind, 1);
    const auto r2 = regular_part_ratio(kind, 2);
    const bool consistent = std::abs(r1.ratio - r2.ratio) <= 1e-3 * std::abs(r1.ratio);
    ok = ok && consistent;
    d << to_string(kind) << " ratio k=1 " << r1.ratio << " k=2 " << r2.ratio << (consistent ? " (consistent) " : " (inconsistent) ");
  }
  d << "tol 1e-3";
  return {ok, d.str()};
}

Outcome conformal_group() {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  double conf = 0, cocycle = 0, pair = 0, cov = 0, ker = 0;
  for (int n : {2, 3}) {
    const auto A = MoebiusElement::random(n, 1.0, 100 + n);
    const auto B = MoebiusElement::random(n, 0.7, 200 + n);
    for (int rep = 0; rep < 100; ++rep) {
      Eigen::VectorXd y(n + 1);
      for (int i = 0; i <= n; ++i) y(i) = g(rng);
      y.normalize();
      const double om = conformal_factor(A, y);
      const Eigen::MatrixXd D = differential(A, y) * tangent_frame(y);
      conf = std::max(conf, (D.transpose() * D - om * om * Eigen::MatrixXd::Identity(n, n)).norm() / (om * om));
      cocycle = std::max(cocycle, std::abs(conformal_factor(A * B, y) - conformal_factor(A, act(B, y)) * conformal_factor(B, y)));
    }
    const auto grid = make_sphere_grid(n, 40);
    pair = std::max(pair, check_pairing_invariance(random_polynomial_field(n, 2, 1), random_polynomial_field(n, 2, 2),
                                                   MoebiusElement::random(n, 1.0, 3), grid)
                              .residual);
    std::vector<Eigen::VectorXd> pts;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
      Eigen::VectorXd x(n);
      for (int c = 0; c < n; ++c) x(c) = u(rng);
      pts.push_back(x);
    }
    ChartVectorField X{[n](const Eigen::VectorXd& x) {
                         Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
                         v(0) = x(0) * x(0) + 0.3 * x(n - 1);
                         v(n - 1) = std::sin(x(0));
                         return v;
                       },
                       {}};
    cov = std::max(cov, check_ahlfors_covariance(X, ChartMap::from_moebius(MoebiusElement::random(n, 1.0, 4)), pts));
    for (const auto& K : conformal_killing_fields(n))
      for (const auto& x : pts) ker = std::max(ker, ahlfors_chart(K, x).norm());
  }
  const bool ok = conf <= 1e-7 && cocycle <= 1e-7 && pair <= 1e-6 && cov <= 1e-6 && ker <= 1e-8;
  return {ok, (Detail() << "conformality " << conf << ", cocycle " << cocycle << ", pairing " << pair
                        << ", covariance " << cov << ", ker S " << ker)
                  .str()};
}

Outcome cauchy_schwarz() {
  std::mt19937_64 rng(10);
  std::normal_distribution<double> g;
  bool ok = true;
  double worst = 0;
  for (int n = 3; n <= 13; ++n) {
    const auto l = bracket_definiteness(bracket_L(n, 0), n - 1);
    const auto d = bracket_definiteness(bracket_D2(n, 0), n - 1);
    ok = ok && l.kind == Definiteness::POS_SEMIDEF && l.null_ray == NullRay::PURE_TRACE;
    ok = ok && d.kind == Definiteness::NEG_SEMIDEF && d.null_ray == NullRay::PURE_TRACE;
    PointData p;
    p.xi = Eigen::VectorXd(n);
    for (int i = 0; i < n; ++i) p.xi(i) = g(rng);
    // unit Frobenius representative of the ray K ~ Pi
    p.k = (Eigen::MatrixXd::Identity(n, n) - p.xi * p.xi.transpose() / p.xi.squaredNorm()) / std::sqrt(n - 1.0);
    worst = std::max(worst, std::abs(evaluate_form(bracket_L(n, 0), 1.0, p, 0.0)));
    worst = std::max(worst, std::abs(evaluate_form(bracket_D2(n, 0), 1.0, p, 0.0)));
  }
  ok = ok && worst <= 1e-12;
  return {ok, (Detail() << "n in 3..13, max form value on K ~ Pi " << worst << " (tol 1e-12)").str()};
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"1", "exact spectrum equivalence", exact_spectrum},
      {"2", "kernel structure", kernel_structure},
      {"3", "kappa consistency", kappa_consistency},
      {"4", "branching enumeration", branching},
      {"5", "Q-curvature symbol identity", q_symbol},
      {"6", "sign-theorem reproduction", sign_theorems},
      {"7", "prefactor values", prefactors},
      {"8a", "radial ODE residuals", green_ode},
      {"8b", "quadrature vs antiderivative", green_quadrature},
      {"8c", "trace closed forms", trace_values},
      {"8d", "regular-part ratio consistency", regular_ratio},
      {"9", "conformal-group suite", conformal_group},
      {"10", "Cauchy-Schwarz boundary", cauchy_schwarz},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::fprintf(stderr, "usage: %s [--criterion ID]\n", argv[0]);
      return 2;
    }
  }
  bool all_pass = true;
  bool matched = false;
  for (const auto& c : criteria()) {
    if (!only.empty() && only != c.id) continue;
    matched = true;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
    all_pass = all_pass && o.pass;
  }
  if (!matched) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
    return 2;
  }
  return all_pass ? 0 : 1;
}
