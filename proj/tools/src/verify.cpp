#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "rigidity/cli/commands.hpp"
#include "rigidity/confgroup.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/greens.hpp"
#include "rigidity/ktypes.hpp"
#include "rigidity/qcurv.hpp"
#include "rigidity/spectrum.hpp"
#include "rigidity/symbols.hpp"

namespace rigidity::cli {

namespace {

struct SuiteResult {
  std::vector<Check> checks;
  std::vector<std::string> notes;

  void check(std::string name, double residual, double tol) { checks.push_back({std::move(name), residual <= tol, residual, tol}); }
  void exact(std::string name, long mismatches) {
    checks.push_back({std::move(name), mismatches == 0, static_cast<double>(mismatches), 0.0});
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

SuiteResult suite_spectrum(const Options&) {
  SuiteResult s;
  long bad = 0;
  for (int n = 4; n <= 12; ++n)
    for (const auto& [k, v] : spectrum_generate(n, 30).entries)
      if (v != t0_eigenvalue(k)) ++bad;
  s.exact("recursion equals closed form, n 4..12, j <= 30", bad);

  long bad_kappa = 0;
  for (int n = 3; n <= 12; ++n)
    for (int j = 0; j <= 50; ++j)
      for (int q = n == 3 ? -2 : 0; q <= 2; ++q) {
        // <beta + 2 rho, beta> with 2 rho = (n-1, n-3, ...)
        const ExactScalar ip = ExactScalar((2 + j + n - 1) * (2 + j) + (q + n - 3) * q);
        if (kappa(KType(n, j, q)) != ip) ++bad_kappa;
      }
  s.exact("kappa equals the inner-product formula", bad_kappa);

  long kernel_bad = 0;
  for (int n = 4; n <= 12; ++n)
    for (int j = 0; j <= 100; ++j)
      for (int q = 0; q <= 2; ++q) {
        const int sg = sign(t0_eigenvalue(KType(n, j, q)));
        if (q == 2 ? sg <= 0 : sg != 0) ++kernel_bad;
      }
  s.exact("kernel of T0 is exactly q in {0, 1}", kernel_bad);

  long no_flip = 0;
  for (int j = 0; j <= 100; ++j)
    if (sign(t0_eigenvalue(KType(3, j, 2))) * sign(t0_eigenvalue(KType(3, j, -2))) >= 0) ++no_flip;
  s.exact("n = 3: sign change between q = 2 and q = -2", no_flip);
  return s;
}

SuiteResult suite_ktypes(const Options&) {
  SuiteResult s;
  long bad = 0;
  for (int n = 4; n <= 8; ++n)
    for (int sig : {1, 2}) {
      const DominantWeight sigma({sig}, n);
      const int bound = 8;
      std::set<DominantWeight> brute;
      for (const auto& b : all_dominant_weights(n + 1, bound))
        if (branches(b, sigma)) brute.insert(b);
      const auto got = enumerate_bundle_ktypes(sigma, n, bound - sig);
      if (std::set<DominantWeight>(got.begin(), got.end()) != brute || brute.size() != got.size()) ++bad;
    }
  s.exact("bundle K-types equal brute-force interlacing, n 4..8", bad);
  return s;
}

SuiteResult suite_greens(const Options& o) {
  SuiteResult s;
  double ode = 0, quad = 0;
  for (int n : {3, 5, 7})
    for (int i = 0; i <= 27; ++i) {
      const double r = 0.3 + 0.1 * i;
      const double gl = green_L(n, r);
      ode = std::max(ode, std::abs(radial_L_apply(n, green_L_jet(n, r), r)) / gl);
      ode = std::max(ode, std::abs(radial_L_apply(n, green_L2_jet(n, r), r) - gl) / gl);
      quad = std::max(quad, rel(green_L2(n, r), green_L2_quadrature(n, r)));
    }
  for (int n : {3, 5, 7})
    for (double x : {0.5, 1.0, 2.0, 5.0}) quad = std::max(quad, rel(green_D2(n, x), green_D2_quadrature(n, x)));
  s.check("radial ODE residuals, n in {3, 5, 7}", ode, o.tol.ode);
  s.check("closed forms vs quadrature", quad, o.tol.quad);
  long bad = 0;
  for (int k = 1; k <= 10; ++k) {
    if (sign(kv_trace_L2(k).coeff) != (k % 2 ? 1 : -1)) ++bad;
    if (sign(kv_trace_D2(k).coeff) != (k % 2 ? -1 : 1)) ++bad;
  }
  s.exact("trace signs for k <= 10", bad);
  for (auto kind : {GreenKind::L2, GreenKind::D2}) {
    const auto r1 = regular_part_ratio(kind, 1), r2 = regular_part_ratio(kind, 2);
    char buf[160];
    std::snprintf(buf, sizeof buf, "regular part / printed constant for %s: k=1 %.6g, k=2 %.6g", to_string(kind).c_str(),
                  r1.ratio, r2.ratio);
    s.notes.emplace_back(buf);
  }
  return s;
}

SuiteResult suite_symbols(const Options&) {
  SuiteResult s;
  constexpr double pi = std::numbers::pi;
  s.check("det prefactor n = 3 equals 1/256",
          rel(gamma_prefactor(3, PrefactorMode::DET_DERIVATIVE_AT_ZERO).value, 1.0 / 256), 1e-12);
  s.check("zeta(0) prefactor n = 4 equals 1/(960 pi^2)",
          rel(gamma_prefactor(4, PrefactorMode::ZETA0_LIMIT_AT_ZERO).value, 1.0 / (960 * pi * pi)), 1e-12);
  long bad = 0;
  for (int n = 3; n <= 13; ++n)
    for (auto f : {Functional::DET_L, Functional::ZETA0_L, Functional::DET_D2, Functional::ZETA0_D2})
      if (applicable(f, n) && extremal_classification(f, n).maximized_sign != printed_maximized_sign(f, n)) ++bad;
  s.exact("sign chain matches the printed theorems, n 3..13", bad);
  long semidef = 0;
  for (int n = 3; n <= 13; ++n) {
    if (bracket_definiteness(bracket_L(n, 0), n - 1).kind != Definiteness::POS_SEMIDEF) ++semidef;
    if (bracket_definiteness(bracket_D2(n, 0), n - 1).kind != Definiteness::NEG_SEMIDEF) ++semidef;
  }
  s.exact("brackets at s = 0 are semidefinite with null ray K ~ Pi", semidef);
  return s;
}

SuiteResult suite_qcurv(const Options& o) {
  SuiteResult s;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  auto rnd = [&] { return ExactScalar(num(rng), den(rng)); };
  long ric = 0, adj = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 6;
    RationalVector xi(static_cast<std::size_t>(n)), X(static_cast<std::size_t>(n));
    for (auto& x : xi) x = rnd();
    for (auto& x : X) x = rnd();
    RationalMatrix k(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) k(i, j) = k(j, i) = rnd();
    if (lin_ricci_symbol(xi, k).trace() != lin_scalar_symbol(xi, k)) ++ric;
    const RationalMatrix k0 = k - RationalMatrix::identity(n) * (k.trace() / n);
    if (frobenius(ahlfors_symbol(xi, X), k0) != 2 * dot(X, k0 * xi)) ++adj;
  }
  s.exact("trace of the Ricci symbol equals the scalar symbol", ric);
  s.exact("Ahlfors symbol adjoint identity", adj);
  for (int n : {4, 6, 8}) {
    Options q = o;
    q.dim = n;
    const auto r = cmd_qsymbol(q);
    for (const auto& c : r.checks) s.checks.push_back({c.name + ", n = " + std::to_string(n), c.pass, c.residual, c.tolerance});
  }
  return s;
}

SuiteResult suite_confgroup(const Options& o) {
  if (o.dim != 2 && o.dim != 3) throw UsageError("verify --suite confgroup needs --dim 2 or 3");
  const int n = o.dim;
  SuiteResult s;
  std::mt19937_64 rng(o.seed);
  std::normal_distribution<double> g;
  const auto A = MoebiusElement::random(n, 1.0, o.seed + 1);
  const auto B = MoebiusElement::random(n, 0.7, o.seed + 2);
  double conf = 0, cocycle = 0, lorentz = std::max(A.lorentz_defect(), B.lorentz_defect());
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::VectorXd y(n + 1);
    for (int i = 0; i <= n; ++i) y(i) = g(rng);
    y.normalize();
    const double om = conformal_factor(A, y);
    const Eigen::MatrixXd D = differential(A, y) * tangent_frame(y);
    conf = std::max(conf, (D.transpose() * D - om * om * Eigen::MatrixXd::Identity(n, n)).norm() / (om * om));
    cocycle = std::max(cocycle, std::abs(conformal_factor(A * B, y) - conformal_factor(A, act(B, y)) * conformal_factor(B, y)));
  }
  s.check("Lorentz form preserved", lorentz, 1e-12);
  s.check("conformality of the differential", conf, 1e-7);
  s.check("conformal factor cocycle", cocycle, 1e-7);
  const auto grid = make_sphere_grid(n, 40);
  const auto pi = check_pairing_invariance(random_polynomial_field(n, 2, o.seed + 3), random_polynomial_field(n, 2, o.seed + 4),
                                           A, grid);
  s.check("pairing invariance, rapidity 1, order-40 grid", pi.residual, o.tol.conf);

  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Eigen::VectorXd> pts;
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
  s.check("Ahlfors covariance at 50 points", check_ahlfors_covariance(X, ChartMap::from_moebius(A), pts), o.tol.conf);
  double ker = 0;
  for (const auto& K : conformal_killing_fields(n))
    for (const auto& x : pts) ker = std::max(ker, ahlfors_chart(K, x).norm());
  s.check("conformal Killing fields lie in ker S", ker, 1e-8);
  return s;
}

const std::map<std::string, std::function<SuiteResult(const Options&)>>& suites() {
  static const std::map<std::string, std::function<SuiteResult(const Options&)>> all{
      {"spectrum", suite_spectrum}, {"ktypes", suite_ktypes}, {"greens", suite_greens},
      {"symbols", suite_symbols},   {"qcurv", suite_qcurv},   {"confgroup", suite_confgroup},
  };
  return all;
}

}  // namespace

ReportEnvelope cmd_verify(const Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    for (const auto& [name, fn] : suites()) names.push_back(name);
  } else if (suites().count(o.suite)) {
    names.push_back(o.suite);
  } else {
    throw UsageError("unknown suite '" + o.suite + "'");
  }
  ReportEnvelope r;
  r.command = "verify";
  r.parameters = {{"suite", o.suite}, {"dim", std::to_string(o.dim)}, {"seed", std::to_string(o.seed)}};
  r.version = version_string();
  r.results.columns = {"suite", "checks", "passed", "failed"};
  for (const auto& name : names) {
    const auto res = suites().at(name)(o);
    long passed = 0;
    for (const auto& c : res.checks) {
      passed += c.pass ? 1 : 0;
      r.checks.push_back({name + ": " + c.name, c.pass, c.residual, c.tolerance});
    }
    const long total = static_cast<long>(res.checks.size());
    r.results.rows.push_back({name, total, passed, total - passed});
    for (const auto& n : res.notes) r.notes.push_back(name + ": " + n);
  }
  return r;
}

}  // namespace rigidity::cli
