#include "rigidity/greens.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <map>
#include <numbers>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

constexpr double kPi = std::numbers::pi;

void require_odd_dim(int n) {
  if (n < 3 || n % 2 == 0) throw DomainError("Green's functions are implemented for odd n >= 3, got n=" + std::to_string(n));
}

void require_open_radius(double r) {
  if (!(r > 0.0 && r < kPi)) throw DomainError("radius must lie in (0, pi)");
}

BigInt double_factorial(int m) {
  BigInt r = 1;
  for (int i = m; i > 1; i -= 2) r *= i;
  return r;
}

}  // namespace

std::string to_string(GreenKind k) {
  switch (k) {
    case GreenKind::L: return "L";
    case GreenKind::L2: return "L2";
    case GreenKind::D2: return "D2";
  }
  return "?";
}

Monomial sphere_volume_exact(int m) {
  if (m < 1) throw DomainError("sphere_volume needs m >= 1");
  if (m % 2 == 1) {
    const int l = (m + 1) / 2;
    return Monomial(ExactScalar(BigInt(2), factorial(l - 1)), l);
  }
  const int l = m / 2;
  return Monomial(ExactScalar(BigInt(2) << l, double_factorial(2 * l - 1)), l);
}

double sphere_volume(int m) {
  if (m < 1) throw DomainError("sphere_volume needs m >= 1");
  const double h = 0.5 * (m + 1);
  return 2.0 * std::pow(kPi, h) / std::tgamma(h);
}

SphereConstants sphere_constants(int n) {
  if (n < 3) throw DomainError("sphere_constants needs n >= 3");
  SphereConstants c;
  c.n = n;
  c.omega = sphere_volume(n - 1);
  const Monomial omega = sphere_volume_exact(n - 1);
  const ExactScalar base = ExactScalar(1) / (pow_int(ExactScalar(2), n - 1) * (n - 2));
  c.C_n = Monomial(base) / omega;
  c.D_n = Monomial(base, 0, n - 2) / omega;
  return c;
}

double radial_L_apply(int n, const RadialJet& jet, double r) {
  require_open_radius(r);
  return -jet.d2f - (n - 1) * std::cos(r) / std::sin(r) * jet.df + 0.25 * n * (n - 2) * jet.f;
}

double radial_L_apply(int n, const RadialFunction& f, double r, double h) {
  require_open_radius(r);
  if (r - 3 * h <= 0.0 || r + 3 * h >= kPi) throw DomainError("finite-difference stencil leaves (0, pi)");
  const double fm3 = f(r - 3 * h), fm2 = f(r - 2 * h), fm1 = f(r - h), f0 = f(r);
  const double fp1 = f(r + h), fp2 = f(r + 2 * h), fp3 = f(r + 3 * h);
  RadialJet jet;
  jet.f = f0;
  jet.df = (-fm3 + 9 * fm2 - 45 * fm1 + 45 * fp1 - 9 * fp2 + fp3) / (60 * h);
  jet.d2f = (2 * fm3 - 27 * fm2 + 270 * fm1 - 490 * f0 + 270 * fp1 - 27 * fp2 + 2 * fp3) / (180 * h * h);
  return radial_L_apply(n, jet, r);
}

double green_L(int n, double r) {
  require_odd_dim(n);
  if (!(r > 0.0 && r <= kPi)) throw DomainError("radius must lie in (0, pi]");
  return sphere_constants(n).C_n.value() / std::pow(std::sin(0.5 * r), n - 2);
}

RadialJet green_L_jet(int n, double r) {
  require_odd_dim(n);
  require_open_radius(r);
  const double c = sphere_constants(n).C_n.value();
  const double p = n - 2;
  const double s = std::sin(0.5 * r), co = std::cos(0.5 * r);
  RadialJet jet;
  jet.f = c * std::pow(s, -p);
  jet.df = -0.5 * p * c * std::pow(s, -p - 1) * co;
  jet.d2f = 0.25 * p * c * ((p + 1) * std::pow(s, -p - 2) * co * co + std::pow(s, -p));
  return jet;
}

RadialJet antipodal_mode_jet(int n, double r) {
  require_open_radius(r);
  const double m = 0.5 * (n - 2);
  const double v = 1.0 + std::cos(r);
  RadialJet jet;
  jet.f = std::pow(v, -m);
  jet.df = m * std::pow(v, -m - 1) * std::sin(r);
  jet.d2f = m * (m + 1) * std::pow(v, -m - 2) * std::sin(r) * std::sin(r) + m * std::pow(v, -m - 1) * std::cos(r);
  return jet;
}

namespace {

// G = D_n/(2m) [ (1-z)^{1-m} + (1+z)^{-m} I(z) ],  I(z) = \int_{-1}^z ((1+w)/(1-w))^m dw,
// with m = (n-2)/2; under tau^2 = (1-w)/(1+w), I = 4 J_{n-3,2}(tan(r/2)).
struct L2Pieces {
  double c, m, u, v, I, dI, d2I;
};

L2Pieces l2_pieces(int n, double r, double I) {
  L2Pieces p;
  p.m = 0.5 * (n - 2);
  p.c = sphere_constants(n).D_n.value() / (2 * p.m);
  const double sh = std::sin(0.5 * r), ch = std::cos(0.5 * r);
  p.u = 2 * sh * sh;
  p.v = 2 * ch * ch;
  p.I = I;
  p.dI = std::pow(p.v / p.u, p.m);
  p.d2I = 2 * p.m * std::pow(p.v, p.m - 1) * std::pow(p.u, -p.m - 1);
  return p;
}

double l2_value(const L2Pieces& p) { return p.c * (std::pow(p.u, 1 - p.m) + std::pow(p.v, -p.m) * p.I); }

const TauIntegral& l2_tau(int n) {
  static thread_local std::map<int, TauIntegral> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    TauIntegral t = tau_integral(n - 3, 2);
    t *= 4;
    it = cache.emplace(n, std::move(t)).first;
  }
  return it->second;
}

const TauIntegral& d2_tau(int n) {
  static thread_local std::map<int, TauIntegral> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    TauIntegral t = tau_integral(n - 1, 1);
    t *= 2;
    it = cache.emplace(n, std::move(t)).first;
  }
  return it->second;
}

double d2_prefactor(int n, double x) {
  const int k = (n - 1) / 2;
  return std::pow(0.25 * (1.0 + x * x), k) / sphere_volume(n - 1);
}

}  // namespace

double green_L2(int n, double r) {
  require_odd_dim(n);
  require_open_radius(r);
  return l2_value(l2_pieces(n, r, l2_tau(n)(std::tan(0.5 * r))));
}

RadialJet green_L2_jet(int n, double r) {
  require_odd_dim(n);
  require_open_radius(r);
  const L2Pieces p = l2_pieces(n, r, l2_tau(n)(std::tan(0.5 * r)));
  const double m = p.m;
  const double gz = p.c * (-(1 - m) * std::pow(p.u, -m) - m * std::pow(p.v, -m - 1) * p.I + std::pow(p.v, -m) * p.dI);
  const double gzz = p.c * (-(1 - m) * m * std::pow(p.u, -m - 1) + m * (m + 1) * std::pow(p.v, -m - 2) * p.I -
                            2 * m * std::pow(p.v, -m - 1) * p.dI + std::pow(p.v, -m) * p.d2I);
  const double s = std::sin(r);
  RadialJet jet;
  jet.f = l2_value(p);
  jet.df = -s * gz;
  jet.d2f = s * s * gzz - std::cos(r) * gz;
  return jet;
}

double green_L2_quadrature(int n, double r) {
  require_odd_dim(n);
  require_open_radius(r);
  const double m = 0.5 * (n - 2);
  const double z = std::cos(r);
  boost::math::quadrature::tanh_sinh<double> integrator;
  double err = 0, l1 = 0;
  const double I = integrator.integrate([m](double w) { return std::pow((1 + w) / (1 - w), m); }, -1.0, z, 1e-14, &err, &l1);
  if (!std::isfinite(I) || err > 1e-10 * std::max(1.0, l1))
    throw QuadratureFailure("tanh_sinh did not converge for the G_{L^2} integral");
  return l2_value(l2_pieces(n, r, I));
}

double green_D2(int n, double x_norm) {
  require_odd_dim(n);
  if (!(x_norm > 0)) throw DomainError("green_D2 needs |x| > 0");
  return d2_prefactor(n, x_norm) * d2_tau(n)(x_norm);
}

double green_D2_quadrature(int n, double x_norm) {
  require_odd_dim(n);
  if (!(x_norm > 0)) throw DomainError("green_D2 needs |x| > 0");
  return d2_prefactor(n, x_norm) * 2.0 * tau_integral_quadrature(n - 1, 1, x_norm);
}

double green_D2_bracket(int n, double x_norm) {
  require_odd_dim(n);
  if (!(x_norm > 0)) throw DomainError("green_D2 needs |x| > 0");
  const int k = (n - 1) / 2;
  double acc = std::atan2(1.0, x_norm);
  for (int j = 0; j < k; ++j) acc -= (j % 2 ? -1.0 : 1.0) * std::pow(x_norm, -2 * j - 1) / (2 * j + 1);
  return (k % 2 ? -1.0 : 1.0) * acc;
}

RadialGreen::RadialGreen(int n, GreenKind kind) : n_(n), kind_(kind) {
  require_odd_dim(n);
  const int top = kind == GreenKind::L2 ? n - 4 : n - 2;
  for (int s = top; s >= 1; s -= 2) orders_.push_back(-s);
  switch (kind) {
    case GreenKind::L:
      f_ = [n](double r) { return green_L(n, r); };
      break;
    case GreenKind::L2:
      f_ = [n](double r) { return green_L2(n, r); };
      params_ = l2_tau(n);
      break;
    case GreenKind::D2:
      f_ = [n](double r) { return green_D2(n, std::tan(0.5 * r)); };
      params_ = d2_tau(n);
      break;
  }
}

RadialGreen::RadialGreen(int n, GreenKind kind, RadialFunction profile, std::vector<int> singular_orders)
    : n_(n), kind_(kind), f_(std::move(profile)), orders_(std::move(singular_orders)) {}

Monomial kv_trace_L2(int k) {
  if (k < 1) throw DomainError("kv_trace_L2 needs k >= 1");
  const BigInt kf = factorial(k);
  ExactScalar c(BigInt(2 * k + 1) * factorial(2 * k), BigInt(2 * k - 1) * kf * kf);
  c /= pow_int(ExactScalar(2), 4 * k + 4);
  if (k % 2 == 0) c = -c;
  return Monomial(c, 2);
}

Monomial kv_trace_D2(int k) {
  if (k < 1) throw DomainError("kv_trace_D2 needs k >= 1");
  const BigInt kf = factorial(k);
  ExactScalar c(factorial(2 * k), kf * kf);
  c /= pow_int(ExactScalar(2), 2 * k + 1);
  if (k % 2 == 1) c = -c;
  return Monomial(c, 2);
}

Monomial printed_regular_L2(int k) {
  if (k < 1) throw DomainError("printed_regular_L2 needs k >= 1");
  ExactScalar c(2 * k + 1, 2 * k - 1);
  c /= pow_int(ExactScalar(2), 2 * k + 4);
  if (k % 2 == 0) c = -c;
  return Monomial(c, 1) / sphere_volume_exact(2 * k);
}

Monomial printed_regular_D2(int k) { return kv_trace_D2(k) / sphere_volume_exact(2 * k + 1); }

RegularRatio regular_part_ratio(GreenKind kind, int k, const RegularPartOptions& opt) {
  if (kind == GreenKind::L) throw DomainError("G_L has no printed regular constant");
  RegularRatio out;
  out.k = k;
  out.kind = kind;
  out.numeric = regular_part(RadialGreen(2 * k + 1, kind), opt);
  out.printed = (kind == GreenKind::L2 ? printed_regular_L2(k) : printed_regular_D2(k)).value();
  out.ratio = out.numeric.value / out.printed;
  return out;
}

}  // namespace rigidity
