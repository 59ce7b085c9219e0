#include "rigidity/tau_integral.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <sstream>

#include "rigidity/errors.hpp"

namespace rigidity {

double TauIntegral::operator()(double a) const {
  if (!(a > 0)) throw DomainError("tau integral needs a > 0");
  double acc = to_double(arctan_coeff) * std::atan2(1.0, a);
  const double one_a2 = 1.0 + a * a;
  for (const auto& [st, c] : terms) acc += to_double(c) * std::pow(a, st.first) * std::pow(one_a2, st.second);
  return acc;
}

TauIntegral& TauIntegral::operator+=(const TauIntegral& o) {
  arctan_coeff += o.arctan_coeff;
  for (const auto& [st, c] : o.terms) {
    auto& slot = terms[st];
    slot += c;
    if (slot == 0) terms.erase(st);
  }
  return *this;
}

TauIntegral& TauIntegral::operator*=(const ExactScalar& c) {
  arctan_coeff *= c;
  for (auto& kv : terms) kv.second *= c;
  if (c == 0) terms.clear();
  return *this;
}

std::string TauIntegral::str() const {
  std::ostringstream os;
  os << to_string(arctan_coeff) << "*(pi/2 - atan a)";
  for (const auto& [st, c] : terms) os << " + (" << to_string(c) << ")*a^" << st.first << "*(1+a^2)^" << st.second;
  return os.str();
}

namespace {

// K_p = \int_a^\infty (1+tau^2)^{-p}:  K_1 = pi/2 - atan a,
// K_{p+1} = (2p-1)/(2p) K_p - a / (2p (1+a^2)^p).
TauIntegral power_only(int p) {
  TauIntegral k;
  k.e = 0;
  k.p = 1;
  k.arctan_coeff = 1;
  for (int i = 1; i < p; ++i) {
    k *= ExactScalar(2 * i - 1, 2 * i);
    k.terms[{1, -i}] += ExactScalar(-1, 2 * i);
    k.p = i + 1;
  }
  return k;
}

}  // namespace

TauIntegral tau_integral(int e, int p) {
  if (e < 0 || e % 2 != 0 || p < 0 || (e == 0 && p == 0))
    throw DomainError("tau_integral(e,p) needs even e >= 0, p >= 0 and a convergent integrand");
  if (p == 0) {
    TauIntegral t;
    t.e = e;
    t.terms[{1 - e, 0}] = ExactScalar(1, e - 1);
    return t;
  }
  if (e == 0) return power_only(p);
  // tau^{-e}(1+tau^2)^{-(p-1)} = tau^{-e}(1+tau^2)^{-p} + tau^{2-e}(1+tau^2)^{-p}
  TauIntegral out = tau_integral(e, p - 1);
  TauIntegral lower = tau_integral(e - 2, p);
  lower *= -1;
  out += lower;
  out.e = e;
  out.p = p;
  return out;
}

double tau_integral_quadrature(int e, int p, double a, double tol) {
  if (!(a > 0)) throw DomainError("tau integral needs a > 0");
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [e, p, a](double u) {
    const double tau = a + u;
    return std::pow(tau, -e) * std::pow(1.0 + tau * tau, -p);
  };
  double err = 0, l1 = 0;
  const double v = integrator.integrate(f, tol, &err, &l1);
  if (!std::isfinite(v) || err > 1e3 * tol * std::max(1.0, l1))
    throw QuadratureFailure("exp_sinh did not converge for tau integral (e=" + std::to_string(e) + ", p=" + std::to_string(p) + ")");
  return v;
}

}  // namespace rigidity
