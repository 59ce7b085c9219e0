#pragma once

#include <map>
#include <string>
#include <utility>

#include "rigidity/exact.hpp"

namespace rigidity {

// Exact antiderivative data for J_{e,p}(a) = \int_a^\infty tau^{-e} (1 + tau^2)^{-p} dtau,
// e even and nonnegative:
//   J = arctan_coeff * (pi/2 - arctan a) + sum_{(s,t)} c_{s,t} a^s (1 + a^2)^t.
struct TauIntegral {
  int e = 0;
  int p = 0;
  ExactScalar arctan_coeff{0};
  std::map<std::pair<int, int>, ExactScalar> terms;

  double operator()(double a) const;
  TauIntegral& operator+=(const TauIntegral& o);
  TauIntegral& operator*=(const ExactScalar& c);
  std::string str() const;
};

TauIntegral tau_integral(int e, int p);

// Same integral by double-exponential quadrature on [a, inf).
double tau_integral_quadrature(int e, int p, double a, double tol = 1e-13);

}  // namespace rigidity
