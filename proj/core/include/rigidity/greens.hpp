#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rigidity/exact.hpp"
#include "rigidity/tau_integral.hpp"

namespace rigidity {

enum class GreenKind { L, L2, D2 };

std::string to_string(GreenKind k);

double sphere_volume(int m);
// Volume of the unit m-sphere as rational * pi^e.
Monomial sphere_volume_exact(int m);

struct SphereConstants {
  int n = 0;
  double omega = 0;  // vol(S^{n-1})
  Monomial C_n;      // 1 / (2^{n-1} (n-2) omega_{n-1})
  Monomial D_n;      // 1 / (2^{n/2} (n-2) omega_{n-1})
};

SphereConstants sphere_constants(int n);

// Value and first two r-derivatives of a radial profile.
struct RadialJet {
  double f = 0;
  double df = 0;
  double d2f = 0;
};

using RadialFunction = std::function<double(double)>;

// -f'' - (n-1) cot(r) f' + n(n-2)/4 f, with f'' and f' from sixth-order central differences.
double radial_L_apply(int n, const RadialFunction& f, double r, double h = 1e-3);
double radial_L_apply(int n, const RadialJet& jet, double r);

double green_L(int n, double r);
RadialJet green_L_jet(int n, double r);

// Second solution of the homogeneous radial equation, (1 + cos r)^{-(n-2)/2}.
RadialJet antipodal_mode_jet(int n, double r);

// Second Green's function (L G = G_L), from the exact antiderivative.
double green_L2(int n, double r);
RadialJet green_L2_jet(int n, double r);
// Same profile with the w-integral done by tanh-sinh quadrature.
double green_L2_quadrature(int n, double r);

// G_{D^2} as a function of the stereographic radius |x| = tan(r/2).
double green_D2(int n, double x_norm);
double green_D2_quadrature(int n, double x_norm);
// (-1)^k [pi/2 - atan x - sum_{j<k} (-1)^j x^{-2j-1}/(2j+1)], n = 2k+1.
double green_D2_bracket(int n, double x_norm);

class RadialGreen {
 public:
  RadialGreen(int n, GreenKind kind);
  // Arbitrary profile with declared singular orders; kind is informational.
  RadialGreen(int n, GreenKind kind, RadialFunction profile, std::vector<int> singular_orders);

  int dim() const { return n_; }
  GreenKind kind() const { return kind_; }
  double operator()(double r) const { return f_(r); }
  const std::vector<int>& singular_orders() const { return orders_; }
  // Exact tau-integral data behind the closed form (empty for G_L).
  const TauIntegral& closed_form_params() const { return params_; }

 private:
  int n_;
  GreenKind kind_;
  RadialFunction f_;
  std::vector<int> orders_;
  TauIntegral params_;
};

struct RegularPartOptions {
  double r_lo = 1e-3;
  double r_hi = 1e-1;
  int nodes = 24;
  int poly_degree = 6;
  int richardson_levels = 2;
  double tolerance = 1e-4;  // relative
};

struct RegularPart {
  double value = 0;
  double error = 0;
};

// Constant term of the small-r expansion, after removing the declared singular orders.
RegularPart regular_part(const RadialGreen& g, const RegularPartOptions& opt = {});

Monomial kv_trace_L2(int k);
Monomial kv_trace_D2(int k);
// Printed regular constants at coincidence on S^{2k+1}: TR / vol(S^{2k+1}).
Monomial printed_regular_L2(int k);
Monomial printed_regular_D2(int k);

struct RegularRatio {
  int k = 0;
  GreenKind kind = GreenKind::L2;
  RegularPart numeric;
  double printed = 0;
  double ratio = 0;
};

RegularRatio regular_part_ratio(GreenKind kind, int k, const RegularPartOptions& opt = {});

}  // namespace rigidity
