#pragma once

#include <Eigen/Dense>

#include <string>

#include "rigidity/exact.hpp"

namespace rigidity {

// a (tr K Pi)^2 + b tr((K Pi)^2), scaled by extra_factor.
struct QuadFormCoeffs {
  ExactScalar a{0};
  ExactScalar b{0};
  ExactScalar extra_factor{1};
};

struct PointData {
  Eigen::MatrixXd k;
  Eigen::VectorXd xi;

  int dim() const { return static_cast<int>(xi.size()); }
  bool trace_free(double tol = 1e-12) const;
  bool transverse(double tol = 1e-12) const;
};

QuadFormCoeffs bracket_L(int n, const ExactScalar& s);
QuadFormCoeffs bracket_D2(int n, const ExactScalar& s);

enum class PrefactorMode { DET_DERIVATIVE_AT_ZERO, ZETA0_LIMIT_AT_ZERO };

struct Prefactor {
  double value = 0;
  int sign = 0;
};

// The s -> 0 data of (4 pi)^{-n/2} G(s - n/2) G(n/2 + 1 - s)^2 / (G(s) G(n + 2 - 2s)).
Prefactor gamma_prefactor(int n, PrefactorMode mode);
// The prefactor itself at s (for 0 < |s| small, away from Gamma poles).
double gamma_prefactor_raw(int n, double s);

double evaluate_form(const QuadFormCoeffs& c, double prefactor, const PointData& p, double s_power);

enum class Definiteness { POS_DEF, POS_SEMIDEF, NEG_DEF, NEG_SEMIDEF, INDEFINITE, ZERO };
enum class NullRay { NONE, PURE_TRACE, TRACE_FREE, ALL };

struct DefinitenessResult {
  Definiteness kind = Definiteness::ZERO;
  NullRay null_ray = NullRay::NONE;
  ExactScalar pure_trace_value{0};  // a m + b, the form on K = Pi up to m
  ExactScalar trace_free_value{0};  // b
};

// Classifies a t^2 + b u over data with t^2 <= m u.
DefinitenessResult bracket_definiteness(const QuadFormCoeffs& c, int m);

enum class Functional { DET_L, ZETA0_L, DET_D2, ZETA0_D2 };

struct ExtremalStatement {
  Functional functional;
  int n = 0;
  int k = 0;
  int prefactor_sign = 0;
  int bracket_sign = 0;
  int c_sign = 0;         // sign of the Hessian leading coefficient of the functional itself
  int maximized_sign = 0; // the functional times this sign has a local maximum at the round sphere
  std::string text;
};

ExtremalStatement extremal_classification(Functional f, int n);
// (-1)^{k+1} for DET_L and ZETA0_L, (-1)^k for the D^2 variants.
int printed_maximized_sign(Functional f, int n);
bool applicable(Functional f, int n);

std::string to_string(Definiteness d);
std::string to_string(NullRay r);
std::string to_string(Functional f);

}  // namespace rigidity
