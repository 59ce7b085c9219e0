#include "rigidity/symbols.hpp"

#include <cmath>
#include <numbers>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

constexpr double kPi = std::numbers::pi;

int sign_of(const ExactScalar& v) { return v.sign(); }

// sign of Gamma at a negative non-integer x: (-1)^{ceil(-x)}
int gamma_sign_negative(double x) {
  const long poles = static_cast<long>(std::ceil(-x));
  return poles % 2 == 0 ? 1 : -1;
}

}  // namespace

bool PointData::trace_free(double tol) const { return std::abs(k.trace()) <= tol * (1.0 + k.norm()); }

bool PointData::transverse(double tol) const { return (k * xi).norm() <= tol * (1.0 + k.norm()) * xi.norm(); }

QuadFormCoeffs bracket_L(int n, const ExactScalar& s) {
  if (n < 3) throw DomainError("bracket_L needs n >= 3");
  const ExactScalar m2 = ExactScalar((n - 1) * (n - 1));
  QuadFormCoeffs c;
  c.a = s * s / m2 - s / m2 - ExactScalar(1, 2 * (n - 1));
  c.b = ExactScalar(1, 2);
  c.extra_factor = 1;
  return c;
}

QuadFormCoeffs bracket_D2(int n, const ExactScalar& s) {
  if (n < 3) throw DomainError("bracket_D2 needs n >= 3");
  QuadFormCoeffs c;
  c.a = 1;
  c.b = 2 * s - (n - 1);
  c.extra_factor = pow_int(ExactScalar(2), n / 2 - 2);
  return c;
}

Prefactor gamma_prefactor(int n, PrefactorMode mode) {
  if (n < 1) throw DomainError("gamma_prefactor needs n >= 1");
  const double scale = std::pow(4.0 * kPi, -0.5 * n);
  Prefactor p;
  if (mode == PrefactorMode::DET_DERIVATIVE_AT_ZERO) {
    if (n % 2 == 0) throw ParityError("the determinant prefactor is taken in odd dimensions only");
    // Gamma(-n/2) = pi / (sin(-pi n/2) Gamma(1 + n/2)), |sin| = 1 for odd n
    p.sign = gamma_sign_negative(-0.5 * n);
    const double g = std::tgamma(0.5 * n + 1);
    p.value = p.sign * scale * kPi * g / std::tgamma(n + 2.0);
  } else {
    if (n % 2 != 0) throw ParityError("the zeta(0) prefactor is taken in even dimensions only");
    // Gamma(s - m)/Gamma(s) -> (-1)^m / m! at s = 0, m = n/2
    const int m = n / 2;
    p.sign = m % 2 == 0 ? 1 : -1;
    p.value = p.sign * scale * std::tgamma(m + 1.0) / std::tgamma(n + 2.0);
  }
  return p;
}

double gamma_prefactor_raw(int n, double s) {
  const double h = 0.5 * n;
  const double g2 = std::tgamma(-s + h + 1);
  return std::pow(4.0 * kPi, -h) * std::tgamma(s - h) * g2 * g2 / (std::tgamma(s) * std::tgamma(-2 * s + n + 2));
}

double evaluate_form(const QuadFormCoeffs& c, double prefactor, const PointData& p, double s_power) {
  const double x2 = p.xi.squaredNorm();
  if (x2 == 0.0) throw ZeroCovector("evaluate_form needs xi != 0");
  const int n = p.dim();
  const Eigen::MatrixXd Pi = Eigen::MatrixXd::Identity(n, n) - p.xi * p.xi.transpose() / x2;
  const Eigen::MatrixXd kp = p.k * Pi;
  const double t = kp.trace();
  const double u = (kp * kp).trace();
  return prefactor * to_double(c.extra_factor) * std::pow(std::sqrt(x2), s_power) *
         (to_double(c.a) * t * t + to_double(c.b) * u);
}

DefinitenessResult bracket_definiteness(const QuadFormCoeffs& c, int m) {
  if (m < 2) throw DomainError("bracket_definiteness needs m >= 2");
  DefinitenessResult r;
  r.pure_trace_value = c.a * m + c.b;
  r.trace_free_value = c.b;
  const int sp = sign_of(r.pure_trace_value);
  const int sf = sign_of(r.trace_free_value);
  if (sp == 0 && sf == 0) {
    r.kind = Definiteness::ZERO;
    r.null_ray = NullRay::ALL;
  } else if (sp * sf < 0) {
    r.kind = Definiteness::INDEFINITE;
  } else {
    const int s = sp != 0 ? sp : sf;
    const bool strict = sp != 0 && sf != 0;
    if (s > 0) r.kind = strict ? Definiteness::POS_DEF : Definiteness::POS_SEMIDEF;
    else r.kind = strict ? Definiteness::NEG_DEF : Definiteness::NEG_SEMIDEF;
    if (sp == 0) r.null_ray = NullRay::PURE_TRACE;
    if (sf == 0) r.null_ray = NullRay::TRACE_FREE;
  }
  return r;
}

bool applicable(Functional f, int n) {
  if (n < 3) return false;
  const bool det = f == Functional::DET_L || f == Functional::DET_D2;
  return det ? n % 2 == 1 : n % 2 == 0;
}

int printed_maximized_sign(Functional f, int n) {
  const int k = n / 2;
  const int even_k = k % 2 == 0 ? 1 : -1;  // (-1)^k
  return (f == Functional::DET_L || f == Functional::ZETA0_L) ? -even_k : even_k;
}

ExtremalStatement extremal_classification(Functional f, int n) {
  if (!applicable(f, n)) {
    const bool det = f == Functional::DET_L || f == Functional::DET_D2;
    throw ParityError(to_string(f) + " is classified only for " + (det ? "odd" : "even") + " n >= 3, got n=" +
                      std::to_string(n));
  }
  const bool det = f == Functional::DET_L || f == Functional::DET_D2;
  const bool yamabe = f == Functional::DET_L || f == Functional::ZETA0_L;
  ExtremalStatement st;
  st.functional = f;
  st.n = n;
  st.k = n / 2;
  st.prefactor_sign =
      gamma_prefactor(n, det ? PrefactorMode::DET_DERIVATIVE_AT_ZERO : PrefactorMode::ZETA0_LIMIT_AT_ZERO).sign;
  const QuadFormCoeffs br = yamabe ? bracket_L(n, 0) : bracket_D2(n, 0);
  const Definiteness d = bracket_definiteness(br, n - 1).kind;
  if (d == Definiteness::POS_DEF || d == Definiteness::POS_SEMIDEF) st.bracket_sign = 1;
  else if (d == Definiteness::NEG_DEF || d == Definiteness::NEG_SEMIDEF) st.bracket_sign = -1;
  else throw Degenerate("bracket at s = 0 is not semidefinite");
  // det P = exp(-zeta'_P(0)) contributes the extra minus sign for determinants
  st.c_sign = (det ? -1 : 1) * st.prefactor_sign * st.bracket_sign;
  st.maximized_sign = -st.c_sign;
  const std::string op = yamabe ? "L" : "D^2";
  const std::string base = det ? "det " + op : "zeta_{" + op + "}(0)";
  st.text = (st.maximized_sign > 0 ? "" : "-") + base + " is a local maximum at the round S^" + std::to_string(n) +
            " (k=" + std::to_string(st.k) + ")";
  return st;
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::POS_DEF: return "POS_DEF";
    case Definiteness::POS_SEMIDEF: return "POS_SEMIDEF";
    case Definiteness::NEG_DEF: return "NEG_DEF";
    case Definiteness::NEG_SEMIDEF: return "NEG_SEMIDEF";
    case Definiteness::INDEFINITE: return "INDEFINITE";
    case Definiteness::ZERO: return "ZERO";
  }
  return "?";
}

std::string to_string(NullRay r) {
  switch (r) {
    case NullRay::NONE: return "none";
    case NullRay::PURE_TRACE: return "K ~ Pi";
    case NullRay::TRACE_FREE: return "tr(K Pi) = 0";
    case NullRay::ALL: return "all";
  }
  return "?";
}

std::string to_string(Functional f) {
  switch (f) {
    case Functional::DET_L: return "DET_L";
    case Functional::ZETA0_L: return "ZETA0_L";
    case Functional::DET_D2: return "DET_D2";
    case Functional::ZETA0_D2: return "ZETA0_D2";
  }
  return "?";
}

}  // namespace rigidity
