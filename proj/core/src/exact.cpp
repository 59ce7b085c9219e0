#include "rigidity/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rigidity {

BigInt rising(const BigInt& x, int m) {
  if (m < 0) throw std::invalid_argument("rising: negative length");
  BigInt r = 1;
  for (int i = 0; i < m; ++i) r *= x + i;
  return r;
}

BigInt factorial(int m) {
  if (m < 0) throw std::invalid_argument("factorial: negative argument");
  return rising(BigInt(1), m);
}

ExactScalar pow_int(const ExactScalar& base, int e) {
  ExactScalar r = 1;
  ExactScalar b = e >= 0 ? base : ExactScalar(1) / base;
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

std::string to_string(const ExactScalar& v) {
  const auto num = boost::multiprecision::numerator(v);
  const auto den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const ExactScalar& v) { return v.convert_to<double>(); }

int sign(const ExactScalar& v) { return v.sign(); }

namespace {

Monomial normalized(Monomial m) {
  // fold sqrt(2)^(2e) into the rational part
  const int whole = m.sqrt2_exp >= 0 ? m.sqrt2_exp / 2 : -((-m.sqrt2_exp + 1) / 2);
  m.coeff *= pow_int(ExactScalar(2), whole);
  m.sqrt2_exp -= 2 * whole;
  if (m.coeff == 0) {
    m.pi_exp = 0;
    m.sqrt2_exp = 0;
  }
  return m;
}

}  // namespace

Monomial::Monomial(ExactScalar c, int pe, int se) : coeff(std::move(c)), pi_exp(pe), sqrt2_exp(se) {
  *this = normalized(*this);
}

Monomial Monomial::operator*(const Monomial& o) const {
  return Monomial(coeff * o.coeff, pi_exp + o.pi_exp, sqrt2_exp + o.sqrt2_exp);
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (o.coeff == 0) throw std::domain_error("Monomial: division by zero");
  return Monomial(coeff / o.coeff, pi_exp - o.pi_exp, sqrt2_exp - o.sqrt2_exp);
}

bool Monomial::operator==(const Monomial& o) const {
  return coeff == o.coeff && pi_exp == o.pi_exp && sqrt2_exp == o.sqrt2_exp;
}

double Monomial::value() const {
  return to_double(coeff) * std::pow(std::numbers::pi, pi_exp) * std::pow(std::numbers::sqrt2, sqrt2_exp);
}

std::string Monomial::str() const {
  std::string s = to_string(coeff);
  if (coeff == 0) return s;
  if (pi_exp == 1) s += "*pi";
  else if (pi_exp != 0) s += "*pi^" + std::to_string(pi_exp);
  if (sqrt2_exp == 1) s += "*sqrt(2)";
  return s;
}

}  // namespace rigidity
