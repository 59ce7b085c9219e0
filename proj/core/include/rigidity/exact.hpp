#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace rigidity {

using BigInt = boost::multiprecision::cpp_int;
using ExactScalar = boost::multiprecision::cpp_rational;

// Rising factorial x (x+1) ... (x+m-1); rising(x, 0) = 1.
BigInt rising(const BigInt& x, int m);
BigInt factorial(int m);
ExactScalar pow_int(const ExactScalar& base, int e);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const ExactScalar& v);
double to_double(const ExactScalar& v);
int sign(const ExactScalar& v);

// coeff * pi^pi_exp * sqrt(2)^sqrt2_exp, with exact multiplication and division.
struct Monomial {
  ExactScalar coeff{0};
  int pi_exp = 0;
  int sqrt2_exp = 0;

  Monomial() = default;
  Monomial(ExactScalar c, int pe = 0, int se = 0);

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  bool operator==(const Monomial& o) const;

  double value() const;
  // e.g. "3/128*pi^2"; sqrt(2) factors are folded into the rational when even.
  std::string str() const;
};

}  // namespace rigidity
