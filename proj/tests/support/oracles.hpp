#pragma once

// Independent reference computations used only by the test suites.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>
#include <vector>

#include "rigidity/exact.hpp"
#include "rigidity/ktypes.hpp"
#include "rigidity/qcurv.hpp"

namespace oracle {

using rigidity::ExactScalar;
using HighFloat = boost::multiprecision::cpp_bin_float_50;

// <beta + 2 rho, beta> with 2 rho = (n-1, n-3, ...) for SO(n+1).
inline ExactScalar kappa_inner_product(int n, int j, int q) {
  const std::vector<int> beta{2 + j, q};
  ExactScalar s = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int two_rho = n - 1 - 2 * static_cast<int>(i);
    s += ExactScalar((beta[i] + two_rho) * beta[i]);
  }
  return s;
}

// Every weight of SO(n+1) with entries bounded by `bound` that contains sigma on restriction.
inline std::vector<rigidity::DominantWeight> brute_force_branching(const rigidity::DominantWeight& sigma, int n,
                                                                   int bound) {
  std::vector<rigidity::DominantWeight> out;
  for (const auto& beta : rigidity::all_dominant_weights(n + 1, bound))
    if (rigidity::branches(beta, sigma)) out.push_back(beta);
  return out;
}

inline HighFloat pi50() { return boost::math::constants::pi<HighFloat>(); }

// (4 pi)^{-n/2} Gamma(s - n/2) Gamma(n/2 + 1 - s)^2 / (Gamma(s) Gamma(n + 2 - 2s)) in 50 digits.
inline HighFloat prefactor_hp(int n, const HighFloat& s) {
  using boost::multiprecision::pow;
  using boost::multiprecision::tgamma;
  const HighFloat h = HighFloat(n) / 2;
  const HighFloat g = tgamma(h + 1 - s);
  return pow(4 * pi50(), -h) * tgamma(s - h) * g * g / (tgamma(s) * tgamma(HighFloat(n + 2) - 2 * s));
}

// lim_{s->0} prefactor / s for odd n, directly from 50-digit Gamma values.
inline HighFloat det_prefactor_hp(int n) {
  using boost::multiprecision::pow;
  using boost::multiprecision::tgamma;
  const HighFloat h = HighFloat(n) / 2;
  const HighFloat g = tgamma(h + 1);
  return pow(4 * pi50(), -h) * tgamma(-h) * g * g / tgamma(HighFloat(n + 2));
}

inline ExactScalar random_rational(std::mt19937_64& rng, int span = 9, int den = 7) {
  std::uniform_int_distribution<int> num(-span, span), d(1, den);
  return ExactScalar(num(rng), d(rng));
}

// Random nonzero rational xi and symmetric k with k xi = 0 and tr k = 0.
inline void random_tt(std::mt19937_64& rng, int n, rigidity::RationalVector& xi, rigidity::RationalMatrix& k) {
  using rigidity::RationalMatrix;
  do {
    xi.assign(static_cast<std::size_t>(n), ExactScalar(0));
    for (auto& x : xi) x = random_rational(rng);
  } while (rigidity::dot(xi, xi) == 0);
  const ExactScalar x2 = rigidity::dot(xi, xi);
  const RationalMatrix Pi = RationalMatrix::identity(n) - RationalMatrix::outer(xi, xi) * (ExactScalar(1) / x2);
  RationalMatrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) A(i, j) = A(j, i) = random_rational(rng);
  const RationalMatrix t = Pi * A * Pi;
  k = t - Pi * (t.trace() / (n - 1));
}

}  // namespace oracle
