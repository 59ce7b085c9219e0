#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigidity/exact.hpp"
#include "rigidity/ktypes.hpp"

namespace rigidity {

enum class Step { J_UP, Q_UP };

// Which half of the n = 3 lattice a table covers: q in {0,1,2} or {-2,-1,0}.
enum class Branch { PLUS, MINUS };

struct SpectrumTable {
  int dim_n = 0;
  std::map<KType, ExactScalar> entries;
  KType normalization_base{4, 0, 2};
  std::string free_scale_note;
  // K-types whose value was forced to zero by a degenerate edge relation.
  std::vector<KType> forced_zeros;

  const ExactScalar& at(const KType& t) const { return entries.at(t); }
};

ExactScalar kappa(const KType& t);
ExactScalar kappa_step(const KType& t, Step direction);
// c(beta, gamma, nu) = (kappa_gamma - kappa_beta + 2 nu) / 2 for adjacent K-types.
ExactScalar transition_coeff(const KType& beta, const KType& gamma, const ExactScalar& nu);

SpectrumTable spectrum_generate(int n, int j_max, std::optional<ExactScalar> base_value = std::nullopt);
SpectrumTable spectrum_generate_dim3(int j_max, Branch branch, std::optional<ExactScalar> base_value = std::nullopt);

// rising(j+2, n) * rising(q-1, n); for n = 3 and q < 0 this is the T0^- eigenvalue.
ExactScalar t0_eigenvalue(const KType& t);

enum class Classification { POSITIVE_SEMIDEFINITE, NEGATIVE_SEMIDEFINITE, INDEFINITE, ZERO };

struct HessianClass {
  Classification kind;
  std::string kernel;
};

HessianClass classify_hessian(int n, const ExactScalar& c);
HessianClass classify_hessian_dim3(const ExactScalar& c_plus, const ExactScalar& c_minus);

std::string to_string(Classification c);

}  // namespace rigidity
