#include "rigidity/spectrum.hpp"

#include <deque>
#include <set>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

const char* const kKernel = "K-types with q in {0,1} (= ran S) plus conformal directions";

bool adjacent(const KType& a, const KType& b) {
  if (a.dim() != b.dim()) return false;
  const int dj = std::abs(a.j() - b.j());
  const int dq = std::abs(a.q() - b.q());
  return dj + dq == 1;
}

struct Lattice {
  int n;
  int j_max;
  int q_lo;
  int q_hi;

  bool contains(int j, int q) const { return j >= 0 && j <= j_max && q >= q_lo && q <= q_hi; }

  std::vector<KType> neighbours(const KType& t) const {
    std::vector<KType> out;
    const int d[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const auto& s : d)
      if (contains(t.j() + s[0], t.q() + s[1])) out.emplace_back(n, t.j() + s[0], t.q() + s[1]);
    return out;
  }
};

// Edge relation between adjacent beta, gamma:
//   mu_gamma (Delta - 2 nu) = mu_beta (Delta + 2 nu),  Delta = kappa_gamma - kappa_beta.
// Swapping beta and gamma gives the same relation, so each undirected edge is one constraint.
SpectrumTable propagate(const Lattice& lat, const KType& base, const ExactScalar& base_value) {
  const ExactScalar two_nu = ExactScalar(lat.n);
  SpectrumTable table;
  table.dim_n = lat.n;
  table.normalization_base = base;
  table.free_scale_note = "one global scale, fixed by the value at (j,q)=(" + std::to_string(base.j()) + "," +
                          std::to_string(base.q()) + ")";

  auto label = [](const KType& t) { return "(" + std::to_string(t.j()) + "," + std::to_string(t.q()) + ")"; };

  auto& mu = table.entries;
  std::set<KType> forced;
  mu[base] = base_value;
  std::deque<KType> queue{base};
  while (!queue.empty()) {
    const KType known = queue.front();
    queue.pop_front();
    for (const KType& other : lat.neighbours(known)) {
      const ExactScalar delta = kappa(other) - kappa(known);
      const ExactScalar c_other = delta - two_nu;
      const ExactScalar c_known = delta + two_nu;
      if (c_other == 0) {
        // the edge cannot determine `other`; it pins `known` to zero instead
        if (c_known != 0) {
          forced.insert(known);
          if (mu.at(known) != 0) throw InconsistentSystem("edge at " + label(known) + " forces a nonzero value to vanish");
        }
        continue;
      }
      if (c_known == 0) forced.insert(other);
      const ExactScalar v = mu.at(known) * c_known / c_other;
      auto it = mu.find(other);
      if (it == mu.end()) {
        mu.emplace(other, v);
        queue.push_back(other);
      } else if (it->second != v) {
        throw InconsistentSystem("conflicting values at " + label(other));
      }
    }
  }

  for (int j = 0; j <= lat.j_max; ++j)
    for (int q = lat.q_lo; q <= lat.q_hi; ++q)
      if (!mu.count(KType(lat.n, j, q))) throw InconsistentSystem("K-type " + label(KType(lat.n, j, q)) + " is undetermined");

  for (const auto& [beta, mb] : mu)
    for (const KType& gamma : lat.neighbours(beta)) {
      const ExactScalar delta = kappa(gamma) - kappa(beta);
      if (mu.at(gamma) * (delta - two_nu) != mb * (delta + two_nu))
        throw InconsistentSystem("edge relation violated between " + label(beta) + " and " + label(gamma));
    }

  table.forced_zeros.assign(forced.begin(), forced.end());
  return table;
}

}  // namespace

ExactScalar kappa(const KType& t) {
  const int n = t.dim(), j = t.j(), q = t.q();
  return ExactScalar(BigInt(n + j + 1) * (j + 2) + BigInt(q) * (n + q - 3));
}

ExactScalar kappa_step(const KType& t, Step direction) {
  const int j = direction == Step::J_UP ? t.j() + 1 : t.j();
  const int q = direction == Step::Q_UP ? t.q() + 1 : t.q();
  if (!KType::admissible(t.dim(), j, q))
    throw InvalidStep("step leaves the admissible (j,q) range for n=" + std::to_string(t.dim()));
  return kappa(KType(t.dim(), j, q)) - kappa(t);
}

ExactScalar transition_coeff(const KType& beta, const KType& gamma, const ExactScalar& nu) {
  if (!adjacent(beta, gamma)) throw NotAdjacent("transition coefficient needs K-types one step apart");
  return (kappa(gamma) - kappa(beta) + 2 * nu) / 2;
}

SpectrumTable spectrum_generate(int n, int j_max, std::optional<ExactScalar> base_value) {
  if (n < 4) throw DomainError("spectrum_generate needs n >= 4; use spectrum_generate_dim3 for n = 3");
  if (j_max < 0) throw DomainError("j_max must be nonnegative");
  const KType base(n, 0, 2);
  return propagate(Lattice{n, j_max, 0, 2}, base, base_value ? *base_value : t0_eigenvalue(base));
}

SpectrumTable spectrum_generate_dim3(int j_max, Branch branch, std::optional<ExactScalar> base_value) {
  if (j_max < 0) throw DomainError("j_max must be nonnegative");
  const bool plus = branch == Branch::PLUS;
  const KType base(3, 0, plus ? 2 : -2);
  const Lattice lat{3, j_max, plus ? 0 : -2, plus ? 2 : 0};
  return propagate(lat, base, base_value ? *base_value : t0_eigenvalue(base));
}

ExactScalar t0_eigenvalue(const KType& t) {
  const int n = t.dim();
  return ExactScalar(rising(BigInt(t.j() + 2), n) * rising(BigInt(t.q() - 1), n));
}

HessianClass classify_hessian(int n, const ExactScalar& c) {
  if (n < 3) throw DomainError("classify_hessian needs n >= 3");
  Classification k = Classification::ZERO;
  if (c > 0) k = Classification::POSITIVE_SEMIDEFINITE;
  if (c < 0) k = Classification::NEGATIVE_SEMIDEFINITE;
  return {k, kKernel};
}

HessianClass classify_hessian_dim3(const ExactScalar& c_plus, const ExactScalar& c_minus) {
  const int sp = c_plus.sign(), sm = c_minus.sign();
  Classification k;
  if (sp == 0 && sm == 0) k = Classification::ZERO;
  else if (sp * sm > 0) k = Classification::INDEFINITE;
  else {
    // T0^+ > 0 at q = 2 and T0^- < 0 at q = -2, so c+ and -c- give the signs on the two halves
    const int s = sp != 0 ? sp : -sm;
    k = s > 0 ? Classification::POSITIVE_SEMIDEFINITE : Classification::NEGATIVE_SEMIDEFINITE;
  }
  return {k, kKernel};
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::POSITIVE_SEMIDEFINITE: return "POSITIVE_SEMIDEFINITE";
    case Classification::NEGATIVE_SEMIDEFINITE: return "NEGATIVE_SEMIDEFINITE";
    case Classification::INDEFINITE: return "INDEFINITE";
    case Classification::ZERO: return "ZERO";
  }
  return "?";
}

}  // namespace rigidity
