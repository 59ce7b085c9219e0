#pragma once

#include <compare>
#include <string>
#include <vector>

namespace rigidity {

// Highest weight of an irreducible representation of SO(group_rank),
// stored padded with zeros to length floor(group_rank / 2).
struct DominantWeight {
  std::vector<int> entries;
  int group_rank = 0;

  DominantWeight() = default;
  DominantWeight(std::vector<int> leading, int rank);

  bool operator==(const DominantWeight&) const = default;
  auto operator<=>(const DominantWeight&) const = default;
  std::string str() const;
};

// The SO(n+1) K-type with highest weight (2 + j, q, 0, ..., 0).
class KType {
 public:
  KType(int dim_n, int j, int q);

  int dim() const { return n_; }
  int j() const { return j_; }
  int q() const { return q_; }
  DominantWeight weight() const;

  static bool admissible(int dim_n, int j, int q);

  bool operator==(const KType&) const = default;
  auto operator<=>(const KType&) const = default;

 private:
  int n_;
  int j_;
  int q_;
};

bool is_dominant(const DominantWeight& w);

// Multiplicity (0 or 1) of sigma in beta restricted from SO(N) to SO(N-1).
bool branches(const DominantWeight& beta, const DominantWeight& sigma);

// SO(n+1) weights occurring in the sections of the bundle over S^n induced by
// sigma = (1) or (2), with first entry at most sigma_1 + j_max.
std::vector<DominantWeight> enumerate_bundle_ktypes(const DominantWeight& sigma, int n, int j_max);
// n = 3 variant: the SO(4) weights carry a signed last entry.
std::vector<DominantWeight> enumerate_bundle_ktypes_dim3(const DominantWeight& sigma, int j_max);

// The sigma = (2) family as KType labels (j, q), any n >= 3.
std::vector<KType> tensor_ktypes(int n, int j_max);

// Every dominant weight of SO(rank) with entries bounded by `bound` in absolute value.
std::vector<DominantWeight> all_dominant_weights(int rank, int bound);

}  // namespace rigidity
