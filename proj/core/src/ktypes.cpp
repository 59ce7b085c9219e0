#include "rigidity/ktypes.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "rigidity/errors.hpp"

namespace rigidity {

DominantWeight::DominantWeight(std::vector<int> leading, int rank) : entries(std::move(leading)), group_rank(rank) {
  const std::size_t len = static_cast<std::size_t>(rank / 2);
  if (entries.size() > len) {
    for (std::size_t i = len; i < entries.size(); ++i)
      if (entries[i] != 0) throw RankMismatch("weight has more nonzero entries than rank " + std::to_string(rank) + " admits");
  }
  entries.resize(len, 0);
}

std::string DominantWeight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
  os << ')';
  return os.str();
}

bool KType::admissible(int dim_n, int j, int q) {
  if (dim_n < 3 || j < 0) return false;
  if (dim_n == 3) return q >= -2 && q <= 2;
  return q >= 0 && q <= 2;
}

KType::KType(int dim_n, int j, int q) : n_(dim_n), j_(j), q_(q) {
  if (!admissible(dim_n, j, q))
    throw InvalidKType("no K-type (2+" + std::to_string(j) + "," + std::to_string(q) + ") for n=" + std::to_string(dim_n));
}

DominantWeight KType::weight() const { return DominantWeight({2 + j_, q_}, n_ + 1); }

bool is_dominant(const DominantWeight& w) {
  const auto& e = w.entries;
  if (w.group_rank < 1 || e.size() != static_cast<std::size_t>(w.group_rank / 2)) return false;
  if (e.empty()) return true;
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i] < e[i + 1]) return false;
  const int last = e.back();
  if (w.group_rank % 2 == 0) {
    if (e.size() == 1) return true;  // SO(2): any integer
    return std::abs(last) <= e[e.size() - 2];
  }
  return last >= 0;
}

bool branches(const DominantWeight& beta, const DominantWeight& sigma) {
  if (beta.group_rank != sigma.group_rank + 1)
    throw RankMismatch("branching needs ranks N and N-1, got " + std::to_string(beta.group_rank) + " and " +
                       std::to_string(sigma.group_rank));
  if (!is_dominant(beta) || !is_dominant(sigma)) return false;
  const auto& b = beta.entries;
  const auto& s = sigma.entries;
  if (beta.group_rank % 2 == 1) {
    // SO(2m+1) -> SO(2m): b1 >= s1 >= b2 >= ... >= bm >= |sm|
    const std::size_t m = b.size();
    for (std::size_t i = 0; i + 1 < m; ++i)
      if (b[i] < s[i] || s[i] < b[i + 1]) return false;
    return m == 0 || b[m - 1] >= std::abs(s[m - 1]);
  }
  // SO(2m) -> SO(2m-1): b1 >= s1 >= b2 >= ... >= s_{m-1} >= |bm|
  const std::size_t m = b.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (b[i] < s[i]) return false;
    if (i + 2 < m && s[i] < b[i + 1]) return false;
  }
  if (m >= 2 && s[m - 2] < std::abs(b[m - 1])) return false;
  return true;
}

std::vector<DominantWeight> all_dominant_weights(int rank, int bound) {
  const int len = rank / 2;
  std::vector<DominantWeight> out;
  std::vector<int> cur(static_cast<std::size_t>(len), 0);
  std::function<void(int, int)> rec = [&](int pos, int upper) {
    if (pos == len) {
      DominantWeight w(cur, rank);
      if (is_dominant(w)) out.push_back(std::move(w));
      return;
    }
    const bool signed_last = rank % 2 == 0 && pos == len - 1;
    const int lower = signed_last ? -upper : 0;
    for (int v = upper; v >= lower; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, signed_last ? bound : v);
    }
  };
  if (len == 0) {
    out.emplace_back(std::vector<int>{}, rank);
    return out;
  }
  rec(0, bound);
  return out;
}

namespace {

int sigma_kind(const DominantWeight& sigma) {
  const auto& e = sigma.entries;
  if (e.empty()) throw UnsupportedSigma("sigma must be (1) or (2)");
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] != 0) throw UnsupportedSigma("sigma " + sigma.str() + " is not (1) or (2)");
  if (e[0] != 1 && e[0] != 2) throw UnsupportedSigma("sigma " + sigma.str() + " is not (1) or (2)");
  return e[0];
}

}  // namespace

std::vector<DominantWeight> enumerate_bundle_ktypes(const DominantWeight& sigma, int n, int j_max) {
  if (n < 4) throw DomainError("enumerate_bundle_ktypes needs n >= 4; use the n = 3 variant");
  if (sigma.group_rank != n) throw RankMismatch("sigma must be a weight of SO(n)");
  const int s = sigma_kind(sigma);
  std::vector<DominantWeight> out;
  for (int j = 0; j <= j_max; ++j)
    for (int q = 0; q <= s; ++q) out.emplace_back(std::vector<int>{s + j, q}, n + 1);
  return out;
}

std::vector<DominantWeight> enumerate_bundle_ktypes_dim3(const DominantWeight& sigma, int j_max) {
  if (sigma.group_rank != 3) throw RankMismatch("sigma must be a weight of SO(3)");
  const int s = sigma_kind(sigma);
  std::vector<DominantWeight> out;
  for (int j = 0; j <= j_max; ++j)
    for (int q = -s; q <= s; ++q) out.emplace_back(std::vector<int>{s + j, q}, 4);
  return out;
}

std::vector<KType> tensor_ktypes(int n, int j_max) {
  std::vector<KType> out;
  const int qlo = n == 3 ? -2 : 0;
  for (int j = 0; j <= j_max; ++j)
    for (int q = qlo; q <= 2; ++q) out.emplace_back(n, j, q);
  return out;
}

}  // namespace rigidity
