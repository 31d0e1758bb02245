#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "coarsedim/finfam.hpp"
#include "coarsedim/ordinal.hpp"

namespace coarsedim {

/// K(tau, n): tau = {k_0 < ... < k_s} without its first n+1 elements; nullopt when n >= s.
std::optional<FinSet> bigK(const FinSet& tau, std::uint64_t n);

/// i(tau, n) = k_n when n <= s, else k_s.
Element idx(const FinSet& tau, std::uint64_t n);

/// Membership oracle for the families S_xi, memoized on (sigma, xi).
///
///   S_n  = { sigma : |sigma| <= n }
///   S_xi = { sigma : K(sigma, n(xi)) is empty or lies in S_{zeta_l(gamma(xi)) + l}
///                    for some l in 1..i(sigma, n(xi)) }
///
/// Every recursive query has a strictly smaller sigma and a strictly smaller
/// ordinal, so the recursion terminates. The memo is guarded by a mutex.
class SMembershipOracle {
 public:
  bool member(const FinSet& sigma, const Ordinal& xi);
  std::size_t cacheSize() const;

 private:
  bool compute(const FinSet& sigma, const Ordinal& xi);

  mutable std::mutex mutex_;
  std::map<std::pair<FinSet, Ordinal>, bool> memo_;
};

/// sigma in S_xi, using a per-thread oracle.
bool sMember(const FinSet& sigma, const Ordinal& xi);

/// sigma in S_xi[L] with L = {3, 4, ...}: every element must be >= 3, and
/// sigma shifted down by 2 must lie in S_xi.
bool sMemberShifted(const FinSet& sigma, const Ordinal& xi);

/// S_xi restricted to subsets of {1..bound}.
struct STruncation {
  Ordinal xi;
  unsigned bound = 0;
  ExplicitFamily family;
};

inline constexpr unsigned kMaxTruncationBound = 20;

/// Throws BudgetExceeded when bound > kMaxTruncationBound.
STruncation truncate(const Ordinal& xi, unsigned bound);

/// Ord of truncate(xi, bound).family.
std::uint64_t ordTruncated(const Ordinal& xi, unsigned bound);

}  // namespace coarsedim
