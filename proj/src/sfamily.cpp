#include "coarsedim/sfamily.hpp"

#include "coarsedim/error.hpp"

namespace coarsedim {

std::optional<FinSet> bigK(const FinSet& tau, std::uint64_t n) {
  const std::uint64_t s = tau.size() - 1;
  if (n >= s) return std::nullopt;
  return FinSet(std::vector<Element>(tau.elements().begin() + static_cast<std::ptrdiff_t>(n + 1), tau.elements().end()));
}

Element idx(const FinSet& tau, std::uint64_t n) {
  const std::uint64_t s = tau.size() - 1;
  return n <= s ? tau[n] : tau[s];
}

bool SMembershipOracle::member(const FinSet& sigma, const Ordinal& xi) {
  if (xi.isFinite()) return sigma.size() <= xi.toNatural();
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find({sigma, xi}); it != memo_.end()) return it->second;
  }
  const bool result = compute(sigma, xi);
  std::lock_guard lock(mutex_);
  memo_.try_emplace({sigma, xi}, result);
  return result;
}

std::size_t SMembershipOracle::cacheSize() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

bool SMembershipOracle::compute(const FinSet& sigma, const Ordinal& xi) {
  const Decomposition parts = decompose(xi);
  const std::optional<FinSet> rest = bigK(sigma, parts.finite);
  if (!rest) return true;
  const Element upper = idx(sigma, parts.finite);
  for (Element l = 1; l <= upper; ++l) {
    const Ordinal target = add(zeta(parts.limitPart, l), Ordinal::natural(l));
    if (member(*rest, target)) return true;
  }
  return false;
}

bool sMember(const FinSet& sigma, const Ordinal& xi) {
  thread_local SMembershipOracle oracle;
  return oracle.member(sigma, xi);
}

bool sMemberShifted(const FinSet& sigma, const Ordinal& xi) {
  std::vector<Element> shifted;
  shifted.reserve(sigma.size());
  for (Element e : sigma.elements()) {
    if (e < 3) throw InvalidArgument("S_xi[L] label " + sigma.toString() + " has element below 3");
    shifted.push_back(e - 2);
  }
  return sMember(FinSet(std::move(shifted)), xi);
}

STruncation truncate(const Ordinal& xi, unsigned bound) {
  if (bound == 0) throw InvalidArgument("truncation bound must be positive");
  if (bound > kMaxTruncationBound)
    throw BudgetExceeded("truncation bound " + std::to_string(bound) + " exceeds " +
                         std::to_string(kMaxTruncationBound));
  std::vector<FinSet> members;
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << bound); ++sub) {
    std::vector<Element> elems;
    for (unsigned i = 0; i < bound; ++i)
      if (sub & (std::uint64_t{1} << i)) elems.push_back(i + 1);
    FinSet sigma(std::move(elems));
    if (sMember(sigma, xi)) members.push_back(std::move(sigma));
  }
  return STruncation{xi, bound, ExplicitFamily(std::move(members))};
}

std::uint64_t ordTruncated(const Ordinal& xi, unsigned bound) { return ord(truncate(xi, bound).family); }

}  // namespace coarsedim
