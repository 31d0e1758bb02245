#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace coarsedim {

using Element = std::uint32_t;

/// A finite nonempty subset of {1, 2, ...}, stored in strictly increasing order.
class FinSet {
 public:
  /// Sorts and validates; throws InvalidArgument on empty input, zero, or duplicates.
  explicit FinSet(std::vector<Element> elements);
  FinSet(std::initializer_list<Element> elements) : FinSet(std::vector<Element>(elements)) {}

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  Element min() const { return elements_.front(); }
  Element max() const { return elements_.back(); }
  Element operator[](std::size_t i) const { return elements_[i]; }
  bool contains(Element a) const;

  std::string toString() const;

  auto operator<=>(const FinSet&) const = default;

 private:
  std::vector<Element> elements_;
};

/// A finite, duplicate-free collection of FinSets (the argument of Ord).
class ExplicitFamily {
 public:
  ExplicitFamily() = default;
  explicit ExplicitFamily(std::vector<FinSet> members);
  ExplicitFamily(std::initializer_list<FinSet> members) : ExplicitFamily(std::vector<FinSet>(members)) {}

  /// Members in canonical (lexicographic) order.
  const std::vector<FinSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const FinSet& s) const;
  /// Union of all members, increasing.
  std::vector<Element> ground() const;
  std::size_t maxCardinality() const;

  std::string toString() const;

  bool operator==(const ExplicitFamily&) const = default;

 private:
  std::vector<FinSet> members_;
};

ExplicitFamily familyUnion(const ExplicitFamily& a, const ExplicitFamily& b);

/// M^sigma = { tau nonempty : tau u sigma in M, tau n sigma = {} }.
ExplicitFamily derive(const ExplicitFamily& family, const FinSet& sigma);

/// Borst's Ord for a finite family:
///   Ord {} = 0,   Ord M = 1 + max_{a in ground(M)} Ord M^a.
/// Evaluated by the defining recursion with memoization on derived families.
/// Ground sets are limited to 64 elements.
std::uint64_t ord(const ExplicitFamily& family);

/// Every nonempty subset of every member is a member.
bool isInclusive(const ExplicitFamily& family);

/// Smallest inclusive family containing the input.
ExplicitFamily inclusiveClosure(const ExplicitFamily& family);

/// M[K]: element v of each member is sent to K_v (1-based), the order-preserving
/// injection of {1, 2, ...} onto K. K must be strictly increasing and positive.
ExplicitFamily reindex(const ExplicitFamily& family, std::span<const Element> targets);

/// All nonempty subsets of {1..n}, n <= 20.
ExplicitFamily powerFamily(unsigned n);

}  // namespace coarsedim
