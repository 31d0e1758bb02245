#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coarsedim/finfam.hpp"
#include "coarsedim/ordinal.hpp"

namespace coarsedim {

using Coord = std::int64_t;

/// Label tau = {k_0 + 2 < ... < k_m + 2} of a lattice space X_tau.
///
/// Elements are >= 2 (shift k_p >= 0). Labels used inside X_xi come from
/// S_xi[L] and so are >= 3; that stronger condition is checked by XiSample.
class TauLabel {
 public:
  explicit TauLabel(FinSet elements);
  TauLabel(std::initializer_list<Element> elements) : TauLabel(FinSet(elements)) {}

  const FinSet& elements() const { return elements_; }
  /// m + 1, the dimension of X_tau.
  std::size_t dimension() const { return elements_.size(); }
  /// k_p = (p-th element) - 2.
  unsigned shift(std::size_t p) const { return elements_[p] - 2; }
  Element maxElement() const { return elements_.max(); }
  std::string toString() const;

  auto operator<=>(const TauLabel&) const = default;

 private:
  FinSet elements_;
};

/// x in (2^{k_0} Z)^{m+1} and, for every p, at most p coordinates lie outside 2^{k_p} Z.
/// Throws InvalidArgument on a length mismatch.
bool xTauMember(const TauLabel& tau, std::span<const Coord> x);

/// A point of X_tau tagged with its label; the disjoint union X_xi is explicit in the tag.
class LatticePoint {
 public:
  /// Validates membership in X_tau.
  LatticePoint(TauLabel label, std::vector<Coord> coords);

  const TauLabel& label() const { return label_; }
  const std::vector<Coord>& coords() const { return coords_; }
  std::string toString() const;

  auto operator<=>(const LatticePoint&) const = default;

 private:
  TauLabel label_;
  std::vector<Coord> coords_;
};

/// A finitely supported integer sequence (an element of the direct sum of copies of Z).
/// Stored without trailing zeros.
class SupportedSeq {
 public:
  SupportedSeq() = default;
  explicit SupportedSeq(std::vector<Coord> values);
  Coord at(std::size_t i) const { return i < values_.size() ? values_[i] : 0; }
  std::size_t supportBound() const { return values_.size(); }
  bool operator==(const SupportedSeq&) const = default;

 private:
  std::vector<Coord> values_;
};

/// Sup-metric between finitely supported sequences.
Coord seqDist(const SupportedSeq& a, const SupportedSeq& b);

struct AxisRange {
  Coord lo = 0;
  Coord hi = 0;
};
using Box = std::vector<AxisRange>;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// All points of X_tau in the box, in lexicographic order. Throws BudgetExceeded
/// when the candidate count (box volume / 2^{k_0 (m+1)}) exceeds the budget.
std::vector<LatticePoint> enumerateXTau(const TauLabel& tau, const Box& box,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

/// Sup-metric inside one X_tau; throws InvalidArgument for different labels.
Coord supDist(const LatticePoint& x, const LatticePoint& y);

/// i_tau: coordinates copied to positions 0..m.
SupportedSeq embed(const LatticePoint& x);

/// s(tau) = 2^{max tau}.
Coord sWeight(const TauLabel& tau);

/// The metric d_xi on the disjoint union:
///   same label       -> sup-metric of the embeddings
///   different labels -> max{ s(tau_1), s(tau_2), rho(i(x), i(y)) }
Coord dXi(const LatticePoint& p, const LatticePoint& q);

/// A finite sample of X_xi: labels from S_xi[L], each with a bounding box.
struct XiSample {
  Ordinal xi;
  std::vector<std::pair<TauLabel, Box>> pieces;
};

/// Validates every label against S_xi[L] and enumerates all sample points,
/// ordered by label, then lexicographically.
std::vector<LatticePoint> enumerateXi(const XiSample& sample, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace coarsedim
