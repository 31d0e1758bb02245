#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coarsedim/space.hpp"

namespace coarsedim {

using Block = std::vector<LatticePoint>;
using BlockFamily = std::vector<Block>;

/// Families U_0..U_m of blocks; family i is radii[i]-disjoint and every block
/// has d_xi-diameter at most bound.
struct CoverSpec {
  std::vector<BlockFamily> families;
  std::vector<Coord> radii;
  Coord bound = 0;
};

struct DisjointnessViolation {
  std::size_t family = 0;
  std::size_t blockA = 0;
  std::size_t blockB = 0;
  LatticePoint a;
  LatticePoint b;
  Coord distance = 0;
};

struct DiameterViolation {
  std::size_t family = 0;
  std::size_t block = 0;
  LatticePoint a;
  LatticePoint b;
  Coord diameter = 0;
};

struct CoverageViolation {
  LatticePoint point;
};

/// Outcome of verifyCover: the first witness of each failure kind, if any.
struct CoverVerdict {
  std::optional<std::string> malformed;
  std::optional<DisjointnessViolation> disjointness;
  std::optional<DiameterViolation> diameter;
  std::optional<CoverageViolation> coverage;

  bool ok() const { return !malformed && !disjointness && !diameter && !coverage; }
};

/// Checks r_i-disjointness inside each family, the diameter bound on every
/// block, and that every point lies in some block. All distances are d_xi.
CoverVerdict verifyCover(const CoverSpec& spec, std::span<const LatticePoint> points);

/// Only the structural half: disjointness and diameters, no coverage.
CoverVerdict verifyFamilies(const CoverSpec& spec);

enum class SearchMode { exhaustive, greedy };
enum class SearchStatus { found, noCover, inconclusive };

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct SearchOptions {
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t nodeBudget = kDefaultNodeBudget;
  /// Greedy mode: 0 keeps lexicographic point order, otherwise the order is shuffled with this seed.
  std::uint64_t seed = 0;
  /// Exhaustive mode: wall-clock cap in seconds, 0 for none. Exceeding it throws BudgetExceeded.
  double timeLimit = 0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  /// Present iff status == found.
  std::optional<CoverSpec> cover;
  /// Greedy mode: the valid (disjoint, bounded) families built so far, possibly not covering.
  std::optional<CoverSpec> partial;
  std::vector<LatticePoint> uncovered;
  std::uint64_t nodes = 0;
};

/// Searches for families with the given radii and bound covering the points.
///
/// Exhaustive mode assigns points to families; the block of a point is then
/// forced (the union of all same-family blocks closer than the radius), so the
/// tree ranges over family labelings only. Points with a single feasible family
/// are assigned without branching. noCover is authoritative.
/// Throws BudgetExceeded past options.nodeBudget nodes.
///
/// Greedy mode is a single pass; found is sound, a failure is inconclusive.
SearchResult searchCover(std::span<const LatticePoint> points, std::span<const Coord> radii, Coord bound,
                         const SearchOptions& options = {});

/// Radii (2^t)_{t in tau}: the A_2 radii 2^{k_j + 2} of X_tau.
std::vector<Coord> a2Radii(const TauLabel& tau);
/// Radii (2^i)_{i in sigma} of an A_2 query for sigma.
std::vector<Coord> a2RadiiOf(const FinSet& sigma);
/// Radii (i)_{i in sigma} of an A query for sigma.
std::vector<Coord> aRadiiOf(const FinSet& sigma);

enum class A2Verdict { noCover, cover, inconclusive };

struct A2Options {
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t nodeBudget = kDefaultNodeBudget;
  /// Replaces the A_2 radii (sanity controls only).
  std::optional<std::vector<Coord>> radii;
  /// Search sub-truncations first; a subset without a cover refutes the whole.
  bool probes = true;
  std::uint64_t seed = 0;
  /// Wall-clock cap per probe in seconds, 0 for none.
  double timeLimit = 0;
};

/// One exhaustive search on a subset X_tau n [0,window]^{m+1} n (spacing Z)^{m+1}.
struct ProbeReport {
  Coord window = 0;
  Coord spacing = 0;
  std::size_t points = 0;
  std::optional<SearchStatus> status;  // empty when the budget ran out
  std::uint64_t nodes = 0;
};

struct A2Result {
  A2Verdict verdict = A2Verdict::inconclusive;
  std::optional<CoverSpec> cover;
  /// Greedy mode: best-effort families when no cover was found.
  std::optional<CoverSpec> partial;
  std::vector<ProbeReport> probes;
  std::vector<Coord> radii;
  Coord bound = 0;
  std::size_t truncationPoints = 0;
};

/// Decides whether X_tau n [0, 8B]^{m+1} admits families with the A_2 radii
/// and bound B. Requires B > 2^{k_m + 1}.
A2Result a2Check(const TauLabel& tau, Coord bound, const A2Options& options = {});

/// The truncation X_tau n [0, 8B]^{m+1}.
std::vector<LatticePoint> a2Points(const TauLabel& tau, Coord bound);

}  // namespace coarsedim
