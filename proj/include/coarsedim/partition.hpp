#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coarsedim/cover.hpp"
#include "coarsedim/space.hpp"

namespace coarsedim {

/// The grid (step Z)^n n [0, side]^n. Faces F_i^- / F_i^+ are the slices x_i = 0 / x_i = side.
struct DiscreteCube {
  int dimension = 1;
  Coord side = 0;
  Coord step = 1;
};

using GridPoint = std::vector<Coord>;
using GridBlock = std::vector<GridPoint>;
using GridFamily = std::vector<GridBlock>;

/// A cube, a separation eps and the families U_1..U_n fed to the chain.
struct PartitionInstance {
  DiscreteCube cube;
  Coord eps = 0;
  std::vector<GridFamily> families;
};

/// Bookkeeping for one step L_k -> L_{k+1} of the chain.
struct ChainStep {
  std::vector<std::size_t> nearPlus;   // blocks U with d(U, F^+) <= 2 eps (the A side)
  std::vector<std::size_t> farFromPlus;  // the remaining blocks (the B side)
  std::size_t removedPlusSide = 0;
  std::size_t removedMinusSide = 0;
  std::size_t remaining = 0;
};

/// L_0 = cube, L_{k+1} = L_k minus (A_{k+1} u N_{4eps/3}(F^+)) and (B_{k+1} u N_{4eps/3}(F^-)),
/// where A/B are the open eps/3-neighborhoods of the blocks near/far from F^+.
///
/// The radii eps/3 and 4eps/3 are made integral by working on the grid refined
/// by a factor of 3: level points are stored in thirds of the original units.
struct ChainState {
  DiscreteCube cube;
  Coord eps = 0;
  static constexpr Coord kResolution = 3;
  /// levels[k] = L_k, lexicographically sorted, coordinates in units of 1/kResolution.
  std::vector<std::vector<GridPoint>> levels;
  std::vector<ChainStep> steps;
  /// Discretization defects: overlapping or adjacent sides, or an empty final level.
  std::vector<std::string> counterexamples;

  bool finalNonempty() const { return !levels.empty() && !levels.back().empty(); }
};

/// Builds the eps-partition chain for families U_1..U_n (families[k-1] = U_k).
/// Requires 6 eps < side, each family eps-disjoint with every block of diameter
/// at most side/3, and block points on the cube grid; violations throw
/// PreconditionError naming a witness.
ChainState epsilonPartitionChain(const DiscreteCube& cube, std::span<const GridFamily> families, Coord eps);

/// Outcome of skeletonRefute: a lattice point of X_tau missed by every block, or a failure report.
struct RefuteResult {
  std::optional<LatticePoint> witness;
  /// All survivors of the final skeleton level (each one is an uncovered point).
  std::vector<LatticePoint> survivors;
  std::optional<std::string> failure;
  /// B after padding so that 8B is a multiple of 2^{k_m}.
  Coord bound = 0;
  /// Sizes |L_i| and |L'_i| after each of the m+1 steps.
  std::vector<std::size_t> partitionSizes;
  std::vector<std::size_t> skeletonSizes;
};

/// Given families claimed to cover X_tau n [0, 8B]^{m+1} with the A_2 radii and
/// bound B, descends through the skeletons of the dyadic grids of sides
/// 2^{k_m}, ..., 2^{k_0}: at each level the family U_j is inflated by 2^{k_j},
/// an eps = 2^{k_j+1} partition is cut out of the current skeleton between the
/// next pair of opposite faces, and the result is snapped to the skeleton of the
/// cells it meets. The final level is a set of lattice points of X_tau that no
/// block contains. |tau| <= 3.
RefuteResult skeletonRefute(const TauLabel& tau, Coord bound, const CoverSpec& candidate);

}  // namespace coarsedim
