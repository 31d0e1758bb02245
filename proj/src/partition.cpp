#include "coarsedim/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "coarsedim/error.hpp"

namespace coarsedim {

namespace {

using Bitmap = std::vector<std::uint8_t>;

// Row-major dense grid with `count` points per axis.
class GridIndex {
 public:
  GridIndex(int dim, Coord count) : dim_(dim), count_(count) {
    double total = 1.0;
    for (int a = 0; a < dim; ++a) total *= static_cast<double>(count);
    if (total > 2.0e8) throw BudgetExceeded("partition grid of " + std::to_string(total) + " points is too large");
    strides_.assign(static_cast<std::size_t>(dim), 1);
    for (int a = dim - 2; a >= 0; --a) strides_[a] = strides_[a + 1] * static_cast<std::size_t>(count);
    size_ = strides_[0] * static_cast<std::size_t>(count);
  }

  int dim() const { return dim_; }
  Coord count() const { return count_; }
  std::size_t size() const { return size_; }
  std::size_t stride(int axis) const { return strides_[axis]; }

  Coord coord(std::size_t i, int axis) const { return static_cast<Coord>((i / strides_[axis]) % static_cast<std::size_t>(count_)); }

  std::size_t index(std::span<const Coord> t) const {
    std::size_t i = 0;
    for (int a = 0; a < dim_; ++a) i += static_cast<std::size_t>(t[a]) * strides_[a];
    return i;
  }

  GridPoint unindex(std::size_t i) const {
    GridPoint t(static_cast<std::size_t>(dim_));
    for (int a = 0; a < dim_; ++a) t[a] = coord(i, a);
    return t;
  }

  template <typename Fn>
  void forEachLine(int axis, Fn&& fn) const {
    for (std::size_t i = 0; i < size_; ++i)
      if (coord(i, axis) == 0) fn(i);
  }

 private:
  int dim_;
  Coord count_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

// OR-dilation by a sup-metric ball of `radius` grid steps, one axis at a time.
Bitmap dilate(const GridIndex& g, Bitmap bits, Coord radius) {
  if (radius <= 0) return bits;
  std::vector<int> prefix(static_cast<std::size_t>(g.count()) + 1);
  for (int a = 0; a < g.dim(); ++a) {
    Bitmap out(bits.size(), 0);
    const std::size_t stride = g.stride(a);
    g.forEachLine(a, [&](std::size_t base) {
      for (Coord t = 0; t < g.count(); ++t) prefix[t + 1] = prefix[t] + bits[base + static_cast<std::size_t>(t) * stride];
      for (Coord t = 0; t < g.count(); ++t) {
        const Coord lo = std::max<Coord>(0, t - radius);
        const Coord hi = std::min<Coord>(g.count() - 1, t + radius);
        out[base + static_cast<std::size_t>(t) * stride] = prefix[hi + 1] - prefix[lo] > 0;
      }
    });
    bits = std::move(out);
  }
  return bits;
}

// Label dilation: each unlabeled point takes the label of a labeled point
// within `radius` steps along each axis in turn. Labels stay unambiguous as
// long as distinct labels sit more than 2 * radius apart.
std::vector<int> dilateLabels(const GridIndex& g, std::vector<int> labels, Coord radius) {
  if (radius <= 0) return labels;
  const auto n = static_cast<std::size_t>(g.count());
  std::vector<int> left(n), right(n);
  std::vector<Coord> leftPos(n), rightPos(n);
  for (int a = 0; a < g.dim(); ++a) {
    std::vector<int> out = labels;
    const std::size_t stride = g.stride(a);
    g.forEachLine(a, [&](std::size_t base) {
      int lastLabel = -1;
      Coord lastPos = 0;
      for (std::size_t t = 0; t < n; ++t) {
        const int v = labels[base + t * stride];
        if (v >= 0) {
          lastLabel = v;
          lastPos = static_cast<Coord>(t);
        }
        left[t] = lastLabel;
        leftPos[t] = lastPos;
      }
      lastLabel = -1;
      for (std::size_t t = n; t-- > 0;) {
        const int v = labels[base + t * stride];
        if (v >= 0) {
          lastLabel = v;
          lastPos = static_cast<Coord>(t);
        }
        right[t] = lastLabel;
        rightPos[t] = lastPos;
      }
      for (std::size_t t = 0; t < n; ++t) {
        const auto tc = static_cast<Coord>(t);
        if (left[t] >= 0 && tc - leftPos[t] <= radius) {
          out[base + t * stride] = left[t];
        } else if (right[t] >= 0 && rightPos[t] - tc <= radius) {
          out[base + t * stride] = right[t];
        }
      }
    });
    labels = std::move(out);
  }
  return labels;
}

std::string pointString(std::span<const Coord> x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(x[i]);
  }
  return out + ")";
}

Coord gridDistance(const GridPoint& a, const GridPoint& b) {
  Coord d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void checkChainPreconditions(const DiscreteCube& cube, std::span<const GridFamily> families, Coord eps) {
  if (cube.dimension < 1) throw InvalidArgument("cube dimension must be positive");
  if (cube.step <= 0 || cube.side <= 0 || cube.side % cube.step != 0)
    throw InvalidArgument("cube step must be positive and divide the side");
  if (eps <= 0) throw InvalidArgument("eps must be positive");
  if (6 * eps >= cube.side)
    throw PreconditionError("eps = " + std::to_string(eps) + " is not below side/6 = " + std::to_string(cube.side) + "/6");
  if (families.size() != static_cast<std::size_t>(cube.dimension))
    throw InvalidArgument("expected " + std::to_string(cube.dimension) + " families, got " + std::to_string(families.size()));

  for (std::size_t k = 0; k < families.size(); ++k) {
    const GridFamily& family = families[k];
    for (std::size_t b = 0; b < family.size(); ++b) {
      const GridBlock& block = family[b];
      if (block.empty()) throw InvalidArgument("family " + std::to_string(k + 1) + " has an empty block");
      for (const auto& p : block) {
        if (p.size() != static_cast<std::size_t>(cube.dimension))
          throw InvalidArgument("block point " + pointString(p) + " has wrong dimension");
        for (Coord c : p)
          if (c < 0 || c > cube.side || c % cube.step != 0)
            throw PreconditionError("block point " + pointString(p) + " is not a cube grid point");
      }
      for (std::size_t x = 0; x < block.size(); ++x)
        for (std::size_t y = x + 1; y < block.size(); ++y)
          if (3 * gridDistance(block[x], block[y]) > cube.side)
            throw PreconditionError("family " + std::to_string(k + 1) + " block " + std::to_string(b) +
                                    " is not side/3-bounded: " + pointString(block[x]) + " and " +
                                    pointString(block[y]));
      for (std::size_t other = b + 1; other < family.size(); ++other)
        for (const auto& p : block)
          for (const auto& q : family[other])
            if (gridDistance(p, q) < eps)
              throw PreconditionError("family " + std::to_string(k + 1) + " is not eps-disjoint: blocks " +
                                      std::to_string(b) + " and " + std::to_string(other) + " meet at " +
                                      pointString(p) + " and " + pointString(q));
    }
  }
}

}  // namespace

ChainState epsilonPartitionChain(const DiscreteCube& cube, std::span<const GridFamily> families, Coord eps) {
  checkChainPreconditions(cube, families, eps);

  constexpr Coord r = ChainState::kResolution;
  const Coord step = cube.step;
  const Coord sideScaled = r * cube.side;
  const GridIndex grid(cube.dimension, sideScaled / step + 1);
  // Open eps/3-neighborhood on the refined grid: scaled distance < eps.
  const Coord blockRadius = (eps - 1) / step;

  ChainState state;
  state.cube = cube;
  state.eps = eps;

  Bitmap current(grid.size(), 1);
  auto collect = [&](const Bitmap& bits) {
    std::vector<GridPoint> level;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (!bits[i]) continue;
      GridPoint t = grid.unindex(i);
      for (auto& c : t) c *= step;
      level.push_back(std::move(t));
    }
    return level;
  };
  state.levels.push_back(collect(current));

  for (int k = 0; k < cube.dimension; ++k) {
    const GridFamily& family = families[static_cast<std::size_t>(k)];
    ChainStep info;
    Bitmap nearA(grid.size(), 0), farB(grid.size(), 0);
    for (std::size_t b = 0; b < family.size(); ++b) {
      Coord top = 0;
      for (const auto& p : family[b]) top = std::max(top, p[k]);
      const bool near = cube.side - top <= 2 * eps;
      (near ? info.nearPlus : info.farFromPlus).push_back(b);
      Bitmap& target = near ? nearA : farB;
      for (const auto& p : family[b]) {
        GridPoint t(p.size());
        for (std::size_t a = 0; a < p.size(); ++a) t[a] = r * p[a] / step;
        target[grid.index(t)] = 1;
      }
    }
    nearA = dilate(grid, std::move(nearA), blockRadius);
    farB = dilate(grid, std::move(farB), blockRadius);

    Bitmap plusSide(grid.size(), 0), minusSide(grid.size(), 0), next(grid.size(), 0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (!current[i]) continue;
      const Coord x = grid.coord(i, k) * step;
      const bool u = nearA[i] || 3 * (sideScaled - x) < 4 * r * eps;
      const bool w = farB[i] || 3 * x < 4 * r * eps;
      if (u && w) {
        state.counterexamples.push_back("step " + std::to_string(k + 1) + ": point " + pointString(grid.unindex(i)) +
                                        " lies on both sides");
      }
      plusSide[i] = u;
      minusSide[i] = w && !u;
      next[i] = !u && !w;
      info.removedPlusSide += u;
      info.removedMinusSide += w && !u;
      info.remaining += next[i];
    }
    // The two removed sides must not touch, or L_{k+1} fails to separate.
    const Bitmap grown = dilate(grid, plusSide, 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grown[i] && minusSide[i]) {
        state.counterexamples.push_back("step " + std::to_string(k + 1) + ": sides adjacent at " +
                                        pointString(grid.unindex(i)));
        break;
      }
    }
    current = std::move(next);
    state.levels.push_back(collect(current));
    state.steps.push_back(std::move(info));
  }
  if (state.levels.back().empty()) state.counterexamples.push_back("final level is empty");
  return state;
}

RefuteResult skeletonRefute(const TauLabel& tau, Coord bound, const CoverSpec& candidate) {
  RefuteResult result;
  const std::size_t n = tau.dimension();
  const std::size_t m = n - 1;
  const Coord topCell = Coord{1} << tau.shift(m);

  if (n > 3) {
    result.failure = "label {" + tau.toString() + "} has more than 3 elements";
    return result;
  }
  if (bound <= 2 * topCell) {
    result.failure = "bound " + std::to_string(bound) + " must exceed 2^{k_m+1} = " + std::to_string(2 * topCell);
    return result;
  }
  if (candidate.families.size() != n) {
    result.failure = "candidate has " + std::to_string(candidate.families.size()) + " families, expected " +
                     std::to_string(n);
    return result;
  }
  if (candidate.radii != a2Radii(tau)) {
    result.failure = "candidate radii are not the A_2 radii of {" + tau.toString() + "}";
    return result;
  }
  if (candidate.bound > bound) {
    result.failure = "candidate bound " + std::to_string(candidate.bound) + " exceeds " + std::to_string(bound);
    return result;
  }
  for (const auto& family : candidate.families)
    for (const auto& block : family)
      for (const auto& p : block)
        if (!(p.label() == tau)) {
          result.failure = "candidate point " + p.toString() + " is not in X_{" + tau.toString() + "}";
          return result;
        }
  const CoverVerdict structural = verifyFamilies(candidate);
  if (structural.malformed) {
    result.failure = *structural.malformed;
    return result;
  }
  if (structural.disjointness) {
    const auto& v = *structural.disjointness;
    result.failure = "family " + std::to_string(v.family) + " is not " + std::to_string(candidate.radii[v.family]) +
                     "-disjoint: " + v.a.toString() + " and " + v.b.toString();
    return result;
  }
  if (structural.diameter) {
    const auto& v = *structural.diameter;
    result.failure = "family " + std::to_string(v.family) + " block " + std::to_string(v.block) +
                     " has diameter " + std::to_string(v.diameter);
    return result;
  }

  Coord padded = bound;
  while ((8 * padded) % topCell != 0) ++padded;
  result.bound = padded;
  const Coord side = 8 * padded;
  const Coord s = Coord{1} << tau.shift(0);
  const GridIndex grid(static_cast<int>(n), side / s + 1);

  Bitmap current(grid.size(), 1);
  for (std::size_t level = 1; level <= n; ++level) {
    const std::size_t j = m - (level - 1);  // family U_j, finest last
    const int axis = static_cast<int>(level - 1);
    const Coord cell = Coord{1} << tau.shift(j);
    const Coord eps = 2 * cell;

    // Closed 2^{k_j}-inflation of each block; inflated blocks are 2^{k_j+1}-disjoint.
    std::vector<int> labels(grid.size(), -1);
    const auto& family = candidate.families[j];
    for (std::size_t b = 0; b < family.size(); ++b) {
      for (const auto& p : family[b]) {
        GridPoint t(n);
        bool inside = true;
        for (std::size_t a = 0; a < n; ++a) {
          if (p.coords()[a] < 0 || p.coords()[a] > side) inside = false;
          t[a] = p.coords()[a] / s;
        }
        if (inside) labels[grid.index(t)] = static_cast<int>(b);
      }
    }
    labels = dilateLabels(grid, std::move(labels), cell / s);

    std::vector<Coord> top(family.size(), -1);
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (labels[i] >= 0) top[labels[i]] = std::max(top[labels[i]], grid.coord(i, axis) * s);

    Bitmap nearA(grid.size(), 0), farB(grid.size(), 0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (labels[i] < 0) continue;
      (side - top[labels[i]] <= 2 * eps ? nearA : farB)[i] = 1;
    }
    // Open eps/3-neighborhoods: radius rho with 3 rho < eps.
    const Coord rho = (eps - 1) / 3 / s;
    nearA = dilate(grid, std::move(nearA), rho);
    farB = dilate(grid, std::move(farB), rho);

    Bitmap partition(grid.size(), 0);
    std::size_t partitionSize = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (!current[i]) continue;
      const Coord x = grid.coord(i, axis) * s;
      const bool u = nearA[i] || 3 * (side - x) < 4 * eps;
      const bool w = farB[i] || 3 * x < 4 * eps;
      if (u && w)
        throw std::logic_error("skeletonRefute: both partition sides contain " + pointString(grid.unindex(i)));
      if (!u && !w) {
        partition[i] = 1;
        ++partitionSize;
      }
    }
    result.partitionSizes.push_back(partitionSize);

    // Snap: keep the points of the current set lying on the (n - level)-skeleton
    // of a cell of side 2^{k_j} that meets the partition.
    const Coord cellsPerAxis = side / cell;
    const GridIndex cells(static_cast<int>(n), cellsPerAxis);
    Bitmap touched(cells.size(), 0);
    auto forEachCell = [&](std::size_t i, auto&& fn) {
      std::vector<std::vector<Coord>> options(n);
      for (std::size_t a = 0; a < n; ++a) {
        const Coord x = grid.coord(i, static_cast<int>(a)) * s;
        const Coord q = x / cell;
        if (x % cell == 0 && q > 0) options[a].push_back(q - 1);
        if (q < cellsPerAxis) options[a].push_back(q);
      }
      std::vector<std::size_t> pick(n, 0);
      std::vector<Coord> c(n);
      while (true) {
        for (std::size_t a = 0; a < n; ++a) c[a] = options[a][pick[a]];
        if (fn(cells.index(c))) return;
        std::size_t a = 0;
        while (a < n && ++pick[a] == options[a].size()) pick[a++] = 0;
        if (a == n) return;
      }
    };
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (partition[i]) forEachCell(i, [&](std::size_t c) { touched[c] = 1; return false; });

    Bitmap next(grid.size(), 0);
    std::size_t skeletonSize = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (!current[i]) continue;
      std::size_t onGrid = 0;
      for (std::size_t a = 0; a < n; ++a) onGrid += (grid.coord(i, static_cast<int>(a)) * s) % cell == 0;
      if (onGrid < level) continue;
      bool keep = false;
      forEachCell(i, [&](std::size_t c) { return keep = touched[c] != 0; });
      if (keep) {
        next[i] = 1;
        ++skeletonSize;
      }
    }
    result.skeletonSizes.push_back(skeletonSize);
    current = std::move(next);
  }

  std::set<LatticePoint> covered;
  for (const auto& family : candidate.families)
    for (const auto& block : family) covered.insert(block.begin(), block.end());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!current[i]) continue;
    GridPoint x = grid.unindex(i);
    for (auto& c : x) c *= s;
    if (!xTauMember(tau, x)) throw std::logic_error("skeletonRefute: survivor " + pointString(x) + " is not in X_tau");
    LatticePoint p(tau, std::move(x));
    if (covered.contains(p)) throw std::logic_error("skeletonRefute: survivor " + p.toString() + " is covered");
    result.survivors.push_back(std::move(p));
  }
  if (result.survivors.empty())
    throw std::logic_error("skeletonRefute: final skeleton level is empty for label {" + tau.toString() + "}");
  result.witness = result.survivors.front();
  return result;
}

}  // namespace coarsedim
