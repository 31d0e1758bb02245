#include "coarsedim/cover.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "coarsedim/error.hpp"

namespace coarsedim {

namespace {

Coord blockDistance(const Block& a, const Block& b, const LatticePoint** wa, const LatticePoint** wb) {
  Coord best = -1;
  for (const auto& p : a) {
    for (const auto& q : b) {
      const Coord d = dXi(p, q);
      if (best < 0 || d < best) {
        best = d;
        *wa = &p;
        *wb = &q;
      }
    }
  }
  return best;
}

}  // namespace

CoverVerdict verifyFamilies(const CoverSpec& spec) {
  CoverVerdict verdict;
  if (spec.radii.size() != spec.families.size()) {
    verdict.malformed = "cover has " + std::to_string(spec.families.size()) + " families but " +
                        std::to_string(spec.radii.size()) + " radii";
    return verdict;
  }
  for (std::size_t f = 0; f < spec.families.size(); ++f) {
    const auto& family = spec.families[f];
    for (std::size_t i = 0; i < family.size(); ++i) {
      const Block& block = family[i];
      if (block.empty()) {
        if (!verdict.malformed) verdict.malformed = "family " + std::to_string(f) + " has an empty block";
        continue;
      }
      if (!verdict.diameter) {
        for (std::size_t x = 0; x < block.size() && !verdict.diameter; ++x)
          for (std::size_t y = x + 1; y < block.size(); ++y) {
            const Coord d = dXi(block[x], block[y]);
            if (d > spec.bound) {
              verdict.diameter = DiameterViolation{f, i, block[x], block[y], d};
              break;
            }
          }
      }
      if (!verdict.disjointness) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
          if (family[j].empty()) continue;
          const LatticePoint* wa = nullptr;
          const LatticePoint* wb = nullptr;
          const Coord d = blockDistance(block, family[j], &wa, &wb);
          if (d < spec.radii[f]) {
            verdict.disjointness = DisjointnessViolation{f, i, j, *wa, *wb, d};
            break;
          }
        }
      }
    }
  }
  return verdict;
}

CoverVerdict verifyCover(const CoverSpec& spec, std::span<const LatticePoint> points) {
  CoverVerdict verdict = verifyFamilies(spec);
  std::set<LatticePoint> covered;
  for (const auto& family : spec.families)
    for (const auto& block : family) covered.insert(block.begin(), block.end());
  for (const auto& p : points) {
    if (!covered.contains(p)) {
      verdict.coverage = CoverageViolation{p};
      break;
    }
  }
  return verdict;
}

namespace {

// Point set with cached distances. When every point carries the same label
// the metric is the coordinate sup-metric and block diameters reduce to
// bounding-box extents.
class PointTable {
 public:
  PointTable(std::span<const LatticePoint> points, Coord maxRadius) : points_(points.begin(), points.end()) {
    sameLabel_ = std::all_of(points_.begin(), points_.end(),
                             [&](const LatticePoint& p) { return p.label() == points_.front().label(); });
    dim_ = points_.empty() ? 0 : points_.front().coords().size();
    neighbors_.resize(points_.size());

    // Sweep by first coordinate: d_xi >= |x_0 - y_0| in both label regimes.
    std::vector<int> byFirst(points_.size());
    std::iota(byFirst.begin(), byFirst.end(), 0);
    auto first = [&](int i) { return points_[i].coords().empty() ? Coord{0} : points_[i].coords().front(); };
    std::sort(byFirst.begin(), byFirst.end(), [&](int a, int b) { return first(a) < first(b); });
    for (std::size_t x = 0; x < byFirst.size(); ++x) {
      for (std::size_t y = x + 1; y < byFirst.size(); ++y) {
        const int a = byFirst[x];
        const int b = byFirst[y];
        if (first(b) - first(a) >= maxRadius) break;
        const Coord d = distance(a, b);
        if (d < maxRadius) {
          neighbors_[a].push_back({b, d});
          neighbors_[b].push_back({a, d});
        }
      }
    }
    for (auto& list : neighbors_) std::sort(list.begin(), list.end(), [](auto& u, auto& v) { return u.index < v.index; });
  }

  struct Neighbor {
    int index;
    Coord distance;
  };

  std::size_t size() const { return points_.size(); }
  std::size_t dimension() const { return dim_; }
  bool sameLabel() const { return sameLabel_; }
  const LatticePoint& point(int i) const { return points_[i]; }
  const std::vector<Neighbor>& neighbors(int i) const { return neighbors_[i]; }

  Coord distance(int a, int b) const {
    if (sameLabel_) {
      Coord best = 0;
      const auto& x = points_[a].coords();
      const auto& y = points_[b].coords();
      for (std::size_t i = 0; i < dim_; ++i) best = std::max(best, x[i] > y[i] ? x[i] - y[i] : y[i] - x[i]);
      return best;
    }
    return dXi(points_[a], points_[b]);
  }

 private:
  std::vector<LatticePoint> points_;
  bool sameLabel_ = true;
  std::size_t dim_ = 0;
  std::vector<std::vector<Neighbor>> neighbors_;
};

// Disjoint blocks over assigned points, with undo. No path compression so
// every union can be rolled back exactly.
class BlockForest {
 public:
  explicit BlockForest(const PointTable& table)
      : table_(table),
        parent_(table.size(), -1),
        size_(table.size(), 0),
        diameter_(table.size(), 0),
        lo_(table.size() * table.dimension()),
        hi_(table.size() * table.dimension()),
        members_(table.size()) {}

  bool assigned(int i) const { return parent_[i] != -1; }

  int root(int i) const {
    while (parent_[i] != i) i = parent_[i];
    return i;
  }

  void makeSingleton(int i) {
    parent_[i] = i;
    size_[i] = 1;
    diameter_[i] = 0;
    const auto& c = table_.point(i).coords();
    for (std::size_t a = 0; a < table_.dimension(); ++a) lo_[i * table_.dimension() + a] = hi_[i * table_.dimension() + a] = c[a];
    if (!table_.sameLabel()) members_[i] = {i};
    log_.push_back(Entry{Entry::kSingleton, i, -1, 0, 0, {}, 0});
  }

  /// Merges the blocks rooted at a and b; returns the resulting diameter.
  Coord unite(int a, int b) {
    if (size_[a] < size_[b]) std::swap(a, b);
    Entry entry{Entry::kUnion, b, a, size_[a], diameter_[a], {}, members_[a].size()};
    const std::size_t dim = table_.dimension();
    Coord d = std::max(diameter_[a], diameter_[b]);
    if (table_.sameLabel()) {
      entry.box.assign(lo_.begin() + static_cast<std::ptrdiff_t>(a * dim), lo_.begin() + static_cast<std::ptrdiff_t>((a + 1) * dim));
      entry.box.insert(entry.box.end(), hi_.begin() + static_cast<std::ptrdiff_t>(a * dim),
                       hi_.begin() + static_cast<std::ptrdiff_t>((a + 1) * dim));
      for (std::size_t x = 0; x < dim; ++x) {
        lo_[a * dim + x] = std::min(lo_[a * dim + x], lo_[b * dim + x]);
        hi_[a * dim + x] = std::max(hi_[a * dim + x], hi_[b * dim + x]);
        d = std::max(d, hi_[a * dim + x] - lo_[a * dim + x]);
      }
    } else {
      for (int p : members_[a])
        for (int q : members_[b]) d = std::max(d, table_.distance(p, q));
      members_[a].insert(members_[a].end(), members_[b].begin(), members_[b].end());
    }
    parent_[b] = a;
    size_[a] += size_[b];
    diameter_[a] = d;
    log_.push_back(std::move(entry));
    return d;
  }

  Coord diameter(int r) const { return diameter_[r]; }
  Coord lo(int r, std::size_t axis) const { return lo_[static_cast<std::size_t>(r) * table_.dimension() + axis]; }
  Coord hi(int r, std::size_t axis) const { return hi_[static_cast<std::size_t>(r) * table_.dimension() + axis]; }

  std::size_t checkpoint() const { return log_.size(); }

  void rollback(std::size_t mark) {
    const std::size_t dim = table_.dimension();
    while (log_.size() > mark) {
      Entry& e = log_.back();
      if (e.kind == Entry::kSingleton) {
        parent_[e.child] = -1;
        members_[e.child].clear();
      } else {
        parent_[e.child] = e.child;
        size_[e.parent] = e.parentSize;
        diameter_[e.parent] = e.parentDiameter;
        if (table_.sameLabel()) {
          std::copy(e.box.begin(), e.box.begin() + static_cast<std::ptrdiff_t>(dim), lo_.begin() + static_cast<std::ptrdiff_t>(e.parent * dim));
          std::copy(e.box.begin() + static_cast<std::ptrdiff_t>(dim), e.box.end(), hi_.begin() + static_cast<std::ptrdiff_t>(e.parent * dim));
        } else {
          members_[e.parent].resize(e.parentMembers);
        }
      }
      log_.pop_back();
    }
  }

 private:
  struct Entry {
    enum Kind { kSingleton, kUnion } kind;
    int child;
    int parent;
    int parentSize;
    Coord parentDiameter;
    std::vector<Coord> box;
    std::size_t parentMembers;
  };

  const PointTable& table_;
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<Coord> diameter_;
  std::vector<Coord> lo_;
  std::vector<Coord> hi_;
  std::vector<std::vector<int>> members_;
  std::vector<Entry> log_;
};

class CoverSearch {
 public:
  CoverSearch(const PointTable& table, std::span<const Coord> radii, Coord bound)
      : table_(table), radii_(radii.begin(), radii.end()), bound_(bound), forest_(table), family_(table.size(), -1) {}

  // Puts point i into family f, merging every same-family block closer than
  // the radius. Leaves the forest untouched and returns false if the merged
  // block would exceed the bound.
  bool tryAssign(int i, int f) {
    const std::size_t mark = forest_.checkpoint();
    forest_.makeSingleton(i);
    int current = i;
    for (const auto& nb : table_.neighbors(i)) {
      if (family_[nb.index] != f || nb.distance >= radii_[f]) continue;
      const int r = forest_.root(nb.index);
      if (r == current) continue;
      const Coord d = forest_.unite(current, r);
      current = forest_.root(i);
      if (d > bound_) {
        forest_.rollback(mark);
        return false;
      }
    }
    family_[i] = f;
    return true;
  }

  void unassign(int i, std::size_t mark) {
    forest_.rollback(mark);
    family_[i] = -1;
  }

  bool exhaustive(std::uint64_t budget, double timeLimit) {
    budget_ = budget;
    if (timeLimit > 0)
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(timeLimit));
    return solve();
  }

  std::vector<int> greedy(std::span<const int> order) {
    std::vector<int> uncovered;
    for (int i : order) {
      bool placed = false;
      for (int f = 0; f < static_cast<int>(radii_.size()) && !placed; ++f) placed = tryAssign(i, f);
      if (!placed) uncovered.push_back(i);
    }
    return uncovered;
  }

  std::uint64_t nodes() const { return nodes_; }

  CoverSpec extract() const {
    CoverSpec spec;
    spec.radii = radii_;
    spec.bound = bound_;
    spec.families.resize(radii_.size());
    std::vector<std::map<int, std::size_t>> slot(radii_.size());
    for (int i = 0; i < static_cast<int>(table_.size()); ++i) {
      const int f = family_[i];
      if (f < 0) continue;
      const int r = forest_.root(i);
      auto [it, fresh] = slot[f].try_emplace(r, spec.families[f].size());
      if (fresh) spec.families[f].emplace_back();
      spec.families[f][it->second].push_back(table_.point(i));
    }
    return spec;
  }

 private:
  // Whether point j could join family f without breaking the bound.
  bool fits(int j, int f) {
    if (!table_.sameLabel()) {
      const std::size_t mark = forest_.checkpoint();
      if (!tryAssign(j, f)) return false;
      unassign(j, mark);
      return true;
    }
    const auto& c = table_.point(j).coords();
    lo_.assign(c.begin(), c.end());
    hi_.assign(c.begin(), c.end());
    for (const auto& nb : table_.neighbors(j)) {
      if (family_[nb.index] != f || nb.distance >= radii_[f]) continue;
      const int r = forest_.root(nb.index);
      for (std::size_t a = 0; a < lo_.size(); ++a) {
        lo_[a] = std::min(lo_[a], forest_.lo(r, a));
        hi_[a] = std::max(hi_[a], forest_.hi(r, a));
      }
    }
    for (std::size_t a = 0; a < lo_.size(); ++a)
      if (hi_[a] - lo_[a] > bound_) return false;
    return true;
  }

  // Assigns every point with a single feasible family, then branches on a
  // point with the fewest options.
  bool solve() {
    if (++nodes_ > budget_)
      throw BudgetExceeded("cover search exceeded node budget of " + std::to_string(budget_));
    if ((nodes_ & 0xff) == 0 && deadline_ && std::chrono::steady_clock::now() > *deadline_)
      throw BudgetExceeded("cover search exceeded its time limit");
    const std::size_t mark = forest_.checkpoint();
    const std::size_t trailMark = trail_.size();
    auto undo = [&] {
      forest_.rollback(mark);
      while (trail_.size() > trailMark) {
        family_[trail_.back()] = -1;
        trail_.pop_back();
      }
    };

    const int families = static_cast<int>(radii_.size());
    int branch = -1;
    for (bool forced = true; forced;) {
      forced = false;
      branch = -1;
      int fewest = families + 1;
      for (int j = 0; j < static_cast<int>(table_.size()); ++j) {
        if (family_[j] >= 0) continue;
        int count = 0;
        int only = -1;
        for (int f = 0; f < families; ++f)
          if (fits(j, f)) {
            ++count;
            only = f;
          }
        if (count == 0) {
          undo();
          return false;
        }
        if (count == 1) {
          tryAssign(j, only);
          trail_.push_back(j);
          forced = true;
        } else if (count < fewest) {
          fewest = count;
          branch = j;
        }
      }
    }
    if (branch < 0) return true;

    for (int f = 0; f < families; ++f) {
      const std::size_t before = forest_.checkpoint();
      if (!tryAssign(branch, f)) continue;
      trail_.push_back(branch);
      if (solve()) return true;
      trail_.pop_back();
      unassign(branch, before);
    }
    undo();
    return false;
  }

  const PointTable& table_;
  std::vector<Coord> radii_;
  Coord bound_;
  BlockForest forest_;
  std::vector<int> family_;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::vector<int> trail_;
  std::vector<Coord> lo_;
  std::vector<Coord> hi_;
};

}  // namespace

SearchResult searchCover(std::span<const LatticePoint> points, std::span<const Coord> radii, Coord bound,
                         const SearchOptions& options) {
  if (radii.empty()) throw InvalidArgument("searchCover needs at least one family");
  for (Coord r : radii)
    if (r <= 0) throw InvalidArgument("radii must be positive");
  if (bound <= 0) throw InvalidArgument("bound must be positive");

  std::vector<LatticePoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const PointTable table(sorted, *std::max_element(radii.begin(), radii.end()));
  CoverSearch search(table, radii, bound);
  SearchResult result;

  if (options.mode == SearchMode::exhaustive) {
    const bool found = search.exhaustive(options.nodeBudget, options.timeLimit);
    result.nodes = search.nodes();
    result.status = found ? SearchStatus::found : SearchStatus::noCover;
    if (found) result.cover = search.extract();
    return result;
  }

  std::vector<int> order(table.size());
  std::iota(order.begin(), order.end(), 0);
  if (options.seed != 0) {
    std::mt19937_64 rng(options.seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  const std::vector<int> missed = search.greedy(order);
  result.nodes = table.size();
  CoverSpec spec = search.extract();
  if (missed.empty()) {
    result.status = SearchStatus::found;
    result.cover = spec;
  } else {
    result.status = SearchStatus::inconclusive;
    for (int i : missed) result.uncovered.push_back(table.point(i));
  }
  result.partial = std::move(spec);
  return result;
}

std::vector<Coord> a2Radii(const TauLabel& tau) { return a2RadiiOf(tau.elements()); }

std::vector<Coord> a2RadiiOf(const FinSet& sigma) {
  std::vector<Coord> radii;
  for (Element e : sigma.elements()) {
    if (e > 62) throw InvalidArgument("A_2 radius 2^" + std::to_string(e) + " overflows");
    radii.push_back(Coord{1} << e);
  }
  return radii;
}

std::vector<Coord> aRadiiOf(const FinSet& sigma) {
  return std::vector<Coord>(sigma.elements().begin(), sigma.elements().end());
}

std::vector<LatticePoint> a2Points(const TauLabel& tau, Coord bound) {
  return enumerateXTau(tau, Box(tau.dimension(), AxisRange{0, 8 * bound}));
}

namespace {

std::vector<LatticePoint> probePoints(const TauLabel& tau, Coord window, Coord spacing) {
  std::vector<LatticePoint> out;
  for (auto& p : enumerateXTau(tau, Box(tau.dimension(), AxisRange{0, window}))) {
    if (std::all_of(p.coords().begin(), p.coords().end(), [&](Coord c) { return c % spacing == 0; }))
      out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

A2Result a2Check(const TauLabel& tau, Coord bound, const A2Options& options) {
  const unsigned top = tau.shift(tau.dimension() - 1);
  if (bound <= (Coord{1} << (top + 1)))
    throw PreconditionError("a2Check needs B > 2^{k_m+1} = " + std::to_string(Coord{1} << (top + 1)) +
                            ", got B = " + std::to_string(bound));

  A2Result result;
  result.bound = bound;
  result.radii = options.radii ? *options.radii : a2Radii(tau);
  const std::vector<LatticePoint> full = a2Points(tau, bound);
  result.truncationPoints = full.size();

  if (options.mode == SearchMode::greedy) {
    SearchResult r = searchCover(full, result.radii, bound, SearchOptions{SearchMode::greedy, 0, options.seed});
    result.verdict = r.status == SearchStatus::found ? A2Verdict::cover : A2Verdict::inconclusive;
    result.cover = std::move(r.cover);
    result.partial = std::move(r.partial);
    return result;
  }

  // Any cover of the truncation restricts to a cover of a subset, so a
  // subset with no cover refutes the whole truncation.
  const Coord base = Coord{1} << tau.shift(0);
  const Coord minRadius = *std::min_element(result.radii.begin(), result.radii.end());
  std::vector<std::pair<Coord, Coord>> plan;  // (window, spacing)
  if (options.probes) {
    for (Coord spacing : {2 * base, base}) {
      if (spacing >= minRadius) continue;
      const Coord first = (bound / spacing + 1) * spacing;
      for (Coord window : {first, first + 2 * spacing, 2 * first})
        if (window < 8 * bound) plan.emplace_back(window, spacing);
    }
  }
  plan.emplace_back(8 * bound, base);

  for (const auto& [window, spacing] : plan) {
    const std::vector<LatticePoint> subset = window == 8 * bound && spacing == base ? full : probePoints(tau, window, spacing);
    ProbeReport report{window, spacing, subset.size(), std::nullopt, 0};
    try {
      SearchResult r = searchCover(subset, result.radii, bound, SearchOptions{SearchMode::exhaustive, options.nodeBudget, 0, options.timeLimit});
      report.status = r.status;
      report.nodes = r.nodes;
      result.probes.push_back(report);
      if (r.status == SearchStatus::noCover) {
        result.verdict = A2Verdict::noCover;
        return result;
      }
      if (subset.size() == full.size()) {
        result.verdict = A2Verdict::cover;
        result.cover = std::move(r.cover);
        return result;
      }
    } catch (const BudgetExceeded&) {
      report.nodes = options.nodeBudget;
      result.probes.push_back(report);
    }
  }
  throw BudgetExceeded("a2Check: no probe reached a verdict within node budget " + std::to_string(options.nodeBudget));
}

}  // namespace coarsedim
