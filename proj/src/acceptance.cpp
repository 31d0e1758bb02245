#include "coarsedim/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "coarsedim/error.hpp"
#include "coarsedim/finfam.hpp"
#include "coarsedim/ordinal.hpp"
#include "coarsedim/partition.hpp"
#include "coarsedim/sfamily.hpp"
#include "coarsedim/space.hpp"

namespace coarsedim {

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Collects the first few violation messages and a running count.
class Violations {
 public:
  void add(const std::string& message) {
    if (count_++ < 5) samples_.push_back(message);
  }
  std::size_t count() const { return count_; }
  std::string summary() const {
    std::string out = std::to_string(count_) + " violations";
    for (const auto& s : samples_) out += "; " + s;
    return out;
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> samples_;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CriterionResult finish(int id, std::string name, const Timer& timer, double limit, const Violations& v,
                       std::string stats) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.seconds = timer.seconds();
  r.limitSeconds = limit;
  r.pass = v.count() == 0 && (limit == 0 || r.seconds < limit);
  r.detail = v.count() == 0 ? std::move(stats) : v.summary();
  if (v.count() == 0 && limit > 0 && r.seconds >= limit) r.detail += "; over time limit";
  return r;
}

FinSet randomSubset(Rng& rng, unsigned ground) {
  while (true) {
    std::vector<Element> elements;
    for (unsigned i = 1; i <= ground; ++i)
      if (uniform(rng, 0, 1)) elements.push_back(i);
    if (!elements.empty()) return FinSet(std::move(elements));
  }
}

ExplicitFamily randomFamily(Rng& rng, unsigned ground, unsigned maxMembers) {
  std::vector<FinSet> members;
  const auto count = uniform(rng, 0, maxMembers);
  for (std::int64_t i = 0; i < count; ++i) members.push_back(randomSubset(rng, ground));
  return ExplicitFamily(std::move(members));
}

FinSet randomSmallSet(Rng& rng, unsigned maxElement, unsigned maxSize) {
  std::set<Element> chosen;
  const auto size = uniform(rng, 1, maxSize);
  while (chosen.size() < static_cast<std::size_t>(size)) chosen.insert(static_cast<Element>(uniform(rng, 1, maxElement)));
  return FinSet(std::vector<Element>(chosen.begin(), chosen.end()));
}

// omega^2 * a + omega * b + c with a, b, c in 0..3.
Ordinal randomBelowOmegaCubed(Rng& rng) {
  std::vector<CnfTerm> terms;
  for (std::uint64_t e : {2, 1, 0}) {
    const auto c = uniform(rng, 0, 3);
    if (c > 0) terms.push_back(CnfTerm{Ordinal::natural(e), static_cast<std::uint64_t>(c)});
  }
  return Ordinal::fromTerms(std::move(terms));
}

// Cube of side B <= 48 in dimension 1 or 2 with random eps-disjoint,
// B/3-bounded families on the grid.
PartitionInstance randomPartitionInstance(Rng& rng) {
  PartitionInstance instance;
  const int n = static_cast<int>(uniform(rng, 1, 2));
  const Coord g = uniform(rng, 1, 2);
  const Coord side = g * uniform(rng, (7 + g) / g, 48 / g);
  instance.cube = DiscreteCube{n, side, g};
  instance.eps = uniform(rng, 1, (side - 1) / 6);
  const Coord reach = side / 3 / g;  // block extent in grid steps
  const Coord cells = side / g;
  for (int k = 0; k < n; ++k) {
    GridFamily family;
    const auto wanted = uniform(rng, 0, 8);
    for (int attempt = 0; attempt < 40 && static_cast<std::int64_t>(family.size()) < wanted; ++attempt) {
      GridPoint corner(static_cast<std::size_t>(n));
      GridPoint extent(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a) {
        corner[a] = uniform(rng, 0, cells);
        extent[a] = uniform(rng, 0, std::min(reach, cells - corner[a]));
      }
      std::set<GridPoint> points{corner};
      const auto extra = uniform(rng, 0, 6);
      for (std::int64_t e = 0; e < extra; ++e) {
        GridPoint p(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) p[a] = corner[a] + uniform(rng, 0, extent[a]);
        points.insert(p);
      }
      GridBlock block;
      for (GridPoint p : points) {
        for (auto& c : p) c *= g;
        block.push_back(std::move(p));
      }
      bool separated = true;
      for (const auto& other : family)
        for (const auto& p : block)
          for (const auto& q : other) {
            Coord d = 0;
            for (int a = 0; a < n; ++a) d = std::max(d, std::abs(p[a] - q[a]));
            if (d < instance.eps) separated = false;
          }
      if (separated) family.push_back(std::move(block));
    }
    instance.families.push_back(std::move(family));
  }
  return instance;
}

// Limit ordinal below omega^omega with 1..4 terms, exponents <= 5, coefficients <= 5.
Ordinal randomLimitBelowOmegaOmega(Rng& rng) {
  std::set<std::uint64_t, std::greater<>> exponents;
  const auto count = uniform(rng, 1, 4);
  while (static_cast<std::int64_t>(exponents.size()) < count) exponents.insert(static_cast<std::uint64_t>(uniform(rng, 1, 5)));
  std::vector<CnfTerm> terms;
  for (std::uint64_t e : exponents) terms.push_back(CnfTerm{Ordinal::natural(e), static_cast<std::uint64_t>(uniform(rng, 1, 5))});
  return Ordinal::fromTerms(std::move(terms));
}

// Keeps a prefix of alpha, lowers the next coefficient and appends a random
// tail of smaller exponents. Exponents of alpha are natural numbers.
Ordinal randomBelow(Rng& rng, const Ordinal& alpha) {
  const auto& source = alpha.terms();
  const auto cut = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(source.size()) - 1));
  std::vector<CnfTerm> terms(source.begin(), source.begin() + static_cast<std::ptrdiff_t>(cut));
  const CnfTerm& pivot = source[cut];
  const auto lowered = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<std::int64_t>(pivot.coef) - 1));
  if (lowered > 0) terms.push_back(CnfTerm{pivot.exponent, lowered});
  const auto top = static_cast<std::int64_t>(pivot.exponent.toNatural());
  for (std::int64_t e = top - 1; e >= 0; --e)
    if (uniform(rng, 0, 1)) terms.push_back(CnfTerm{Ordinal::natural(static_cast<std::uint64_t>(e)), static_cast<std::uint64_t>(uniform(rng, 1, 9))});
  return Ordinal::fromTerms(std::move(terms));
}

}  // namespace

CriterionResult checkOrdAxioms(const AcceptanceOptions& options) {
  Timer timer;
  Rng rng(options.seed ^ 0x01);
  Violations v;
  constexpr int kFamilies = 500;
  for (int t = 0; t < kFamilies; ++t) {
    const auto ground = static_cast<unsigned>(uniform(rng, 1, 8));
    const ExplicitFamily m = randomFamily(rng, ground, 30);
    const std::uint64_t om = ord(m);
    const std::string tag = "family " + m.toString();

    // ord(M) <= n iff every member has at most n elements.
    for (std::uint64_t n = 0; n <= 9; ++n) {
      const bool small = std::all_of(m.members().begin(), m.members().end(), [&](const FinSet& s) { return s.size() <= n; });
      if ((om <= n) != small) v.add(tag + ": ord <= " + std::to_string(n) + " mismatch");
    }

    // Monotone under inclusion.
    const ExplicitFamily extra = randomFamily(rng, ground, 10);
    const ExplicitFamily bigger = familyUnion(m, extra);
    const std::uint64_t oe = ord(extra);
    if (om > ord(bigger)) v.add(tag + ": not monotone");
    std::vector<FinSet> kept;
    for (const auto& s : m.members())
      if (uniform(rng, 0, 1)) kept.push_back(s);
    if (ord(ExplicitFamily(kept)) > om) v.add(tag + ": sub-family has larger ord");

    // Union bound.
    if (ord(bigger) > std::max(om, oe)) v.add(tag + ": union exceeds max");

    // Injective images into a larger family.
    std::vector<Element> image(12);
    for (Element i = 0; i < 12; ++i) image[i] = i + 1;
    std::shuffle(image.begin(), image.end(), rng);
    std::vector<FinSet> mapped;
    for (const auto& s : m.members()) {
      std::vector<Element> e;
      for (Element x : s.elements()) e.push_back(image[x - 1]);
      std::sort(e.begin(), e.end());
      mapped.emplace_back(std::move(e));
    }
    const ExplicitFamily target = familyUnion(ExplicitFamily(mapped), randomFamily(rng, 12, 5));
    if (om > ord(target)) v.add(tag + ": injective image has smaller ord");

    // Order-preserving reindexing keeps ord.
    std::set<Element> k;
    while (k.size() < ground) k.insert(static_cast<Element>(uniform(rng, 1, 40)));
    const std::vector<Element> targets(k.begin(), k.end());
    if (ord(reindex(m, targets)) != om) v.add(tag + ": reindex changed ord");
  }
  if (ord(powerFamily(3)) != 3) v.add("ord of all nonempty subsets of {1,2,3} is not 3");
  return finish(1, "Ord axioms on random families", timer, 30, v, std::to_string(kFamilies) + " families");
}

CriterionResult checkTruncatedOrd(const AcceptanceOptions&) {
  Timer timer;
  Violations v;
  int cases = 0;
  for (unsigned n = 0; n <= 5; ++n) {
    for (unsigned bound = 1; bound <= 6; ++bound) {
      ++cases;
      const std::uint64_t got = ordTruncated(Ordinal::natural(n), bound);
      if (got != std::min(n, bound))
        v.add("ordTruncated(" + std::to_string(n) + ", " + std::to_string(bound) + ") = " + std::to_string(got));
    }
  }
  return finish(2, "ordTruncated(n, N) = min(n, N)", timer, 10, v, std::to_string(cases) + " cases");
}

CriterionResult checkOmegaClosedForm(const AcceptanceOptions&) {
  Timer timer;
  Violations v;
  int members = 0;
  for (unsigned mask = 1; mask < 256; ++mask) {
    std::vector<Element> elements;
    for (unsigned i = 0; i < 8; ++i)
      if (mask & (1u << i)) elements.push_back(i + 1);
    const FinSet sigma(std::move(elements));
    const bool expected = sigma.size() <= sigma.min() + 1;
    const bool got = sMember(sigma, Ordinal::omega());
    members += got;
    if (got != expected) v.add("sigma = " + sigma.toString());
  }
  return finish(3, "S_omega closed form", timer, 0, v, "255 sets, " + std::to_string(members) + " members");
}

CriterionResult checkSXiStructure(const AcceptanceOptions& options) {
  Timer timer;
  Rng rng(options.seed ^ 0x04);
  Violations v;
  constexpr int kSamples = 300;
  int memberSamples = 0;
  for (int t = 0; t < kSamples; ++t) {
    const Ordinal xi = randomBelowOmegaCubed(rng);
    const FinSet sigma = randomSmallSet(rng, 12, 6);
    const std::string tag = "sigma " + sigma.toString() + ", xi " + xi.toString();
    const bool in = sMember(sigma, xi);
    const Decomposition parts = decompose(xi);
    memberSamples += in;

    if (in) {
      const auto& e = sigma.elements();
      for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << e.size()); ++sub) {
        std::vector<Element> part;
        for (std::size_t i = 0; i < e.size(); ++i)
          if (sub & (std::uint64_t{1} << i)) part.push_back(e[i]);
        if (!sMember(FinSet(part), xi)) v.add(tag + ": subset " + FinSet(part).toString() + " not a member");
      }
    }

    if (!xi.isFinite() && sigma.size() <= parts.finite + 1 && !in) v.add(tag + ": small set not a member");

    if (in && sigma.min() > 1) {
      const auto l = static_cast<Element>(uniform(rng, 1, sigma.min() - 1));
      std::vector<Element> grown{l};
      grown.insert(grown.end(), sigma.elements().begin(), sigma.elements().end());
      if (!sMember(FinSet(grown), add(xi, Ordinal::natural(1))))
        v.add(tag + ": prepending " + std::to_string(l) + " leaves S_{xi+1}");
    }

    if (in && !parts.limitPart.isZero()) {
      const auto m = parts.finite + static_cast<std::uint64_t>(uniform(rng, 1, 3));
      if (!sMember(sigma, add(parts.limitPart, Ordinal::natural(m))))
        v.add(tag + ": not in S_{gamma+" + std::to_string(m) + "}");
    }

    if (in) {
      std::vector<Element> up;
      Element shift = 0;
      for (Element x : sigma.elements()) {
        shift += static_cast<Element>(uniform(rng, 0, 2));
        up.push_back(x + shift);
      }
      if (!sMember(FinSet(up), xi)) v.add(tag + ": upward image " + FinSet(up).toString() + " not a member");
    }

    if (in && !xi.isFinite()) {
      bool found = false;
      for (Element l = 1; l <= idx(sigma, parts.finite) && !found; ++l) {
        const Ordinal target = add(zeta(parts.limitPart, l), Ordinal::natural(l + parts.finite + 1));
        found = sMember(sigma, target);
      }
      if (!found) v.add(tag + ": no l gives the shifted membership");
    }
  }
  return finish(4, "S_xi structural suite below omega^3", timer, 60, v,
                std::to_string(kSamples) + " samples, " + std::to_string(memberSamples) + " members");
}

CriterionResult checkMetric(const AcceptanceOptions& options) {
  Timer timer;
  Rng rng(options.seed ^ 0x05);
  Violations v;
  const std::vector<TauLabel> labels{{2}, {3}, {2, 3}, {2, 4}, {3, 4}, {2, 3, 4}};
  auto randomPoint = [&](const TauLabel& tau) {
    const Coord step = Coord{1} << tau.shift(0);
    while (true) {
      std::vector<Coord> x;
      for (std::size_t a = 0; a < tau.dimension(); ++a) x.push_back(step * uniform(rng, -16, 16));
      if (xTauMember(tau, x)) return LatticePoint(tau, std::move(x));
    }
  };
  auto anyPoint = [&] { return randomPoint(labels[static_cast<std::size_t>(uniform(rng, 0, 5))]); };

  std::set<TauLabel> seen;
  constexpr int kTriples = 10000;
  for (int t = 0; t < kTriples; ++t) {
    const LatticePoint x = anyPoint();
    const LatticePoint y = anyPoint();
    const LatticePoint z = anyPoint();
    seen.insert({x.label(), y.label(), z.label()});
    const Coord xy = dXi(x, y);
    const Coord yz = dXi(y, z);
    const Coord xz = dXi(x, z);
    const std::string tag = x.toString() + " | " + y.toString() + " | " + z.toString();
    if (dXi(x, x) != 0) v.add(tag + ": d(x,x) != 0");
    if ((xy == 0) != (x == y)) v.add(tag + ": d(x,y) = 0 iff x = y fails");
    if (xy != dXi(y, x)) v.add(tag + ": asymmetric");
    if (xz > xy + yz) v.add(tag + ": triangle inequality fails");
  }
  constexpr int kPairs = 1000;
  for (int t = 0; t < kPairs; ++t) {
    const TauLabel& tau = labels[static_cast<std::size_t>(uniform(rng, 0, 5))];
    const LatticePoint x = randomPoint(tau);
    const LatticePoint y = randomPoint(tau);
    if (seqDist(embed(x), embed(y)) != dXi(x, y)) v.add(x.toString() + " | " + y.toString() + ": embedding not isometric");
  }
  if (seen.size() < 3) v.add("fewer than 3 labels drawn");
  return finish(5, "d_xi metric axioms and embedding isometry", timer, 0, v,
                std::to_string(kTriples) + " triples over " + std::to_string(seen.size()) + " labels, " +
                    std::to_string(kPairs) + " pairs");
}

CriterionResult checkA2OneDim(const AcceptanceOptions& options) {
  Timer timer;
  Violations v;
  std::string stats;
  constexpr double kLimitEach = 300;
  double worst = 0;
  for (Coord bound : {8, 16}) {
    for (bool probes : {true, false}) {
      Timer each;
      A2Options o;
      o.nodeBudget = options.nodeBudget;
      o.probes = probes;
      const std::string tag = "tau {2}, B = " + std::to_string(bound) + (probes ? "" : ", full truncation");
      try {
        const A2Result r = a2Check(TauLabel{2}, bound, o);
        if (r.verdict != A2Verdict::noCover) v.add(tag + ": verdict is not noCover");
        const ProbeReport& last = r.probes.back();
        stats += (stats.empty() ? "" : "; ") + tag + ": noCover on " + std::to_string(last.points) + " points in " +
                 std::to_string(last.nodes) + " nodes";
      } catch (const BudgetExceeded& e) {
        v.add(tag + ": " + e.what());
      }
      worst = std::max(worst, each.seconds());
    }
  }
  CriterionResult r = finish(6, "A_2 refutation in dimension 1", timer, 0, v, stats);
  if (worst >= kLimitEach) {
    r.pass = false;
    r.detail += "; a single check took " + std::to_string(worst) + " s";
  }
  r.limitSeconds = kLimitEach;
  return r;
}

CriterionResult checkA2TwoDim(const AcceptanceOptions& options) {
  Timer timer;
  Violations v;
  const TauLabel tau{2, 3};
  constexpr Coord kBound = 8;
  std::string stats;
  try {
    A2Options o;
    o.nodeBudget = options.nodeBudget;
    const A2Result r = a2Check(tau, kBound, o);
    if (r.verdict != A2Verdict::noCover) v.add("a2Check verdict is not noCover");
    const ProbeReport& last = r.probes.back();
    stats = "noCover on " + std::to_string(last.points) + " points in " + std::to_string(last.nodes) + " nodes";
  } catch (const BudgetExceeded& e) {
    v.add(std::string("a2Check: ") + e.what());
  }

  const std::vector<LatticePoint> points = a2Points(tau, kBound);
  std::size_t survivors = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::string tag = "greedy seed " + std::to_string(seed);
    const SearchResult g = searchCover(points, a2Radii(tau), kBound, SearchOptions{SearchMode::greedy, 0, seed});
    const CoverSpec& candidate = g.cover ? *g.cover : *g.partial;
    try {
      const RefuteResult r = skeletonRefute(tau, kBound, candidate);
      if (r.failure || !r.witness) {
        v.add(tag + ": " + r.failure.value_or("no witness"));
        continue;
      }
      survivors += r.survivors.size();
      const LatticePoint& w = *r.witness;
      const std::vector<LatticePoint> single{w};
      const CoverVerdict verdict = verifyCover(candidate, single);
      if (verdict.malformed || verdict.disjointness || verdict.diameter) v.add(tag + ": candidate is not structurally valid");
      if (!verdict.coverage || !(verdict.coverage->point == w)) v.add(tag + ": witness " + w.toString() + " is covered");
      if (!std::binary_search(points.begin(), points.end(), w)) v.add(tag + ": witness " + w.toString() + " outside the truncation");
    } catch (const std::exception& e) {
      v.add(tag + ": " + e.what());
    }
  }
  return finish(7, "A_2 refutation in dimension 2", timer, 600, v,
                stats + "; 20 witnesses verified, " + std::to_string(survivors) + " uncovered survivors in total");
}

CriterionResult checkPartitionChain(const AcceptanceOptions& options) {
  Timer timer;
  Rng rng(options.seed ^ 0x08);
  Violations v;
  constexpr int kInstances = 100;
  std::size_t blocks = 0;
  std::size_t finalPoints = 0;
  for (int t = 0; t < kInstances; ++t) {
    const PartitionInstance instance = randomPartitionInstance(rng);
    for (const auto& f : instance.families) blocks += f.size();
    const std::string tag = "instance " + std::to_string(t) + " (n = " + std::to_string(instance.cube.dimension) +
                            ", B = " + std::to_string(instance.cube.side) + ", g = " +
                            std::to_string(instance.cube.step) + ", eps = " + std::to_string(instance.eps) + ")";
    try {
      const ChainState chain = epsilonPartitionChain(instance.cube, instance.families, instance.eps);
      for (const auto& c : chain.counterexamples) v.add(tag + ": " + c);
      if (!chain.finalNonempty()) v.add(tag + ": L_n is empty");
      finalPoints += chain.levels.back().size();
      for (std::size_t k = 0; k + 1 < chain.levels.size(); ++k) {
        const std::set<GridPoint> previous(chain.levels[k].begin(), chain.levels[k].end());
        const std::set<GridPoint> next(chain.levels[k + 1].begin(), chain.levels[k + 1].end());
        if (!std::includes(previous.begin(), previous.end(), next.begin(), next.end()))
          v.add(tag + ": L_" + std::to_string(k + 1) + " not inside L_" + std::to_string(k));
        for (const auto& block : instance.families[k])
          for (GridPoint p : block) {
            for (auto& c : p) c *= ChainState::kResolution;
            if (next.contains(p)) v.add(tag + ": L_" + std::to_string(k + 1) + " meets a block of U_" + std::to_string(k + 1));
          }
      }
    } catch (const std::exception& e) {
      v.add(tag + ": " + e.what());
    }
  }
  return finish(8, "eps-partition chain", timer, 0, v,
                std::to_string(kInstances) + " instances, " + std::to_string(blocks) + " blocks, " +
                    std::to_string(finalPoints) + " points in final levels");
}

CriterionResult checkZetaCofinality(const AcceptanceOptions& options) {
  Timer timer;
  Rng rng(options.seed ^ 0x09);
  Violations v;
  constexpr int kAlphas = 100;
  constexpr int kBetas = 20;
  std::uint64_t worstIndex = 0;
  for (int t = 0; t < kAlphas; ++t) {
    const Ordinal alpha = randomLimitBelowOmegaOmega(rng);
    const std::string tag = "alpha " + alpha.toString();
    for (std::uint64_t i = 1; i < 20; ++i) {
      const Ordinal z = zeta(alpha, i);
      const Ordinal here = add(z, Ordinal::natural(i));
      const Ordinal next = add(zeta(alpha, i + 1), Ordinal::natural(i + 1));
      if (!z.isZero() && !z.isLimit()) v.add(tag + ": zeta(" + std::to_string(i) + ") is not a limit");
      if (!(here < next)) v.add(tag + ": sequence not increasing at " + std::to_string(i));
      if (!(here < alpha)) v.add(tag + ": term " + std::to_string(i) + " not below alpha");
    }
    for (int b = 0; b < kBetas; ++b) {
      const Ordinal beta = randomBelow(rng, alpha);
      // Indices start at 1, so beta = 0 still gets one.
      const std::uint64_t limit = std::max<std::uint64_t>(1, 10 * (beta.size() + beta.maxCoefficient()));
      std::uint64_t hit = 0;
      for (std::uint64_t i = 1; i <= limit && hit == 0; ++i)
        if (add(zeta(alpha, i), Ordinal::natural(i)) > beta) hit = i;
      if (hit == 0) v.add(tag + ", beta " + beta.toString() + ": no index up to " + std::to_string(limit));
      worstIndex = std::max(worstIndex, hit);
    }
  }
  return finish(9, "zeta cofinality below omega^omega", timer, 0, v,
                std::to_string(kAlphas) + " limits x " + std::to_string(kBetas) +
                    " smaller ordinals, largest index needed " + std::to_string(worstIndex));
}

std::vector<CriterionResult> runAcceptance(const AcceptanceOptions& options,
                                           const std::function<void(const CriterionResult&)>& progress) {
  using Check = CriterionResult (*)(const AcceptanceOptions&);
  const Check checks[] = {checkOrdAxioms,      checkTruncatedOrd, checkOmegaClosedForm,
                          checkSXiStructure,   checkMetric,       checkA2OneDim,
                          checkA2TwoDim,       checkPartitionChain, checkZetaCofinality};
  std::vector<CriterionResult> results;
  for (Check check : checks) {
    results.push_back(check(options));
    if (progress) progress(results.back());
  }
  return results;
}

std::string formatCriterion(const CriterionResult& r) {
  char timing[96];
  if (r.limitSeconds > 0)
    std::snprintf(timing, sizeof timing, "%.2f s / limit %.0f s", r.seconds, r.limitSeconds);
  else
    std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + timing +
         "): " + r.detail;
}

}  // namespace coarsedim
