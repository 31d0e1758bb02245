#include <doctest.h>

#include "coarsedim/cover.hpp"
#include "coarsedim/error.hpp"
#include "generators.hpp"

using namespace coarsedim;

namespace {

LatticePoint p1(Coord x) { return LatticePoint(TauLabel{2}, {x}); }

std::vector<LatticePoint> line(Coord lo, Coord hi) {
  std::vector<LatticePoint> out;
  for (Coord x = lo; x <= hi; ++x) out.push_back(p1(x));
  return out;
}

Block interval(Coord lo, Coord hi) { return line(lo, hi); }

}  // namespace

TEST_CASE("verify: singletons spaced by r") {
  CoverSpec spec{{{{p1(0)}, {p1(4)}, {p1(8)}}}, {4}, 8};
  const std::vector<LatticePoint> pts{p1(0), p1(4), p1(8)};
  CHECK(verifyCover(spec, pts).ok());
}

TEST_CASE("verify: blocks closer than r") {
  CoverSpec spec{{{interval(0, 2), interval(6, 7)}}, {5}, 8};
  const CoverVerdict v = verifyCover(spec, line(0, 2));
  REQUIRE(v.disjointness.has_value());
  CHECK(v.disjointness->distance == 4);
  CHECK(v.disjointness->a == p1(2));
  CHECK(v.disjointness->b == p1(6));
  CHECK_FALSE(v.ok());
}

TEST_CASE("verify: tiling with gaps misses the gap points") {
  // Blocks [k(B+r), k(B+r)+B] over [0, 8B] with B = 8, r = 4.
  constexpr Coord B = 8, r = 4;
  BlockFamily family;
  for (Coord start = 0; start <= 8 * B; start += B + r) family.push_back(interval(start, std::min(start + B, 8 * B)));
  CoverSpec spec{{family}, {r}, B};
  const CoverVerdict v = verifyCover(spec, line(0, 8 * B));
  CHECK_FALSE(v.disjointness.has_value());
  CHECK_FALSE(v.diameter.has_value());
  REQUIRE(v.coverage.has_value());
  CHECK(v.coverage->point == p1(9));
}

TEST_CASE("verify: diameter and shape problems") {
  CoverSpec wide{{{interval(0, 9)}}, {4}, 8};
  const CoverVerdict v = verifyCover(wide, line(0, 9));
  REQUIRE(v.diameter.has_value());
  CHECK(v.diameter->diameter == 9);
  CoverSpec mismatch{{{interval(0, 1)}}, {4, 8}, 8};
  CHECK(verifyFamilies(mismatch).malformed.has_value());
}

TEST_CASE("search: one family over a short line") {
  const auto pts = line(0, 7);
  const std::vector<Coord> radii{1};
  const SearchResult r = searchCover(pts, radii, 8);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(verifyCover(*r.cover, pts).ok());
}

TEST_CASE("search: one family with r = 4 cannot cover [0, 8B]") {
  for (Coord B : {4, 8}) {
    const auto pts = line(0, 8 * B);
    const std::vector<Coord> radii{4};
    CHECK(searchCover(pts, radii, B).status == SearchStatus::noCover);
  }
}

TEST_CASE("search: two families with r = (1, 1) split any line") {
  const auto pts = line(-5, 30);
  const std::vector<Coord> radii{1, 1};
  const SearchResult r = searchCover(pts, radii, 1);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(verifyCover(*r.cover, pts).ok());
}

TEST_CASE("search: budget is enforced") {
  const auto pts = a2Points(TauLabel{2, 3}, 16);
  SearchOptions options;
  options.nodeBudget = 10;
  CHECK_THROWS_AS(searchCover(pts, a2Radii(TauLabel{2, 3}), 16, options), BudgetExceeded);
}

TEST_CASE("search: exhaustive agrees with brute force on small clouds") {
  // Every assignment of points to families, blocks = same-family components closer than r.
  testgen::Rng rng(51);
  for (int t = 0; t < 150; ++t) {
    std::vector<LatticePoint> pts;
    std::vector<Coord> xs;
    const auto n = testgen::uniform(rng, 1, 9);
    for (int i = 0; i < n; ++i) xs.push_back(testgen::uniform(rng, 0, 20));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (Coord x : xs) pts.push_back(p1(x));
    const std::vector<Coord> radii{testgen::uniform(rng, 1, 5), testgen::uniform(rng, 1, 5)};
    const Coord bound = testgen::uniform(rng, 0, 6) + 1;

    bool any = false;
    const std::size_t m = pts.size();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m) && !any; ++code) {
      bool ok = true;
      for (int f = 0; f < 2 && ok; ++f) {
        // Components along the line: consecutive members closer than r merge.
        Coord start = -1, last = -1;
        for (std::size_t i = 0; i < m; ++i) {
          if (((code >> i) & 1) != static_cast<std::uint64_t>(f)) continue;
          const Coord x = pts[i].coords()[0];
          if (start < 0 || x - last >= radii[f]) start = x;
          last = x;
          if (last - start > bound) ok = false;
        }
      }
      any = ok;
    }
    const SearchResult r = searchCover(pts, radii, bound);
    CHECK((r.status == SearchStatus::found) == any);
    if (r.cover) CHECK(verifyCover(*r.cover, pts).ok());
  }
}

TEST_CASE("search: greedy output is always structurally valid") {
  const auto pts = a2Points(TauLabel{2, 3}, 8);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SearchResult r = searchCover(pts, a2Radii(TauLabel{2, 3}), 8, SearchOptions{SearchMode::greedy, 0, seed});
    REQUIRE(r.partial.has_value());
    const CoverVerdict v = verifyFamilies(*r.partial);
    CHECK(v.ok());
    CHECK(r.status == (r.uncovered.empty() ? SearchStatus::found : SearchStatus::inconclusive));
  }
}

TEST_CASE("search: mixed labels use d_xi") {
  // Different labels are at least max weight apart, so r = 4 singletons work.
  const std::vector<LatticePoint> pts{LatticePoint({2}, {0}), LatticePoint({3}, {0}), LatticePoint({2, 3}, {0, 0})};
  const std::vector<Coord> radii{8};
  const SearchResult r = searchCover(pts, radii, 1);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(verifyCover(*r.cover, pts).ok());
  const std::vector<Coord> wide{9};
  CHECK(searchCover(pts, wide, 1).status == SearchStatus::noCover);
}

TEST_CASE("radii helpers") {
  CHECK(a2Radii(TauLabel{2, 3}) == std::vector<Coord>{4, 8});
  CHECK(a2RadiiOf(FinSet{1, 3}) == std::vector<Coord>{2, 8});
  CHECK(aRadiiOf(FinSet{1, 3}) == std::vector<Coord>{1, 3});
}

TEST_CASE("A and A_2 instances agree after exponentiating indices") {
  // Radii 2^i for sigma equal radii i for the image of sigma under i -> 2^i.
  const auto pts = line(0, 40);
  for (const FinSet& sigma : {FinSet{1}, FinSet{2}, FinSet{1, 2}, FinSet{2, 3}}) {
    std::vector<Element> image;
    for (Element i : sigma.elements()) image.push_back(Element{1} << i);
    for (Coord bound : {2, 4, 6}) {
      const auto a2 = searchCover(pts, a2RadiiOf(sigma), bound).status;
      const auto a = searchCover(pts, aRadiiOf(FinSet(image)), bound).status;
      CHECK(a2 == a);
    }
  }
}

TEST_CASE("a2Check") {
  CHECK(a2Check(TauLabel{2}, 8).verdict == A2Verdict::noCover);
  A2Options relaxed;
  relaxed.radii = std::vector<Coord>{1, 1};
  const A2Result r = a2Check(TauLabel{2}, 8, relaxed);
  REQUIRE(r.verdict == A2Verdict::cover);
  CHECK(verifyCover(*r.cover, a2Points(TauLabel{2}, 8)).ok());
  CHECK(a2Check(TauLabel{2, 3}, 8).verdict == A2Verdict::noCover);
  A2Options full;
  full.probes = false;
  CHECK(a2Check(TauLabel{2, 3}, 8, full).verdict == A2Verdict::noCover);
  CHECK_THROWS_AS(a2Check(TauLabel{2, 3}, 4), PreconditionError);
  CHECK(a2Points(TauLabel{2}, 8).size() == 65);
  CHECK(a2Points(TauLabel{2, 3}, 8).size() == 3201);
}
