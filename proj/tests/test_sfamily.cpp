#include <doctest.h>

#include <fstream>
#include <string>

#include "coarsedim/error.hpp"
#include "coarsedim/sfamily.hpp"
#include "generators.hpp"

using namespace coarsedim;

namespace {

Ordinal w() { return Ordinal::omega(); }
Ordinal nat(std::uint64_t n) { return Ordinal::natural(n); }

std::vector<FinSet> subsetsUpTo(unsigned n) {
  std::vector<FinSet> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Element> e;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << i)) e.push_back(i + 1);
    out.emplace_back(std::move(e));
  }
  return out;
}

}  // namespace

TEST_CASE("K and i") {
  CHECK(*bigK(FinSet{2, 3, 4}, 0) == FinSet{3, 4});
  CHECK(*bigK(FinSet{2, 3, 4}, 1) == FinSet{4});
  CHECK_FALSE(bigK(FinSet{2, 3, 4}, 2).has_value());
  CHECK_FALSE(bigK(FinSet{2, 3, 4}, 7).has_value());
  CHECK(idx(FinSet{2, 3, 4}, 0) == 2);
  CHECK(idx(FinSet{2, 3, 4}, 1) == 3);
  CHECK(idx(FinSet{2, 3, 4}, 5) == 4);
}

TEST_CASE("finite levels are cardinality bounds") {
  for (const auto& s : subsetsUpTo(6))
    for (std::uint64_t n = 0; n <= 6; ++n) CHECK(sMember(s, nat(n)) == (s.size() <= n));
}

TEST_CASE("S_omega closed form") {
  CHECK(sMember(FinSet{1, 2}, w()));
  CHECK_FALSE(sMember(FinSet{1, 2, 3}, w()));
  CHECK(sMember(FinSet{2, 3, 4}, w()));
  for (const auto& s : subsetsUpTo(8)) CHECK(sMember(s, w()) == (s.size() <= s.min() + 1));
}

TEST_CASE("S_{omega+1} closed form") {
  // K(sigma, 1) must have at most sigma_1 elements: |sigma| <= sigma_1 + 2.
  CHECK(sMember(FinSet{1, 2, 3, 4}, w() + nat(1)));
  CHECK_FALSE(sMember(FinSet{1, 2, 3, 4, 5}, w() + nat(1)));
  for (const auto& s : subsetsUpTo(8)) {
    const bool expected = s.size() <= 2 || s.size() <= s[1] + 2;
    CHECK(sMember(s, w() + nat(1)) == expected);
  }
}

TEST_CASE("shifted membership") {
  CHECK(sMemberShifted(FinSet{3, 4}, w()) == sMember(FinSet{1, 2}, w()));
  CHECK(sMemberShifted(FinSet{3, 4, 5}, w()) == sMember(FinSet{1, 2, 3}, w()));
  CHECK_THROWS_AS(sMemberShifted(FinSet{2, 3}, w()), InvalidArgument);
}

TEST_CASE("truncated ord of finite levels") {
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned bound = 1; bound <= 6; ++bound) CHECK(ordTruncated(nat(n), bound) == std::min(n, bound));
}

TEST_CASE("truncated ord of S_omega matches the golden table") {
  std::ifstream in(std::string(COARSEDIM_GOLDEN_DIR) + "/ord_trunc_omega.csv");
  REQUIRE(in);
  std::string line;
  std::getline(in, line);
  CHECK(line == "N,ord");
  int rows = 0;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    const unsigned bound = static_cast<unsigned>(std::stoul(line.substr(0, comma)));
    const std::uint64_t expected = std::stoull(line.substr(comma + 1));
    CHECK(ordTruncated(w(), bound) == expected);
    ++rows;
  }
  CHECK(rows == 8);
}

TEST_CASE("truncation bounds") {
  CHECK_THROWS_AS(truncate(w(), 0), InvalidArgument);
  CHECK_THROWS_AS(truncate(w(), kMaxTruncationBound + 1), BudgetExceeded);
  const STruncation t = truncate(w(), 4);
  CHECK(isInclusive(t.family));
  for (const auto& s : t.family.members()) CHECK(s.max() <= 4);
}

TEST_CASE("truncated ord is monotone in the bound") {
  for (const Ordinal& xi : {w(), w() + nat(2), Ordinal::omegaPow(nat(1), 2), Ordinal::omegaPow(nat(2))}) {
    std::uint64_t previous = 0;
    for (unsigned bound = 1; bound <= 9; ++bound) {
      const std::uint64_t value = ordTruncated(xi, bound);
      CHECK(value >= previous);
      previous = value;
    }
  }
}

TEST_CASE("structural properties on random samples below omega^3") {
  testgen::Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    std::vector<CnfTerm> terms;
    for (std::uint64_t e : {2, 1, 0}) {
      const auto c = testgen::uniform(rng, 0, 2);
      if (c > 0) terms.push_back({nat(e), static_cast<std::uint64_t>(c)});
    }
    const Ordinal xi = Ordinal::fromTerms(std::move(terms));
    std::vector<Element> e;
    for (Element x = 1; x <= 10; ++x)
      if (testgen::uniform(rng, 0, 3) == 0) e.push_back(x);
    if (e.empty()) e.push_back(static_cast<Element>(testgen::uniform(rng, 1, 10)));
    const FinSet sigma(e);
    const bool in = sMember(sigma, xi);
    const auto parts = decompose(xi);

    if (!xi.isFinite() && sigma.size() <= parts.finite + 1) CHECK(in);
    if (in) {
      for (std::size_t drop = 0; drop < sigma.size() && sigma.size() > 1; ++drop) {
        std::vector<Element> smaller = sigma.elements();
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        CHECK(sMember(FinSet(smaller), xi));
      }
      std::vector<Element> up;
      for (Element x : sigma.elements()) up.push_back(x + 1);
      CHECK(sMember(FinSet(up), xi));
      if (sigma.min() > 1) {
        std::vector<Element> grown{1};
        grown.insert(grown.end(), sigma.elements().begin(), sigma.elements().end());
        CHECK(sMember(FinSet(grown), add(xi, nat(1))));
      }
      if (!parts.limitPart.isZero()) CHECK(sMember(sigma, add(parts.limitPart, nat(parts.finite + 1))));
    }
  }
}
