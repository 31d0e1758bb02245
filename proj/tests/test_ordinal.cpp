#include <doctest.h>

#include <array>

#include "coarsedim/error.hpp"
#include "coarsedim/ordinal.hpp"
#include "generators.hpp"

using namespace coarsedim;

namespace {

Ordinal w() { return Ordinal::omega(); }
Ordinal nat(std::uint64_t n) { return Ordinal::natural(n); }
Ordinal wPow(std::uint64_t e, std::uint64_t c = 1) { return Ordinal::omegaPow(nat(e), c); }

}  // namespace

TEST_CASE("compare examples") {
  CHECK(compare(Ordinal{}, Ordinal{}) == std::strong_ordering::equal);
  CHECK(compare(w(), nat(3)) == std::strong_ordering::greater);
  CHECK(compare(wPow(2) + nat(1), wPow(2) + w()) == std::strong_ordering::less);
}

TEST_CASE("compare agrees with tuple order below omega^3") {
  // omega^2*a + omega*b + c orders like (a, b, c).
  std::vector<std::pair<std::array<int, 3>, Ordinal>> all;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        Ordinal x;
        if (a) x = x + wPow(2, a);
        if (b) x = x + wPow(1, b);
        if (c) x = x + nat(c);
        all.push_back({{a, b, c}, x});
      }
  for (const auto& [ta, x] : all)
    for (const auto& [tb, y] : all) CHECK(compare(x, y) == (ta <=> tb));
}

TEST_CASE("add examples") {
  CHECK(add(w(), nat(1)).toString() == "w+1");
  CHECK(add(nat(1), w()) == w());
  CHECK(add(wPow(1, 2) + nat(3), wPow(2)) == wPow(2));
  CHECK(add(wPow(2) + w(), w() + nat(2)) == wPow(2) + wPow(1, 2) + nat(2));
  CHECK(add(nat(2), nat(3)) == nat(5));
}

TEST_CASE("decompose and isLimit examples") {
  auto d = decompose(nat(5));
  CHECK(d.limitPart.isZero());
  CHECK(d.finite == 5);
  d = decompose(w() + nat(3));
  CHECK(d.limitPart == w());
  CHECK(d.finite == 3);
  d = decompose(wPow(2) + w());
  CHECK(d.limitPart == wPow(2) + w());
  CHECK(d.finite == 0);
  CHECK_FALSE(isLimit(Ordinal{}));
  CHECK(isLimit(w()));
  CHECK_FALSE(isLimit(wPow(2) + nat(1)));
}

TEST_CASE("zeta examples") {
  for (std::uint64_t i = 1; i <= 6; ++i) {
    CHECK(zeta(w(), i).isZero());
    CHECK(zeta(wPow(1, 2), i) == w());
  }
  CHECK(zeta(wPow(2), 4) == wPow(1, 4));
  // omega^3*2: keep omega^3, then omega^2 * i.
  CHECK(zeta(wPow(3, 2), 2) == wPow(3) + wPow(2, 2));
  // omega^omega: exponent indexed by its own sequence, zeta(w, 3) + 3 = 3.
  CHECK(zeta(Ordinal::omegaPow(w()), 3) == wPow(3));
  CHECK_THROWS_AS(zeta(w() + nat(1), 1), InvalidArgument);
  CHECK_THROWS_AS(zeta(w(), 0), InvalidArgument);
}

TEST_CASE("parse and print") {
  CHECK(Ordinal::parse("w^2*3+w+1") == wPow(2, 3) + w() + nat(1));
  CHECK(Ordinal::parse("w^2*3+w+1").toString() == "w^2*3+w+1");
  CHECK(Ordinal::parse("w^(w+1)").toString() == "w^(w+1)");
  CHECK(Ordinal::parse("0").isZero());
  CHECK(Ordinal::parse("7") == nat(7));
  CHECK(Ordinal::parse("w^w") == Ordinal::omegaPow(w()));
  CHECK(Ordinal::parse("w+w") == wPow(1, 2));
  CHECK_THROWS_AS(Ordinal::parse("w^"), InvalidArgument);
  CHECK_THROWS_AS(Ordinal::parse("x"), InvalidArgument);
}

TEST_CASE("fromTerms rejects non-canonical input") {
  CHECK_THROWS_AS(Ordinal::fromTerms({{nat(1), 1}, {nat(2), 1}}), InvalidArgument);
  CHECK_THROWS_AS(Ordinal::fromTerms({{nat(1), 0}}), InvalidArgument);
  CHECK_THROWS_AS(Ordinal::fromTerms({{nat(1), 1}, {nat(1), 1}}), InvalidArgument);
}

TEST_CASE("order and addition laws on random ordinals below omega^omega") {
  testgen::Rng rng(11);
  for (int t = 0; t < 2000; ++t) {
    const Ordinal a = testgen::ordinalBelowOmegaOmega(rng);
    const Ordinal b = testgen::ordinalBelowOmegaOmega(rng);
    const Ordinal c = testgen::ordinalBelowOmegaOmega(rng);
    CHECK((compare(a, b) == 0) == (a == b));
    CHECK((compare(a, b) < 0) == (compare(b, a) > 0));
    if (a <= b && b <= c) CHECK(a <= c);
    if (a <= b && b <= a) CHECK(a == b);
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(add(a, Ordinal{}) == a);
    CHECK(add(Ordinal{}, a) == a);
    CHECK(add(a, b) >= b);
    if (!b.isZero()) CHECK(add(a, b) > a);
    const auto d = decompose(a);
    CHECK((d.limitPart.isZero() || isLimit(d.limitPart)));
    CHECK(add(d.limitPart, nat(d.finite)) == a);
  }
}

TEST_CASE("fundamental sequences increase to alpha") {
  testgen::Rng rng(12);
  int limits = 0;
  for (int t = 0; t < 400; ++t) {
    const Ordinal alpha = testgen::ordinalBelowOmegaOmega(rng);
    if (!isLimit(alpha)) continue;
    ++limits;
    for (std::uint64_t i = 1; i < 20; ++i) {
      const Ordinal z = zeta(alpha, i);
      CHECK((z.isZero() || isLimit(z)));
      CHECK(add(z, nat(i)) < add(zeta(alpha, i + 1), nat(i + 1)));
      CHECK(add(z, nat(i)) < alpha);
      CHECK(z <= zeta(alpha, i + 1));
    }
  }
  CHECK(limits > 50);
}
