#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "tcommon.hpp"
#include "wcq/quasi_shuffle.hpp"

using namespace wcq;

namespace {

MComb mulAt(const MComb& u, const MComb& v, const mpz_class& lam) {
  return bilinearExtend(
      u, v, [&lam](const Composition& a, const Composition& b) { return qshuffle(a, b, lam); });
}

Composition randomComp(std::mt19937_64& rng, size_t maxLen, long maxEntry) {
  std::uniform_int_distribution<size_t> dl(0, maxLen);
  std::uniform_int_distribution<long> de(0, maxEntry);  // 0 plays eps
  Composition c;
  size_t len = dl(rng);
  for (size_t i = 0; i < len; ++i) {
    long e = de(rng);
    c.entries.push_back(e == 0 ? NTildeExp::eps() : NTildeExp::pos(e));
  }
  return c;
}

}  // namespace

TEST_CASE("small products") {
  CHECK(qshuffle(cc({1}), cc({2})) ==
        MComb::single(cc({1, 2})) + MComb::single(cc({2, 1})) + MComb::single(cc({3})));
  CHECK(qshuffle(cc({0}), cc({0})) == 2 * MComb::single(cc({0, 0})) + MComb::single(cc({0})));
  CHECK(qshuffle(cc({}), cc({0, 2})) == MComb::single(cc({0, 2})));
  CHECK(qshuffle(cc({0, 2}), cc({})) == MComb::single(cc({0, 2})));
  CHECK(qshuffle(cc({}), cc({})) == MComb::single(cc({})));
}

TEST_CASE("eps merges into values") {
  CHECK(qshuffle(cc({0}), cc({2})) ==
        MComb::single(cc({0, 2})) + MComb::single(cc({2, 0})) + MComb::single(cc({2})));
}

TEST_CASE("weight scales the merge branch") {
  MComb r = qshuffle(cc({1}), cc({2}), 5);
  CHECK(r.coeffOf(cc({1, 2})) == 1);
  CHECK(r.coeffOf(cc({2, 1})) == 1);
  CHECK(r.coeffOf(cc({3})) == 5);
  MComb s = qshuffle(cc({1}), cc({2}), 0);
  CHECK(s.coeffOf(cc({3})) == 0);
  CHECK(s.terms.size() == 2);
}

TEST_CASE("weight zero gives the plain shuffle count") {
  Composition a = cc({1, 2, 1}), b = cc({3, 4});
  MComb r = qshuffle(a, b, 0);
  mpz_class total = 0;
  for (const auto& [k, c] : r.terms) {
    CHECK(k.length() == 5);
    total += c;
  }
  CHECK(total == binom(5, 2));
}

TEST_CASE("terms are graded by the combined weight") {
  auto g = enumerateCompositions(2, 2);
  for (const auto& a : g)
    for (const auto& b : g) {
      NTildeExp w = ntAdd(a.weight(), b.weight());
      for (const auto& [k, c] : qshuffle(a, b).terms) {
        CHECK(k.weight() == w);
        CHECK(k.length() <= a.length() + b.length());
        CHECK(k.length() >= std::max(a.length(), b.length()));
      }
    }
}

TEST_CASE("commutativity, exhaustive small grids") {
  auto g1 = enumerateCompositions(3, 2);
  for (const auto& a : g1)
    for (const auto& b : g1) CHECK(qshuffle(a, b) == qshuffle(b, a));
  auto g2 = enumerateCompositions(4, 1);
  for (const auto& a : g2)
    for (const auto& b : g2) CHECK(qshuffle(a, b) == qshuffle(b, a));
}

TEST_CASE("commutativity, seeded random long inputs") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    Composition a = randomComp(rng, 4, 2), b = randomComp(rng, 4, 2);
    CHECK(qshuffle(a, b, 2) == qshuffle(b, a, 2));
  }
}

TEST_CASE("associativity, exhaustive small grids") {
  for (long lam : {1L, 3L}) {
    auto g = enumerateCompositions(2, 2);
    for (const auto& a : g)
      for (const auto& b : g)
        for (const auto& c : g) {
          MComb sc = MComb::single(c), sa = MComb::single(a);
          CHECK(mulAt(qshuffle(a, b, lam), sc, lam) == mulAt(sa, qshuffle(b, c, lam), lam));
        }
  }
  auto g = enumerateCompositions(3, 1);
  for (const auto& a : g)
    for (const auto& b : g)
      for (const auto& c : g) {
        MComb sc = MComb::single(c), sa = MComb::single(a);
        CHECK(mulAt(qshuffle(a, b, 1), sc, 1) == mulAt(sa, qshuffle(b, c, 1), 1));
      }
}

TEST_CASE("associativity, seeded random") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    Composition a = randomComp(rng, 3, 2), b = randomComp(rng, 3, 2), c = randomComp(rng, 3, 2);
    CHECK(mulAt(qshuffle(a, b, 1), MComb::single(c), 1) ==
          mulAt(MComb::single(a), qshuffle(b, c, 1), 1));
  }
}

TEST_CASE("empty composition is the unit") {
  MComb one = MComb::single(cc({}));
  for (const auto& a : enumerateCompositions(3, 2)) {
    CHECK(mulAt(MComb::single(a), one, 1) == MComb::single(a));
    CHECK(mulAt(one, MComb::single(a), 1) == MComb::single(a));
  }
}

TEST_CASE("natural-number instantiation shuffles tails") {
  // same recursion over plain integers, exercised directly
  std::vector<mpz_class> a = {1}, b = {1};
  auto r = qshuffleSeq<NatMonoid>(a, b, 1);
  CHECK(r.coeffOf({1, 1}) == 2);
  CHECK(r.coeffOf({2}) == 1);
  auto s = qshuffleSeq<NatMonoid>({0}, {0}, 1);
  CHECK(s.coeffOf({0, 0}) == 2);
  CHECK(s.coeffOf({0}) == 1);  // 0+0 = 0 here, unlike eps exponents
}
