#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>
#include <string>

#include "tcommon.hpp"
#include "wcq/hopf.hpp"

using namespace wcq;

namespace {

MComb M(const Composition& a) { return MComb::single(a); }

// componentwise product of tensors; every degree is even so no sign appears
TensorComb tensorMul(const TensorComb& u, const TensorComb& v) {
  return bilinearExtend(u, v, [](const CompPair& x, const CompPair& y) {
    TensorComb out;
    MComb l = productM(MComb::single(x.first), MComb::single(y.first));
    MComb r = productM(MComb::single(x.second), MComb::single(y.second));
    for (const auto& [kl, cl] : l.terms)
      for (const auto& [kr, cr] : r.terms) out.addTerm({kl, kr}, cl * cr);
    return out;
  });
}

// sum over splits of S(left) * right, and of left * S(right)
MComb convolveLeft(const Composition& a) {
  MComb out;
  for (const auto& [p, c] : coproduct(M(a)).terms)
    out += c * productM(antipode(M(p.first)), M(p.second));
  return out;
}

MComb convolveRight(const Composition& a) {
  MComb out;
  for (const auto& [p, c] : coproduct(M(a)).terms)
    out += c * productM(M(p.first), antipode(M(p.second)));
  return out;
}

}  // namespace

TEST_CASE("product goldens") {
  CHECK(productM(M(cc({1})), M(cc({2}))) == M(cc({1, 2})) + M(cc({2, 1})) + M(cc({3})));
  CHECK(productM(M(cc({0})), M(cc({0}))) == 2 * M(cc({0, 0})) + M(cc({0})));
  CHECK(productM(M(cc({})), M(cc({0, 2}))) == M(cc({0, 2})));
  CHECK(productM(2 * M(cc({1})), 3 * M(cc({}))) == 6 * M(cc({1})));
}

TEST_CASE("coproduct splits at every position") {
  TensorComb d = coproduct(M(cc({0, 2})));
  CHECK(d.terms.size() == 3);
  CHECK(d.coeffOf({cc({}), cc({0, 2})}) == 1);
  CHECK(d.coeffOf({cc({0}), cc({2})}) == 1);
  CHECK(d.coeffOf({cc({0, 2}), cc({})}) == 1);
  CHECK(coproduct(M(cc({}))).coeffOf({cc({}), cc({})}) == 1);
  CHECK(coproduct(M(cc({1, 1, 2}))).terms.size() == 4);
}

TEST_CASE("counit reads the empty-key coefficient") {
  MComb u = 3 * M(cc({})) + 5 * M(cc({2}));
  CHECK(counit(u) == 3);
  CHECK(counit(M(cc({0}))) == 0);
  CHECK(counit(MComb{}) == 0);
}

TEST_CASE("antipode goldens") {
  CHECK(antipode(M(cc({}))) == M(cc({})));
  CHECK(antipode(M(cc({2}))) == -M(cc({2})));
  CHECK(antipode(M(cc({0, 0}))) == M(cc({0})) + M(cc({0, 0})));
  MComb s = antipode(M(cc({0, 1, 0, 2})));
  CHECK(s.terms.size() == 6);
  CHECK(s.coeffOf(cc({2, 0, 1, 0})) == 1);
  CHECK(s.coeffOf(cc({2, 1, 0})) == 2);
  CHECK(s.coeffOf(cc({2, 0, 1})) == 1);
  CHECK(s.coeffOf(cc({3, 0})) == 1);
  CHECK(s.coeffOf(cc({2, 1})) == 2);
  CHECK(s.coeffOf(cc({3})) == 1);
}

TEST_CASE("antipode on eps powers") {
  for (size_t n = 1; n <= 6; ++n) {
    Composition a;
    a.entries.assign(n, NTildeExp::eps());
    MComb want;
    for (size_t i = 0; i < n; ++i) {
      Composition b;
      b.entries.assign(i + 1, NTildeExp::eps());
      want.addTerm(b, (n % 2 ? mpz_class(-1) : mpz_class(1)) * binom(n - 1, i));
    }
    CHECK(antipode(M(a)) == want);
  }
}

TEST_CASE("closed-form antipode coefficients, spot values") {
  Composition a = cc({0, 1, 0, 2});
  CHECK(antipodeCoefficient(a, cc({2, 0, 1, 0})) == 1);
  CHECK(antipodeCoefficient(a, cc({2, 1, 0})) == 2);
  CHECK(antipodeCoefficient(a, cc({3})) == 1);
  CHECK(antipodeCoefficient(a, cc({1, 2})) == 0);
  CHECK(antipodeCoefficient(cc({2}), cc({1, 1})) == 0);
  CHECK(antipodeCoefficient(cc({}), cc({})) == 1);
  CHECK(antipodeCoefficient(cc({}), cc({0})) == 0);
  CHECK(antipodeCoefficient(cc({0, 0, 0}), cc({0, 0})) == -2);
  CHECK(antipodeCoefficient(cc({0, 0}), cc({1})) == 0);
}

TEST_CASE("closed form matches the coarsening sum") {
  auto g = enumerateCompositions(3, 2);
  for (const auto& a : g) {
    MComb s = antipode(M(a));
    for (const auto& [b, c] : s.terms) CHECK(antipodeCoefficient(a, b) == c);
    for (const auto& b : g) CHECK(antipodeCoefficient(a, b) == s.coeffOf(b));
  }
}

TEST_CASE("expansion coefficients, spot values") {
  Composition a = cc({0, 2, 0, 0, 0});
  CHECK(cCoefficient(a, cc({0, 2, 0, 0})) == 2);
  CHECK(cCoefficient(a, a) == 1);
  CHECK(cCoefficient(a, cc({2, 0})) == 1);
  CHECK(cCoefficient(a, cc({0, 1, 1, 0})) == 1);
  CHECK(cCoefficient(a, cc({2})) == 0);
  CHECK(cCoefficient(a, cc({0, 3})) == 0);
  CHECK(cCoefficient(cc({2, 1}), cc({1, 1, 1})) == 1);
  CHECK(cCoefficient(cc({}), cc({})) == 1);
}

TEST_CASE("basis change goldens") {
  CHECK(fToM(M(cc({}))) == M(cc({})));
  CHECK(fToM(M(cc({2, 1}))) == M(cc({2, 1})) + M(cc({1, 1, 1})));
  MComb f = fToM(M(cc({0, 2, 0, 0, 0})));
  CHECK(f.terms.size() == 12);
  CHECK(f.coeffOf(cc({0, 1, 1, 0, 0})) == 2);
  CHECK(f.coeffOf(cc({2, 0, 0, 0})) == 1);
  CHECK(f.coeffOf(cc({0, 2, 0})) == 1);
  MComb m = mToF(M(cc({0, 2, 0, 0, 0})));
  CHECK(m.terms.size() == 12);
  CHECK(m.coeffOf(cc({2, 0})) == -1);
  CHECK(m.coeffOf(cc({0, 2, 0, 0})) == -2);
  CHECK(m.coeffOf(cc({0, 1, 1, 0, 0, 0})) == -1);
}

TEST_CASE("basis changes are mutually inverse") {
  for (const auto& a : enumerateCompositions(3, 2)) {
    CHECK(fToM(mToF(M(a))) == M(a));
    CHECK(mToF(fToM(M(a))) == M(a));
  }
  Composition big = cc({1, 0, 2, 0});
  CHECK(fToM(mToF(M(big))) == M(big));
  CHECK(mToF(fToM(M(big))) == M(big));
}

TEST_CASE("expansion support is exactly the refinement ideal") {
  auto ga = enumerateCompositions(2, 2);
  auto gb = enumerateCompositions(4, 2);
  for (const auto& a : ga) {
    MComb f = fToM(M(a));
    size_t inGrid = 0;
    for (const auto& b : gb) {
      mpz_class want = precedesWC(b, a) ? cCoefficient(a, b) : mpz_class(0);
      CHECK(f.coeffOf(b) == want);
      if (precedesWC(b, a)) {
        CHECK(want != 0);
        ++inGrid;
      }
    }
    CHECK(f.terms.size() == inGrid);  // no expansion term escapes the enumerated window
  }
}

TEST_CASE("coassociativity") {
  auto g = enumerateCompositions(3, 2);
  for (const auto& a : g) {
    std::map<std::array<std::string, 3>, mpz_class> lhs, rhs;
    for (const auto& [p, c] : coproduct(M(a)).terms) {
      for (const auto& [q, d] : coproduct(M(p.first)).terms)
        lhs[{q.first.toString(), q.second.toString(), p.second.toString()}] += c * d;
      for (const auto& [q, d] : coproduct(M(p.second)).terms)
        rhs[{p.first.toString(), q.first.toString(), q.second.toString()}] += c * d;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("counit laws") {
  auto g = enumerateCompositions(3, 2);
  for (const auto& a : g) {
    MComb left, right;
    for (const auto& [p, c] : coproduct(M(a)).terms) {
      if (p.first.length() == 0) left.addTerm(p.second, c);
      if (p.second.length() == 0) right.addTerm(p.first, c);
    }
    CHECK(left == M(a));
    CHECK(right == M(a));
  }
}

TEST_CASE("coproduct is an algebra map") {
  auto g = enumerateCompositions(2, 2);
  for (const auto& a : g)
    for (const auto& b : g)
      CHECK(coproduct(productM(M(a), M(b))) == tensorMul(coproduct(M(a)), coproduct(M(b))));
}

TEST_CASE("antipode convolution identities") {
  auto g = enumerateCompositions(3, 2);
  for (const auto& a : g) {
    MComb want = a.length() == 0 ? M(cc({})) : MComb{};
    CHECK(convolveLeft(a) == want);
    CHECK(convolveRight(a) == want);
  }
}

TEST_CASE("antipode is an involution here") {
  // commutative Hopf algebras have S^2 = id; a useful independent invariant
  for (const auto& a : enumerateCompositions(3, 2)) CHECK(antipode(antipode(M(a))) == M(a));
}
