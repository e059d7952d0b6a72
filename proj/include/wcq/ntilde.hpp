#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>

namespace wcq {

// An element of the exponent monoid N~ = N u {eps}, ordered 0 < eps < 1 < 2 < ...
// Addition: 0 is the identity, eps+eps = eps, eps+n = n for n >= 1.
enum class NTag { Zero, Eps, Pos };

struct NTildeExp {
  NTag tag = NTag::Zero;
  mpz_class val;  // >= 1 iff tag == Pos, else 0

  static NTildeExp zero() { return {}; }
  static NTildeExp eps() { return {NTag::Eps, 0}; }
  static NTildeExp pos(mpz_class n);

  bool isZero() const { return tag == NTag::Zero; }
  bool isEps() const { return tag == NTag::Eps; }
  bool isPos() const { return tag == NTag::Pos; }

  bool operator==(const NTildeExp& o) const { return tag == o.tag && val == o.val; }

  std::string toString() const;  // "0", "e", or the decimal value
};

NTildeExp ntAdd(const NTildeExp& a, const NTildeExp& b);
int ntCompare(const NTildeExp& a, const NTildeExp& b);

mpz_class theta(const NTildeExp& a);   // eps -> 0, n -> n; rejects Zero
NTildeExp thetaInv(const mpz_class& n);

struct NTLess {
  bool operator()(const NTildeExp& a, const NTildeExp& b) const { return ntCompare(a, b) < 0; }
};

template <class M>
concept ExponentMonoid = requires(const typename M::Elem& a, const typename M::Elem& b) {
  { M::zero() } -> std::same_as<typename M::Elem>;
  { M::add(a, b) } -> std::same_as<typename M::Elem>;
  { M::isZero(a) } -> std::same_as<bool>;
  { M::compare(a, b) } -> std::same_as<int>;
};

struct NTildeMonoid {
  using Elem = NTildeExp;
  static Elem zero() { return NTildeExp::zero(); }
  static Elem add(const Elem& a, const Elem& b) { return ntAdd(a, b); }
  static bool isZero(const Elem& a) { return a.isZero(); }
  static int compare(const Elem& a, const Elem& b) { return ntCompare(a, b); }
};

struct NatMonoid {
  using Elem = mpz_class;
  static Elem zero() { return 0; }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static bool isZero(const Elem& a) { return a == 0; }
  static int compare(const Elem& a, const Elem& b) { return cmp(a, b); }
};

static_assert(ExponentMonoid<NTildeMonoid>);
static_assert(ExponentMonoid<NatMonoid>);

}  // namespace wcq
