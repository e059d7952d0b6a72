#pragma once

#include <gmpxx.h>

#include <map>
#include <type_traits>
#include <utility>
#include <vector>

namespace wcq {

// Finite formal sum of basis keys with exact integer coefficients.
// Canonical form: zero coefficients are never stored.
template <class K, class Less = std::less<K>>
struct LinComb {
  using Map = std::map<K, mpz_class, Less>;
  Map terms;

  LinComb() = default;

  static LinComb single(K k, mpz_class c = 1) {
    LinComb r;
    if (c != 0) r.terms.emplace(std::move(k), std::move(c));
    return r;
  }

  bool isZero() const { return terms.empty(); }

  mpz_class coeffOf(const K& k) const {
    auto it = terms.find(k);
    return it == terms.end() ? mpz_class(0) : it->second;
  }

  void addTerm(const K& k, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms) addTerm(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms) addTerm(k, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

  LinComb operator-() const {
    LinComb r = *this;
    for (auto& [k, c] : r.terms) mpz_neg(c.get_mpz_t(), c.get_mpz_t());
    return r;
  }

  LinComb& scale(const mpz_class& c) {
    if (c == 0) {
      terms.clear();
    } else {
      for (auto& [k, v] : terms) v *= c;
    }
    return *this;
  }
  friend LinComb operator*(const mpz_class& c, LinComb v) { return v.scale(c); }

  bool operator==(const LinComb& o) const { return terms == o.terms; }
};

// Extends f: (key, key) -> LinComb to pairs of sums, distributing the
// coefficient products over both supports.
template <class A, class B, class F>
auto bilinearExtend(const A& u, const B& v, F&& f) {
  using R = std::decay_t<decltype(f(u.terms.begin()->first, v.terms.begin()->first))>;
  R out;
  for (const auto& [ka, ca] : u.terms)
    for (const auto& [kb, cb] : v.terms) {
      R w = f(ka, kb);
      mpz_class c = ca * cb;
      for (const auto& [k, x] : w.terms) out.addTerm(k, c * x);
    }
  return out;
}

// Rank of an integer matrix by fraction-free (Bareiss) elimination; consumed.
size_t integerMatrixRank(std::vector<std::vector<mpz_class>> m);

// Nullity of a rational matrix: columns minus exact rank.
size_t exactKernelDim(const std::vector<std::vector<mpq_class>>& rows);

}  // namespace wcq
