#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "wcq/composition.hpp"
#include "wcq/lincomb.hpp"

namespace wcq {

template <ExponentMonoid M>
struct SeqLess {
  using E = typename M::Elem;
  bool operator()(const std::vector<E>& a, const std::vector<E>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      int c = M::compare(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

template <ExponentMonoid M>
using SeqComb = LinComb<std::vector<typename M::Elem>, SeqLess<M>>;

// Weight-lambda quasi-shuffle over any exponent monoid:
//   (a,A) * (b,B) = (a, A*(b,B)) + (b, (a,A)*B) + lambda (a+b, A*B)
// with the empty sequence as unit. Memoized on suffix index pairs.
template <ExponentMonoid M>
SeqComb<M> qshuffleSeq(const std::vector<typename M::Elem>& a,
                       const std::vector<typename M::Elem>& b, const mpz_class& lambda) {
  using E = typename M::Elem;
  using LC = SeqComb<M>;
  std::map<std::pair<size_t, size_t>, LC> memo;
  auto prepend = [](const E& h, const LC& t, const mpz_class& s, LC& out) {
    for (const auto& [k, c] : t.terms) {
      std::vector<E> nk;
      nk.reserve(k.size() + 1);
      nk.push_back(h);
      nk.insert(nk.end(), k.begin(), k.end());
      out.addTerm(nk, c * s);
    }
  };
  auto rec = [&](auto&& self, size_t i, size_t j) -> const LC& {
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    LC r;
    if (i == a.size()) {
      r.addTerm(std::vector<E>(b.begin() + j, b.end()), 1);
    } else if (j == b.size()) {
      r.addTerm(std::vector<E>(a.begin() + i, a.end()), 1);
    } else {
      prepend(a[i], self(self, i + 1, j), 1, r);
      prepend(b[j], self(self, i, j + 1), 1, r);
      if (lambda != 0) prepend(M::add(a[i], b[j]), self(self, i + 1, j + 1), lambda, r);
    }
    return memo.emplace(std::make_pair(i, j), std::move(r)).first->second;
  };
  return rec(rec, 0, 0);
}

using MComb = LinComb<Composition, CompositionLess>;

MComb qshuffle(const Composition& a, const Composition& b, const mpz_class& lambda = 1);

}  // namespace wcq
