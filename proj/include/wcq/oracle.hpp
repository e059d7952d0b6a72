#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wcq/composition.hpp"
#include "wcq/lincomb.hpp"

namespace wcq {

// Truncated power series in n variables with N~ exponents and integer
// coefficients: the ground-truth model everything else is checked against.
// Keys are full exponent vectors of length n (Zero = variable absent).
struct VecNTLess {
  bool operator()(const std::vector<NTildeExp>& a, const std::vector<NTildeExp>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      int c = ntCompare(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

struct TruncSeries {
  size_t nvars = 0;
  std::map<std::vector<NTildeExp>, mpz_class, VecNTLess> terms;

  void addTerm(const std::vector<NTildeExp>& key, const mpz_class& c);
  bool operator==(const TruncSeries& o) const { return nvars == o.nvars && terms == o.terms; }
};

TruncSeries mulSeries(const TruncSeries& u, const TruncSeries& v);

// M_a over x_1..x_n: entries placed on strictly increasing variable indices.
TruncSeries expandM(const Composition& a, size_t n);

// F_a over x_1..x_n: weakly increasing index strings with strict steps at the
// positions of setAlphaWC(a); eps slots and unit slots merge by ntAdd on a
// repeated index.
TruncSeries expandF(const Composition& a, size_t n);

// Coefficients depend only on the sequence of nonzero exponents read left to
// right, not on which increasing index tuple carries them.
bool isQuasiSymmetric(const TruncSeries& s);

// expandM(a,n) * expandM(b,n) against the expansion of the abstract product.
bool oracleProductCheck(const Composition& a, const Composition& b, size_t n);

// exp(-sum_k (-t)^k p_k / k) = sum_n e_n t^n over m variables, mod t^(K+1),
// in exact rational arithmetic.
bool waringCheck(unsigned m, unsigned K);

}  // namespace wcq
