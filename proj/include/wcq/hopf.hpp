#pragma once

#include <utility>

#include "wcq/composition.hpp"
#include "wcq/lincomb.hpp"
#include "wcq/quasi_shuffle.hpp"

namespace wcq {

// Basis tag for elements of the quasi-symmetric algebra; the underlying
// LinComb carries no tag, so conversions are explicit (fToM / mToF).
enum class WBasis { M, F };

struct WQSymElem {
  WBasis basis = WBasis::M;
  MComb value;
};

using CompPair = std::pair<Composition, Composition>;
struct CompPairLess {
  bool operator()(const CompPair& a, const CompPair& b) const {
    int c = compareComposition(a.first, b.first);
    if (c != 0) return c < 0;
    return compareComposition(a.second, b.second) < 0;
  }
};
using TensorComb = LinComb<CompPair, CompPairLess>;

// Product on the monomial basis: M_a M_b = M_{a*b} (quasi-shuffle at weight 1).
MComb productM(const MComb& u, const MComb& v);

// Deconcatenation coproduct and its counit.
TensorComb coproduct(const MComb& u);
mpz_class counit(const MComb& u);

// Antipode: S(M_a) = (-1)^{l(a)} sum over coarsenings of the reversal,
// with multiplicities taken over all block-size compositions J.
MComb antipode(const MComb& u);

// Coefficient of M_b in S(M_a), by the closed-form product of binomials.
// Independent of antipode(); the two are cross-validated in the tests.
mpz_class antipodeCoefficient(const Composition& a, const Composition& b);

// Coefficient of M_b in the monomial expansion of F_a; zero unless b
// precedes a in the refinement order.
mpz_class cCoefficient(const Composition& a, const Composition& b);

// Basis changes: keys of u are read in the source basis and expanded in the
// target one. Mutually inverse.
MComb fToM(const MComb& u);
MComb mToF(const MComb& u);

}  // namespace wcq
