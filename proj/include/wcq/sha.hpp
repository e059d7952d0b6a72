#pragma once

#include <string>
#include <utility>

#include "wcq/composition.hpp"
#include "wcq/hopf.hpp"
#include "wcq/lincomb.hpp"

namespace wcq {

// Basis element x^head (x) x^t1 (x) ... (x) x^tk of the free commutative
// Rota-Baxter algebra of weight 1 on x. The head is the polynomial factor;
// tail entries may be 0, the head may be 0 with a nonempty tail.
struct PureTensor {
  mpz_class head;
  WeakComposition tail;

  PureTensor() : head(0) {}
  PureTensor(mpz_class h, WeakComposition t);  // validates nonnegativity

  bool isUnit() const { return head == 0 && tail.empty(); }
  bool operator==(const PureTensor& o) const { return head == o.head && tail == o.tail; }
  std::string toString() const;  // "1", "x^2", "x^0|1|1"
};

struct PureTensorLess {
  bool operator()(const PureTensor& a, const PureTensor& b) const;
};
using ShaComb = LinComb<PureTensor, PureTensorLess>;

using PTPair = std::pair<PureTensor, PureTensor>;
struct PTPairLess {
  bool operator()(const PTPair& a, const PTPair& b) const;
};
using ShaTensorComb = LinComb<PTPair, PTPairLess>;

ShaComb shaUnit();

// Augmented mixable shuffle: heads multiply, tails quasi-shuffle at weight
// lambda; an empty tail dissolves into the head factor.
ShaComb diamond(const ShaComb& u, const ShaComb& v, const mpz_class& lambda = 1);

// The Rota-Baxter operator: push the head down into the tail.
ShaComb rbOperator(const ShaComb& u);

// P(u)P(v) = P(u P(v)) + P(P(u) v) + lambda P(u v), all products at lambda.
bool rbIdentityCheck(const ShaComb& u, const ShaComb& v, const mpz_class& lambda = 1);

WeakComposition rho(const Composition& a);  // entrywise theta
ShaComb psi(const MComb& u);                // M_a -> head-0 tensor with tail theta(a)
PureTensor barRealize(const NTildeExp& a0, const Composition& a);

ShaTensorComb shaCoproduct(const ShaComb& u);
mpz_class shaCounit(const ShaComb& u);

// Closed-form antipode: sign (-1)^(head+k), head kept, tail replaced by the
// sum of ordinary-sum coarsenings of its reversal.
ShaComb shaAntipode(const ShaComb& u);

}  // namespace wcq
