#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "wcq/ntilde.hpp"

namespace wcq {

using WeakComposition = std::vector<mpz_class>;  // nonnegative entries

// A composition over N~: a finite list of nonzero entries (positive or eps).
// The empty composition indexes the unit of every algebra built on top.
struct Composition {
  std::vector<NTildeExp> entries;

  Composition() = default;
  explicit Composition(std::vector<NTildeExp> es);  // rejects Zero entries

  size_t length() const { return entries.size(); }
  NTildeExp weight() const;
  size_t epsCount() const;
  bool epsFree() const;
  Composition reversed() const;
  Composition concat(const Composition& o) const;
  Composition bar() const;  // drops the eps entries

  bool operator==(const Composition& o) const { return entries == o.entries; }
  std::string toString() const;  // "(e,1,2)"; "()" for the empty composition
};

// Canonical term order: length first, then entrywise 0 < e < 1 < 2 < ...
int compareComposition(const Composition& a, const Composition& b);
struct CompositionLess {
  bool operator()(const Composition& a, const Composition& b) const {
    return compareComposition(a, b) < 0;
  }
};
// Plain lexicographic order (prefix first), used for human-readable output.
int compareCompositionLex(const Composition& a, const Composition& b);

WeakComposition thetaSeq(const Composition& a);
Composition thetaSeqInv(const WeakComposition& w);

// alpha = (eps^i1, s1, eps^i2, s2, ..., sk, eps^i(k+1)) with single positive entries s_j.
struct EpsEntryDecomposition {
  std::vector<size_t> runs;          // i1..i(k+1), always k+1 of them
  std::vector<mpz_class> positives;  // s1..sk
};
EpsEntryDecomposition epsEntryDecomposition(const Composition& a);

// Maximal form: blocks are the maximal runs of positive entries, so every
// interior run has length >= 1.
struct EpsBlockDecomposition {
  std::vector<size_t> runs;
  std::vector<Composition> blocks;  // eps-free and nonempty
};
EpsBlockDecomposition epsBlockDecomposition(const Composition& a);

std::set<mpz_class> descentSet(const Composition& a);       // eps-free input only
bool refinesN(const Composition& a, const Composition& b);  // set(b) subset of set(a)
Composition coarsen(const std::vector<size_t>& J, const Composition& a);
std::set<mpz_class> setAlphaWC(const Composition& a);
bool precedesWC(const Composition& a, const Composition& b);

// All compositions with length <= maxLen and positive entries <= maxEntry,
// in canonical order. eps is always part of the alphabet.
std::vector<Composition> enumerateCompositions(size_t maxLen, unsigned long maxEntry);

// All integer compositions of n, as part lists; 2^(n-1) of them for n >= 1.
std::vector<std::vector<size_t>> compositionsOf(size_t n);

// a aligned against b's maximal block decomposition; exists iff a precedes b
// except for the run-length and blockwise-refinement conditions, which the
// caller checks. runsA/blocksA are a's matched decomposition.
struct WCAlignment {
  std::vector<size_t> runsA;
  std::vector<Composition> blocksA;
  EpsBlockDecomposition maxB;
};
bool alignWC(const Composition& a, const Composition& b, WCAlignment& out);

mpz_class binom(unsigned long n, unsigned long k);

}  // namespace wcq
