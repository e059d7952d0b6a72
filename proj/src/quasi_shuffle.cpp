#include "wcq/quasi_shuffle.hpp"

namespace wcq {

MComb qshuffle(const Composition& a, const Composition& b, const mpz_class& lambda) {
  auto seq = qshuffleSeq<NTildeMonoid>(a.entries, b.entries, lambda);
  MComb out;
  for (auto& [k, c] : seq.terms) {
    Composition comp;
    comp.entries = k;
    out.addTerm(comp, c);
  }
  return out;
}

}  // namespace wcq
