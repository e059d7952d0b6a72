#include "wcq/projection.hpp"

#include <map>

#include "wcq/lincomb.hpp"

namespace wcq {

MComb phi(const MComb& u) {
  MComb out;
  for (const auto& [a, c] : u.terms) {
    if (a.length() > 0 && a.entries[0].isEps()) continue;
    mpz_class s = (a.epsCount() % 2) ? mpz_class(-c) : c;
    out.addTerm(a.bar(), s);
  }
  return out;
}

std::vector<MComb> kernelBasis(size_t maxLen, unsigned long maxEntry) {
  std::vector<MComb> out;
  for (const auto& a : enumerateCompositions(maxLen, maxEntry)) {
    if (a.length() == 0) continue;
    if (a.entries[0].isEps()) {
      out.push_back(MComb::single(a));
    } else if (a.epsCount() > 0) {
      MComb v = MComb::single(a);
      v.addTerm(a.bar(), (a.epsCount() % 2) ? 1 : -1);
      out.push_back(std::move(v));
    }
  }
  return out;
}

KernelReport verifyKernelTruncation(size_t maxLen, unsigned long maxEntry) {
  KernelReport rep;
  auto all = enumerateCompositions(maxLen, maxEntry);
  rep.spanDim = all.size();
  std::map<Composition, size_t, CompositionLess> col;
  for (const auto& a : all)
    if (a.epsFree()) col.emplace(a, col.size());
  std::vector<std::vector<mpz_class>> m;
  m.reserve(all.size());
  for (const auto& a : all) {
    std::vector<mpz_class> row(col.size(), 0);
    for (const auto& [b, c] : phi(MComb::single(a)).terms) row[col.at(b)] = c;
    m.push_back(std::move(row));
  }
  rep.rank = integerMatrixRank(std::move(m));
  rep.kernelDim = rep.spanDim - rep.rank;
  auto basis = kernelBasis(maxLen, maxEntry);
  rep.basisCount = basis.size();
  rep.allAnnihilated = true;
  for (const auto& v : basis)
    if (!phi(v).isZero()) rep.allAnnihilated = false;
  return rep;
}

}  // namespace wcq
