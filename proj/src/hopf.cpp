#include "wcq/hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcq {

MComb productM(const MComb& u, const MComb& v) {
  return bilinearExtend(
      u, v, [](const Composition& a, const Composition& b) { return qshuffle(a, b, 1); });
}

TensorComb coproduct(const MComb& u) {
  TensorComb out;
  for (const auto& [a, c] : u.terms) {
    for (size_t i = 0; i <= a.length(); ++i) {
      Composition pre, suf;
      pre.entries.assign(a.entries.begin(), a.entries.begin() + i);
      suf.entries.assign(a.entries.begin() + i, a.entries.end());
      out.addTerm({std::move(pre), std::move(suf)}, c);
    }
  }
  return out;
}

mpz_class counit(const MComb& u) {
  return u.coeffOf(Composition{});
}

MComb antipode(const MComb& u) {
  MComb out;
  for (const auto& [a, c] : u.terms) {
    Composition r = a.reversed();
    mpz_class s = (a.length() % 2) ? mpz_class(-c) : c;
    for (const auto& J : compositionsOf(a.length())) out.addTerm(coarsen(J, r), s);
  }
  return out;
}

mpz_class antipodeCoefficient(const Composition& a, const Composition& b) {
  auto da = epsEntryDecomposition(a);
  auto db = epsEntryDecomposition(b);
  size_t k = da.positives.size(), p = db.positives.size();
  mpz_class sign = (a.length() % 2) ? -1 : 1;
  if (k == 0) {
    // a is a pure eps power; its antipode lives on pure eps powers
    size_t n = da.runs[0];
    if (n == 0) return b.length() == 0 ? mpz_class(1) : mpz_class(0);
    if (p != 0 || db.runs[0] == 0) return 0;
    return sign * binom(n - 1, db.runs[0] - 1);
  }
  if (p == 0) return 0;
  // the block sizes L are forced: consume the reversed positives of a so that
  // consecutive groups sum to b's positives exactly
  std::vector<size_t> L;
  size_t used = 0;
  for (size_t t = 0; t < p; ++t) {
    mpz_class sum = 0;
    size_t l = 0;
    while (sum < db.positives[t]) {
      if (used >= k) return 0;
      sum += da.positives[k - 1 - used];
      ++used;
      ++l;
    }
    if (sum != db.positives[t]) return 0;
    L.push_back(l);
  }
  if (used != k) return 0;
  // b's leading run draws on a's trailing run, interior runs on the runs at
  // the reversed block boundaries, and b's trailing run on a's leading run
  mpz_class coeff = sign * binom(da.runs[k], db.runs[0]);
  size_t prefix = L[0];
  for (size_t t = 1; t < p; ++t) {
    coeff *= binom(da.runs[k - prefix] + 1, db.runs[t] + 1);
    prefix += L[t];
  }
  coeff *= binom(da.runs[0], db.runs[p]);
  return coeff;
}

mpz_class cCoefficient(const Composition& a, const Composition& b) {
  WCAlignment al;
  if (!alignWC(b, a, al)) return 0;
  size_t k = al.maxB.blocks.size();
  for (size_t l = 0; l < k; ++l)
    if (!refinesN(al.blocksA[l], al.maxB.blocks[l])) return 0;
  mpz_class c = 1;
  for (size_t l = 0; l < k; ++l) c *= binom(al.maxB.runs[l], al.runsA[l]);
  size_t i = al.maxB.runs[k], j = al.runsA[k];
  if (i == 0 && j == 0) return c;  // empty trailing runs contribute a bare 1
  if (i >= 1 && j >= 1) return c * binom(i - 1, j - 1);
  return 0;
}

namespace {

// All refinements of an eps-free composition, by inserting extra descents.
std::vector<Composition> refinementsOf(const Composition& a) {
  mpz_class wz = 0;
  for (const auto& e : a.entries) wz += e.val;
  if (!wz.fits_ulong_p()) throw std::overflow_error("basis-change expansion too large");
  unsigned long m = wz.get_ui();
  std::vector<unsigned long> base;
  {
    mpz_class s = 0;
    for (size_t i = 0; i + 1 < a.length(); ++i) {
      s += a.entries[i].val;
      base.push_back(s.get_ui());
    }
  }
  std::vector<unsigned long> extra;
  {
    size_t bi = 0;
    for (unsigned long pos = 1; pos < m; ++pos) {
      if (bi < base.size() && base[bi] == pos) {
        ++bi;
        continue;
      }
      extra.push_back(pos);
    }
  }
  if (extra.size() >= 63) throw std::overflow_error("basis-change expansion too large");
  std::vector<Composition> out;
  out.reserve(size_t(1) << extra.size());
  for (unsigned long long mask = 0; mask < (1ull << extra.size()); ++mask) {
    std::vector<unsigned long> cuts = base;
    for (size_t t = 0; t < extra.size(); ++t)
      if (mask & (1ull << t)) cuts.push_back(extra[t]);
    std::sort(cuts.begin(), cuts.end());
    Composition c;
    unsigned long prev = 0;
    for (unsigned long cut : cuts) {
      c.entries.push_back(NTildeExp::pos(cut - prev));
      prev = cut;
    }
    c.entries.push_back(NTildeExp::pos(m - prev));
    out.push_back(std::move(c));
  }
  return out;
}

// Shared generator behind fToM and mToF: walks every beta preceding a,
// together with its binomial coefficient, in one pass over a's maximal
// decomposition (runs shrink freely, blocks refine freely, the trailing run
// stays empty or nonempty as in a).
void expandBasisKey(const Composition& a, bool alternate, const mpz_class& scale, MComb& out) {
  auto d = epsBlockDecomposition(a);
  size_t k = d.blocks.size();
  std::vector<std::vector<Composition>> refs(k);
  for (size_t l = 0; l < k; ++l) refs[l] = refinementsOf(d.blocks[l]);
  std::vector<NTildeExp> acc;
  auto emit = [&](const mpz_class& coeff) {
    Composition beta;
    beta.entries = acc;
    mpz_class c = coeff * scale;
    if (alternate && (beta.length() + a.length()) % 2) c = -c;
    out.addTerm(beta, c);
  };
  auto rec = [&](auto&& self, size_t l, const mpz_class& coeff) -> void {
    if (l == k) {
      size_t i = d.runs[k];
      if (i == 0) {
        emit(coeff);
        return;
      }
      for (size_t j = 1; j <= i; ++j) {
        size_t before = acc.size();
        acc.insert(acc.end(), j, NTildeExp::eps());
        emit(coeff * binom(i - 1, j - 1));
        acc.resize(before);
      }
      return;
    }
    size_t i = d.runs[l];
    for (size_t j = 0; j <= i; ++j) {
      mpz_class cj = coeff * binom(i, j);
      size_t before = acc.size();
      acc.insert(acc.end(), j, NTildeExp::eps());
      for (const auto& B : refs[l]) {
        size_t mid = acc.size();
        acc.insert(acc.end(), B.entries.begin(), B.entries.end());
        self(self, l + 1, cj);
        acc.resize(mid);
      }
      acc.resize(before);
    }
  };
  rec(rec, 0, 1);
}

}  // namespace

MComb fToM(const MComb& u) {
  MComb out;
  for (const auto& [a, c] : u.terms) expandBasisKey(a, false, c, out);
  return out;
}

MComb mToF(const MComb& u) {
  MComb out;
  for (const auto& [a, c] : u.terms) expandBasisKey(a, true, c, out);
  return out;
}

}  // namespace wcq
