#include "wcq/composition.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace wcq {

Composition::Composition(std::vector<NTildeExp> es) : entries(std::move(es)) {
  for (const auto& e : entries)
    if (e.isZero()) throw std::invalid_argument("composition entries must be nonzero");
}

NTildeExp Composition::weight() const {
  NTildeExp w = NTildeExp::zero();
  for (const auto& e : entries) w = ntAdd(w, e);
  return w;
}

size_t Composition::epsCount() const {
  size_t n = 0;
  for (const auto& e : entries) n += e.isEps();
  return n;
}

bool Composition::epsFree() const {
  return epsCount() == 0;
}

Composition Composition::reversed() const {
  Composition r;
  r.entries.assign(entries.rbegin(), entries.rend());
  return r;
}

Composition Composition::concat(const Composition& o) const {
  Composition r = *this;
  r.entries.insert(r.entries.end(), o.entries.begin(), o.entries.end());
  return r;
}

Composition Composition::bar() const {
  Composition r;
  for (const auto& e : entries)
    if (e.isPos()) r.entries.push_back(e);
  return r;
}

std::string Composition::toString() const {
  std::string s = "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ',';
    s += entries[i].toString();
  }
  return s + ")";
}

int compareComposition(const Composition& a, const Composition& b) {
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  for (size_t i = 0; i < a.length(); ++i) {
    int c = ntCompare(a.entries[i], b.entries[i]);
    if (c != 0) return c;
  }
  return 0;
}

int compareCompositionLex(const Composition& a, const Composition& b) {
  size_t n = std::min(a.length(), b.length());
  for (size_t i = 0; i < n; ++i) {
    int c = ntCompare(a.entries[i], b.entries[i]);
    if (c != 0) return c;
  }
  if (a.length() == b.length()) return 0;
  return a.length() < b.length() ? -1 : 1;
}

WeakComposition thetaSeq(const Composition& a) {
  WeakComposition w;
  w.reserve(a.length());
  for (const auto& e : a.entries) w.push_back(theta(e));
  return w;
}

Composition thetaSeqInv(const WeakComposition& w) {
  Composition a;
  a.entries.reserve(w.size());
  for (const auto& n : w) a.entries.push_back(thetaInv(n));
  return a;
}

EpsEntryDecomposition epsEntryDecomposition(const Composition& a) {
  EpsEntryDecomposition d;
  size_t run = 0;
  for (const auto& e : a.entries) {
    if (e.isEps()) {
      ++run;
    } else {
      d.runs.push_back(run);
      run = 0;
      d.positives.push_back(e.val);
    }
  }
  d.runs.push_back(run);
  return d;
}

EpsBlockDecomposition epsBlockDecomposition(const Composition& a) {
  EpsBlockDecomposition d;
  size_t run = 0, i = 0;
  const auto& e = a.entries;
  while (i < e.size()) {
    if (e[i].isEps()) {
      ++run;
      ++i;
    } else {
      d.runs.push_back(run);
      run = 0;
      Composition blk;
      while (i < e.size() && e[i].isPos()) blk.entries.push_back(e[i++]);
      d.blocks.push_back(std::move(blk));
    }
  }
  d.runs.push_back(run);
  return d;
}

std::set<mpz_class> descentSet(const Composition& a) {
  std::set<mpz_class> s;
  mpz_class sum = 0;
  for (size_t i = 0; i < a.length(); ++i) {
    if (!a.entries[i].isPos())
      throw std::invalid_argument("descent sets need positive entries throughout");
    if (i + 1 < a.length()) {
      sum += a.entries[i].val;
      s.insert(sum);
    }
  }
  return s;
}

bool refinesN(const Composition& a, const Composition& b) {
  mpz_class wa = 0, wb = 0;
  for (const auto& e : a.entries) {
    if (!e.isPos()) throw std::invalid_argument("refinesN needs positive entries throughout");
    wa += e.val;
  }
  for (const auto& e : b.entries) {
    if (!e.isPos()) throw std::invalid_argument("refinesN needs positive entries throughout");
    wb += e.val;
  }
  if (wa != wb) return false;
  auto sa = descentSet(a), sb = descentSet(b);
  return std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
}

Composition coarsen(const std::vector<size_t>& J, const Composition& a) {
  size_t total = 0;
  for (size_t j : J) {
    if (j == 0) throw std::invalid_argument("coarsening blocks must be nonempty");
    total += j;
  }
  if (total != a.length())
    throw std::invalid_argument("coarsening blocks must cover the composition");
  Composition r;
  size_t i = 0;
  for (size_t j : J) {
    NTildeExp s = a.entries[i++];
    for (size_t t = 1; t < j; ++t) s = ntAdd(s, a.entries[i++]);
    r.entries.push_back(s);
  }
  return r;
}

std::set<mpz_class> setAlphaWC(const Composition& a) {
  auto d = epsEntryDecomposition(a);
  std::set<mpz_class> s;
  mpz_class pos = 0;
  for (size_t j = 0; j < d.positives.size(); ++j) {
    pos += d.runs[j];       // eps entries occupy one slot each
    pos += d.positives[j];  // a positive entry s occupies s unit slots
    s.insert(pos);
  }
  return s;
}

bool alignWC(const Composition& a, const Composition& b, WCAlignment& out) {
  out.maxB = epsBlockDecomposition(b);
  out.runsA.clear();
  out.blocksA.clear();
  const auto& e = a.entries;
  size_t pos = 0, run = 0;
  while (pos < e.size() && e[pos].isEps()) ++run, ++pos;
  out.runsA.push_back(run);
  for (const auto& blockB : out.maxB.blocks) {
    mpz_class target = 0;
    for (const auto& x : blockB.entries) target += x.val;
    Composition blk;
    mpz_class w = 0;
    while (w < target) {
      if (pos >= e.size() || !e[pos].isPos()) return false;
      w += e[pos].val;
      blk.entries.push_back(e[pos++]);
    }
    if (w != target) return false;
    out.blocksA.push_back(std::move(blk));
    run = 0;
    while (pos < e.size() && e[pos].isEps()) ++run, ++pos;
    out.runsA.push_back(run);
  }
  return pos == e.size();
}

bool precedesWC(const Composition& a, const Composition& b) {
  WCAlignment al;
  if (!alignWC(a, b, al)) return false;
  size_t k = al.maxB.blocks.size();
  for (size_t l = 0; l <= k; ++l)
    if (al.runsA[l] > al.maxB.runs[l]) return false;
  for (size_t l = 0; l < k; ++l)
    if (!refinesN(al.blocksA[l], al.maxB.blocks[l])) return false;
  // trailing eps runs must both vanish or both be present
  return (al.runsA[k] == 0) == (al.maxB.runs[k] == 0);
}

std::vector<Composition> enumerateCompositions(size_t maxLen, unsigned long maxEntry) {
  std::vector<NTildeExp> alphabet;
  alphabet.push_back(NTildeExp::eps());
  for (unsigned long v = 1; v <= maxEntry; ++v) alphabet.push_back(NTildeExp::pos(v));
  std::vector<Composition> out;
  out.emplace_back();
  for (size_t len = 1; len <= maxLen; ++len) {
    std::vector<size_t> idx(len, 0);
    for (;;) {
      Composition c;
      c.entries.reserve(len);
      for (size_t i : idx) c.entries.push_back(alphabet[i]);
      out.push_back(std::move(c));
      size_t p = len;
      while (p > 0 && idx[p - 1] + 1 == alphabet.size()) idx[--p] = 0;
      if (p == 0) break;
      ++idx[p - 1];
    }
  }
  return out;
}

std::vector<std::vector<size_t>> compositionsOf(size_t n) {
  if (n == 0) return {{}};
  if (n > 63) throw std::overflow_error("composition enumeration too large");
  std::vector<std::vector<size_t>> out;
  out.reserve(size_t(1) << (n - 1));
  for (unsigned long long mask = 0; mask < (1ull << (n - 1)); ++mask) {
    std::vector<size_t> parts;
    size_t cur = 1;
    for (size_t b = 0; b + 1 < n; ++b) {
      if (mask & (1ull << b)) {
        parts.push_back(cur);
        cur = 1;
      } else {
        ++cur;
      }
    }
    parts.push_back(cur);
    out.push_back(std::move(parts));
  }
  return out;
}

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace wcq
