#include "wcq/oracle.hpp"

#include <stdexcept>

#include "wcq/hopf.hpp"

namespace wcq {

void TruncSeries::addTerm(const std::vector<NTildeExp>& key, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

TruncSeries mulSeries(const TruncSeries& u, const TruncSeries& v) {
  if (u.nvars != v.nvars) throw std::invalid_argument("variable counts differ");
  TruncSeries out;
  out.nvars = u.nvars;
  for (const auto& [ka, ca] : u.terms)
    for (const auto& [kb, cb] : v.terms) {
      std::vector<NTildeExp> k(u.nvars);
      for (size_t i = 0; i < u.nvars; ++i) k[i] = ntAdd(ka[i], kb[i]);
      out.addTerm(k, ca * cb);
    }
  return out;
}

TruncSeries expandM(const Composition& a, size_t n) {
  TruncSeries out;
  out.nvars = n;
  size_t k = a.length();
  if (k > n) return out;
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::vector<NTildeExp> key(n, NTildeExp::zero());
    for (size_t i = 0; i < k; ++i) key[idx[i]] = a.entries[i];
    out.addTerm(key, 1);
    // next strictly increasing k-subset of [0, n)
    size_t p = k;
    while (p > 0 && idx[p - 1] == n - k + p - 1) --p;
    if (p == 0) break;
    ++idx[p - 1];
    for (size_t i = p; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

TruncSeries expandF(const Composition& a, size_t n) {
  auto d = epsEntryDecomposition(a);
  size_t k = d.positives.size();
  // slot pattern: i_j eps slots then s_j unit slots for each j, trailing eps run
  std::vector<bool> slotEps;
  std::vector<bool> strictAfter;  // between slot i and slot i+1
  for (size_t j = 0; j < k; ++j) {
    slotEps.insert(slotEps.end(), d.runs[j], true);
    if (!d.positives[j].fits_ulong_p()) throw std::overflow_error("expansion too large");
    slotEps.insert(slotEps.end(), d.positives[j].get_ui(), false);
    strictAfter.resize(slotEps.size(), false);
    strictAfter.back() = true;  // set(a) position a_j, vacuous when final
  }
  slotEps.insert(slotEps.end(), d.runs[k], true);
  strictAfter.resize(slotEps.size(), false);
  size_t N = slotEps.size();
  TruncSeries out;
  out.nvars = n;
  if (N == 0) {
    out.addTerm(std::vector<NTildeExp>(n, NTildeExp::zero()), 1);
    return out;
  }
  std::vector<size_t> var(N);
  auto rec = [&](auto&& self, size_t slot, size_t lo) -> void {
    if (slot == N) {
      std::vector<NTildeExp> key(n, NTildeExp::zero());
      for (size_t i = 0; i < N; ++i) {
        NTildeExp e = slotEps[i] ? NTildeExp::eps() : NTildeExp::pos(1);
        key[var[i]] = ntAdd(key[var[i]], e);
      }
      out.addTerm(key, 1);
      return;
    }
    for (size_t v = lo; v < n; ++v) {
      var[slot] = v;
      self(self, slot + 1, strictAfter[slot] ? v + 1 : v);
    }
    return;
  };
  rec(rec, 0, 0);
  return out;
}

bool isQuasiSymmetric(const TruncSeries& s) {
  std::map<Composition, mpz_class, CompositionLess> profile;
  std::map<Composition, size_t, CompositionLess> count;
  for (const auto& [key, c] : s.terms) {
    Composition g;
    for (const auto& e : key)
      if (!e.isZero()) g.entries.push_back(e);
    auto it = profile.find(g);
    if (it == profile.end()) {
      profile.emplace(g, c);
      count.emplace(g, 1);
    } else {
      if (it->second != c) return false;
      ++count[g];
    }
  }
  for (const auto& [g, cnt] : count) {
    // every strictly increasing placement of g must be present
    mpz_class want = binom(s.nvars, g.length());
    if (mpz_class(cnt) != want) return false;
  }
  return true;
}

bool oracleProductCheck(const Composition& a, const Composition& b, size_t n) {
  TruncSeries lhs = mulSeries(expandM(a, n), expandM(b, n));
  TruncSeries rhs;
  rhs.nvars = n;
  MComb prod = productM(MComb::single(a), MComb::single(b));
  for (const auto& [g, c] : prod.terms)
    for (const auto& [key, x] : expandM(g, n).terms) rhs.addTerm(key, c * x);
  return lhs == rhs;
}

namespace {

// polynomials in m variables with rational coefficients, exponent vectors as keys
using PolyQ = std::map<std::vector<unsigned>, mpq_class>;

void polyAdd(PolyQ& dst, const PolyQ& src, const mpq_class& scale) {
  for (const auto& [k, c] : src) {
    mpq_class v = c * scale;
    auto [it, fresh] = dst.emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) dst.erase(it);
    }
  }
}

PolyQ polyMul(const PolyQ& a, const PolyQ& b) {
  PolyQ out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<unsigned> k(ka.size());
      for (size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      mpq_class v = ca * cb;
      auto [it, fresh] = out.emplace(std::move(k), v);
      if (!fresh) {
        it->second += v;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

// series in t up to t^K, coefficients are PolyQ
using TSer = std::vector<PolyQ>;

TSer tmul(const TSer& a, const TSer& b) {
  size_t K = a.size() - 1;
  TSer out(K + 1);
  for (size_t i = 0; i <= K; ++i)
    for (size_t j = 0; i + j <= K; ++j) {
      if (a[i].empty() || b[j].empty()) continue;
      polyAdd(out[i + j], polyMul(a[i], b[j]), 1);
    }
  return out;
}

}  // namespace

bool waringCheck(unsigned m, unsigned K) {
  if (m == 0) throw std::invalid_argument("need at least one variable");
  // G = -sum_{k=1..K} (-1)^k t^k p_k / k
  TSer G(K + 1);
  for (unsigned k = 1; k <= K; ++k) {
    mpq_class c(k % 2 ? 1 : -1, k);
    for (unsigned i = 0; i < m; ++i) {
      std::vector<unsigned> mono(m, 0);
      mono[i] = k;
      G[k][mono] += c;
    }
  }
  // exp(G) = sum_j G^j / j!, truncated
  TSer lhs(K + 1);
  lhs[0][std::vector<unsigned>(m, 0)] = 1;
  TSer pw = lhs;
  mpq_class fact = 1;
  for (unsigned j = 1; j <= K; ++j) {
    pw = tmul(pw, G);
    fact *= j;
    for (size_t i = 0; i <= K; ++i) polyAdd(lhs[i], pw[i], 1 / fact);
  }
  // rhs: elementary symmetric polynomials, e_n = 0 beyond the variable count
  TSer rhs(K + 1);
  rhs[0][std::vector<unsigned>(m, 0)] = 1;
  for (unsigned nn = 1; nn <= K && nn <= m; ++nn) {
    std::vector<unsigned> pick(nn);
    for (unsigned i = 0; i < nn; ++i) pick[i] = i;
    for (;;) {
      std::vector<unsigned> mono(m, 0);
      for (unsigned i : pick) mono[i] = 1;
      rhs[nn][mono] += 1;
      size_t p = nn;
      while (p > 0 && pick[p - 1] == m - nn + p - 1) --p;
      if (p == 0) break;
      ++pick[p - 1];
      for (size_t i = p; i < nn; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return lhs == rhs;
}

}  // namespace wcq
