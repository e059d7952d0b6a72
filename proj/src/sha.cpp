#include "wcq/sha.hpp"

#include <stdexcept>

#include "wcq/quasi_shuffle.hpp"

namespace wcq {

PureTensor::PureTensor(mpz_class h, WeakComposition t) : head(std::move(h)), tail(std::move(t)) {
  if (head < 0) throw std::invalid_argument("tensor head must be nonnegative");
  for (const auto& w : tail)
    if (w < 0) throw std::invalid_argument("tensor tail entries must be nonnegative");
}

std::string PureTensor::toString() const {
  if (isUnit()) return "1";
  std::string s = "x^" + head.get_str();
  for (const auto& w : tail) s += "|" + w.get_str();
  return s;
}

bool PureTensorLess::operator()(const PureTensor& a, const PureTensor& b) const {
  if (a.tail.size() != b.tail.size()) return a.tail.size() < b.tail.size();
  int c = cmp(a.head, b.head);
  if (c != 0) return c < 0;
  for (size_t i = 0; i < a.tail.size(); ++i) {
    c = cmp(a.tail[i], b.tail[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

bool PTPairLess::operator()(const PTPair& a, const PTPair& b) const {
  PureTensorLess lt;
  if (lt(a.first, b.first)) return true;
  if (lt(b.first, a.first)) return false;
  return lt(a.second, b.second);
}

ShaComb shaUnit() {
  return ShaComb::single(PureTensor{});
}

ShaComb diamond(const ShaComb& u, const ShaComb& v, const mpz_class& lambda) {
  return bilinearExtend(u, v, [&lambda](const PureTensor& s, const PureTensor& t) {
    mpz_class h = s.head + t.head;
    if (s.tail.empty() || t.tail.empty())
      return ShaComb::single(PureTensor(h, s.tail.empty() ? t.tail : s.tail));
    ShaComb out;
    for (const auto& [k, c] : qshuffleSeq<NatMonoid>(s.tail, t.tail, lambda).terms)
      out.addTerm(PureTensor(h, k), c);
    return out;
  });
}

ShaComb rbOperator(const ShaComb& u) {
  ShaComb out;
  for (const auto& [t, c] : u.terms) {
    WeakComposition tail;
    tail.reserve(t.tail.size() + 1);
    tail.push_back(t.head);
    tail.insert(tail.end(), t.tail.begin(), t.tail.end());
    out.addTerm(PureTensor(0, std::move(tail)), c);
  }
  return out;
}

bool rbIdentityCheck(const ShaComb& u, const ShaComb& v, const mpz_class& lambda) {
  ShaComb pu = rbOperator(u), pv = rbOperator(v);
  ShaComb lhs = diamond(pu, pv, lambda);
  ShaComb rhs = rbOperator(diamond(u, pv, lambda)) + rbOperator(diamond(pu, v, lambda)) +
                lambda * rbOperator(diamond(u, v, lambda));
  return lhs == rhs;
}

WeakComposition rho(const Composition& a) {
  return thetaSeq(a);
}

ShaComb psi(const MComb& u) {
  ShaComb out;
  for (const auto& [a, c] : u.terms) out.addTerm(PureTensor(0, thetaSeq(a)), c);
  return out;
}

PureTensor barRealize(const NTildeExp& a0, const Composition& a) {
  return PureTensor(theta(a0), thetaSeq(a));
}

ShaTensorComb shaCoproduct(const ShaComb& u) {
  ShaTensorComb out;
  for (const auto& [t, c] : u.terms) {
    if (!t.head.fits_ulong_p()) throw std::overflow_error("coproduct expansion too large");
    unsigned long a = t.head.get_ui();
    for (size_t i = 0; i <= t.tail.size(); ++i) {
      WeakComposition left(t.tail.begin(), t.tail.begin() + i);
      WeakComposition right(t.tail.begin() + i, t.tail.end());
      for (unsigned long p = 0; p <= a; ++p) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), a, p);
        out.addTerm({PureTensor(p, left), PureTensor(a - p, right)}, c * b);
      }
    }
  }
  return out;
}

mpz_class shaCounit(const ShaComb& u) {
  return u.coeffOf(PureTensor{});
}

ShaComb shaAntipode(const ShaComb& u) {
  ShaComb out;
  for (const auto& [t, c] : u.terms) {
    size_t k = t.tail.size();
    bool odd = (mpz_odd_p(t.head.get_mpz_t()) != 0) != (k % 2 == 1);
    mpz_class s = odd ? mpz_class(-c) : c;
    WeakComposition rev(t.tail.rbegin(), t.tail.rend());
    for (const auto& J : compositionsOf(k)) {
      WeakComposition tail;
      tail.reserve(J.size());
      size_t i = 0;
      for (size_t j : J) {
        mpz_class sum = 0;
        for (size_t q = 0; q < j; ++q) sum += rev[i++];
        tail.push_back(std::move(sum));
      }
      out.addTerm(PureTensor(t.head, std::move(tail)), s);
    }
  }
  return out;
}

}  // namespace wcq
