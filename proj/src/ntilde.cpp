#include "wcq/ntilde.hpp"

#include <stdexcept>

namespace wcq {

NTildeExp NTildeExp::pos(mpz_class n) {
  if (n < 1) throw std::invalid_argument("positive entry must be >= 1");
  NTildeExp e;
  e.tag = NTag::Pos;
  e.val = std::move(n);
  return e;
}

std::string NTildeExp::toString() const {
  switch (tag) {
    case NTag::Zero: return "0";
    case NTag::Eps: return "e";
    default: return val.get_str();
  }
}

NTildeExp ntAdd(const NTildeExp& a, const NTildeExp& b) {
  // any positive summand absorbs eps and 0; eps absorbs 0
  if (a.isPos() || b.isPos()) return NTildeExp::pos(a.val + b.val);
  if (a.isEps() || b.isEps()) return NTildeExp::eps();
  return NTildeExp::zero();
}

int ntCompare(const NTildeExp& a, const NTildeExp& b) {
  int ra = static_cast<int>(a.tag), rb = static_cast<int>(b.tag);
  if (ra != rb) return ra < rb ? -1 : 1;
  if (a.tag != NTag::Pos) return 0;
  return cmp(a.val, b.val);
}

mpz_class theta(const NTildeExp& a) {
  if (a.isZero()) throw std::domain_error("theta is undefined at 0");
  return a.val;  // eps carries val 0
}

NTildeExp thetaInv(const mpz_class& n) {
  if (n < 0) throw std::invalid_argument("thetaInv needs a nonnegative integer");
  if (n == 0) return NTildeExp::eps();
  return NTildeExp::pos(n);
}

}  // namespace wcq
