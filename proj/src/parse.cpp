#include "wcq/io.hpp"

#include <algorithm>
#include <cctype>

namespace wcq {

ParseError::ParseError(size_t p, const std::string& msg) : std::runtime_error(msg), pos(p) {}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skipWs() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool atEnd() {
    skipWs();
    return pos == s.size();
  }
  char peek() {
    skipWs();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c, const char* what) {
    skipWs();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(pos, std::string("expected ") + what);
    ++pos;
  }
  mpz_class number(const char* what) {
    skipWs();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError(start, std::string("expected ") + what);
    return mpz_class(s.substr(start, pos - start));
  }
  void done() {
    skipWs();
    if (pos != s.size()) throw ParseError(pos, "trailing input");
  }
};

void appendEntry(Cursor& c, std::vector<NTildeExp>& out) {
  c.skipWs();
  size_t start = c.pos;
  if (c.peek() == 'e') {
    ++c.pos;
    mpz_class reps = 1;
    if (c.pos < c.s.size() && c.s[c.pos] == '^') {
      ++c.pos;
      size_t ppos = c.pos;
      reps = c.number("eps power");
      if (reps < 1) throw ParseError(ppos, "eps power must be positive");
    }
    if (!reps.fits_ulong_p()) throw ParseError(start, "eps power too large");
    for (unsigned long i = 0; i < reps.get_ui(); ++i) out.push_back(NTildeExp::eps());
    return;
  }
  mpz_class v = c.number("composition entry");
  if (v < 1) throw ParseError(start, "entries must be positive integers or e");
  out.push_back(NTildeExp::pos(v));
}

void appendTerm(std::string& out, const mpz_class& c, const std::string& key) {
  bool neg = c < 0;
  mpz_class a = abs(c);
  if (out.empty()) {
    if (neg) out += '-';
  } else {
    out += neg ? " - " : " + ";
  }
  if (a != 1) {
    out += a.get_str();
    out += '*';
  }
  out += key;
}

}  // namespace

Composition parseComposition(const std::string& s) {
  Cursor c{s};
  c.expect('(', "'('");
  std::vector<NTildeExp> entries;
  if (c.peek() != ')') {
    appendEntry(c, entries);
    while (c.peek() == ',') {
      ++c.pos;
      appendEntry(c, entries);
    }
  }
  c.expect(')', "')'");
  c.done();
  return Composition(std::move(entries));
}

WeakComposition parseWeakComposition(const std::string& s) {
  Cursor c{s};
  c.expect('[', "'['");
  WeakComposition w;
  if (c.peek() != ']') {
    w.push_back(c.number("nonnegative entry"));
    while (c.peek() == ',') {
      ++c.pos;
      w.push_back(c.number("nonnegative entry"));
    }
  }
  c.expect(']', "']'");
  c.done();
  return w;
}

PureTensor parsePureTensor(const std::string& s) {
  Cursor c{s};
  if (c.peek() == '1') {
    ++c.pos;
    c.done();
    return PureTensor();
  }
  c.expect('x', "'x' or '1'");
  c.expect('^', "'^'");
  mpz_class head = c.number("head exponent");
  WeakComposition tail;
  while (c.peek() == '|') {
    ++c.pos;
    tail.push_back(c.number("tail entry"));
  }
  c.done();
  return PureTensor(std::move(head), std::move(tail));
}

std::string printM(const MComb& u, char basis) {
  if (u.isZero()) return "0";
  std::vector<const std::pair<const Composition, mpz_class>*> ts;
  for (const auto& t : u.terms) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](const auto* x, const auto* y) {
    return compareCompositionLex(x->first, y->first) < 0;
  });
  std::string out;
  for (const auto* t : ts) appendTerm(out, t->second, basis + t->first.toString());
  return out;
}

std::string printTensor(const TensorComb& u) {
  if (u.isZero()) return "0";
  std::vector<const std::pair<const CompPair, mpz_class>*> ts;
  for (const auto& t : u.terms) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](const auto* x, const auto* y) {
    int c = compareCompositionLex(x->first.first, y->first.first);
    if (c != 0) return c < 0;
    return compareCompositionLex(x->first.second, y->first.second) < 0;
  });
  std::string out;
  for (const auto* t : ts)
    appendTerm(out, t->second,
               "M" + t->first.first.toString() + "(x)M" + t->first.second.toString());
  return out;
}

std::string printSha(const ShaComb& u) {
  if (u.isZero()) return "0";
  std::string out;
  for (const auto& [k, c] : u.terms) appendTerm(out, c, k.toString());
  return out;
}

std::string printShaTensor(const ShaTensorComb& u) {
  if (u.isZero()) return "0";
  std::string out;
  for (const auto& [k, c] : u.terms)
    appendTerm(out, c, k.first.toString() + "(x)" + k.second.toString());
  return out;
}

std::string printSeries(const TruncSeries& s) {
  if (s.terms.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : s.terms) {
    std::string mono;
    for (size_t i = 0; i < key.size(); ++i) {
      if (key[i].isZero()) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (!(key[i].isPos() && key[i].val == 1)) mono += "^" + key[i].toString();
    }
    if (mono.empty()) mono = "1";
    appendTerm(out, c, mono);
  }
  return out;
}

}  // namespace wcq
