#pragma once

#include <stdexcept>
#include <string>

#include "wcq/hopf.hpp"
#include "wcq/oracle.hpp"
#include "wcq/sha.hpp"

namespace wcq {

struct ParseError : std::runtime_error {
  size_t pos;  // 0-based offset into the input
  ParseError(size_t p, const std::string& msg);
};

// "(e,1,2)", "(e^3,2)", "()"; entries are positive integers or eps powers
Composition parseComposition(const std::string& s);
// "[0,1,2]", "[]"
WeakComposition parseWeakComposition(const std::string& s);
// "1" or "x^a0|t1|t2|..." with nonnegative parts
PureTensor parsePureTensor(const std::string& s);

// Terms sorted lexicographically by key; coefficients 1/-1 are folded into
// the sign, others render as "c*". The zero element prints as "0".
std::string printM(const MComb& u, char basis = 'M');
std::string printTensor(const TensorComb& u);
std::string printSha(const ShaComb& u);
std::string printShaTensor(const ShaTensorComb& u);
std::string printSeries(const TruncSeries& s);

}  // namespace wcq
