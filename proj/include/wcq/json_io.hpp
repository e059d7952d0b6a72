#pragma once

#include <string>

#include "wcq/hopf.hpp"
#include "wcq/oracle.hpp"
#include "wcq/sha.hpp"

namespace wcq {

// Compact single-line JSON, terms in canonical storage order, coefficients
// and entries as decimal strings so values never overflow a JSON number.
std::string jsonM(const MComb& u, char basis = 'M');
std::string jsonTensor(const TensorComb& u);
std::string jsonSha(const ShaComb& u);
std::string jsonShaTensor(const ShaTensorComb& u);
std::string jsonSeries(const TruncSeries& s);

}  // namespace wcq
