#include "wcq/json_io.hpp"

#include <json.hpp>

namespace wcq {

namespace {

using nlohmann::ordered_json;

ordered_json compJson(const Composition& a) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : a.entries) arr.push_back(e.toString());
  return arr;
}

ordered_json ptJson(const PureTensor& t) {
  ordered_json tail = ordered_json::array();
  for (const auto& v : t.tail) tail.push_back(v.get_str());
  return ordered_json{{"head", t.head.get_str()}, {"tail", tail}};
}

template <class Terms, class KeyFn>
std::string dumpComb(const char* basis, const Terms& terms, KeyFn key) {
  ordered_json ts = ordered_json::array();
  for (const auto& [k, c] : terms)
    ts.push_back(ordered_json{{"coeff", c.get_str()}, {"key", key(k)}});
  return ordered_json{{"basis", basis}, {"terms", ts}}.dump();
}

}  // namespace

std::string jsonM(const MComb& u, char basis) {
  std::string b(1, basis);
  return dumpComb(b.c_str(), u.terms, compJson);
}

std::string jsonTensor(const TensorComb& u) {
  return dumpComb("M", u.terms, [](const CompPair& k) {
    return ordered_json{compJson(k.first), compJson(k.second)};
  });
}

std::string jsonSha(const ShaComb& u) { return dumpComb("T", u.terms, ptJson); }

std::string jsonShaTensor(const ShaTensorComb& u) {
  return dumpComb("T", u.terms, [](const PTPair& k) {
    return ordered_json{ptJson(k.first), ptJson(k.second)};
  });
}

std::string jsonSeries(const TruncSeries& s) {
  ordered_json ts = ordered_json::array();
  for (const auto& [k, c] : s.terms) {
    ordered_json key = ordered_json::array();
    for (const auto& e : k) key.push_back(e.toString());
    ts.push_back(ordered_json{{"coeff", c.get_str()}, {"key", key}});
  }
  return ordered_json{{"vars", s.nvars}, {"terms", ts}}.dump();
}

}  // namespace wcq
