#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "wcq/lincomb.hpp"

using namespace wcq;
using LC = LinComb<std::string>;

TEST_CASE("module laws and canonical form") {
  LC a = LC::single("x", 2) + LC::single("y", -1);
  LC b = LC::single("y", 1);
  CHECK((a + b).coeffOf("y") == 0);
  CHECK((a + b).terms.size() == 1);  // cancelled keys are dropped, not stored as 0
  CHECK((a - a).isZero());
  CHECK(a - a == LC{});
  CHECK(-(-a) == a);
  CHECK(3 * a == a + a + a);
  CHECK((0 * a).isZero());
  CHECK(LC::single("z", 0).isZero());
}

TEST_CASE("addTerm cancels in place") {
  LC c = LC::single("x", 2) + LC::single("y", -1);
  c.addTerm("x", -2);
  CHECK(c.terms.size() == 1);
  CHECK(c.coeffOf("x") == 0);
  CHECK(c.coeffOf("y") == -1);
  c.addTerm("y", 0);
  CHECK(c.terms.size() == 1);
}

TEST_CASE("bilinear extension distributes over both supports") {
  auto f = [](const std::string& x, const std::string& y) { return LC::single(x + y); };
  LC u = LC::single("a", 2) + LC::single("b", 3);
  LC v = LC::single("c", 5) + LC::single("d", -1);
  LC w = bilinearExtend(u, v, f);
  CHECK(w.coeffOf("ac") == 10);
  CHECK(w.coeffOf("ad") == -2);
  CHECK(w.coeffOf("bc") == 15);
  CHECK(w.coeffOf("bd") == -3);
  CHECK(w == bilinearExtend(LC::single("a", 2), v, f) + bilinearExtend(LC::single("b", 3), v, f));
  CHECK(bilinearExtend(LC{}, v, f).isZero());
}

TEST_CASE("integer rank by fraction-free elimination") {
  CHECK(integerMatrixRank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
  CHECK(integerMatrixRank({{0, 0, 0}, {0, 0, 0}}) == 0);
  CHECK(integerMatrixRank({{1, 1}, {2, 2}}) == 1);
  CHECK(integerMatrixRank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
  CHECK(integerMatrixRank({{2, 4}, {1, 3}, {5, 7}}) == 2);
  CHECK(integerMatrixRank({{0, 5}, {0, 0}, {3, 1}}) == 2);
  CHECK(integerMatrixRank({}) == 0);
}

TEST_CASE("rank is invariant under row scaling") {
  std::vector<std::vector<mpz_class>> m = {{3, 1, 4}, {1, 5, 9}, {2, 6, 5}};
  size_t r = integerMatrixRank(m);
  for (auto& row : m)
    for (auto& x : row) x *= 7;
  CHECK(integerMatrixRank(m) == r);
}

TEST_CASE("rational nullity") {
  using Q = mpq_class;
  CHECK(exactKernelDim({{Q(1), Q(0)}, {Q(0), Q(1)}}) == 0);
  CHECK(exactKernelDim({{Q(0), Q(0), Q(0)}, {Q(0), Q(0), Q(0)}}) == 3);
  CHECK(exactKernelDim({{Q(1, 2), Q(1, 3)}, {Q(3, 2), Q(1)}}) == 1);  // second row is triple the first
  CHECK(exactKernelDim({{Q(1, 2), Q(1, 3)}, {Q(1, 5), Q(1)}}) == 0);
}
