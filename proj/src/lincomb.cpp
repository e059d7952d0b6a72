#include "wcq/lincomb.hpp"

#include <stdexcept>

namespace wcq {

size_t integerMatrixRank(std::vector<std::vector<mpz_class>> m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  for (const auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  mpz_class prev = 1;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    // Bareiss step: exact division by the previous pivot keeps entries integral
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j) {
        mpz_class num = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

size_t exactKernelDim(const std::vector<std::vector<mpq_class>>& rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  std::vector<std::vector<mpz_class>> im;
  im.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    mpz_class den = 1;
    for (const auto& q : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> ir;
    ir.reserve(cols);
    for (const auto& q : r) {
      mpq_class scaled = q * den;
      ir.push_back(scaled.get_num());  // scaling by the lcm makes this exact
    }
    im.push_back(std::move(ir));
  }
  return cols - integerMatrixRank(std::move(im));
}

}  // namespace wcq
