#include "kpr/radomat/expanded.hpp"

#include <stdexcept>

namespace kpr {

ExpandedMatrix expand_matrix(const MatrixQ& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (n < 2) throw std::invalid_argument("expand_matrix: need at least two columns");
  MatrixQ e(m, n - 1 + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) e.at(i, j) = a.at(i, j);
    e.at(i, n - 1 + i) = a.at(i, n - 1);
  }
  return {a, std::move(e)};
}

std::optional<Rational> constant_solution(const MatrixQ& a, const VectorQ& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("constant_solution: rhs length must equal row count");
  std::optional<Rational> d;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational row_sum;
    for (std::size_t j = 0; j < a.cols(); ++j) row_sum += a.at(i, j);
    if (row_sum.is_zero()) {
      if (!b[i].is_zero()) return std::nullopt;
      continue;
    }
    Rational candidate = b[i] / row_sum;
    if (d && *d != candidate) return std::nullopt;
    d = candidate;
  }
  return d ? d : std::optional<Rational>(Rational(1));
}

}  // namespace kpr
