#include "kpr/exactq/linalg.hpp"

#include <stdexcept>

namespace kpr {

RowEchelon rref(const MatrixQ& a) {
  MatrixQ m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const MatrixQ& a) { return rref(a).pivot_cols.size(); }

std::vector<VectorQ> kernel_basis(const MatrixQ& a) {
  auto [reduced, pivots] = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<VectorQ> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    VectorQ v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool span_member(std::span<const VectorQ> basis, const VectorQ& v) {
  Subspace s(v.size());
  for (const auto& b : basis) {
    if (b.size() != v.size()) throw std::invalid_argument("span_member: dimension mismatch");
    s.insert(b);
  }
  return s.contains(v);
}

void Subspace::check_dim(const VectorQ& v) const {
  if (v.size() != dim_) throw std::invalid_argument("subspace: dimension mismatch");
}

VectorQ Subspace::reduce(VectorQ v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = v[pivots_[k]];
    if (f.is_zero()) continue;
    const VectorQ& row = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!row[j].is_zero()) v[j] -= f * row[j];
    }
  }
  return v;
}

bool Subspace::contains(const VectorQ& v) const {
  check_dim(v);
  return is_zero(reduce(v));
}

bool Subspace::insert(const VectorQ& v) {
  check_dim(v);
  VectorQ r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  Rational inv = Rational(1) / r[p];
  for (auto& x : r) x *= inv;
  // Keep the stored rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) row[j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace kpr
