#pragma once

#include "kpr/exactq/matrix.hpp"

#include <optional>

namespace kpr {

/// E(A): the first n-1 columns of A followed by an m x m diagonal block
/// whose i-th entry is a_{i,n}.
struct ExpandedMatrix {
  MatrixQ base;
  MatrixQ expanded;
};

/// Throws std::invalid_argument when A has fewer than two columns.
ExpandedMatrix expand_matrix(const MatrixQ& a);

/// Some d with A (d, ..., d)^T = b, or nothing. When every row sum and every
/// b_i vanish, any d works and 1 is returned.
std::optional<Rational> constant_solution(const MatrixQ& a, const VectorQ& b);

}  // namespace kpr
