#pragma once

#include "kpr/exactq/matrix.hpp"

#include <span>
#include <vector>

namespace kpr {

struct RowEchelon {
  MatrixQ reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Pivots are the first nonzero entry found
/// scanning down each column; no scaling heuristics.
RowEchelon rref(const MatrixQ& a);

std::size_t rank(const MatrixQ& a);

/// Basis of the rational null space, one vector per free column of the
/// reduced form (free entry 1, other free entries 0). Empty iff the kernel
/// is trivial.
std::vector<VectorQ> kernel_basis(const MatrixQ& a);

/// True iff v lies in the rational span of basis. An empty basis spans only
/// the zero vector. Throws std::invalid_argument on dimension mismatch.
bool span_member(std::span<const VectorQ> basis, const VectorQ& v);

/// Incrementally built subspace of Q^dim kept in reduced echelon form, so
/// membership tests are a single reduction pass.
class Subspace {
 public:
  explicit Subspace(std::size_t dim) : dim_(dim) {}

  [[nodiscard]] std::size_t ambient_dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t dim() const noexcept { return rows_.size(); }

  /// Adds v; returns true when the dimension grew.
  bool insert(const VectorQ& v);
  [[nodiscard]] bool contains(const VectorQ& v) const;

 private:
  // Residue of v after eliminating against the stored rows.
  [[nodiscard]] VectorQ reduce(VectorQ v) const;
  void check_dim(const VectorQ& v) const;

  std::size_t dim_;
  std::vector<VectorQ> rows_;        // each row has a 1 at its pivot
  std::vector<std::size_t> pivots_;  // parallel to rows_
};

}  // namespace kpr
