#pragma once

#include "kpr/exactq/linalg.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <vector>

namespace kpr {

/// Ordered partition (I_1, ..., I_v) of the column indices. Indices are
/// 0-based in memory and 1-based in JSON.
struct ColumnPartitionWitness {
  std::vector<std::vector<std::size_t>> blocks;

  friend bool operator==(const ColumnPartitionWitness&, const ColumnPartitionWitness&) = default;
};

/// Largest column count accepted by the deciders.
inline constexpr std::size_t kMaxColumns = 32;
inline constexpr std::size_t kMaxNaiveColumns = 8;

/// Decides Rado's column condition by a dynamic program over column subsets.
///
/// A subset U is reachable when it has zero column sum (U = I_1), or when
/// U = U' + J with U' reachable and the sum of the columns in J inside the
/// span of the columns in U'. Whether a later block is admissible depends
/// only on the union of the earlier blocks, never on how that union was
/// split, so one state per subset suffices. Subsets are expanded in
/// increasing bitmask order and the first parent recorded wins, which makes
/// the returned witness deterministic.
///
/// Throws std::invalid_argument when A has more than kMaxColumns columns.
std::optional<ColumnPartitionWitness> column_condition(const MatrixQ& a);

/// Literal check of the definition over every ordered set partition of the
/// columns. Exponential; only for cross-validation. Throws
/// std::invalid_argument when A has more than kMaxNaiveColumns columns.
std::optional<ColumnPartitionWitness> column_condition_naive(const MatrixQ& a);

/// Re-verifies a witness against the definition: the blocks partition the
/// columns, the first block sums to zero, and every later block sum lies in
/// the span of the earlier columns (tested by rank comparison, independently
/// of Subspace).
bool is_valid_witness(const MatrixQ& a, const ColumnPartitionWitness& w);

void to_json(nlohmann::json& j, const ColumnPartitionWitness& w);
void from_json(const nlohmann::json& j, ColumnPartitionWitness& w);

}  // namespace kpr
