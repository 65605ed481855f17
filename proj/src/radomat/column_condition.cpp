#include "kpr/radomat/column_condition.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace kpr {

namespace {

using Mask = std::uint64_t;

// Column sums per subset; tabulated for small n, computed on demand above.
class ColumnSums {
 public:
  explicit ColumnSums(const MatrixQ& a) : m_(a.rows()), n_(a.cols()) {
    for (std::size_t j = 0; j < n_; ++j) cols_.push_back(a.column(j));
    if (n_ <= kTableLimit) {
      table_.assign(Mask{1} << n_, VectorQ(m_));
      for (Mask s = 1; s < (Mask{1} << n_); ++s) {
        table_[s] = table_[s & (s - 1)] + cols_[static_cast<std::size_t>(std::countr_zero(s))];
      }
    }
  }

  [[nodiscard]] VectorQ operator()(Mask s) const {
    if (!table_.empty()) return table_[s];
    VectorQ out(m_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (s >> j & 1U) out = out + cols_[j];
    }
    return out;
  }

  [[nodiscard]] const VectorQ& column(std::size_t j) const { return cols_[j]; }

 private:
  static constexpr std::size_t kTableLimit = 16;
  std::size_t m_;
  std::size_t n_;
  std::vector<VectorQ> cols_;
  std::vector<VectorQ> table_;
};

std::vector<std::size_t> members(Mask s) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; s != 0; ++j, s >>= 1) {
    if (s & 1U) out.push_back(j);
  }
  return out;
}

// Span membership by rank comparison: v is in span(C_U) iff appending v
// leaves the rank unchanged.
bool in_column_span(const MatrixQ& a, const std::vector<std::size_t>& cols, const VectorQ& v) {
  if (cols.empty()) return is_zero(v);
  std::vector<VectorQ> with;
  for (auto j : cols) with.push_back(a.column(j));
  std::size_t base = rank(MatrixQ::from_columns(with));
  with.push_back(v);
  return rank(MatrixQ::from_columns(with)) == base;
}

}  // namespace

std::optional<ColumnPartitionWitness> column_condition(const MatrixQ& a) {
  const std::size_t n = a.cols();
  if (n > kMaxColumns) throw std::invalid_argument("column_condition: too many columns");
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  ColumnSums sum(a);

  // reachable union -> union before its last block (0 when it is I_1)
  std::map<Mask, Mask> parent;
  for (Mask s = 1; s <= full; ++s) {
    if (is_zero(sum(s))) parent.emplace(s, 0);
  }

  for (auto it = parent.begin(); it != parent.end() && !parent.contains(full); ++it) {
    const Mask used = it->first;
    Subspace span(a.rows());
    for (std::size_t j = 0; j < n; ++j) {
      if (used >> j & 1U) span.insert(sum.column(j));
    }
    const Mask rest = full & ~used;
    for (Mask block = rest; block != 0; block = (block - 1) & rest) {
      if (parent.contains(used | block)) continue;
      if (span.contains(sum(block))) parent.emplace(used | block, used);
    }
  }

  auto last = parent.find(full);
  if (last == parent.end()) return std::nullopt;
  ColumnPartitionWitness w;
  for (Mask cur = full; cur != 0;) {
    Mask prev = parent.at(cur);
    w.blocks.push_back(members(cur & ~prev));
    cur = prev;
  }
  std::reverse(w.blocks.begin(), w.blocks.end());
  return w;
}

std::optional<ColumnPartitionWitness> column_condition_naive(const MatrixQ& a) {
  const std::size_t n = a.cols();
  if (n > kMaxNaiveColumns) throw std::invalid_argument("column_condition_naive: more than 8 columns");
  const Mask full = (Mask{1} << n) - 1;

  // admissible[(used << n) | block]: -1 unknown, else cached verdict of the
  // definition's condition for `block` placed after the columns in `used`.
  std::vector<signed char> admissible(std::size_t{1} << (2 * n), -1);
  auto ok = [&](Mask used, Mask block) {
    auto& slot = admissible[(used << n) | block];
    if (slot < 0) {
      VectorQ s(a.rows());
      for (auto j : members(block)) s = s + a.column(j);
      slot = used == 0 ? is_zero(s) : in_column_span(a, members(used), s);
    }
    return slot == 1;
  };

  std::vector<Mask> chosen;
  auto extend = [&](auto&& self, Mask used) -> bool {
    if (used == full) return true;
    const Mask rest = full & ~used;
    for (Mask block = 1; block <= rest; ++block) {
      if ((block & rest) != block || !ok(used, block)) continue;
      chosen.push_back(block);
      if (self(self, used | block)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;

  ColumnPartitionWitness w;
  for (Mask b : chosen) w.blocks.push_back(members(b));
  return w;
}

bool is_valid_witness(const MatrixQ& a, const ColumnPartitionWitness& w) {
  const std::size_t n = a.cols();
  std::vector<int> seen(n, 0);
  for (const auto& block : w.blocks) {
    if (block.empty()) return false;
    for (auto j : block) {
      if (j >= n || seen[j]++) return false;
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<std::ptrdiff_t>(n)) return false;

  std::vector<std::size_t> earlier;
  for (std::size_t t = 0; t < w.blocks.size(); ++t) {
    VectorQ s(a.rows());
    for (auto j : w.blocks[t]) s = s + a.column(j);
    if (t == 0 ? !is_zero(s) : !in_column_span(a, earlier, s)) return false;
    earlier.insert(earlier.end(), w.blocks[t].begin(), w.blocks[t].end());
  }
  return true;
}

void to_json(nlohmann::json& j, const ColumnPartitionWitness& w) {
  auto blocks = nlohmann::json::array();
  for (const auto& b : w.blocks) {
    auto arr = nlohmann::json::array();
    for (auto idx : b) arr.push_back(idx + 1);
    blocks.push_back(std::move(arr));
  }
  j = nlohmann::json{{"blocks", std::move(blocks)}};
}

void from_json(const nlohmann::json& j, ColumnPartitionWitness& w) {
  w.blocks.clear();
  for (const auto& b : j.at("blocks")) {
    std::vector<std::size_t> block;
    for (const auto& idx : b) {
      auto v = idx.get<std::size_t>();
      if (v == 0) throw std::invalid_argument("witness indices are 1-based");
      block.push_back(v - 1);
    }
    w.blocks.push_back(std::move(block));
  }
}

}  // namespace kpr
