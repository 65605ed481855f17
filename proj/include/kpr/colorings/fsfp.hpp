#pragma once

#include "kpr/colorings/coloring.hpp"
#include "kpr/exactq/rational.hpp"

#include <optional>
#include <set>
#include <span>
#include <vector>

namespace kpr {

using IntSet = std::set<Integer>;

inline constexpr std::size_t kMaxSequenceLength = 20;
inline constexpr std::uint64_t kMaxSelectorProduct = 1'000'000;

/// Finite sums over nonempty index sets. Throws std::invalid_argument for
/// an empty sequence, nonpositive terms, or more than kMaxSequenceLength.
IntSet fs(std::span<const Integer> seq);
/// Finite products over nonempty index sets; same guards as fs.
IntSet fp(std::span<const Integer> seq);

/// Union over all selectors f_i in F_i of FS((f_i)_i). Each F_i must be
/// nonempty and the product of the sizes at most kMaxSelectorProduct.
IntSet fs_sets(const std::vector<IntSet>& seq);
IntSet fp_sets(const std::vector<IntSet>& seq);

/// F * G = {f * g}.
IntSet product_set(const IntSet& f, const IntSet& g);

/// Union over m = 1..n_limit of FS(a_1..a_m) * FP(b_m..b_{n_limit}).
/// Requires 1 <= n_limit <= min(|a|, |b|).
IntSet mixed_structure(std::span<const Integer> a, std::span<const Integer> b, std::size_t n_limit);

struct FsfpWitness {
  std::vector<Integer> a_seq;
  std::vector<Integer> b_seq;
  std::uint32_t color = 0;

  friend bool operator==(const FsfpWitness&, const FsfpWitness&) = default;
};

/// Every element the witness claims to be monochromatic: FS(a), FP(b), and
/// the mixed structure for every prefix length 1..L.
IntSet fsfp_elements(const FsfpWitness& w);

/// True iff every element of fsfp_elements(w) has color w.color. Throws
/// std::out_of_range if an element exceeds the coloring's range, so "too
/// short a coloring" is never reported as a plain false.
bool verify_fsfp(const FsfpWitness& w, const Coloring& c);

inline constexpr std::size_t kMaxFsfpDepth = 4;

/// Depth-first construction of sequences of the given length: extend the
/// a-sequence (closing finite sums), then the b-sequence (closing finite and
/// mixed products), smallest values first. Both sequences are strictly
/// increasing and b_1 >= 2, which rules out the degenerate witnesses built
/// from repeated terms or the factor 1. Nothing found means nothing
/// within [1..N] under the node limit, not a counterexample.
/// Throws std::invalid_argument for depth 0 or depth > kMaxFsfpDepth.
std::optional<FsfpWitness> search_fsfp(const Coloring& c, std::size_t depth, std::uint64_t node_limit = 50'000'000);

}  // namespace kpr
