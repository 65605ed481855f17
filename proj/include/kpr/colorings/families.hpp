#pragma once

#include "kpr/colorings/coloring.hpp"
#include "kpr/colorings/fsfp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kpr {

enum class FamilyKind { ArithmeticProgression, GeometricProgression, SumSingletons, ProductSingletons, Explicit };

/// A concrete family of finite subsets of the positive integers.
///   ap(l):                 {a, a+d, .., a+l*d}, a, d >= 1
///   gp(m):                 {c, c*q, .., c*q^(m-1)}, c >= 1, q >= 2
///   sum-singletons(k):     {b_1 + .. + b_k} with b_i >= 1, i.e. {s} for s >= k
///   product-singletons(k): {c_1 * .. * c_k} with c_i >= 1, i.e. every {p}
///   explicit:              the listed sets
struct FiniteFamily {
  FamilyKind kind = FamilyKind::Explicit;
  unsigned param = 0;
  std::vector<IntSet> sets;  // explicit only

  static FiniteFamily ap(unsigned l);
  static FiniteFamily gp(unsigned m);
  static FiniteFamily sums(unsigned k);
  static FiniteFamily products(unsigned k);
  static FiniteFamily explicit_sets(std::vector<IntSet> sets);

  /// "ap(2)", "gp(3)", "sum-singletons(2)", "product-singletons(1)".
  static FiniteFamily parse(const std::string& text);
  [[nodiscard]] std::string str() const;
};

/// All members contained in [1..n], in a deterministic order. Throws
/// std::invalid_argument for ap(0) or gp(0).
std::vector<IntSet> regular_family_members(const FiniteFamily& fam, std::uint64_t n);

bool family_contains(const FiniteFamily& fam, const IntSet& s);

/// Finite instance of sequences F_1..F_L, G_1..G_L drawn from regular
/// families with FS, FP and the mixed products all in one color.
struct FamilyWitness {
  std::vector<IntSet> f_seq;
  std::vector<IntSet> g_seq;
  std::uint32_t color = 0;
};

/// Union over m = 1..L of FS(F_1..F_m) * FP(G_m..G_L).
IntSet mixed_structure_sets(const std::vector<IntSet>& f, const std::vector<IntSet>& g, std::size_t n_limit);

/// Checks membership F_n in additive[n] and G_n in multiplicative[n] (a
/// single family is used for every index) and that FS, FP and every mixed
/// prefix structure share the witness color. Throws std::invalid_argument
/// on length mismatch and std::out_of_range past the coloring.
bool verify_family_witness(const std::vector<FiniteFamily>& additive, const std::vector<FiniteFamily>& multiplicative,
                           const FamilyWitness& w, const Coloring& c);

/// Backtracking over family members within [1..N], smallest members first.
std::optional<FamilyWitness> search_family_witness(const std::vector<FiniteFamily>& additive,
                                                   const std::vector<FiniteFamily>& multiplicative,
                                                   const Coloring& c, std::size_t depth,
                                                   std::uint64_t node_limit = 5'000'000);

}  // namespace kpr
