#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kpr {

/// Color assignment for [1..N]; entry k-1 holds the color of k.
class Coloring {
 public:
  /// Throws std::invalid_argument when n = 0, r = 0, the vector length is
  /// not n, or an entry is >= r.
  Coloring(std::size_t n, unsigned r, std::vector<std::uint32_t> colors);

  static Coloring uniform(std::size_t n);
  /// color(k) = k mod 2.
  static Coloring parity(std::size_t n);
  static Coloring random(std::size_t n, unsigned r, std::uint64_t seed);

  /// File format: "N r" on the first line, then N color indices.
  static Coloring parse(std::string_view text);
  [[nodiscard]] std::string str() const;

  [[nodiscard]] std::size_t size() const noexcept { return colors_.size(); }
  [[nodiscard]] unsigned num_colors() const noexcept { return r_; }
  [[nodiscard]] bool contains(std::uint64_t k) const noexcept { return k >= 1 && k <= colors_.size(); }
  /// Color of k in [1..N]; throws std::out_of_range otherwise.
  [[nodiscard]] std::uint32_t color_of(std::uint64_t k) const;
  [[nodiscard]] std::uint32_t operator[](std::uint64_t k) const noexcept { return colors_[k - 1]; }
  [[nodiscard]] const std::vector<std::uint32_t>& colors() const noexcept { return colors_; }
  /// Members of color c in increasing order.
  [[nodiscard]] std::vector<std::uint64_t> color_class(std::uint32_t c) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  unsigned r_;
  std::vector<std::uint32_t> colors_;
};

/// Rado's falsifying coloring for sum c_i x_i = 0: the color of n is its
/// least significant nonzero base-p digit minus one, so r = p - 1. Valid
/// when no nonempty subset of the coefficients sums to 0 mod p.
class RadoAvoider {
 public:
  /// Throws std::invalid_argument if p is not prime, a coefficient is
  /// zero, or some nonempty subset of coeffs sums to 0 modulo p.
  RadoAvoider(std::vector<std::int64_t> coeffs, std::uint64_t p);

  [[nodiscard]] unsigned num_colors() const noexcept { return static_cast<unsigned>(p_ - 1); }
  [[nodiscard]] std::uint32_t color(std::uint64_t n) const;
  [[nodiscard]] Coloring take(std::size_t n) const;
  [[nodiscard]] const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] std::uint64_t prime() const noexcept { return p_; }

 private:
  std::vector<std::int64_t> coeffs_;
  std::uint64_t p_;
};

RadoAvoider rado_avoider_coloring(std::vector<std::int64_t> coeffs, std::uint64_t p);

/// True iff some nonempty subset of coeffs sums to 0 mod p.
bool has_zero_subset_sum_mod(const std::vector<std::int64_t>& coeffs, std::uint64_t p);

bool is_prime(std::uint64_t p);

/// Builds a coloring of [1..n] from a generator spec: "all-one", "parity",
/// "random" / "random(SEED)" (r colors, default seed `seed`),
/// "rado-avoider(c1,..,ck,p)" (last number is the prime), or "file:PATH".
Coloring make_coloring(std::string_view spec, std::size_t n, unsigned r, std::uint64_t seed);

}  // namespace kpr
