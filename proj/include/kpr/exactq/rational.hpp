#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace kpr {

using Integer = mpz_class;

/// Exact rational number in canonical form (den >= 1, gcd(|num|, den) = 1).
///
/// Values whose numerator and denominator both fit in 64 bits are held
/// inline and combined with 128-bit intermediates; anything larger is
/// promoted to a shared immutable GMP rational. The split is invisible to
/// callers: a big result that fits again is demoted, so two equal values
/// always have the same representation.
class Rational {
 public:
  Rational() noexcept = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      assign_int(static_cast<std::int64_t>(value));
    } else if (static_cast<std::uint64_t>(value) <= kSmallMax) {
      num_ = static_cast<std::int64_t>(value);
    } else {
      assign_big(mpq_class(mpz_class(std::to_string(value))));
    }
  }

  Rational(const Integer& value);  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  /// Accepts "p" or "p/q" with an optional sign on p. Throws
  /// std::invalid_argument on malformed text and std::domain_error on q = 0.
  static Rational parse(std::string_view text);

  [[nodiscard]] Integer numerator() const;
  [[nodiscard]] Integer denominator() const;
  [[nodiscard]] mpq_class to_mpq() const;

  [[nodiscard]] int sign() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_integer() const noexcept;
  /// Integer value if this is an integer that fits in int64.
  [[nodiscard]] std::optional<std::int64_t> to_int64() const noexcept;
  [[nodiscard]] bool is_small() const noexcept { return !big_; }

  [[nodiscard]] std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error when b is zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static constexpr std::uint64_t kSmallMax = INT64_MAX;

  void assign_int(std::int64_t value);
  void assign_big(mpq_class value);

  // Inline value, valid when big_ is null. num_ is never INT64_MIN.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;

  friend struct RationalAccess;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);
/// q^e for e >= 0.
Rational pow(const Rational& q, unsigned e);

}  // namespace kpr
