#include "kpr/exactq/rational.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace kpr {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

namespace {

constexpr i128 kMax = INT64_MAX;

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer from_i128(i128 v) {
  u128 mag = uabs(v);
  Integer hi = static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64));
  Integer out = hi << 64;
  out += static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
  if (v < 0) out = -out;
  return out;
}

bool fits(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != Integer(INT64_MIN);
}

bool valid_integer_token(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

// Builds canonical results from 128-bit intermediates.
struct RationalAccess {
  static Rational make(i128 num, i128 den, bool reduced) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (!reduced) {
      u128 g = gcd128(uabs(num), static_cast<u128>(den));
      if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
      }
    }
    if (num == 0) den = 1;
    Rational out;
    if (num >= -kMax && num <= kMax && den <= kMax) {
      out.num_ = static_cast<std::int64_t>(num);
      out.den_ = static_cast<std::int64_t>(den);
    } else {
      mpq_class q(from_i128(num), from_i128(den));
      out.big_ = std::make_shared<const mpq_class>(std::move(q));
    }
    return out;
  }

  static const std::shared_ptr<const mpq_class>& big(const Rational& q) { return q.big_; }
  static std::int64_t num(const Rational& q) { return q.num_; }
  static std::int64_t den(const Rational& q) { return q.den_; }
};

void Rational::assign_int(std::int64_t value) {
  if (value == INT64_MIN) {
    assign_big(mpq_class(Integer(value)));
  } else {
    num_ = value;
    den_ = 1;
    big_.reset();
  }
}

void Rational::assign_big(mpq_class value) {
  value.canonicalize();
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (fits(n) && fits(d)) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(value));
  }
}

Rational::Rational(const Integer& value) { assign_big(mpq_class(value)); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  assign_big(mpq_class(num, den));
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = RationalAccess::make(num, den, false);
}

Rational::Rational(const mpq_class& value) { assign_big(value); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_token(num_text, true) || !valid_integer_token(den_text, false)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num_text);
  if (n[0] == '+') n.erase(0, 1);
  Integer num(n, 10);
  Integer den(std::string(den_text), 10);
  return Rational(num, den);
}

Integer Rational::numerator() const { return big_ ? Integer(big_->get_num()) : Integer(static_cast<long>(num_)); }

Integer Rational::denominator() const { return big_ ? Integer(big_->get_den()) : Integer(static_cast<long>(den_)); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(Integer(static_cast<long>(num_)), Integer(static_cast<long>(den_)));
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }

std::optional<std::int64_t> Rational::to_int64() const noexcept {
  if (big_ || den_ != 1) return std::nullopt;
  return num_;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) return RationalAccess::make(i128(a.num_) + b.num_, 1, true);
    i128 num = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    i128 den = i128(a.den_) * b.den_;
    return RationalAccess::make(num, den, false);
  }
  return Rational(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a) {
  if (!a.big_) {
    Rational out;
    out.num_ = -a.num_;
    out.den_ = a.den_;
    return out;
  }
  return Rational(mpq_class(-*a.big_));
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) return RationalAccess::make(i128(a.num_) - b.num_, 1, true);
    i128 num = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
    i128 den = i128(a.den_) * b.den_;
    return RationalAccess::make(num, den, false);
  }
  return Rational(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    auto g1 = static_cast<std::int64_t>(std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_));
    auto g2 = static_cast<std::int64_t>(std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_));
    i128 num = i128(a.num_ / g1) * (b.num_ / g2);
    i128 den = i128(a.den_ / g2) * (b.den_ / g1);
    return RationalAccess::make(num, den, true);
  }
  return Rational(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!b.big_) {
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
  }
  return Rational(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a big value never equals an inline one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& q, unsigned e) {
  Rational out(1);
  Rational base = q;
  while (e > 0) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return out;
}

}  // namespace kpr
