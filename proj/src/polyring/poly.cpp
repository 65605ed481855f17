#include "kpr/polyring/poly.hpp"

#include <cctype>
#include <optional>

namespace kpr {

PolyZ0::PolyZ0(std::map<unsigned, Rational> coeffs) {
  for (auto& [deg, c] : coeffs) {
    if (c.is_zero()) continue;
    if (deg == 0) throw ConstantTermError("polynomial has a nonzero constant term");
    coeffs_.emplace(deg, std::move(c));
  }
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  PolyZ0 run() {
    std::map<unsigned, Rational> acc;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = next() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [coeff, deg] = term();
      if (deg == 0 && !coeff.is_zero()) throw ConstantTermError("constant term not allowed in P: '" + std::string(text_) + "'");
      acc[deg] += sign > 0 ? coeff : -coeff;
      first = false;
      skip_ws();
    }
    acc.erase(0);
    return PolyZ0(std::move(acc));
  }

 private:
  std::pair<Rational, unsigned> term() {
    std::optional<Rational> coeff;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      skip_ws();
      if (at_end()) return {*coeff, 0};
      if (peek() == '*') {
        next();
        skip_ws();
      } else if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        return {*coeff, 0};
      }
    }
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) fail("expected variable");
    char v = next();
    if (var_ && *var_ != v) fail("mixed variable letters");
    var_ = v;
    skip_ws();
    unsigned deg = 1;
    if (!at_end() && peek() == '^') {
      next();
      skip_ws();
      deg = static_cast<unsigned>(digits());
    }
    return {coeff.value_or(Rational(1)), deg};
  }

  Rational number() {
    std::string tok = digit_run();
    skip_ws();
    if (!at_end() && peek() == '/') {
      next();
      skip_ws();
      tok += "/" + digit_run();
    }
    try {
      return Rational::parse(tok);
    } catch (const std::domain_error&) {
      fail("zero denominator");
    }
  }

  std::string digit_run() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned long long digits() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    unsigned long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      unsigned d = static_cast<unsigned>(next() - '0');
      if (v > 100000) fail("exponent too large");
      v = v * 10 + d;
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw PolyParseError("polynomial syntax error (" + why + ") in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }
  char next() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<char> var_;
};

}  // namespace

PolyZ0 PolyZ0::parse(std::string_view text) { return PolyParser(text).run(); }

Rational PolyZ0::eval(const Rational& x) const {
  Rational acc;
  for (const auto& [deg, c] : coeffs_) acc += c * pow(x, deg);
  return acc;
}

std::string PolyZ0::str(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [deg, c] = *it;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    out += var;
    if (deg > 1) out += "^" + std::to_string(deg);
  }
  return out;
}

}  // namespace kpr
