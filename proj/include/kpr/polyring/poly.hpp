#pragma once

#include "kpr/exactq/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kpr {

class PolyParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a polynomial carries a nonzero constant term.
class ConstantTermError : public PolyParseError {
 public:
  using PolyParseError::PolyParseError;
};

/// Univariate polynomial over Q with zero constant term, stored sparsely
/// as degree -> nonzero coefficient. The zero polynomial has no terms.
class PolyZ0 {
 public:
  PolyZ0() = default;
  /// Drops zero coefficients; throws ConstantTermError for a degree-0 entry
  /// with nonzero coefficient.
  explicit PolyZ0(std::map<unsigned, Rational> coeffs);

  /// Grammar: optionally signed terms `c*v^d`, `v^d`, `c*v`, `v` joined by
  /// + or -, where c is an integer or p/q and v is a single letter shared
  /// by every term. "0" is the zero polynomial.
  static PolyZ0 parse(std::string_view text);

  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] unsigned degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
  [[nodiscard]] const std::map<unsigned, Rational>& coefficients() const noexcept { return coeffs_; }

  /// Highest degree first, e.g. "1/2*z^3 - z".
  [[nodiscard]] std::string str(char var = 'z') const;

  friend bool operator==(const PolyZ0&, const PolyZ0&) = default;

 private:
  std::map<unsigned, Rational> coeffs_;
};

/// The column (P_1, ..., P_m) paired with an m-row system.
using PolyColumn = std::vector<PolyZ0>;

}  // namespace kpr
