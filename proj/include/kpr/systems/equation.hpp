#pragma once

#include "kpr/exactq/rational.hpp"
#include "kpr/polyring/poly.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kpr {

/// Variable name -> positive exponent. Empty means the constant monomial 1.
using Monomial = std::map<std::string, unsigned>;

struct Term {
  Rational coeff;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sum of terms, read as "sum = 0". Terms are kept sorted by monomial with
/// duplicates merged and zero coefficients removed.
class Equation {
 public:
  Equation() = default;
  explicit Equation(std::vector<Term> terms);

  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] std::set<std::string> variables() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Equation&, const Equation&) = default;

 private:
  std::vector<Term> terms_;
};

/// Terms of c * P(var).
std::vector<Term> poly_terms(const PolyZ0& p, const std::string& var, const Rational& c = Rational(1));

enum class Distinctness { AllowRepeats, AllDistinct, Nontrivial };
enum class RegularityStatus { RegularByPaper, NotRegular, Unknown };

std::string to_string(Distinctness d);
std::string to_string(RegularityStatus s);
/// Accepts "allow-repeats"/"repeats", "all-distinct"/"distinct", "nontrivial".
Distinctness parse_distinctness(std::string_view text);
RegularityStatus parse_status(std::string_view text);

struct EquationSystem {
  std::string name;
  std::vector<std::string> variables;
  std::vector<Equation> equations;
  /// Side conditions: each expression must evaluate to a nonzero value
  /// (denominators of cross-multiplied rational equations).
  std::vector<Equation> nonzero;
  Distinctness distinctness = Distinctness::AllowRepeats;
  RegularityStatus status = RegularityStatus::Unknown;

  /// Throws std::invalid_argument if a monomial uses an undeclared variable
  /// or a variable is declared twice.
  void validate() const;
};

using ConstructionAssignment = std::map<std::string, Rational>;

/// Residual of the equation under the assignment; zero means satisfied.
/// Throws std::out_of_range when a variable of eq is unassigned.
Rational eval_equation(const Equation& eq, const ConstructionAssignment& assignment);

/// True iff every value is a positive integer.
bool integrality_check(const ConstructionAssignment& assignment);

void to_json(nlohmann::json& j, const Equation& eq);
void from_json(const nlohmann::json& j, Equation& eq);
void to_json(nlohmann::json& j, const EquationSystem& sys);
void from_json(const nlohmann::json& j, EquationSystem& sys);

}  // namespace kpr
