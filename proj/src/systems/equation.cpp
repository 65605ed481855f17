#include "kpr/systems/equation.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace kpr {

Equation::Equation(std::vector<Term> terms) {
  std::map<Monomial, Rational> merged;
  for (auto& t : terms) {
    for (const auto& [var, e] : t.monomial) {
      if (e == 0) throw std::invalid_argument("monomial exponents must be positive");
    }
    merged[t.monomial] += t.coeff;
  }
  for (auto& [mono, c] : merged) {
    if (!c.is_zero()) terms_.push_back({c, mono});
  }
}

std::set<std::string> Equation::variables() const {
  std::set<std::string> out;
  for (const auto& t : terms_) {
    for (const auto& [var, e] : t.monomial) out.insert(var);
  }
  return out;
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::string out;
  for (const auto& [var, e] : m) {
    if (!out.empty()) out += "*";
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string Equation::str() const {
  if (terms_.empty()) return "0 = 0";
  std::string out;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    if (out.empty()) {
      if (t.coeff.sign() < 0) out += "-";
    } else {
      out += t.coeff.sign() < 0 ? " - " : " + ";
    }
    if (t.monomial.empty()) {
      out += mag.str();
      continue;
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    out += monomial_str(t.monomial);
  }
  return out + " = 0";
}

std::vector<Term> poly_terms(const PolyZ0& p, const std::string& var, const Rational& c) {
  std::vector<Term> out;
  for (const auto& [deg, coeff] : p.coefficients()) out.push_back({c * coeff, {{var, deg}}});
  return out;
}

std::string to_string(Distinctness d) {
  switch (d) {
    case Distinctness::AllowRepeats: return "allow-repeats";
    case Distinctness::AllDistinct: return "all-distinct";
    case Distinctness::Nontrivial: return "nontrivial";
  }
  return "?";
}

std::string to_string(RegularityStatus s) {
  switch (s) {
    case RegularityStatus::RegularByPaper: return "regular-by-paper";
    case RegularityStatus::NotRegular: return "not-regular";
    case RegularityStatus::Unknown: return "unknown";
  }
  return "?";
}

Distinctness parse_distinctness(std::string_view text) {
  if (text == "allow-repeats" || text == "repeats") return Distinctness::AllowRepeats;
  if (text == "all-distinct" || text == "distinct") return Distinctness::AllDistinct;
  if (text == "nontrivial") return Distinctness::Nontrivial;
  throw std::invalid_argument("unknown distinctness '" + std::string(text) + "'");
}

RegularityStatus parse_status(std::string_view text) {
  if (text == "regular-by-paper") return RegularityStatus::RegularByPaper;
  if (text == "not-regular") return RegularityStatus::NotRegular;
  if (text == "unknown") return RegularityStatus::Unknown;
  throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

void EquationSystem::validate() const {
  std::set<std::string> declared;
  for (const auto& v : variables) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!declared.insert(v).second) throw std::invalid_argument("variable '" + v + "' declared twice");
  }
  auto check = [&](const Equation& eq) {
    for (const auto& v : eq.variables()) {
      if (!declared.contains(v)) throw std::invalid_argument("variable '" + v + "' not declared in system '" + name + "'");
    }
  };
  for (const auto& eq : equations) check(eq);
  for (const auto& eq : nonzero) check(eq);
}

Rational eval_equation(const Equation& eq, const ConstructionAssignment& assignment) {
  Rational acc;
  for (const auto& t : eq.terms()) {
    Rational v = t.coeff;
    for (const auto& [var, e] : t.monomial) {
      auto it = assignment.find(var);
      if (it == assignment.end()) throw std::out_of_range("variable '" + var + "' is not assigned");
      v *= pow(it->second, e);
    }
    acc += v;
  }
  return acc;
}

bool integrality_check(const ConstructionAssignment& assignment) {
  return std::all_of(assignment.begin(), assignment.end(),
                     [](const auto& kv) { return kv.second.is_integer() && kv.second.sign() > 0; });
}

void to_json(nlohmann::json& j, const Equation& eq) {
  auto terms = nlohmann::json::array();
  for (const auto& t : eq.terms()) {
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [var, e] : t.monomial) mono[var] = e;
    terms.push_back({{"coeff", t.coeff.str()}, {"monomial", std::move(mono)}});
  }
  j = nlohmann::json{{"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, Equation& eq) {
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    Term term;
    const auto& c = t.at("coeff");
    term.coeff = c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<std::int64_t>());
    if (t.contains("monomial")) {
      for (const auto& [var, e] : t.at("monomial").items()) {
        auto exp = e.get<std::int64_t>();
        if (exp <= 0) throw std::invalid_argument("monomial exponents must be positive");
        term.monomial[var] = static_cast<unsigned>(exp);
      }
    }
    terms.push_back(std::move(term));
  }
  eq = Equation(std::move(terms));
}

void to_json(nlohmann::json& j, const EquationSystem& sys) {
  j = nlohmann::json{{"name", sys.name},
                     {"variables", sys.variables},
                     {"equations", sys.equations},
                     {"distinctness", to_string(sys.distinctness)},
                     {"status", to_string(sys.status)}};
  if (!sys.nonzero.empty()) j["nonzero"] = sys.nonzero;
}

void from_json(const nlohmann::json& j, EquationSystem& sys) {
  sys = EquationSystem{};
  sys.name = j.value("name", std::string("system"));
  sys.variables = j.at("variables").get<std::vector<std::string>>();
  sys.equations = j.at("equations").get<std::vector<Equation>>();
  if (j.contains("nonzero")) sys.nonzero = j.at("nonzero").get<std::vector<Equation>>();
  sys.distinctness = parse_distinctness(j.value("distinctness", std::string("allow-repeats")));
  sys.status = parse_status(j.value("status", std::string("unknown")));
  sys.validate();
}

}  // namespace kpr
