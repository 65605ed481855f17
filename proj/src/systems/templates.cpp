#include "kpr/systems/templates.hpp"

#include "kpr/radomat/column_condition.hpp"

#include <stdexcept>

namespace kpr {

namespace {

std::string indexed(const std::string& base, int i) { return base + std::to_string(i); }

std::vector<std::string> indexed_range(const std::string& base, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(indexed(base, i));
  return out;
}

void append(std::vector<std::string>& dst, const std::vector<std::string>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

void append(std::vector<Term>& dst, const std::vector<Term>& src) { dst.insert(dst.end(), src.begin(), src.end()); }

Monomial product_of(const std::vector<std::string>& vars) {
  Monomial m;
  for (const auto& v : vars) ++m[v];
  return m;
}

int require(const std::optional<int>& v, const char* name, int min, std::string_view family) {
  if (!v) throw std::invalid_argument(std::string(family) + ": missing parameter " + name);
  if (*v < min) {
    throw std::invalid_argument(std::string(family) + ": parameter " + name + " must be >= " + std::to_string(min));
  }
  return *v;
}

void require_polys(const TemplateParams& p, std::size_t count, std::string_view family) {
  if (p.polys.size() != count) {
    throw std::invalid_argument(std::string(family) + ": expected " + std::to_string(count) + " polynomials");
  }
}

bool all_zero(const std::vector<PolyZ0>& polys) {
  for (const auto& p : polys) {
    if (!p.is_zero()) return false;
  }
  return true;
}

EquationSystem finish(EquationSystem sys) {
  sys.validate();
  return sys;
}

// x1+..+xn = y1..ym*zi + Pi(y{m+1}); y{m+1} is only declared when some Pi
// is nonzero.
EquationSystem poly_sum_product(const TemplateParams& p) {
  const int n = require(p.n, "n", 1, "poly-sum-product");
  const int m = require(p.m, "m", 1, "poly-sum-product");
  if (p.polys.empty()) throw std::invalid_argument("poly-sum-product: need at least one polynomial");
  const int r = static_cast<int>(p.polys.size());
  const bool has_shift = !all_zero(p.polys);

  EquationSystem sys;
  sys.name = "poly-sum-product";
  auto xs = indexed_range("x", n);
  auto ys = indexed_range("y", m);
  append(sys.variables, xs);
  append(sys.variables, ys);
  if (has_shift) sys.variables.push_back(indexed("y", m + 1));
  append(sys.variables, indexed_range("z", r));
  for (int i = 1; i <= r; ++i) {
    std::vector<Term> t;
    for (const auto& x : xs) t.push_back({1, {{x, 1}}});
    Monomial prod = product_of(ys);
    ++prod[indexed("z", i)];
    t.push_back({-1, prod});
    append(t, poly_terms(p.polys[static_cast<std::size_t>(i - 1)], indexed("y", m + 1), -1));
    sys.equations.emplace_back(std::move(t));
  }
  sys.status = RegularityStatus::RegularByPaper;
  return finish(std::move(sys));
}

EquationSystem sums_with_poly(const TemplateParams& p) {
  const int n = require(p.n, "n", 1, "sums-with-poly");
  if (p.polys.empty()) throw std::invalid_argument("sums-with-poly: need at least one polynomial");
  const int r = static_cast<int>(p.polys.size());
  EquationSystem sys;
  sys.name = "sums-with-poly";
  auto xs = indexed_range("x", n);
  append(sys.variables, xs);
  append(sys.variables, indexed_range("z", r));
  sys.variables.push_back("z");
  for (int i = 1; i <= r; ++i) {
    std::vector<Term> t;
    for (const auto& x : xs) t.push_back({1, {{x, 1}}});
    t.push_back({-1, {{indexed("z", i), 1}}});
    append(t, poly_terms(p.polys[static_cast<std::size_t>(i - 1)], "z", -1));
    sys.equations.emplace_back(std::move(t));
  }
  sys.status = RegularityStatus::RegularByPaper;
  return finish(std::move(sys));
}

EquationSystem power_product(const TemplateParams& p) {
  const int n = require(p.n, "n", 1, "power-product");
  require_polys(p, static_cast<std::size_t>(n), "power-product");
  EquationSystem sys;
  sys.name = "power-product";
  sys.variables = {"x", "y"};
  append(sys.variables, indexed_range("z", n));
  sys.variables.push_back("z");
  for (int i = 1; i <= n; ++i) {
    std::vector<Term> t;
    t.push_back({1, {{"x", 1}, {"y", static_cast<unsigned>(i)}}});
    t.push_back({-1, {{indexed("z", i), 1}}});
    append(t, poly_terms(p.polys[static_cast<std::size_t>(i - 1)], "z", -1));
    sys.equations.emplace_back(std::move(t));
  }
  sys.status = RegularityStatus::RegularByPaper;
  return finish(std::move(sys));
}

// Left side x1 + i*x2 + x3 + .. + xn shared by the ap-times-product and ap-times-power templates.
std::vector<Term> ap_row(const std::vector<std::string>& xs, int i) {
  std::vector<Term> t;
  for (std::size_t j = 0; j < xs.size(); ++j) t.push_back({j == 1 ? Rational(i) : Rational(1), {{xs[j], 1}}});
  return t;
}

EquationSystem ap_times_product(const TemplateParams& p) {
  const int l = require(p.l, "l", 1, "ap-times-product");
  const int m = require(p.m, "m", 1, "ap-times-product");
  const int n = require(p.n, "n", 3, "ap-times-product");
  EquationSystem sys;
  sys.name = "ap-times-product";
  auto xs = indexed_range("x", n);
  auto ys = indexed_range("y", m);
  append(sys.variables, xs);
  append(sys.variables, ys);
  append(sys.variables, indexed_range("z", l));
  for (int i = 1; i <= l; ++i) {
    auto t = ap_row(xs, i);
    Monomial prod = product_of(ys);
    ++prod[indexed("z", i)];
    t.push_back({-1, prod});
    sys.equations.emplace_back(std::move(t));
  }
  sys.status = RegularityStatus::RegularByPaper;
  return finish(std::move(sys));
}

EquationSystem ap_times_power(const TemplateParams& p) {
  const int l = require(p.l, "l", 1, "ap-times-power");
  const int m = require(p.m, "m", 2, "ap-times-power");
  const int n = require(p.n, "n", 3, "ap-times-power");
  EquationSystem sys;
  sys.name = "ap-times-power";
  auto xs = indexed_range("x", n);
  append(sys.variables, xs);
  append(sys.variables, indexed_range("y", l));
  sys.variables.push_back("z");
  for (int i = 1; i <= l; ++i) {
    auto t = ap_row(xs, i);
    t.push_back({-1, {{indexed("y", i), 1}, {"z", static_cast<unsigned>(m)}}});
    sys.equations.emplace_back(std::move(t));
  }
  sys.status = RegularityStatus::RegularByPaper;
  return finish(std::move(sys));
}

// (x + P(d)) / (y + Q(d)) = z^n, cross-multiplied.
EquationSystem rational_function(const TemplateParams& p) {
  const int n = require(p.n, "n", 1, "rational-function");
  require_polys(p, 2, "rational-function");
  const auto un = static_cast<unsigned>(n);
  EquationSystem sys;
  sys.name = "rational-function";
  sys.variables = {"x", "y", "z", "d"};
  std::vector<Term> t;
  t.push_back({1, {{"x", 1}}});
  append(t, poly_terms(p.polys[0], "d"));
  t.push_back({-1, {{"y", 1}, {"z", un}}});
  for (const auto& [deg, c] : p.polys[1].coefficients()) t.push_back({-c, {{"d", deg}, {"z", un}}});
  sys.equations.emplace_back(std::move(t));

  std::vector<Term> den{{1, {{"y", 1}}}};
  append(den, poly_terms(p.polys[1], "d"));
  sys.nonzero.emplace_back(std::move(den));
  sys.status = RegularityStatus::RegularByPaper;
  return finish(std::move(sys));
}

// lhs - rhs - P(t), with lhs/rhs given as term lists.
Equation shifted(std::vector<Term> lhs, const std::vector<Term>& rhs, const PolyZ0& p) {
  for (const auto& r : rhs) lhs.push_back({-r.coeff, r.monomial});
  append(lhs, poly_terms(p, "t", -1));
  return Equation(std::move(lhs));
}

Term var(const std::string& v, unsigned e = 1) { return {1, {{v, e}}}; }

EquationSystem concluding_1(const TemplateParams& p) {
  require_polys(p, 3, "concluding-1");
  EquationSystem sys;
  sys.name = "concluding-1";
  sys.variables = {"x", "y", "z", "w", "u", "t"};
  sys.equations.push_back(shifted({var("x"), var("y")}, {var("z")}, p.polys[0]));
  sys.equations.push_back(shifted({var("x"), var("y", 2)}, {var("w")}, p.polys[1]));
  sys.equations.push_back(shifted({var("x"), var("y", 3)}, {var("u")}, p.polys[2]));
  sys.status = RegularityStatus::Unknown;
  return finish(std::move(sys));
}

EquationSystem concluding_2(const TemplateParams& p) {
  require_polys(p, 2, "concluding-2");
  EquationSystem sys;
  sys.name = "concluding-2";
  sys.variables = {"x", "y", "z", "t"};
  sys.equations.push_back(shifted({var("x"), var("y")}, {var("z", 2)}, p.polys[0]));
  sys.equations.push_back(shifted({var("x"), var("y")}, {var("z", 3)}, p.polys[1]));
  sys.status = RegularityStatus::Unknown;
  return finish(std::move(sys));
}

EquationSystem concluding_3(const TemplateParams& p) {
  require_polys(p, 3, "concluding-3");
  EquationSystem sys;
  sys.name = "concluding-3";
  append(sys.variables, indexed_range("x", 5));
  append(sys.variables, indexed_range("y", 4));
  sys.variables.push_back("t");
  for (int i = 1; i <= 3; ++i) {
    std::vector<Term> lhs{var(indexed("x", i)), var(indexed("x", i + 1)), var(indexed("x", i + 2))};
    Term prod{1, {{indexed("y", i), 1}, {indexed("y", i + 1), 1}}};
    sys.equations.push_back(shifted(std::move(lhs), {prod}, p.polys[static_cast<std::size_t>(i - 1)]));
  }
  sys.status = RegularityStatus::Unknown;
  return finish(std::move(sys));
}

}  // namespace

EquationSystem build_linear(const MatrixQ& a, std::string name) {
  EquationSystem sys;
  sys.name = std::move(name);
  sys.variables = indexed_range("x", static_cast<int>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Term> t;
    for (std::size_t j = 0; j < a.cols(); ++j) t.push_back({a.at(i, j), {{sys.variables[j], 1}}});
    sys.equations.emplace_back(std::move(t));
  }
  sys.status = column_condition(a) ? RegularityStatus::RegularByPaper : RegularityStatus::NotRegular;
  return finish(std::move(sys));
}

EquationSystem build_nonlinear_rado(const MatrixQ& a, const PolyColumn& p) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (n < 2) throw std::invalid_argument("nonlinear Rado system needs at least two columns");
  if (p.size() != m) throw std::invalid_argument("polynomial column length must equal the row count");

  EquationSystem sys;
  sys.name = "nonlinear-rado";
  auto xs = indexed_range("x", static_cast<int>(n - 1));
  auto ys = indexed_range("y", static_cast<int>(m));
  append(sys.variables, xs);
  append(sys.variables, ys);
  sys.variables.push_back("z");
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Term> t;
    for (std::size_t j = 0; j + 1 < n; ++j) t.push_back({a.at(i, j), {{xs[j], 1}}});
    t.push_back({a.at(i, n - 1), {{ys[i], 1}}});
    append(t, poly_terms(p[i], "z"));
    sys.equations.emplace_back(std::move(t));
  }
  sys.status = column_condition(a) ? RegularityStatus::RegularByPaper : RegularityStatus::Unknown;
  return finish(std::move(sys));
}

EquationSystem build_template(std::string_view family, const TemplateParams& params) {
  if (family == "schur") {
    auto sys = build_nonlinear_rado(MatrixQ{{1, 1, -1}}, {PolyZ0{}});
    sys.variables.pop_back();  // z is unused when P = 0
    sys.name = "schur";
    return finish(std::move(sys));
  }
  if (family == "multiplicative-schur") {
    EquationSystem sys;
    sys.name = "multiplicative-schur";
    sys.variables = {"x", "y", "z"};
    sys.equations.emplace_back(std::vector<Term>{{1, {{"x", 1}, {"y", 1}}}, {-1, {{"z", 1}}}});
    sys.status = RegularityStatus::RegularByPaper;
    return finish(std::move(sys));
  }
  if (family == "poly-sum-product") return poly_sum_product(params);
  if (family == "sums-with-poly") return sums_with_poly(params);
  if (family == "power-product") return power_product(params);
  if (family == "ap-times-product") return ap_times_product(params);
  if (family == "ap-times-power") return ap_times_power(params);
  if (family == "rational-function") return rational_function(params);
  if (family == "concluding-1") return concluding_1(params);
  if (family == "concluding-2") return concluding_2(params);
  if (family == "concluding-3") return concluding_3(params);
  throw std::invalid_argument("unknown template '" + std::string(family) + "'");
}

std::vector<std::string> template_names() {
  return {"schur",          "multiplicative-schur", "poly-sum-product", "sums-with-poly",
          "power-product",  "ap-times-product",     "ap-times-power",   "rational-function",
          "concluding-1",   "concluding-2",         "concluding-3"};
}

}  // namespace kpr
