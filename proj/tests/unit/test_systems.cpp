#include "kpr/exactq/linalg.hpp"
#include "kpr/radomat/expanded.hpp"
#include "kpr/systems/constructions.hpp"
#include "kpr/systems/templates.hpp"

#include "../support/gen.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace kpr;

namespace {

PolyZ0 P(const char* s) { return PolyZ0::parse(s); }

std::vector<std::string> strs(const EquationSystem& sys) {
  std::vector<std::string> out;
  for (const auto& e : sys.equations) out.push_back(e.str());
  return out;
}

ConstructionAssignment assign(std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
  ConstructionAssignment a;
  for (const auto& [k, v] : kv) a[k] = Rational(v);
  return a;
}

bool all_residuals_zero(const EquationSystem& sys, const ConstructionAssignment& a) {
  for (const auto& eq : sys.equations) {
    if (!eval_equation(eq, a).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("equation canonical form merges and drops terms") {
  const Equation e({{Rational(2), {{"x", 1}}}, {Rational(-2), {{"x", 1}}}, {Rational(3), {{"y", 2}}}, {Rational(0), {{"z", 1}}}});
  REQUIRE(e.terms().size() == 1);
  CHECK(e.str() == "3*y^2 = 0");
  CHECK(e.variables() == std::set<std::string>{"y"});
}

TEST_CASE("nonlinear Rado system from the worked example") {
  const EquationSystem sys = build_nonlinear_rado(MatrixQ{{1, 2, -3}, {2, -1, -1}}, {P("z^2+z"), P("z^3")});
  CHECK(sys.variables == std::vector<std::string>{"x1", "x2", "y1", "y2", "z"});
  CHECK(strs(sys) == std::vector<std::string>{"x1 + 2*x2 - 3*y1 + z + z^2 = 0", "2*x1 - x2 - y2 + z^3 = 0"});
  CHECK(sys.status == RegularityStatus::RegularByPaper);
  const auto a = assign({{"x1", 2}, {"x2", 1}, {"y1", 2}, {"y2", 4}, {"z", 1}});
  CHECK(eval_equation(sys.equations[0], a).is_zero());
  CHECK(eval_equation(sys.equations[1], a).is_zero());

  CHECK(strs(build_nonlinear_rado(MatrixQ{{1, 1, -1}}, {PolyZ0()})) == std::vector<std::string>{"x1 + x2 - y1 = 0"});
  CHECK(strs(build_nonlinear_rado(MatrixQ{{1, 1, -1}}, {P("z^2")})) == std::vector<std::string>{"x1 + x2 - y1 + z^2 = 0"});
  CHECK_THROWS_AS(build_nonlinear_rado(MatrixQ{{1, 1, -1}}, {P("z"), P("z")}), std::invalid_argument);
  CHECK_THROWS_AS(build_nonlinear_rado(MatrixQ{{1}}, {P("z")}), std::invalid_argument);
  CHECK(build_nonlinear_rado(MatrixQ{{1, 1, -3}}, {P("z")}).status == RegularityStatus::Unknown);
}

TEST_CASE("template examples") {
  CHECK(strs(build_template("power-product", {2, {}, {}, {P("z^2"), P("z^3")}})) ==
        std::vector<std::string>{"x*y - z^2 - z1 = 0", "x*y^2 - z^3 - z2 = 0"});
  CHECK(strs(build_template("poly-sum-product", {1, 1, {}, {PolyZ0()}})) == std::vector<std::string>{"x1 - y1*z1 = 0"});
  CHECK(strs(build_template("ap-times-product", {3, 1, 2, {}})) ==
        std::vector<std::string>{"x1 + x2 + x3 - y1*z1 = 0", "x1 + 2*x2 + x3 - y1*z2 = 0"});
  CHECK(build_template("schur", {}).variables.size() == 3);
  CHECK(build_template("concluding-1", {{}, {}, {}, {P("z"), P("z"), P("z")}}).status == RegularityStatus::Unknown);
  CHECK(build_template("concluding-3", {{}, {}, {}, {P("z"), P("z"), P("z")}}).equations.size() == 3);
  const auto rf = build_template("rational-function", {2, {}, {}, {P("z"), P("z^2")}});
  CHECK(rf.nonzero.size() == 1);
}

TEST_CASE("template parameter errors") {
  CHECK_THROWS_AS(build_template("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(build_template("ap-times-product", {2, 1, 2, {}}), std::invalid_argument);   // n > 2
  CHECK_THROWS_AS(build_template("ap-times-power", {3, 1, 2, {}}), std::invalid_argument);     // m > 1
  CHECK_THROWS_AS(build_template("power-product", {2, {}, {}, {P("z")}}), std::invalid_argument);
  CHECK_THROWS_AS(build_template("poly-sum-product", {1, {}, {}, {P("z")}}), std::invalid_argument);
  CHECK_THROWS_AS(build_template("concluding-2", {}), std::invalid_argument);
}

TEST_CASE("eval_equation examples") {
  const EquationSystem schur = build_template("schur", {});
  CHECK(eval_equation(schur.equations[0], assign({{"x1", 2}, {"x2", 3}, {"y1", 5}})).is_zero());
  CHECK(eval_equation(schur.equations[0], assign({{"x1", 1}, {"x2", 1}, {"y1", 3}})) == Rational(-1));
  CHECK_THROWS_AS(eval_equation(schur.equations[0], assign({{"x1", 1}})), std::out_of_range);
}

TEST_CASE("integrality check") {
  CHECK(integrality_check(assign({{"x", 5}, {"y", 1}})));
  CHECK_FALSE(integrality_check({{"x", Rational(5, 2)}}));
  CHECK_FALSE(integrality_check(assign({{"x", 0}})));
}

TEST_CASE("system json round trip") {
  EquationSystem sys = build_template("rational-function", {2, {}, {}, {P("1/2*z"), P("z^2")}});
  sys.distinctness = Distinctness::Nontrivial;
  const nlohmann::json j = sys;
  const EquationSystem back = j.get<EquationSystem>();
  CHECK(back.name == sys.name);
  CHECK(back.variables == sys.variables);
  CHECK(back.equations == sys.equations);
  CHECK(back.nonzero == sys.nonzero);
  CHECK(back.distinctness == Distinctness::Nontrivial);
  CHECK(back.status == sys.status);

  const auto bad = nlohmann::json::parse(
      R"({"name":"b","variables":["x"],"equations":[{"terms":[{"coeff":"1","monomial":{"q":1}}]}]})");
  CHECK_THROWS(bad.get<EquationSystem>());
  const auto fraction = nlohmann::json::parse(
      R"({"name":"f","variables":["x"],"equations":[{"terms":[{"coeff":"3/6","monomial":{"x":2}}]}]})");
  CHECK(fraction.get<EquationSystem>().equations[0].terms()[0].coeff == Rational(1, 2));
}

TEST_CASE("sum-product construction examples") {
  const auto a = construct_poly_sum_product({Rational(1)}, {}, Rational(5), Rational(1), {P("z^2")});
  CHECK(a == ConstructionAssignment{{"x1", Rational(5)}, {"y1", Rational(1)}, {"y2", Rational(1)}, {"z1", Rational(4)}});
  const auto b = construct_poly_sum_product({Rational(1), Rational(2)}, {Rational(3)}, Rational(1), Rational(1), {PolyZ0()});
  CHECK(b.at("z1") == Rational(1));
  CHECK(b.at("x1") == Rational(3));
  CHECK(b.at("x2") == Rational(6));
  CHECK(b.at("y1") == Rational(3));
  CHECK(b.at("y2") == Rational(3));
  CHECK_THROWS_AS(construct_poly_sum_product({Rational(1), Rational(-1)}, {}, Rational(1), Rational(1), {P("z")}),
                  std::domain_error);
}

TEST_CASE("nonlinear Rado construction examples") {
  const auto a = construct_nonlinear_rado(MatrixQ{{1, 1, -1}}, {Rational(1), Rational(1), Rational(2)}, Rational(10),
                                          Rational(2), {P("z^2")});
  CHECK(a.at("y1") == Rational(24));
  CHECK(a.at("x1") == Rational(10));
  CHECK(all_residuals_zero(build_nonlinear_rado(MatrixQ{{1, 1, -1}}, {P("z^2")}), a));

  const MatrixQ ex{{1, 2, -3}, {2, -1, -1}};
  const PolyColumn p{P("z^2+z"), P("z^3")};
  const auto b = construct_nonlinear_rado(ex, {Rational(1), Rational(1), Rational(1)}, Rational(100), Rational(1), p);
  CHECK(all_residuals_zero(build_nonlinear_rado(ex, p), b));

  CHECK_THROWS_AS(construct_nonlinear_rado(ex, {Rational(1), Rational(0), Rational(1)}, Rational(1), Rational(1), p),
                  std::invalid_argument);
  CHECK_THROWS_AS(construct_nonlinear_rado(MatrixQ{{1, -1, 0}}, {Rational(1), Rational(1), Rational(0)}, Rational(1),
                                           Rational(1), {P("z")}),
                  std::domain_error);
}

TEST_CASE("power-product construction") {
  const std::vector<PolyZ0> polys{P("z^2"), P("z^3")};
  const auto a = construct_power_product(Rational(3), Rational(2), Rational(5), Rational(2), polys);
  CHECK(all_residuals_zero(build_template("power-product", {2, {}, {}, polys}), a));
}

TEST_CASE("property: sum-product construction satisfies every equation exactly") {
  gen::Gen g(41);
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<std::size_t>(g.integer(1, 4));
    const auto m = static_cast<std::size_t>(g.integer(1, 3));
    const auto r = static_cast<std::size_t>(g.integer(1, 3));
    std::vector<Rational> as, bs;
    for (std::size_t k = 0; k < n; ++k) as.push_back(Rational(g.integer(1, 20)));
    for (std::size_t k = 0; k + 1 < m; ++k) bs.push_back(Rational(g.integer(1, 20)));
    std::vector<PolyZ0> polys;
    for (std::size_t k = 0; k < r; ++k) polys.push_back(g.poly(3));
    const Rational a(g.integer(1, 1000));
    const Rational d(g.integer(1, 50));
    const auto asg = construct_poly_sum_product(as, bs, a, d, polys);
    TemplateParams tp;
    tp.n = static_cast<int>(n);
    tp.m = static_cast<int>(m);
    tp.polys = polys;
    const EquationSystem sys = build_template("poly-sum-product", tp);
    for (std::size_t k = 0; k < r; ++k) {
      // x1+..+xn - P_k(y_{m+1}) equals y1..ym * z_k.
      Rational lhs;
      for (std::size_t j = 1; j <= n; ++j) lhs += asg.at("x" + std::to_string(j));
      lhs -= polys[k].eval(d);
      Rational rhs = asg.at("z" + std::to_string(k + 1));
      for (std::size_t j = 1; j <= m; ++j) rhs *= asg.at("y" + std::to_string(j));
      CHECK(lhs == rhs);
    }
    CHECK(all_residuals_zero(sys, asg));

    // Subset sums of the x's factor as (sum of a_t) * b_1..b_{m-1} * a.
    Rational bprod(1);
    for (const auto& b : bs) bprod *= b;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Rational xs, as_sum;
      for (std::size_t t = 0; t < n; ++t) {
        if (mask >> t & 1) {
          xs += asg.at("x" + std::to_string(t + 1));
          as_sum += as[t];
        }
      }
      CHECK(xs == as_sum * bprod * a);
    }
  }
}

TEST_CASE("property: nonlinear Rado construction has zero residuals") {
  gen::Gen g(42);
  int done = 0;
  while (done < 1000) {
    const auto m = static_cast<std::size_t>(g.integer(1, 3));
    const auto n = static_cast<std::size_t>(g.integer(2, 5));
    const MatrixQ a = g.int_matrix(m, n, 4);
    const auto basis = kernel_basis(a);
    if (basis.empty()) continue;
    VectorQ x(n, Rational(0));
    for (const auto& b : basis) x = x + g.rational(6) * b;
    bool usable = !x[n - 1].is_zero();
    for (std::size_t i = 0; i < m && usable; ++i) usable = !a.at(i, n - 1).is_zero();
    if (!usable) continue;
    PolyColumn p;
    for (std::size_t i = 0; i < m; ++i) p.push_back(g.poly(3));
    const auto asg = construct_nonlinear_rado(a, x, g.nonzero_rational(100), g.rational(20), p);
    CHECK(all_residuals_zero(build_nonlinear_rado(a, p), asg));
    ++done;
  }
}

TEST_CASE("property: linear part of the nonlinear Rado system is E(A)") {
  gen::Gen g(43);
  for (int i = 0; i < 500; ++i) {
    const auto m = static_cast<std::size_t>(g.integer(1, 3));
    const auto n = static_cast<std::size_t>(g.integer(2, 5));
    const MatrixQ a = g.int_matrix(m, n, 3);
    PolyColumn p;
    for (std::size_t k = 0; k < m; ++k) p.push_back(g.poly(2));
    const EquationSystem sys = build_nonlinear_rado(a, p);
    const MatrixQ e = expand_matrix(a).expanded;
    REQUIRE(sys.equations.size() == m);
    for (std::size_t r = 0; r < m; ++r) {
      // Collect the degree-one coefficients of x's and y's from the equation.
      for (std::size_t c = 0; c < e.cols(); ++c) {
        const std::string var = c + 1 < n ? "x" + std::to_string(c + 1) : "y" + std::to_string(c - (n - 1) + 1);
        Rational coeff;
        for (const auto& t : sys.equations[r].terms()) {
          if (t.monomial == Monomial{{var, 1}}) coeff = t.coeff;
        }
        CHECK(coeff == e.at(r, c));
      }
    }
  }
}
