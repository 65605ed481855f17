// Acceptance gate: runs each criterion and prints one PASS/FAIL line per
// criterion. Exits nonzero when a hard criterion fails; the last criterion
// is soft and only logs its misses.

#include "kpr/colorings/coloring.hpp"
#include "kpr/colorings/fsfp.hpp"
#include "kpr/radomat/column_condition.hpp"
#include "kpr/search/search.hpp"
#include "kpr/systems/constructions.hpp"
#include "kpr/systems/templates.hpp"
#include "kpr/exactq/linalg.hpp"

#include "../oracles/oracles.hpp"
#include "../support/gen.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace kpr;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

SearchBudget budget(std::uint64_t n) {
  SearchBudget b;
  b.range_n = n;
  return b;
}

EquationSystem linear(std::initializer_list<std::int64_t> row, Distinctness d) {
  MatrixQ a(1, row.size());
  std::size_t j = 0;
  for (auto v : row) a.at(0, j++) = Rational(v);
  EquationSystem sys = build_linear(a);
  sys.distinctness = d;
  return sys;
}

// Every matrix of the given shape with entries in [-3, 3].
Outcome column_condition_sweep() {
  Outcome o;
  std::uint64_t total = 0, satisfied = 0;
  const std::pair<std::size_t, std::size_t> shapes[] = {{1, 3}, {1, 4}, {2, 3}, {2, 4}};
  for (const auto& [m, n] : shapes) {
    const std::size_t cells = m * n;
    std::vector<int> digits(cells, 0);
    MatrixQ a(m, n);
    for (;;) {
      for (std::size_t k = 0; k < cells; ++k) a.at(k / n, k % n) = Rational(digits[k] - 3);
      const auto dp = column_condition(a);
      const auto naive = column_condition_naive(a);
      ++total;
      if (dp.has_value() != naive.has_value()) fail(o, "deciders disagree on\n" + a.str());
      if (dp && !is_valid_witness(a, *dp)) fail(o, "invalid DP witness for\n" + a.str());
      if (naive && !is_valid_witness(a, *naive)) fail(o, "invalid naive witness for\n" + a.str());
      satisfied += dp.has_value();
      std::size_t k = 0;
      while (k < cells && digits[k] == 6) digits[k++] = 0;
      if (k == cells) break;
      ++digits[k];
    }
  }
  if (o.pass) o.detail = std::to_string(total) + " matrices, " + std::to_string(satisfied) + " satisfied";
  return o;
}

Outcome worked_examples() {
  Outcome o;
  auto expect = [&](const MatrixQ& a, bool sat, const std::string& name) {
    const auto w = column_condition(a);
    if (w.has_value() != sat) fail(o, name + ": wrong answer");
    if (oracle::column_condition(a) != sat) fail(o, name + ": oracle disagrees");
    if (w && !is_valid_witness(a, *w)) fail(o, name + ": invalid witness");
  };
  expect(MatrixQ{{1, 1, -1}}, true, "(1 1 -1)");
  for (int m : {3, 4}) {
    MatrixQ a(static_cast<std::size_t>(m), static_cast<std::size_t>(m + 2));
    for (int i = 0; i < m; ++i) {
      a.at(static_cast<std::size_t>(i), 0) = 1;
      a.at(static_cast<std::size_t>(i), 1) = i + 1;
      a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 2)) = -1;
    }
    expect(a, true, "progression matrix m=" + std::to_string(m));
  }
  const MatrixQ ex{{1, 2, -3}, {2, -1, -1}};
  expect(ex, true, "example matrix");
  const auto w = column_condition(ex);
  if (!w || w->blocks != std::vector<std::vector<std::size_t>>{{0, 1, 2}}) fail(o, "example matrix: first block is not {1,2,3}");
  expect(MatrixQ{{1, 1, -3}}, false, "(1 1 -3)");
  return o;
}

Outcome schur_number() {
  Outcome o;
  const EquationSystem schur = build_template("schur", {});
  const auto res = rado_number(schur, 2, budget(50));
  if (res.status != SearchStatus::Found || res.value != 5u) fail(o, "rado_number is not 5");
  if (!res.avoider || res.avoider->colors() != std::vector<std::uint32_t>{0, 1, 1, 0}) fail(o, "avoider is not {1,4}/{2,3}");
  std::vector<std::uint32_t> avoider;
  if (oracle::every_coloring_forced(schur, 2, 4, &avoider)) fail(o, "oracle: some 2-coloring of [1..4] should avoid");
  if (!oracle::every_coloring_forced(schur, 2, 5)) fail(o, "oracle: every 2-coloring of [1..5] should be forced");
  return o;
}

Outcome van_der_waerden_number() {
  Outcome o;
  const EquationSystem sys = linear({1, 1, -2}, Distinctness::Nontrivial);
  const auto res = rado_number(sys, 2, budget(50));
  if (res.status != SearchStatus::Found || res.value != 9u) fail(o, "rado_number is not 9");
  if (oracle::brute_rado_number(sys, 2, 9) != 9) fail(o, "exhaustive oracle is not 9");
  return o;
}

Outcome construction_identities() {
  Outcome o;
  gen::Gen g(1001);
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<std::size_t>(g.integer(1, 4));
    const auto m = static_cast<std::size_t>(g.integer(1, 3));
    const auto r = static_cast<std::size_t>(g.integer(1, 3));
    std::vector<Rational> as, bs;
    for (std::size_t k = 0; k < n; ++k) as.push_back(Rational(g.integer(1, 20)));
    for (std::size_t k = 0; k + 1 < m; ++k) bs.push_back(Rational(g.integer(1, 20)));
    std::vector<PolyZ0> polys;
    for (std::size_t k = 0; k < r; ++k) polys.push_back(g.poly(3));
    const Rational d(g.integer(1, 50));
    const auto asg = construct_poly_sum_product(as, bs, Rational(g.integer(1, 1000)), d, polys);
    for (std::size_t k = 0; k < r; ++k) {
      Rational sum;
      for (std::size_t j = 1; j <= n; ++j) sum += asg.at("x" + std::to_string(j));
      Rational prod = asg.at("z" + std::to_string(k + 1));
      for (std::size_t j = 1; j <= m; ++j) prod *= asg.at("y" + std::to_string(j));
      if (sum - polys[k].eval(asg.at("y" + std::to_string(m + 1))) != prod) fail(o, "sum-product identity broken");
    }
  }
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
    const EquationSystem sys = build_nonlinear_rado(a, p);
    for (const auto& eq : sys.equations) {
      if (!eval_equation(eq, asg).is_zero()) fail(o, "nonzero residual in nonlinear Rado construction");
    }
    ++done;
  }
  return o;
}

Outcome falsifying_coloring() {
  Outcome o;
  const EquationSystem sys = linear({1, 1, -3}, Distinctness::AllowRepeats);
  const Coloring c = rado_avoider_coloring({1, 1, -3}, 5).take(10000);
  const auto out = find_mono_solution(sys, c, budget(10000));
  if (out.status != SearchStatus::NoneInRange) fail(o, "status " + to_string(out.status));
  o.detail = std::to_string(out.nodes) + " nodes";
  return o;
}

Outcome cnf_cross_check() {
  Outcome o;
  const EquationSystem schur = build_template("schur", {});
  for (std::uint64_t n : {4, 5}) {
    const CnfInstance cnf = export_cnf(schur, 2, n);
    const bool sat = dpll_solve(cnf).has_value();
    const auto sets = solution_value_sets(schur, n, 10'000'000);
    const bool avoid = find_avoiding_coloring(sets.sets, n, 2, 10'000'000).status == SearchStatus::Found;
    if (cnf.truncated) fail(o, "truncated encoding");
    if (sat != (n == 4)) fail(o, "N=" + std::to_string(n) + " has the wrong satisfiability");
    if (sat != avoid) fail(o, "N=" + std::to_string(n) + ": DPLL and backtracker disagree");
  }
  return o;
}

Outcome example_system() {
  Outcome o;
  const EquationSystem sys =
      build_nonlinear_rado(MatrixQ{{1, 2, -3}, {2, -1, -1}}, {PolyZ0::parse("z^2+z"), PolyZ0::parse("z^3")});
  const Coloring one = Coloring::uniform(10);
  const auto out = find_mono_solution(sys, one, budget(10));
  if (out.status != SearchStatus::Found) {
    fail(o, "no solution found");
    return o;
  }
  for (const auto& eq : sys.equations) {
    if (!eval_equation(eq, out.solution->assignment()).is_zero()) fail(o, "nonzero residual");
  }
  const SolutionRecord hand{sys.name, sys.variables, {2, 1, 2, 4, 1}, 0};
  if (!validate_solution(sys, one, hand)) fail(o, "(2,1,2,4,1) does not validate");
  std::ostringstream vals;
  for (auto v : out.solution->values) vals << v << ' ';
  if (o.pass) o.detail = "found " + vals.str();
  return o;
}

Outcome fsfp_correctness() {
  Outcome o;
  gen::Gen g(1009);
  for (int i = 0; i < 200; ++i) {
    const auto len = static_cast<std::size_t>(g.integer(1, 5));
    std::vector<Integer> a, b;
    for (std::size_t k = 0; k < len; ++k) {
      a.emplace_back(static_cast<long>(g.integer(1, 40)));
      b.emplace_back(static_cast<long>(g.integer(1, 9)));
    }
    if (fs(a) != oracle::subset_fold(a, false)) fail(o, "fs mismatch");
    if (fp(b) != oracle::subset_fold(b, true)) fail(o, "fp mismatch");
    const auto n = static_cast<std::size_t>(g.integer(1, static_cast<std::int64_t>(len)));
    if (mixed_structure(a, b, n) != oracle::mixed(a, b, n)) fail(o, "mixed structure mismatch");
    std::vector<IntSet> sets;
    for (std::size_t k = 0; k < std::min<std::size_t>(len, 4); ++k) {
      IntSet s;
      const auto sz = g.integer(1, 3);
      for (int t = 0; t < sz; ++t) s.emplace(static_cast<long>(g.integer(1, 12)));
      sets.push_back(s);
    }
    if (fs_sets(sets) != oracle::selector_fold(sets, false)) fail(o, "fs_sets mismatch");
    if (fp_sets(sets) != oracle::selector_fold(sets, true)) fail(o, "fp_sets mismatch");
  }
  int witnesses = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto w = search_fsfp(Coloring::random(300, 2, seed), 2);
    if (!w) continue;
    ++witnesses;
    const Integer &a1 = w->a_seq[0], &a2 = w->a_seq[1], &b2 = w->b_seq[1];
    if (Integer((a1 + a2) * b2) != Integer(a1 * b2 + a2 * b2)) fail(o, "distributivity fails");
  }
  if (o.pass) o.detail = "distributivity checked on " + std::to_string(witnesses) + " witnesses";
  return o;
}

Outcome fsfp_desk_scale(bool& soft_miss) {
  Outcome o;
  int found = 0;
  std::string misses;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Coloring c = Coloring::random(500, 2, 7000 + seed);
    const auto w = search_fsfp(c, 2);
    if (!w) {
      misses += " " + std::to_string(7000 + seed);
      continue;
    }
    if (!verify_fsfp(*w, c)) fail(o, "witness for seed " + std::to_string(7000 + seed) + " does not verify");
    ++found;
  }
  soft_miss = found < 95;
  o.detail = std::to_string(found) + "/100 colorings have a depth-2 witness";
  if (!misses.empty()) o.detail += "; no witness for seeds" + misses;
  return o;
}

}  // namespace

int main() {
  bool hard_failure = false;
  auto report = [&](int id, const std::string& name, const std::function<Outcome()>& f) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    hard_failure = hard_failure || !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << id << " " << name << " (" << s << " s)";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  };

  report(1, "column condition deciders agree on every small matrix", column_condition_sweep);
  report(2, "column condition on the worked examples", worked_examples);
  report(3, "two-color Schur number is 5", schur_number);
  report(4, "two-color number for x+y=2z with x!=y is 9", van_der_waerden_number);
  report(5, "construction identities hold exactly", construction_identities);
  report(6, "mod-5 coloring has no monochromatic x+y=3z in [1..10000]", falsifying_coloring);
  report(7, "CNF satisfiability matches the coloring backtracker", cnf_cross_check);
  report(8, "example nonlinear system solved in one color", example_system);
  report(9, "finite sums and products match subset enumeration", fsfp_correctness);

  bool soft_miss = false;
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fsfp_desk_scale(soft_miss);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = o.pass && !soft_miss;
  std::cout << (pass ? "PASS " : "FAIL ") << "10 depth-2 FS/FP witnesses in random colorings of [1..500] (soft, " << s
            << " s): " << o.detail << std::endl;
  // Misses here are logged only; a witness that fails verification is still a hard failure.
  hard_failure = hard_failure || !o.pass;
  return hard_failure ? 1 : 0;
}
