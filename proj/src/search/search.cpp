#include "kpr/search/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace kpr {

void SearchBudget::validate() const {
  if (range_n == 0) throw std::invalid_argument("search budget: range must be positive");
  if (node_limit == 0) throw std::invalid_argument("search budget: node limit must be positive");
  if (workers == 0) throw std::invalid_argument("search budget: need at least one worker");
  if (time_hint < 0) throw std::invalid_argument("search budget: time hint must be nonnegative");
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NoneInRange: return "none-in-range";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

ConstructionAssignment SolutionRecord::assignment() const {
  ConstructionAssignment out;
  for (std::size_t i = 0; i < variables.size() && i < values.size(); ++i) out[variables[i]] = Rational(values[i]);
  return out;
}

namespace {

__extension__ typedef __int128 i128;

struct CTerm {
  Integer coeff;
  i128 small = 0;
  bool fits = false;
  std::vector<std::pair<std::size_t, unsigned>> factors;  // (variable index, exponent)
};
using TermList = std::vector<CTerm>;

// Integer-scaled equation; `last` is its last variable in declared order.
struct CEq {
  TermList all;
  TermList with_last;     // terms containing `last`, that factor removed
  TermList without_last;  // the rest
  long last = -1;
  bool linear = false;
};

bool checked_mul(i128 a, i128 b, i128& out) { return !__builtin_mul_overflow(a, b, &out); }
bool checked_add(i128 a, i128 b, i128& out) { return !__builtin_add_overflow(a, b, &out); }

bool eval_small(const TermList& terms, const std::int64_t* vals, i128& out) {
  i128 sum = 0;
  for (const auto& t : terms) {
    if (!t.fits) return false;
    i128 prod = t.small;
    for (const auto& [idx, exp] : t.factors) {
      for (unsigned e = 0; e < exp; ++e) {
        if (!checked_mul(prod, vals[idx], prod)) return false;
      }
    }
    if (!checked_add(sum, prod, sum)) return false;
  }
  out = sum;
  return true;
}

Integer eval_big(const TermList& terms, const std::int64_t* vals) {
  Integer sum = 0;
  for (const auto& t : terms) {
    Integer prod = t.coeff;
    for (const auto& [idx, exp] : t.factors) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), Integer(static_cast<long>(vals[idx])).get_mpz_t(), exp);
      prod *= p;
    }
    sum += prod;
  }
  return sum;
}

bool is_zero_at(const TermList& terms, const std::int64_t* vals) {
  i128 v = 0;
  if (eval_small(terms, vals, v)) return v == 0;
  return eval_big(terms, vals) == 0;
}

CTerm make_term(const Integer& coeff, std::vector<std::pair<std::size_t, unsigned>> factors) {
  CTerm t;
  t.coeff = coeff;
  t.fits = coeff.fits_slong_p();
  if (t.fits) t.small = coeff.get_si();
  t.factors = std::move(factors);
  return t;
}

CEq compile_equation(const Equation& eq, const std::map<std::string, std::size_t>& index) {
  Integer scale = 1;
  for (const auto& t : eq.terms()) {
    const Integer d = t.coeff.denominator();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
  }
  CEq out;
  std::vector<std::vector<std::pair<std::size_t, unsigned>>> factor_lists;
  std::vector<Integer> coeffs;
  for (const auto& t : eq.terms()) {
    std::vector<std::pair<std::size_t, unsigned>> f;
    for (const auto& [name, exp] : t.monomial) {
      const auto idx = index.at(name);
      f.emplace_back(idx, exp);
      out.last = std::max(out.last, static_cast<long>(idx));
    }
    coeffs.push_back(t.coeff.numerator() * (scale / t.coeff.denominator()));
    factor_lists.push_back(std::move(f));
  }
  out.linear = out.last >= 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out.all.push_back(make_term(coeffs[i], factor_lists[i]));
    auto f = factor_lists[i];
    auto it = std::find_if(f.begin(), f.end(), [&](const auto& p) { return static_cast<long>(p.first) == out.last; });
    if (it == f.end()) {
      out.without_last.push_back(make_term(coeffs[i], f));
    } else {
      if (it->second != 1) out.linear = false;
      f.erase(it);
      out.with_last.push_back(make_term(coeffs[i], f));
    }
  }
  return out;
}

struct Compiled {
  std::size_t nvars = 0;
  Distinctness distinctness = Distinctness::AllowRepeats;
  std::vector<std::vector<CEq>> eqs_by_last;       // checked once the variable is set
  std::vector<std::vector<CEq>> nonzero_by_last;
  std::vector<long> solver;                        // index into eqs_by_last[k] or -1
  bool impossible = false;                         // a constant equation or condition fails
};

Compiled compile(const EquationSystem& sys) {
  sys.validate();
  Compiled c;
  c.nvars = sys.variables.size();
  c.distinctness = sys.distinctness;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < sys.variables.size(); ++i) index[sys.variables[i]] = i;
  c.eqs_by_last.resize(c.nvars);
  c.nonzero_by_last.resize(c.nvars);
  c.solver.assign(c.nvars, -1);
  for (const auto& eq : sys.equations) {
    CEq ce = compile_equation(eq, index);
    if (ce.last < 0) {
      if (!is_zero_at(ce.all, nullptr)) c.impossible = true;
      continue;
    }
    auto& bucket = c.eqs_by_last[static_cast<std::size_t>(ce.last)];
    if (ce.linear && c.solver[static_cast<std::size_t>(ce.last)] < 0) {
      c.solver[static_cast<std::size_t>(ce.last)] = static_cast<long>(bucket.size());
    }
    bucket.push_back(std::move(ce));
  }
  for (const auto& eq : sys.nonzero) {
    CEq ce = compile_equation(eq, index);
    if (ce.last < 0) {
      if (is_zero_at(ce.all, nullptr)) c.impossible = true;
      continue;
    }
    c.nonzero_by_last[static_cast<std::size_t>(ce.last)].push_back(std::move(ce));
  }
  return c;
}

class Engine {
 public:
  using Visit = std::function<bool(const std::vector<std::int64_t>&)>;

  // With a coloring, values range over color class `color`; without one,
  // over [1..n].
  Engine(const Compiled& sys, std::uint64_t n, const Coloring* col, std::uint32_t color, std::uint64_t limit)
      : sys_(sys), n_(n), col_(col), color_(color), limit_(limit), vals_(sys.nvars, 0) {
    if (col_) {
      for (std::uint64_t k = 1; k <= n_; ++k) {
        if ((*col_)[k] == color_) domain_.push_back(static_cast<std::int64_t>(k));
      }
    } else {
      for (std::uint64_t k = 1; k <= n_; ++k) domain_.push_back(static_cast<std::int64_t>(k));
    }
  }

  // Returns false when the node limit cut the run short.
  bool run(const Visit& visit) {
    visit_ = &visit;
    if (!sys_.impossible && !domain_.empty()) dfs(0);
    return !aborted_;
  }

  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  bool in_domain(std::int64_t v) const {
    if (v < 1 || static_cast<std::uint64_t>(v) > n_) return false;
    return !col_ || (*col_)[static_cast<std::uint64_t>(v)] == color_;
  }

  void dfs(std::size_t k) {
    if (k == sys_.nvars) {
      if (sys_.distinctness == Distinctness::Nontrivial &&
          std::all_of(vals_.begin(), vals_.end(), [&](std::int64_t v) { return v == vals_[0]; })) {
        return;
      }
      if (!(*visit_)(vals_)) stopped_ = true;
      return;
    }
    const long s = sys_.solver[k];
    if (s >= 0) {
      const CEq& eq = sys_.eqs_by_last[k][static_cast<std::size_t>(s)];
      i128 coef = 0;
      i128 rest = 0;
      if (eval_small(eq.with_last, vals_.data(), coef) && eval_small(eq.without_last, vals_.data(), rest)) {
        if (coef != 0) {
          if (rest % coef != 0) return;
          const i128 v = -rest / coef;
          if (v >= 1 && v <= static_cast<i128>(n_) && in_domain(static_cast<std::int64_t>(v))) {
            attempt(k, static_cast<std::int64_t>(v));
          }
          return;
        }
        if (rest != 0) return;
      } else {
        const Integer bc = eval_big(eq.with_last, vals_.data());
        const Integer br = eval_big(eq.without_last, vals_.data());
        if (bc != 0) {
          if (!mpz_divisible_p(br.get_mpz_t(), bc.get_mpz_t())) return;
          const Integer v = -br / bc;
          if (v >= 1 && v <= Integer(static_cast<unsigned long>(n_)) && in_domain(v.get_si())) attempt(k, v.get_si());
          return;
        }
        if (br != 0) return;
      }
    }
    for (auto v : domain_) {
      attempt(k, v);
      if (aborted_ || stopped_) return;
    }
  }

  void attempt(std::size_t k, std::int64_t v) {
    if (++nodes_ > limit_) {
      aborted_ = true;
      return;
    }
    if (sys_.distinctness == Distinctness::AllDistinct) {
      for (std::size_t i = 0; i < k; ++i) {
        if (vals_[i] == v) return;
      }
    }
    vals_[k] = v;
    for (const auto& eq : sys_.eqs_by_last[k]) {
      if (!is_zero_at(eq.all, vals_.data())) return;
    }
    for (const auto& eq : sys_.nonzero_by_last[k]) {
      if (is_zero_at(eq.all, vals_.data())) return;
    }
    dfs(k + 1);
  }

  const Compiled& sys_;
  std::uint64_t n_;
  const Coloring* col_;
  std::uint32_t color_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool stopped_ = false;
  const Visit* visit_ = nullptr;
  std::vector<std::int64_t> vals_;
  std::vector<std::int64_t> domain_;
};

struct ClassResult {
  SearchStatus status = SearchStatus::NoneInRange;
  std::vector<std::int64_t> values;
  std::uint64_t nodes = 0;
};

ClassResult search_class(const Compiled& comp, const Coloring& c, std::uint64_t n, std::uint32_t color,
                         std::uint64_t limit) {
  ClassResult out;
  Engine engine(comp, n, &c, color, limit);
  bool found = false;
  const bool complete = engine.run([&](const std::vector<std::int64_t>& vals) {
    out.values = vals;
    found = true;
    return false;
  });
  out.nodes = engine.nodes();
  out.status = found ? SearchStatus::Found : complete ? SearchStatus::NoneInRange : SearchStatus::BudgetExhausted;
  return out;
}

}  // namespace

SearchOutcome find_mono_solution(const EquationSystem& sys, const Coloring& c, const SearchBudget& budget) {
  budget.validate();
  const Compiled comp = compile(sys);
  const std::uint64_t n = std::min<std::uint64_t>(budget.range_n, c.size());
  const unsigned r = c.num_colors();

  std::vector<ClassResult> results(r);
  if (budget.workers <= 1 || r == 1) {
    for (std::uint32_t color = 0; color < r; ++color) {
      results[color] = search_class(comp, c, n, color, budget.node_limit);
      if (results[color].status == SearchStatus::Found) break;
    }
  } else {
    std::atomic<std::uint32_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min(budget.workers, r); ++w) {
      pool.emplace_back([&] {
        for (std::uint32_t color = next++; color < r; color = next++) {
          results[color] = search_class(comp, c, n, color, budget.node_limit);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  SearchOutcome out;
  bool exhausted = false;
  for (std::uint32_t color = 0; color < r; ++color) {
    out.nodes += results[color].nodes;
    if (results[color].status == SearchStatus::BudgetExhausted) exhausted = true;
    if (results[color].status == SearchStatus::Found && !out.solution) {
      out.solution = SolutionRecord{sys.name, sys.variables, results[color].values, color};
    }
  }
  out.status = out.solution ? SearchStatus::Found : exhausted ? SearchStatus::BudgetExhausted : SearchStatus::NoneInRange;
  return out;
}

SearchStatus enumerate_solutions(const EquationSystem& sys, std::uint64_t n, std::uint64_t node_limit,
                                 const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  const Compiled comp = compile(sys);
  Engine engine(comp, n, nullptr, 0, node_limit);
  return engine.run(visit) ? SearchStatus::Found : SearchStatus::BudgetExhausted;
}

bool validate_solution(const EquationSystem& sys, const Coloring& c, const SolutionRecord& rec) {
  if (rec.values.size() != sys.variables.size() || rec.variables != sys.variables) return false;
  for (auto v : rec.values) {
    if (v < 1 || static_cast<std::uint64_t>(v) > c.size()) return false;
    if (c.color_of(static_cast<std::uint64_t>(v)) != rec.color) return false;
  }
  const ConstructionAssignment a = rec.assignment();
  for (const auto& eq : sys.equations) {
    if (!eval_equation(eq, a).is_zero()) return false;
  }
  for (const auto& eq : sys.nonzero) {
    if (eval_equation(eq, a).is_zero()) return false;
  }
  switch (sys.distinctness) {
    case Distinctness::AllowRepeats: return true;
    case Distinctness::AllDistinct: {
      std::set<std::int64_t> seen(rec.values.begin(), rec.values.end());
      return seen.size() == rec.values.size();
    }
    case Distinctness::Nontrivial:
      return std::any_of(rec.values.begin(), rec.values.end(), [&](std::int64_t v) { return v != rec.values[0]; });
  }
  return false;
}

SolutionSets solution_value_sets(const EquationSystem& sys, std::uint64_t n, std::uint64_t node_limit,
                                 std::uint64_t max_sets) {
  std::set<std::vector<std::uint64_t>> seen;
  SolutionSets out;
  const SearchStatus st = enumerate_solutions(sys, n, node_limit, [&](const std::vector<std::int64_t>& vals) {
    std::vector<std::uint64_t> s(vals.begin(), vals.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    seen.insert(std::move(s));
    if (seen.size() >= max_sets) {
      out.truncated = true;
      return false;
    }
    return true;
  });
  if (st == SearchStatus::BudgetExhausted) out.truncated = true;
  out.sets.assign(seen.begin(), seen.end());
  std::stable_sort(out.sets.begin(), out.sets.end(),
                   [](const auto& a, const auto& b) { return a.back() < b.back(); });
  return out;
}

namespace {

class AvoidSearch {
 public:
  AvoidSearch(const std::vector<std::vector<std::uint64_t>>& sets, std::uint64_t n, unsigned r, std::uint64_t limit)
      : n_(n), r_(r), limit_(limit), by_max_(n + 1), colors_(n + 1, 0) {
    for (const auto& s : sets) {
      if (!s.empty() && s.back() <= n) by_max_[s.back()].push_back(&s);
    }
  }

  AvoidResult run() {
    AvoidResult out;
    dfs(1, 0);
    out.nodes = nodes_;
    out.status = best_len_ == n_ ? SearchStatus::Found : aborted_ ? SearchStatus::BudgetExhausted : SearchStatus::NoneInRange;
    if (best_len_ > 0) out.best = Coloring(best_len_, r_, best_);
    return out;
  }

 private:
  // Returns true to stop: budget spent or a full avoider found.
  bool dfs(std::uint64_t k, unsigned used) {
    const unsigned top = std::min(r_, used + 1);
    for (unsigned c = 0; c < top; ++c) {
      if (++nodes_ > limit_) {
        aborted_ = true;
        return true;
      }
      colors_[k] = c;
      const bool mono = std::any_of(by_max_[k].begin(), by_max_[k].end(), [&](const auto* s) {
        return std::all_of(s->begin(), s->end(), [&](std::uint64_t x) { return colors_[x] == c; });
      });
      if (mono) continue;
      if (k > best_len_) {
        best_len_ = k;
        best_.assign(colors_.begin() + 1, colors_.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        if (k == n_) return true;
      }
      if (dfs(k + 1, std::max(used, c + 1))) return true;
    }
    return false;
  }

  std::uint64_t n_;
  unsigned r_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::vector<const std::vector<std::uint64_t>*>> by_max_;
  std::vector<std::uint32_t> colors_;  // 1-based
  std::uint64_t best_len_ = 0;
  std::vector<std::uint32_t> best_;
};

}  // namespace

AvoidResult find_avoiding_coloring(const std::vector<std::vector<std::uint64_t>>& sets, std::uint64_t n, unsigned r,
                                   std::uint64_t node_limit) {
  if (r == 0) throw std::invalid_argument("find_avoiding_coloring: need at least one color");
  if (n == 0) throw std::invalid_argument("find_avoiding_coloring: N must be positive");
  return AvoidSearch(sets, n, r, node_limit).run();
}

RadoNumberResult rado_number(const EquationSystem& sys, unsigned r, const SearchBudget& budget) {
  budget.validate();
  if (r == 0) throw std::invalid_argument("rado_number: need at least one color");
  RadoNumberResult out;
  out.system = sys.name;
  out.r = r;

  const SolutionSets sets = solution_value_sets(sys, budget.range_n, budget.node_limit);
  if (sets.truncated) {
    out.status = SearchStatus::BudgetExhausted;
    return out;
  }
  const AvoidResult avoid = find_avoiding_coloring(sets.sets, budget.range_n, r, budget.node_limit);
  out.nodes = avoid.nodes;
  out.avoider = avoid.best;
  switch (avoid.status) {
    case SearchStatus::Found: out.status = SearchStatus::NoneInRange; break;
    case SearchStatus::BudgetExhausted: out.status = SearchStatus::BudgetExhausted; break;
    case SearchStatus::NoneInRange:
      out.status = SearchStatus::Found;
      out.value = (avoid.best ? avoid.best->size() : 0) + 1;
      break;
  }
  return out;
}

std::string CnfInstance::str() const {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << "\n";
  out << "p cnf " << num_vars << " " << clauses.size() << "\n";
  for (const auto& cl : clauses) {
    for (auto lit : cl) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

CnfInstance export_cnf(const EquationSystem& sys, unsigned r, std::uint64_t n, std::uint64_t node_limit,
                       std::uint64_t max_sets) {
  if (r == 0) throw std::invalid_argument("export_cnf: need at least one color");
  if (n == 0) throw std::invalid_argument("export_cnf: N must be positive");
  const auto var = [r](std::uint64_t k, unsigned c) { return static_cast<std::int64_t>((k - 1) * r + c + 1); };

  CnfInstance cnf;
  cnf.num_vars = n * r;
  cnf.comments.push_back("v(n,c) = (n-1)*" + std::to_string(r) + " + c + 1 means integer n has color c");
  cnf.comments.push_back("system " + sys.name + ", colors " + std::to_string(r) + ", range 1.." + std::to_string(n));
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::vector<std::int64_t> some;
    for (unsigned c = 0; c < r; ++c) some.push_back(var(k, c));
    cnf.clauses.push_back(std::move(some));
    for (unsigned a = 0; a < r; ++a) {
      for (unsigned b = a + 1; b < r; ++b) cnf.clauses.push_back({-var(k, a), -var(k, b)});
    }
  }
  const SolutionSets sets = solution_value_sets(sys, n, node_limit, max_sets);
  cnf.truncated = sets.truncated;
  if (cnf.truncated) cnf.comments.push_back("truncated: solution enumeration hit its cap, constraints incomplete");
  for (const auto& s : sets.sets) {
    for (unsigned c = 0; c < r; ++c) {
      std::vector<std::int64_t> block;
      for (auto k : s) block.push_back(-var(k, c));
      cnf.clauses.push_back(std::move(block));
    }
  }
  return cnf;
}

CnfInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfInstance cnf;
  bool header = false;
  std::uint64_t declared = 0;
  std::vector<std::int64_t> current;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") {
      std::string rest;
      std::getline(ls >> std::ws, rest);
      cnf.comments.push_back(rest);
      continue;
    }
    if (first == "p") {
      std::string fmt;
      long long v = -1;
      long long c = -1;
      if (header || !(ls >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0) throw std::invalid_argument("DIMACS: bad header");
      cnf.num_vars = static_cast<std::uint64_t>(v);
      declared = static_cast<std::uint64_t>(c);
      header = true;
      continue;
    }
    if (!header) throw std::invalid_argument("DIMACS: clause before header");
    std::istringstream cl(line);
    long long lit = 0;
    while (cl >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::uint64_t>(lit < 0 ? -lit : lit) > cnf.num_vars) throw std::invalid_argument("DIMACS: literal out of range");
      current.push_back(lit);
    }
    if (!cl.eof()) throw std::invalid_argument("DIMACS: non-numeric literal");
  }
  if (!header) throw std::invalid_argument("DIMACS: missing header");
  if (!current.empty()) throw std::invalid_argument("DIMACS: unterminated clause");
  if (cnf.clauses.size() != declared) throw std::invalid_argument("DIMACS: clause count does not match header");
  return cnf;
}

namespace {

// 0 = unassigned, 1 = true, -1 = false
bool dpll(const CnfInstance& cnf, std::vector<int>& assign) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& cl : cnf.clauses) {
      std::int64_t unit = 0;
      int open = 0;
      bool sat = false;
      for (auto lit : cl) {
        const int v = assign[static_cast<std::size_t>(std::abs(lit))];
        if (v == 0) {
          ++open;
          unit = lit;
        } else if ((v > 0) == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (sat) continue;
      if (open == 0) return false;
      if (open == 1) {
        assign[static_cast<std::size_t>(std::abs(unit))] = unit > 0 ? 1 : -1;
        changed = true;
      }
    }
  }
  for (const auto& cl : cnf.clauses) {
    bool sat = false;
    std::int64_t pick = 0;
    for (auto lit : cl) {
      const int v = assign[static_cast<std::size_t>(std::abs(lit))];
      if (v == 0 && pick == 0) pick = lit;
      if (v != 0 && (v > 0) == (lit > 0)) sat = true;
    }
    if (sat) continue;
    for (int value : {pick > 0 ? 1 : -1, pick > 0 ? -1 : 1}) {
      std::vector<int> trial = assign;
      trial[static_cast<std::size_t>(std::abs(pick))] = value;
      if (dpll(cnf, trial)) {
        assign = std::move(trial);
        return true;
      }
    }
    return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<bool>> dpll_solve(const CnfInstance& cnf) {
  std::vector<int> assign(cnf.num_vars + 1, 0);
  if (!dpll(cnf, assign)) return std::nullopt;
  std::vector<bool> model(cnf.num_vars);
  for (std::uint64_t v = 1; v <= cnf.num_vars; ++v) model[v - 1] = assign[v] > 0;
  return model;
}

}  // namespace kpr
