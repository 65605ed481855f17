#include "kpr/cli/cli.hpp"

#include "kpr/colorings/coloring.hpp"
#include "kpr/colorings/fsfp.hpp"
#include "kpr/colorings/polyvdw.hpp"
#include "kpr/exactq/linalg.hpp"
#include "kpr/radomat/column_condition.hpp"
#include "kpr/radomat/expanded.hpp"
#include "kpr/search/search.hpp"
#include "kpr/systems/constructions.hpp"
#include "kpr/systems/templates.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace kpr::cli {

using nlohmann::json;

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::uint64_t budget_nodes = 100'000'000;
  std::uint64_t range = 100;
  unsigned colors = 2;
  unsigned workers = 1;
  std::string distinct;

  // system sources
  std::string system_file;
  std::string template_name;
  std::string matrix_file;
  std::optional<int> n, m, l;
  std::vector<std::string> polys;

  std::string coloring = "all-one";
  std::size_t depth = 2;
  std::string out_file;
  std::string rhs;
  std::string a_list, b_list, x_vec;
  std::string a_value = "1";
  std::string d_value = "1";
};

// Everything a command produced; rendered as text or JSON at the end.
struct Result {
  int code = kAffirmative;
  std::string outcome;
  json payload = json::object();
  std::vector<std::string> lines;
  std::uint64_t nodes = 0;
};

class Inputs {
 public:
  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    digest_material_ += path + "\n" + buf.str() + "\n";
    return buf.str();
  }
  [[nodiscard]] const std::string& material() const { return digest_material_; }

 private:
  std::string digest_material_;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (const auto& s : split_list(text)) out.push_back(Rational::parse(s));
  return out;
}

std::vector<PolyZ0> parse_polys(const std::vector<std::string>& texts) {
  std::vector<PolyZ0> out;
  for (const auto& t : texts) out.push_back(PolyZ0::parse(t));
  return out;
}

MatrixQ load_matrix(Inputs& in, const std::string& path) {
  if (path.empty()) throw UsageError("a matrix file is required");
  return MatrixQ::parse(in.read(path));
}

json vector_json(const VectorQ& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json matrix_json(const MatrixQ& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(vector_json(a.row(i)));
  return out;
}

json coloring_json(const Coloring& c) { return {{"N", c.size()}, {"r", c.num_colors()}, {"colors", c.colors()}}; }

json assignment_json(const ConstructionAssignment& a) {
  json out = json::object();
  for (const auto& [k, v] : a) out[k] = v.str();
  return out;
}

std::string blocks_text(const ColumnPartitionWitness& w) {
  std::string s = "[";
  for (std::size_t b = 0; b < w.blocks.size(); ++b) {
    if (b) s += ",";
    s += "[";
    for (std::size_t i = 0; i < w.blocks[b].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w.blocks[b][i] + 1);
    }
    s += "]";
  }
  return s + "]";
}

EquationSystem load_system(Inputs& in, const Options& o) {
  const int sources = !o.system_file.empty() + !o.template_name.empty() + !o.matrix_file.empty();
  if (sources != 1) throw UsageError("give exactly one of --system, --template, --matrix");
  EquationSystem sys;
  if (!o.system_file.empty()) {
    sys = json::parse(in.read(o.system_file)).get<EquationSystem>();
  } else if (!o.template_name.empty()) {
    TemplateParams p{o.n, o.m, o.l, parse_polys(o.polys)};
    sys = build_template(o.template_name, p);
  } else {
    const MatrixQ a = load_matrix(in, o.matrix_file);
    sys = o.polys.empty() ? build_linear(a) : build_nonlinear_rado(a, parse_polys(o.polys));
  }
  if (!o.distinct.empty()) sys.distinctness = parse_distinctness(o.distinct);
  return sys;
}

json system_label(const EquationSystem& sys) {
  return {{"name", sys.name}, {"status", to_string(sys.status)}, {"distinctness", to_string(sys.distinctness)}};
}

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  b.range_n = o.range;
  b.node_limit = o.budget_nodes;
  b.workers = o.workers;
  return b;
}

int status_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return kAffirmative;
    case SearchStatus::NoneInRange: return kNegative;
    case SearchStatus::BudgetExhausted: return kBudget;
  }
  return kUsage;
}

Result cmd_check_cc(Inputs& in, const Options& o) {
  const MatrixQ a = load_matrix(in, o.matrix_file);
  Result r;
  r.payload["matrix"] = matrix_json(a);
  if (auto w = column_condition(a)) {
    r.outcome = "satisfied";
    r.payload["satisfied"] = true;
    r.payload["witness"] = *w;
    r.lines.push_back("SATISFIED blocks " + blocks_text(*w));
  } else {
    r.code = kNegative;
    r.outcome = "not-satisfied";
    r.payload["satisfied"] = false;
    r.lines.push_back("NOT SATISFIED");
  }
  return r;
}

Result cmd_expand(Inputs& in, const Options& o) {
  const ExpandedMatrix e = expand_matrix(load_matrix(in, o.matrix_file));
  Result r;
  r.outcome = "expanded";
  r.payload["base"] = matrix_json(e.base);
  r.payload["expanded"] = matrix_json(e.expanded);
  r.lines.push_back(e.expanded.str());
  return r;
}

Result cmd_kernel(Inputs& in, const Options& o) {
  const auto basis = kernel_basis(load_matrix(in, o.matrix_file));
  Result r;
  r.outcome = basis.empty() ? "trivial" : "basis";
  r.payload["basis"] = json::array();
  for (const auto& v : basis) {
    r.payload["basis"].push_back(vector_json(v));
    r.lines.push_back(to_string(v));
  }
  if (basis.empty()) r.lines.push_back("kernel is {0}");
  return r;
}

Result cmd_constant_solution(Inputs& in, const Options& o) {
  const MatrixQ a = load_matrix(in, o.matrix_file);
  VectorQ b = rational_list(o.rhs);
  if (o.rhs.empty()) b.assign(a.rows(), Rational(0));
  Result r;
  if (auto d = constant_solution(a, b)) {
    r.outcome = "constant-solution";
    r.payload["d"] = d->str();
    r.lines.push_back("CONSTANT SOLUTION d = " + d->str());
  } else {
    r.code = kNegative;
    r.outcome = "none";
    r.payload["d"] = nullptr;
    r.lines.push_back("NO CONSTANT SOLUTION");
  }
  return r;
}

Coloring load_coloring(Inputs& in, const Options& o) {
  if (o.coloring.starts_with("file:")) return Coloring::parse(in.read(o.coloring.substr(5)));
  return make_coloring(o.coloring, o.range, o.colors, o.seed);
}

Result cmd_solve(Inputs& in, const Options& o) {
  const EquationSystem sys = load_system(in, o);
  const Coloring c = load_coloring(in, o);
  SearchBudget b = budget_of(o);
  b.range_n = c.size();
  const SearchOutcome s = find_mono_solution(sys, c, b);
  Result r;
  r.code = status_code(s.status);
  r.outcome = to_string(s.status);
  r.nodes = s.nodes;
  r.payload["system"] = system_label(sys);
  r.payload["coloring"] = {{"spec", o.coloring}, {"N", c.size()}, {"r", c.num_colors()}};
  r.lines.push_back("system " + sys.name + " [" + to_string(sys.status) + "]");
  if (s.solution) {
    json vals = json::object();
    std::string line = "SOLUTION color " + std::to_string(s.solution->color) + ":";
    for (std::size_t i = 0; i < sys.variables.size(); ++i) {
      vals[sys.variables[i]] = s.solution->values[i];
      line += " " + sys.variables[i] + "=" + std::to_string(s.solution->values[i]);
    }
    r.payload["solution"] = {{"color", s.solution->color}, {"values", vals}};
    r.lines.push_back(line);
  } else {
    r.payload["solution"] = nullptr;
    r.lines.push_back(s.status == SearchStatus::BudgetExhausted ? "BUDGET" : "NONE-IN-RANGE");
  }
  return r;
}

Result cmd_rado_number(Inputs& in, const Options& o) {
  const EquationSystem sys = load_system(in, o);
  const RadoNumberResult res = rado_number(sys, o.colors, budget_of(o));
  Result r;
  r.code = status_code(res.status);
  r.outcome = to_string(res.status);
  r.nodes = res.nodes;
  r.payload["system"] = system_label(sys);
  r.payload["r"] = res.r;
  r.payload["value"] = res.value ? json(*res.value) : json(nullptr);
  r.payload["avoider"] = res.avoider ? coloring_json(*res.avoider) : json(nullptr);
  r.lines.push_back("system " + sys.name + " [" + to_string(sys.status) + "], r = " + std::to_string(o.colors));
  if (res.value) {
    r.lines.push_back("VALUE " + std::to_string(*res.value));
  } else if (res.status == SearchStatus::NoneInRange) {
    r.lines.push_back("NO VALUE up to N = " + std::to_string(o.range) + " (avoiding coloring of the whole range)");
  } else {
    r.lines.push_back("BUDGET");
  }
  if (res.avoider) {
    std::string line = "AVOIDER N=" + std::to_string(res.avoider->size()) + ":";
    for (auto c : res.avoider->colors()) line += " " + std::to_string(c);
    r.lines.push_back(line);
  }
  return r;
}

Result cmd_export_cnf(Inputs& in, const Options& o) {
  const EquationSystem sys = load_system(in, o);
  const CnfInstance cnf = export_cnf(sys, o.colors, o.range, o.budget_nodes);
  const std::string text = cnf.str();
  Result r;
  r.outcome = cnf.truncated ? "truncated" : "exported";
  r.payload["system"] = system_label(sys);
  r.payload["variables"] = cnf.num_vars;
  r.payload["clauses"] = cnf.clauses.size();
  r.payload["truncated"] = cnf.truncated;
  if (o.out_file.empty() || o.out_file == "-") {
    r.payload["path"] = nullptr;
    r.lines.push_back(text.substr(0, text.size() - 1));
  } else {
    std::ofstream f(o.out_file);
    if (!f || !(f << text)) throw UsageError("cannot write '" + o.out_file + "'");
    r.payload["path"] = o.out_file;
    r.lines.push_back("wrote " + o.out_file + ": p cnf " + std::to_string(cnf.num_vars) + " " +
                      std::to_string(cnf.clauses.size()) + (cnf.truncated ? " (truncated)" : ""));
  }
  return r;
}

Result cmd_fsfp(Inputs& in, const Options& o) {
  const Coloring c = load_coloring(in, o);
  Result r;
  r.payload["coloring"] = {{"spec", o.coloring}, {"N", c.size()}, {"r", c.num_colors()}};
  r.payload["depth"] = o.depth;
  if (auto w = search_fsfp(c, o.depth, o.budget_nodes)) {
    std::vector<std::string> a, b;
    for (const auto& x : w->a_seq) a.push_back(x.get_str());
    for (const auto& x : w->b_seq) b.push_back(x.get_str());
    r.outcome = "found";
    r.payload["witness"] = {{"a", a}, {"b", b}, {"color", w->color}, {"verified", verify_fsfp(*w, c)}};
    std::string line = "WITNESS color " + std::to_string(w->color) + ": a =";
    for (const auto& s : a) line += " " + s;
    line += "; b =";
    for (const auto& s : b) line += " " + s;
    r.lines.push_back(line);
  } else {
    r.code = kNegative;
    r.outcome = "none-in-range";
    r.payload["witness"] = nullptr;
    r.lines.push_back("NO WITNESS within [1.." + std::to_string(c.size()) + "]");
  }
  return r;
}

Result cmd_polyvdw(Inputs& in, const Options& o) {
  const Coloring c = load_coloring(in, o);
  const auto polys = parse_polys(o.polys);
  if (polys.empty()) throw UsageError("polyvdw needs at least one --poly");
  Result r;
  r.payload["coloring"] = {{"spec", o.coloring}, {"N", c.size()}, {"r", c.num_colors()}};
  r.payload["polys"] = o.polys;
  if (auto w = poly_vdw_witness(c, polys)) {
    r.outcome = "found";
    r.payload["witness"] = {{"a", w->a}, {"d", w->d}, {"color", w->color}};
    r.lines.push_back("WITNESS a = " + std::to_string(w->a) + ", d = " + std::to_string(w->d) + ", color " +
                      std::to_string(w->color));
  } else {
    r.code = kNegative;
    r.outcome = "none-in-range";
    r.payload["witness"] = nullptr;
    r.lines.push_back("NO WITNESS within [1.." + std::to_string(c.size()) + "]");
  }
  return r;
}

// Builds the matching template, evaluates every equation on the assignment
// and reports the residuals; nonzero residuals make the command fail.
Result report_construction(const EquationSystem& sys, const ConstructionAssignment& a) {
  Result r;
  json residuals = json::array();
  bool all_zero = true;
  for (const auto& eq : sys.equations) {
    const Rational res = eval_equation(eq, a);
    all_zero = all_zero && res.is_zero();
    residuals.push_back(res.str());
  }
  r.code = all_zero ? kAffirmative : kNegative;
  r.outcome = all_zero ? "residuals-zero" : "residuals-nonzero";
  r.payload["system"] = system_label(sys);
  r.payload["assignment"] = assignment_json(a);
  r.payload["residuals"] = residuals;
  r.payload["positive_integers"] = integrality_check(a);
  for (const auto& [k, v] : a) r.lines.push_back(k + " = " + v.str());
  r.lines.push_back(std::string(all_zero ? "all residuals 0" : "NONZERO residual") +
                    (integrality_check(a) ? ", values in N" : ", values not all in N"));
  return r;
}

Result cmd_construct_sum_product(const Options& o) {
  const auto a_list = rational_list(o.a_list);
  const auto b_list = rational_list(o.b_list);
  const auto polys = parse_polys(o.polys);
  const ConstructionAssignment a =
      construct_poly_sum_product(a_list, b_list, Rational::parse(o.a_value), Rational::parse(o.d_value), polys);
  TemplateParams p;
  p.n = static_cast<int>(a_list.size());
  p.m = static_cast<int>(b_list.size() + 1);
  p.polys = polys;
  return report_construction(build_template("poly-sum-product", p), a);
}

Result cmd_construct_nonlinear_rado(Inputs& in, const Options& o) {
  const MatrixQ a = load_matrix(in, o.matrix_file);
  const auto polys = parse_polys(o.polys);
  VectorQ x = rational_list(o.x_vec);
  if (x.empty()) {
    const auto basis = kernel_basis(a);
    if (basis.empty()) throw UsageError("kernel of A is trivial; pass --x explicitly");
    x = basis.front();
  }
  const ConstructionAssignment asg =
      construct_nonlinear_rado(a, x, Rational::parse(o.a_value), Rational::parse(o.d_value), polys);
  Result r = report_construction(build_nonlinear_rado(a, polys), asg);
  r.payload["kernel_vector"] = vector_json(x);
  return r;
}

void add_system_options(CLI::App* sub, Options& o) {
  sub->add_option("--system", o.system_file, "JSON system file");
  sub->add_option("--template", o.template_name, "named system family");
  sub->add_option("--matrix", o.matrix_file, "matrix file (linear, or nonlinear with --poly)");
  sub->add_option("--n", o.n, "template parameter n");
  sub->add_option("--m", o.m, "template parameter m");
  sub->add_option("--l", o.l, "template parameter l");
  sub->add_option("--poly", o.polys, "polynomial in one variable, zero constant term (repeatable)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Partition regularity toolkit: column condition, nonlinear systems, colorings, searches"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "emit a JSON report");
  app.add_option("--seed", o.seed, "seed for random colorings");
  app.add_option("--budget-nodes", o.budget_nodes, "node limit for searches")->check(CLI::PositiveNumber);
  app.add_option("--range", o.range, "range bound N")->check(CLI::PositiveNumber);
  app.add_option("--colors", o.colors, "number of colors r")->check(CLI::PositiveNumber);
  app.add_option("--workers", o.workers, "worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--distinct", o.distinct, "distinctness policy")
      ->check(CLI::IsMember({"repeats", "allow-repeats", "distinct", "all-distinct", "nontrivial"}));

  auto* check_cc = app.add_subcommand("check-cc", "decide the column condition");
  check_cc->add_option("matrix", o.matrix_file, "matrix file")->required();
  auto* expand = app.add_subcommand("expand", "print the expanded matrix E(A)");
  expand->add_option("matrix", o.matrix_file, "matrix file")->required();
  auto* kernel = app.add_subcommand("kernel", "kernel basis over Q");
  kernel->add_option("matrix", o.matrix_file, "matrix file")->required();
  auto* constant = app.add_subcommand("constant-solution", "d with A (d,..,d) = b");
  constant->add_option("matrix", o.matrix_file, "matrix file")->required();
  constant->add_option("--rhs", o.rhs, "comma-separated b (default 0)");

  auto* solve = app.add_subcommand("solve", "monochromatic solution in a coloring");
  add_system_options(solve, o);
  solve->add_option("--coloring", o.coloring, "coloring generator or file:PATH");
  auto* rado = app.add_subcommand("rado-number", "least N forcing a monochromatic solution");
  add_system_options(rado, o);
  auto* cnf = app.add_subcommand("export-cnf", "DIMACS encoding of avoiding colorings");
  add_system_options(cnf, o);
  cnf->add_option("--out", o.out_file, "output file (default stdout)");

  auto* fsfp_cmd = app.add_subcommand("fsfp", "search for finite-sums/finite-products sequences");
  fsfp_cmd->add_option("--coloring", o.coloring, "coloring generator or file:PATH");
  fsfp_cmd->add_option("--depth", o.depth, "sequence length (1..4)");
  auto* polyvdw = app.add_subcommand("polyvdw", "search for a, a + P(d) in one color");
  polyvdw->add_option("--coloring", o.coloring, "coloring generator or file:PATH");
  polyvdw->add_option("--poly", o.polys, "polynomial (repeatable)");

  auto* thm34 = app.add_subcommand("construct-thm34", "sum-equals-product assignment with polynomial shift");
  thm34->add_option("--a-list", o.a_list, "a_1,..,a_n")->required();
  thm34->add_option("--b-list", o.b_list, "b_1,..,b_{m-1} (may be empty)");
  thm34->add_option("--a", o.a_value, "common value a");
  thm34->add_option("--d", o.d_value, "shift argument d");
  thm34->add_option("--poly", o.polys, "P_i (repeatable)")->required();
  auto* thm37 = app.add_subcommand("construct-thm37", "nonlinear Rado assignment from a kernel vector");
  thm37->add_option("--matrix", o.matrix_file, "matrix file")->required();
  thm37->add_option("--x", o.x_vec, "kernel vector (default: first kernel basis vector)");
  thm37->add_option("--a", o.a_value, "scale a");
  thm37->add_option("--d", o.d_value, "polynomial argument d");
  thm37->add_option("--poly", o.polys, "P_i, one per row (repeatable)")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Inputs inputs;
  Result r;
  std::string command;
  try {
    CLI::App* sub = app.get_subcommands().front();
    command = sub->get_name();
    if (sub == check_cc) r = cmd_check_cc(inputs, o);
    else if (sub == expand) r = cmd_expand(inputs, o);
    else if (sub == kernel) r = cmd_kernel(inputs, o);
    else if (sub == constant) r = cmd_constant_solution(inputs, o);
    else if (sub == solve) r = cmd_solve(inputs, o);
    else if (sub == rado) r = cmd_rado_number(inputs, o);
    else if (sub == cnf) r = cmd_export_cnf(inputs, o);
    else if (sub == fsfp_cmd) r = cmd_fsfp(inputs, o);
    else if (sub == polyvdw) r = cmd_polyvdw(inputs, o);
    else if (sub == thm34) r = cmd_construct_sum_product(o);
    else r = cmd_construct_nonlinear_rado(inputs, o);
  } catch (const std::exception& e) {
    // Every failure before a result exists is a problem with the input.
    err << "error: " << e.what() << "\n";
    if (o.json) out << json{{"command", command}, {"error", e.what()}, {"exit_code", int(kUsage)}}.dump(2) << "\n";
    return kUsage;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (o.json) {
    std::vector<std::string> echo(args.begin() + 1, args.end());
    std::string material;
    for (const auto& a : echo) material += a + '\0';
    material += inputs.material();
    json report = {{"command", command},
                   {"args", echo},
                   {"inputs_digest", fnv1a_hex(material)},
                   {"outcome", r.outcome},
                   {"exit_code", r.code},
                   {"payload", r.payload},
                   {"budget", {{"node_limit", o.budget_nodes}, {"nodes_used", r.nodes}}},
                   {"timing", {{"seconds", seconds}}}};
    out << report.dump(2) << "\n";
  } else {
    for (const auto& line : r.lines) out << line << "\n";
  }
  return r.code;
}

}  // namespace kpr::cli
