// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/cli.hpp"

#include "pearlsat/adder.hpp"
#include "pearlsat/cnf.hpp"
#include "pearlsat/dimacs.hpp"
#include "pearlsat/errors.hpp"
#include "pearlsat/formula.hpp"
#include "pearlsat/opt.hpp"
#include "pearlsat/parser.hpp"
#include "pearlsat/sat.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

namespace pearlsat::cli {
namespace {

struct Options {
  std::string backend = "embedded";
  std::string solver_path;
  double timeout = 0;
  bool full_tseitin = false;
  bool pg = false;
  std::vector<std::string> files;
  std::string map_path;
  std::string vec;
  std::string hard;
  std::string soft;
  std::string wcnf;
};

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string &path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Encoding encoding_of(const Options &o) {
  return o.full_tseitin ? Encoding::Tseitin : Encoding::PlaistedGreenbaum;
}

std::unique_ptr<Backend> backend_of(const Options &o) {
  BackendConfig config;
  if (o.backend == "external" || !o.solver_path.empty()) {
    config.kind = BackendConfig::Kind::External;
    config.external_path = o.solver_path;
    if (config.external_path.empty())
      if (const char *env = std::getenv("PEARLSAT_SOLVER"))
        config.external_path = env;
    if (config.external_path.empty())
      throw InputError("--backend external needs --solver-path or PEARLSAT_SOLVER");
  }
  if (o.timeout > 0)
    config.time_limit = std::chrono::duration<double>(o.timeout);
  return make_backend(config);
}

const std::string &single_file(const Options &o) {
  if (o.files.size() != 1)
    throw InputError("expected exactly one input file");
  return o.files.front();
}

// Parse errors are reported against the file they came from.
template <typename Fn> auto in_file(const std::string &path, Fn fn) {
  try {
    return fn();
  } catch (const ParseError &e) {
    throw InputError(path + ": " + e.what());
  }
}

void print_named_model(std::ostream &out, const VarPool &pool, const Assignment &m) {
  for (const auto &[name, id] : pool.named())
    out << name << '=' << (m.get(id).value_or(false) ? 1 : 0) << '\n';
}

void print_values(std::ostream &out, const Assignment &m, std::uint32_t num_vars) {
  write_solver_output(out, SolveResult::sat(m), num_vars);
}

// ---------------------------------------------------------------------------

int cmd_cnf(const Options &o, std::ostream &out) {
  const auto &path = single_file(o);
  auto text = read_input(path);
  VarPool pool;
  Formula f = in_file(path, [&] { return parse_formula(text, pool); });
  Cnf cnf = to_cnf(f, pool, encoding_of(o));
  write_dimacs(out, cnf);

  std::string map_path = o.map_path;
  if (map_path.empty() && path != "-")
    map_path = path + ".map";
  if (!map_path.empty()) {
    std::ofstream map(map_path);
    for (const auto &[name, id] : pool.named())
      map << name << ' ' << id.value << '\n';
    if (!map)
      throw InputError("cannot write variable map '" + map_path + "'");
  }
  return kOk;
}

int cmd_solve(const Options &o, std::ostream &out, bool verdict_only) {
  const auto &path = single_file(o);
  auto text = read_input(path);
  auto backend = backend_of(o);

  if (looks_like_dimacs(text)) {
    Cnf cnf = in_file(path, [&] { return parse_dimacs(text); });
    SolveResult r = backend->solve(cnf);
    if (verdict_only)
      out << (r.is_sat() ? "s SATISFIABLE\n" : "s UNSATISFIABLE\n");
    else
      write_solver_output(out, r, cnf.num_vars);
    return r.is_sat() ? kSat : kUnsat;
  }

  VarPool pool;
  Formula f = in_file(path, [&] { return parse_formula(text, pool); });
  Cnf cnf = to_cnf(f, pool, encoding_of(o));
  SolveResult r = backend->solve(cnf);
  if (verdict_only)
    out << (r.is_sat() ? "s SATISFIABLE\n" : "s UNSATISFIABLE\n");
  else if (r.is_sat())
    print_named_model(out, pool, r.model);
  else
    out << "UNSAT\n";
  return r.is_sat() ? kSat : kUnsat;
}

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

int cmd_optimize(const Options &o, std::ostream &out, bool maximizing) {
  const auto &path = single_file(o);
  auto names = split_list(o.vec);
  if (names.empty())
    throw InputError("--vec must list at least one objective bit");
  auto text = read_input(path);
  auto backend = backend_of(o);

  VarPool pool;
  Cnf cnf;
  std::vector<VarId> vec;
  bool dimacs = looks_like_dimacs(text);
  if (dimacs) {
    cnf = in_file(path, [&] { return parse_dimacs(text); });
    for (const auto &n : names) {
      std::uint32_t v = 0;
      try {
        v = static_cast<std::uint32_t>(std::stoul(n));
      } catch (const std::exception &) {
      }
      if (v == 0 || v > cnf.num_vars)
        throw InputError("objective bit '" + n + "' is not a variable index of the CNF");
      vec.push_back(VarId{v});
    }
  } else {
    Formula f = in_file(path, [&] { return parse_formula(text, pool); });
    for (const auto &n : names)
      vec.push_back(pool.intern(n));
    cnf = to_cnf(f, pool, encoding_of(o));
  }

  auto best = maximizing ? maximize(vec, cnf, *backend) : minimize(vec, cnf, *backend);
  if (!best) {
    out << "UNSAT\n";
    return kUnsat;
  }
  out << "o " << best->optimum << '\n';
  if (dimacs)
    print_values(out, best->model, cnf.num_vars);
  else
    print_named_model(out, pool, best->model);
  return kSat;
}

Formula clause_formula(const Clause &c) {
  std::vector<Formula> lits;
  for (Literal l : c) {
    Formula v = Formula::var(l.var());
    lits.push_back(l.is_negative() ? -v : v);
  }
  return disjunction(lits);
}

int cmd_pmaxsat(const Options &o, std::ostream &out) {
  std::string hard_path = o.hard, soft_path = o.soft, wcnf_path = o.wcnf;
  if (o.files.size() == 1 && hard_path.empty() && wcnf_path.empty())
    wcnf_path = o.files[0];
  else if (o.files.size() == 2 && hard_path.empty() && soft_path.empty())
    hard_path = o.files[0], soft_path = o.files[1];
  else if (!o.files.empty())
    throw InputError("give either a WCNF file or a hard and a soft formula file");

  auto backend = backend_of(o);
  VarPool pool;
  Formula hard = Formula::constant(true);
  std::vector<Formula> soft;
  std::uint32_t wcnf_vars = 0;
  bool from_wcnf = !wcnf_path.empty();

  if (from_wcnf) {
    if (!hard_path.empty() || !soft_path.empty())
      throw InputError("--wcnf cannot be combined with --hard/--soft");
    auto text = read_input(wcnf_path);
    WcnfProblem problem = in_file(wcnf_path, [&] { return parse_wcnf(text); });
    wcnf_vars = problem.num_vars;
    for (std::uint32_t v = 0; v < problem.num_vars; ++v)
      pool.fresh();
    std::vector<Formula> hard_parts;
    for (const auto &c : problem.hard)
      hard_parts.push_back(clause_formula(c));
    hard = conjunction(hard_parts);
    for (const auto &c : problem.soft)
      soft.push_back(clause_formula(c));
  } else {
    if (hard_path.empty() && soft_path.empty())
      throw InputError("pmaxsat needs --hard and --soft, or a WCNF file");
    if (!hard_path.empty()) {
      auto text = read_input(hard_path);
      hard = in_file(hard_path, [&] { return parse_formula(text, pool); });
    }
    if (!soft_path.empty()) {
      auto text = read_input(soft_path);
      soft = in_file(soft_path, [&] { return parse_formula_lines(text, pool); });
    }
  }

  auto result = partial_max_sat(hard, soft, pool, *backend, encoding_of(o));
  if (!result) {
    out << "UNSAT (hard)\n";
    return kUnsat;
  }
  out << "o " << result->satisfied_count << '\n';
  if (from_wcnf)
    print_values(out, result->model, wcnf_vars);
  else
    print_named_model(out, pool, result->model);
  return kSat;
}

} // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"SAT encoding toolkit and partial MaxSAT solver", "pearlsat"};
  app.require_subcommand(1);

  app.add_option("--backend", o.backend, "SAT backend")
      ->check(CLI::IsMember({"embedded", "external"}));
  app.add_option("--solver-path", o.solver_path,
                 "external DIMACS solver executable (default: $PEARLSAT_SOLVER)");
  app.add_option("--timeout", o.timeout, "time limit per solver call, seconds")
      ->check(CLI::PositiveNumber);
  auto *full = app.add_flag("--full-tseitin", o.full_tseitin,
                            "full bi-implication Tseitin encoding");
  auto *pg = app.add_flag("--pg", o.pg, "polarity-aware encoding (default)");
  full->excludes(pg);

  auto *cnf = app.add_subcommand("cnf", "print the CNF of a formula as DIMACS");
  cnf->add_option("file", o.files, "formula file")->required();
  cnf->add_option("--map", o.map_path, "variable map output (default: <file>.map)");

  auto *solve = app.add_subcommand("solve", "find a model of a formula or DIMACS CNF");
  solve->add_option("file", o.files, "formula or DIMACS file")->required();

  auto *sat = app.add_subcommand("sat", "decide satisfiability without printing a model");
  sat->add_option("file", o.files, "formula or DIMACS file")->required();

  auto *maxi = app.add_subcommand("maximize", "maximize a bit vector (LSB first)");
  auto *mini = app.add_subcommand("minimize", "minimize a bit vector (LSB first)");
  for (auto *sub : {maxi, mini}) {
    sub->add_option("file", o.files, "formula or DIMACS file")->required();
    sub->add_option("--vec", o.vec, "comma-separated objective bits, LSB first")
        ->required();
  }

  auto *pmax = app.add_subcommand("pmaxsat", "partial MaxSAT");
  pmax->add_option("files", o.files, "WCNF file, or hard and soft formula files");
  pmax->add_option("--hard", o.hard, "hard formula file");
  pmax->add_option("--soft", o.soft, "soft formulas, one per line");
  pmax->add_option("--wcnf", o.wcnf, "WCNF file (unit soft weights)");

  for (auto *sub : app.get_subcommands({}))
    sub->fallthrough();

  std::vector<std::string> argv_storage{"pearlsat"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_storage)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cnf)
      return cmd_cnf(o, out);
    if (*solve)
      return cmd_solve(o, out, false);
    if (*sat)
      return cmd_solve(o, out, true);
    if (*maxi)
      return cmd_optimize(o, out, true);
    if (*mini)
      return cmd_optimize(o, out, false);
    if (*pmax)
      return cmd_pmaxsat(o, out);
  } catch (const InputError &e) {
    err << "pearlsat: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError &e) {
    err << "pearlsat: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedInput &e) {
    err << "pearlsat: unsupported: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolation &e) {
    err << "pearlsat: " << e.what() << '\n';
    return kUsage;
  } catch (const SolverTimeout &e) {
    out << "UNKNOWN (timeout)\n";
    err << "pearlsat: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception &e) {
    err << "pearlsat: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

} // namespace pearlsat::cli
