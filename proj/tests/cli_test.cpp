// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/cli.hpp"
#include "pearlsat/dimacs.hpp"
#include "pearlsat/oracle.hpp"
#include "pearlsat/parser.hpp"
#include "support/checks.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>

#include <sys/wait.h>

using namespace pearlsat;
using namespace pearlsat::testing;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
protected:
  CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }
  std::string file(const std::string &name, const std::string &content) {
    return dir_.write(name, content);
  }
  std::string solver_script() {
    std::string path = dir_.write(
        "solver.sh", std::string("#!/bin/sh\nexec ") + PEARLSAT_BIN + " solve \"$1\"\n");
    std::filesystem::permissions(path, std::filesystem::perms::owner_all);
    return path;
  }

  TempDir dir_;
};

std::uint64_t optimum_of(const std::string &out) {
  auto pos = out.find("o ");
  EXPECT_EQ(pos, 0u) << out;
  return std::stoull(out.substr(2));
}

const char *kSevenSoft = "x * y\nx == y\nx xor y\n-x + y\n-x\n-y\nx\n";

} // namespace

TEST_F(CliTest, CnfOfIffHasThreeClauses) {
  auto f = file("iff.f", "x == y\n");
  CliRun r = run({"cnf", f, "--pg"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  Cnf cnf = parse_dimacs(r.out);
  EXPECT_EQ(cnf.num_vars, 3u);
  EXPECT_EQ(cnf.clauses.size(), 3u);
  EXPECT_EQ(read_file(f + ".map"), "x 1\ny 2\n");
}

TEST_F(CliTest, CnfOfMuxHasSixClauses) {
  auto f = file("mux.f", "(x*y)+(-x*z)\n");
  auto map = dir_.path("vars.txt");
  CliRun r = run({"cnf", f, "--map", map});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(parse_dimacs(r.out).clauses.size(), 6u);
  EXPECT_EQ(read_file(map), "x 1\ny 2\nz 3\n");
}

TEST_F(CliTest, CnfOfSingleVariable) {
  CliRun r = run({"cnf", file("x.f", "x")});
  EXPECT_EQ(r.out, "p cnf 1 1\n1 0\n");
}

TEST_F(CliTest, FullTseitinGivesMoreClauses) {
  auto f = file("iff.f", "x == y\n");
  CliRun r = run({"--full-tseitin", "cnf", f});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(parse_dimacs(r.out).clauses.size(), 5u);
  EXPECT_EQ(run({"--full-tseitin", "--pg", "cnf", f}).code, cli::kUsage);
}

TEST_F(CliTest, SolveFormula) {
  CliRun sat = run({"solve", file("iff.f", "x == y")});
  EXPECT_EQ(sat.code, cli::kSat);
  EXPECT_TRUE(sat.out == "x=0\ny=0\n" || sat.out == "x=1\ny=1\n") << sat.out;
  CliRun unsat = run({"solve", file("no.f", "x * -x")});
  EXPECT_EQ(unsat.code, cli::kUnsat);
  EXPECT_EQ(unsat.out, "UNSAT\n");
}

TEST_F(CliTest, SolveModelLinesInNameOrder) {
  CliRun r = run({"solve", file("f.f", "zed * alpha * -mid")});
  EXPECT_EQ(r.code, cli::kSat);
  EXPECT_EQ(r.out, "alpha=1\nmid=0\nzed=1\n");
}

TEST_F(CliTest, SolveDimacs) {
  CliRun unsat = run({"solve", file("u.cnf", "p cnf 1 2\n1 0\n-1 0\n")});
  EXPECT_EQ(unsat.code, cli::kUnsat);
  EXPECT_EQ(unsat.out, "s UNSATISFIABLE\n");
  CliRun sat = run({"solve", file("s.cnf", "p cnf 3 2\n1 0\n-1 3 0\n")});
  EXPECT_EQ(sat.code, cli::kSat);
  EXPECT_EQ(sat.out, "s SATISFIABLE\nv 1 -2 3 0\n");
}

TEST_F(CliTest, SatVerdictOnly) {
  CliRun r = run({"sat", file("iff.f", "x == y")});
  EXPECT_EQ(r.code, cli::kSat);
  EXPECT_EQ(r.out, "s SATISFIABLE\n");
  EXPECT_EQ(run({"sat", file("e.cnf", "p cnf 0 1\n0\n")}).code, cli::kUnsat);
}

TEST_F(CliTest, MaximizeAndMinimize) {
  auto f = file("f.f", "(a + b) * -(a * b) * (c == a)");
  CliRun mx = run({"maximize", f, "--vec", "a,b,c"});
  EXPECT_EQ(mx.code, cli::kSat) << mx.err;
  EXPECT_EQ(mx.out, "o 5\na=1\nb=0\nc=1\n");
  CliRun mn = run({"minimize", f, "--vec", "a,b,c"});
  EXPECT_EQ(mn.out, "o 2\na=0\nb=1\nc=0\n");
  auto d = file("d.cnf", "p cnf 3 1\n-3 0\n");
  CliRun dm = run({"maximize", d, "--vec", "1,2,3"});
  EXPECT_EQ(dm.out, "o 3\ns SATISFIABLE\nv 1 2 -3 0\n");
  EXPECT_EQ(run({"maximize", d, "--vec", "4"}).code, cli::kUsage);
  EXPECT_EQ(run({"minimize", file("u.f", "x * -x"), "--vec", "x"}).code, cli::kUnsat);
}

TEST_F(CliTest, PartialMaxSatFromFormulaFiles) {
  auto hard = file("hard.f", "x + y\n");
  auto soft = file("soft.f", kSevenSoft);
  CliRun r = run({"pmaxsat", "--hard", hard, "--soft", soft});
  EXPECT_EQ(r.code, cli::kSat) << r.err;
  EXPECT_EQ(r.out, "o 4\nx=1\ny=1\n");
  CliRun positional = run({"pmaxsat", hard, soft});
  EXPECT_EQ(positional.out, r.out);
}

TEST_F(CliTest, PartialMaxSatSmallCases) {
  CliRun r = run({"pmaxsat", "--hard", file("h.f", "x"), "--soft", file("s.f", "-x\n")});
  EXPECT_EQ(r.code, cli::kSat);
  EXPECT_EQ(r.out, "o 0\nx=1\n");
  CliRun u = run({"pmaxsat", "--hard", file("u.f", "x * -x"), "--soft", file("s2.f", "x\n")});
  EXPECT_EQ(u.code, cli::kUnsat);
  EXPECT_EQ(u.out, "UNSAT (hard)\n");
}

TEST_F(CliTest, PartialMaxSatFromWcnf) {
  auto w = file("p.wcnf", "p wcnf 2 4 9\n9 1 2 0\n1 -1 0\n1 -2 0\n1 1 2 0\n");
  CliRun r = run({"pmaxsat", "--wcnf", w});
  EXPECT_EQ(r.code, cli::kSat) << r.err;
  EXPECT_EQ(optimum_of(r.out), 2u);
  EXPECT_NE(r.out.find("s SATISFIABLE\nv "), std::string::npos);
  EXPECT_EQ(run({"pmaxsat", w}).out, r.out);
}

TEST_F(CliTest, WeightedWcnfIsUnsupported) {
  CliRun r = run({"pmaxsat", file("w.wcnf", "p wcnf 2 2 9\n9 1 0\n3 2 0\n")});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("unsupported"), std::string::npos);
}

TEST_F(CliTest, UsageAndInputErrors) {
  CliRun parse = run({"solve", file("bad.f", "x +\n")});
  EXPECT_EQ(parse.code, cli::kUsage);
  EXPECT_NE(parse.err.find("line 1"), std::string::npos) << parse.err;
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"solve"}).code, cli::kUsage);
  EXPECT_EQ(run({"solve", dir_.path("missing.f")}).code, cli::kUsage);
  EXPECT_EQ(run({"--backend", "quantum", "solve", file("x.f", "x")}).code, cli::kUsage);
  EXPECT_EQ(run({"solve", file("bad.cnf", "p cnf 1 1\n2 0\n")}).code, cli::kUsage);
  EXPECT_EQ(run({"pmaxsat"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST_F(CliTest, ExternalBackendFlags) {
  auto f = file("iff.f", "x == y");
  CliRun r = run({"--solver-path", solver_script(), "solve", f});
  EXPECT_EQ(r.code, cli::kSat) << r.err;
  CliRun u = run({"--backend", "external", "--solver-path", solver_script(), "solve",
               file("u.f", "x * -x")});
  EXPECT_EQ(u.code, cli::kUnsat);
  ::unsetenv("PEARLSAT_SOLVER");
  EXPECT_EQ(run({"--backend", "external", "solve", f}).code, cli::kUsage);
  ::setenv("PEARLSAT_SOLVER", solver_script().c_str(), 1);
  EXPECT_EQ(run({"--backend", "external", "solve", f}).code, cli::kSat);
  ::unsetenv("PEARLSAT_SOLVER");
  CliRun broken = run({"--solver-path", dir_.path("nope"), "solve", f});
  EXPECT_EQ(broken.code, cli::kInternal);
}

TEST_F(CliTest, TimeoutIsReportedAsUnknown) {
  auto slow = dir_.write("slow.sh", "#!/bin/sh\nexec sleep 30\n");
  std::filesystem::permissions(slow, std::filesystem::perms::owner_all);
  CliRun r = run({"--timeout", "0.2", "--solver-path", slow, "solve", file("x.f", "x")});
  EXPECT_EQ(r.code, cli::kInternal);
  EXPECT_EQ(r.out, "UNKNOWN (timeout)\n");
}

TEST_F(CliTest, WcnfAndFormulaFilesAgreeWithBruteForce) {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 40; ++i) {
    std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 6);
    Cnf hard = random_mixed_cnf(rng, n, rng() % 4);
    Cnf soft = random_mixed_cnf(rng, n, 1 + rng() % 6);

    std::ostringstream wcnf, hard_text, soft_text;
    wcnf << "p wcnf " << n << ' ' << hard.clauses.size() + soft.clauses.size() << " 100\n";
    auto clause_text = [](const Clause &c) {
      std::string s;
      for (Literal l : c)
        s += (l.is_negative() ? "-v" : "v") + std::to_string(l.var().value) + " + ";
      return "(" + s.substr(0, s.size() - 3) + ")";
    };
    hard_text << "1";
    for (const auto &c : hard.clauses) {
      wcnf << "100";
      for (Literal l : c)
        wcnf << ' ' << l.to_dimacs();
      wcnf << " 0\n";
      hard_text << " * " << clause_text(c);
    }
    for (const auto &c : soft.clauses) {
      wcnf << "1";
      for (Literal l : c)
        wcnf << ' ' << l.to_dimacs();
      wcnf << " 0\n";
      soft_text << clause_text(c) << '\n';
    }

    // Oracle over the same instance.
    VarPool pool;
    std::vector<VarId> inputs;
    for (std::uint32_t v = 1; v <= n; ++v)
      inputs.push_back(pool.intern("v" + std::to_string(v)));
    Formula hard_f = parse_formula(hard_text.str(), pool);
    auto soft_f = parse_formula_lines(soft_text.str(), pool);
    auto expected = oracle::max_satisfied_serial(hard_f, soft_f, inputs);

    CliRun from_wcnf = run({"pmaxsat", file("i.wcnf", wcnf.str())});
    CliRun from_formulas = run({"pmaxsat", "--hard", file("i.hard", hard_text.str()), "--soft",
                             file("i.soft", soft_text.str())});
    if (!expected) {
      ASSERT_EQ(from_wcnf.code, cli::kUnsat) << wcnf.str();
      ASSERT_EQ(from_formulas.code, cli::kUnsat);
      continue;
    }
    ASSERT_EQ(from_wcnf.code, cli::kSat) << from_wcnf.err;
    ASSERT_EQ(from_formulas.code, cli::kSat) << from_formulas.err;
    ASSERT_EQ(optimum_of(from_wcnf.out), *expected) << wcnf.str();
    ASSERT_EQ(optimum_of(from_formulas.out), *expected);
  }
}

TEST(CliProcessTest, ExitCodesOfTheInstalledBinary) {
  TempDir dir;
  auto status = [&](const std::string &args) {
    std::string cmd = std::string(PEARLSAT_BIN) + " " + args + " >/dev/null 2>&1";
    int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  auto sat = dir.write("s.f", "x == y\n");
  auto unsat = dir.write("u.f", "x * -x\n");
  EXPECT_EQ(status("solve " + sat), 10);
  EXPECT_EQ(status("solve " + unsat), 20);
  EXPECT_EQ(status("cnf " + sat), 0);
  EXPECT_EQ(status("solve " + dir.write("b.f", "x +")), 2);
}
