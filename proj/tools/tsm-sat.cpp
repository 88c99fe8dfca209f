// DIMACS front end for the built-in SAT solver. Reads one CNF file (or
// stdin), prints competition-style output, exits 10 on SAT, 20 on UNSAT,
// 0 when the time budget ran out.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tsmv/dimacs.hpp"
#include "tsmv/errors.hpp"
#include "tsmv/solver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"SAT solver speaking DIMACS"};
  std::string path;
  double timeout_s = -1.0;
  bool vsids = false;
  app.add_option("file", path, "CNF file; '-' or absent reads stdin");
  app.add_option("--timeout", timeout_s, "wall-clock limit in seconds");
  app.add_flag("--vsids", vsids, "activity-guided branching and restarts");
  CLI11_PARSE(app, argc, argv);

  try {
    std::string text;
    if (path.empty() || path == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 1;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }

    tsmv::Cnf cnf = tsmv::parse_dimacs(text);
    tsmv::SolveBudget budget;
    budget.timeout_s = timeout_s;
    tsmv::SolverOptions opts;
    opts.use_vsids = vsids;
    opts.use_restarts = vsids;
    tsmv::SolveResult res = tsmv::solve_embedded(cnf, budget, opts);

    switch (res.status) {
      case tsmv::SolveStatus::Timeout:
        std::cout << "s UNKNOWN\n";
        return 0;
      case tsmv::SolveStatus::Unsat:
        std::cout << "s UNSATISFIABLE\n";
        return 20;
      case tsmv::SolveStatus::Sat: {
        std::cout << "s SATISFIABLE\n";
        std::string line = "v";
        for (int v = 1; v <= cnf.var_count; ++v) {
          std::string lit =
              " " + std::string(res.assignment.value(v) ? "" : "-") +
              std::to_string(v);
          if (line.size() + lit.size() > 76) {
            std::cout << line << "\n";
            line = "v";
          }
          line += lit;
        }
        std::cout << line << " 0\n";
        return 10;
      }
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
