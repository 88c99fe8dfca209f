#include "tsmv/dimacs.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "tsmv/errors.hpp"

namespace tsmv {

std::string write_dimacs(const Cnf& c) {
  std::string out = "p cnf " + std::to_string(c.var_count) + " " +
                    std::to_string(c.clauses.size()) + "\n";
  for (const auto& clause : c.clauses) {
    for (int lit : clause) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

Cnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  bool have_header = false;
  int want_vars = 0;
  size_t want_clauses = 0;

  Cnf c;
  std::vector<int> current;

  auto fail = [&](const std::string& what) -> void {
    throw ParseError("dimacs, line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      if (have_header) fail("duplicate header");
      std::istringstream h(line);
      std::string p, fmt;
      long long nv = -1, nc = -1;
      h >> p >> fmt >> nv >> nc;
      if (p != "p" || fmt != "cnf" || nv < 0 || nc < 0 || h.fail()) {
        fail("bad header '" + line + "'");
      }
      have_header = true;
      want_vars = static_cast<int>(nv);
      want_clauses = static_cast<size_t>(nc);
      continue;
    }
    if (!have_header) fail("clause before header");
    std::istringstream cl(line);
    long long lit;
    while (cl >> lit) {
      if (lit == 0) {
        c.add_clause(current);
        current.clear();
      } else {
        if (std::llabs(lit) > want_vars) {
          fail("literal " + std::to_string(lit) + " exceeds declared " +
               std::to_string(want_vars) + " variables");
        }
        current.push_back(static_cast<int>(lit));
      }
    }
    if (!cl.eof()) fail("bad token in clause line");
  }
  if (!have_header) throw ParseError("dimacs: missing 'p cnf' header");
  if (!current.empty()) throw ParseError("dimacs: last clause not 0-terminated");
  if (c.clauses.size() != want_clauses) {
    throw ParseError("dimacs: header declares " + std::to_string(want_clauses) +
                     " clauses, found " + std::to_string(c.clauses.size()));
  }
  c.var_count = want_vars;
  return c;
}

SolverOutput parse_solver_output(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_status = false;
  bool values_done = false;
  SolverOutput out;

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 's' && (line.size() == 1 || line[1] == ' ')) {
      if (have_status) throw SolverError("solver output: duplicate status line");
      std::string status = line.size() > 1 ? line.substr(2) : "";
      while (!status.empty() && status.back() == ' ') status.pop_back();
      if (status == "SATISFIABLE") out.status = SolverStatus::Sat;
      else if (status == "UNSATISFIABLE") out.status = SolverStatus::Unsat;
      else if (status == "UNKNOWN") out.status = SolverStatus::Unknown;
      else throw SolverError("solver output: bad status '" + status + "'");
      have_status = true;
      continue;
    }
    if (line[0] == 'v' && (line.size() == 1 || line[1] == ' ')) {
      if (values_done) throw SolverError("solver output: v-line after terminating 0");
      std::istringstream vl(line.substr(1));
      long long lit;
      while (vl >> lit) {
        if (lit == 0) {
          values_done = true;
        } else if (values_done) {
          throw SolverError("solver output: literal after terminating 0");
        } else {
          out.assignment.set(static_cast<int>(std::llabs(lit)), lit > 0);
        }
      }
      if (!vl.eof()) throw SolverError("solver output: bad token in v-line");
      continue;
    }
    throw SolverError("solver output: unexpected line '" + line + "'");
  }

  if (!have_status) throw SolverError("solver output: missing status line");
  if (out.status == SolverStatus::Sat && !values_done) {
    throw SolverError("solver output: satisfiable but no 0-terminated model");
  }
  return out;
}

}  // namespace tsmv
