#pragma once

#include <string>

#include "tsmv/assignment.hpp"
#include "tsmv/cnf.hpp"

namespace tsmv {

// "p cnf <vars> <clauses>" followed by one line per clause, each terminated
// by 0. Byte-for-byte stable for a given Cnf.
std::string write_dimacs(const Cnf& c);

// Accepts comment lines; requires the header, literals within range, and a
// clause count matching the header.
Cnf parse_dimacs(const std::string& text);

enum class SolverStatus { Sat, Unsat, Unknown };

struct SolverOutput {
  SolverStatus status = SolverStatus::Unknown;
  Assignment assignment;  // filled from the v-lines on Sat
};

// Parses competition-style output: one "s SATISFIABLE" / "s UNSATISFIABLE" /
// "s UNKNOWN" line, plus 0-terminated "v" lines carrying the model on Sat.
// Anything else (missing status, garbage lines, missing model) throws
// SolverError.
SolverOutput parse_solver_output(const std::string& text);

}  // namespace tsmv
