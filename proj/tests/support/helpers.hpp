#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsmv/assignment.hpp"
#include "tsmv/bitinput.hpp"
#include "tsmv/cnf.hpp"
#include "tsmv/formula.hpp"
#include "tsmv/model.hpp"
#include "tsmv/rng.hpp"

namespace testsupport {

// Reference SAT decision by full enumeration; var_count must stay small.
struct TableResult {
  bool sat = false;
  uint64_t model_count = 0;
  tsmv::Assignment first_model;
};
TableResult truth_table_solve(const tsmv::Cnf& cnf);

// Random instances for differential tests. Monomial literals are drawn
// without replacement; empty monomials occur.
tsmv::Monomial random_monomial(int n_vars, int max_len, tsmv::SplitMix64& rng);
tsmv::TsmModel random_model(int n_vars, int per_side, int max_len,
                            tsmv::SplitMix64& rng);
tsmv::BitInput random_input(int n_vars, tsmv::SplitMix64& rng);

// All 2^n inputs of the given width, ascending as binary numbers with bit 1
// as the least significant.
std::vector<tsmv::BitInput> all_inputs(int n_vars);

// Structural equality up to a bijective renaming of variables: same shape,
// same connectives, children in the same order.
bool isomorphic(const tsmv::FormulaRef& a, const tsmv::FormulaRef& b);

// Runs a shell command, captures stdout, returns the exit code (-1 when the
// process died on a signal).
struct ProcResult {
  int exit_code = -1;
  std::string out;
};
ProcResult run_process(const std::string& command);

// Tool locations exported by the test harness; fails the calling test when
// the variable is missing.
std::string env_or_fail(const char* name);

// Scratch file management: unique path under TMPDIR, removed on destruction.
class TempPath {
 public:
  explicit TempPath(const std::string& suffix);
  ~TempPath();
  TempPath(const TempPath&) = delete;
  TempPath& operator=(const TempPath&) = delete;
  const std::string& str() const { return path_; }

 private:
  std::string path_;
};

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace testsupport
