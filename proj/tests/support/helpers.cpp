#include "helpers.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace testsupport {

using namespace tsmv;

TableResult truth_table_solve(const Cnf& cnf) {
  if (cnf.var_count > 24) {
    throw std::runtime_error("truth table solver: too many variables");
  }
  TableResult res;
  const uint64_t total = uint64_t{1} << cnf.var_count;
  for (uint64_t bits = 0; bits < total; ++bits) {
    Assignment a;
    for (int v = 1; v <= cnf.var_count; ++v) {
      a.set(v, (bits >> (v - 1)) & 1);
    }
    if (cnf.satisfied_by(a)) {
      if (res.model_count == 0) res.first_model = a;
      res.sat = true;
      ++res.model_count;
    }
  }
  return res;
}

Monomial random_monomial(int n_vars, int max_len, SplitMix64& rng) {
  Monomial m;
  const int len = static_cast<int>(rng.below(max_len + 1));  // 0 => empty
  std::vector<int> vars(n_vars);
  for (int i = 0; i < n_vars; ++i) vars[i] = i + 1;
  rng.shuffle(vars);
  for (int i = 0; i < len && i < n_vars; ++i) {
    m.add({vars[i], rng.below(2) == 1});
  }
  return m;
}

TsmModel random_model(int n_vars, int per_side, int max_len, SplitMix64& rng) {
  TsmModel m;
  m.n_vars = n_vars;
  for (int j = 0; j < per_side; ++j) {
    m.positive.push_back(random_monomial(n_vars, max_len, rng));
    m.negative.push_back(random_monomial(n_vars, max_len, rng));
  }
  m.hp = {100, 5, 3.9};
  return m;
}

BitInput random_input(int n_vars, SplitMix64& rng) {
  BitInput in;
  in.bits.resize(n_vars);
  for (int i = 0; i < n_vars; ++i) in.bits[i] = rng.below(2);
  return in;
}

std::vector<BitInput> all_inputs(int n_vars) {
  std::vector<BitInput> out;
  const uint64_t total = uint64_t{1} << n_vars;
  out.reserve(total);
  for (uint64_t x = 0; x < total; ++x) {
    BitInput in;
    in.bits.resize(n_vars);
    for (int b = 0; b < n_vars; ++b) in.bits[b] = (x >> b) & 1;
    out.push_back(std::move(in));
  }
  return out;
}

namespace {

bool iso_rec(const Formula* a, const Formula* b,
             std::unordered_map<int, int>& fwd,
             std::unordered_map<int, int>& bwd) {
  if (a->kind() != b->kind()) return false;
  if (a->kind() == Formula::Kind::Var) {
    auto itf = fwd.find(a->var());
    auto itb = bwd.find(b->var());
    if (itf == fwd.end() && itb == bwd.end()) {
      fwd[a->var()] = b->var();
      bwd[b->var()] = a->var();
      return true;
    }
    return itf != fwd.end() && itb != bwd.end() && itf->second == b->var() &&
           itb->second == a->var();
  }
  if (a->kids().size() != b->kids().size()) return false;
  for (size_t i = 0; i < a->kids().size(); ++i) {
    if (!iso_rec(a->kids()[i].get(), b->kids()[i].get(), fwd, bwd)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool isomorphic(const FormulaRef& a, const FormulaRef& b) {
  std::unordered_map<int, int> fwd, bwd;
  return iso_rec(a.get(), b.get(), fwd, bwd);
}

ProcResult run_process(const std::string& command) {
  ProcResult res;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    res.out.append(buf, n);
  }
  int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

std::string env_or_fail(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) {
    throw std::runtime_error(std::string("environment variable ") + name +
                             " not set (run through ctest)");
  }
  return v;
}

namespace {
std::string temp_root() {
  const char* t = std::getenv("TMPDIR");
  return t && *t ? t : "/tmp";
}
}  // namespace

TempPath::TempPath(const std::string& suffix) {
  static std::atomic<uint64_t> seq{0};
  path_ = temp_root() + "/tsmv-test-" + std::to_string(getpid()) + "-" +
          std::to_string(seq.fetch_add(1)) + suffix;
}

TempPath::~TempPath() { std::remove(path_.c_str()); }

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace testsupport
