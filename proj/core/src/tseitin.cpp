#include "tsmv/tseitin.hpp"

#include <unordered_map>

#include "tsmv/errors.hpp"

namespace tsmv {

using Kind = Formula::Kind;

namespace {

class Encoder {
 public:
  Encoder(Cnf& cnf, VarPool& pool) : cnf_(cnf), pool_(pool) {}

  // Signed literal equisatisfiably standing for the node.
  int lit(const FormulaRef& f) {
    auto it = memo_.find(f.get());
    if (it != memo_.end()) return it->second;
    int r = encode(f);
    memo_.emplace(f.get(), r);
    return r;
  }

  // A variable pinned true; lazily materialized for constant nodes.
  int true_lit() {
    if (true_var_ == 0) {
      true_var_ = pool_.fresh("ts");
      cnf_.add_clause({true_var_});
    }
    return true_var_;
  }

 private:
  int encode(const FormulaRef& f) {
    switch (f->kind()) {
      case Kind::True: return true_lit();
      case Kind::False: return -true_lit();
      case Kind::Var: return f->var();
      case Kind::Not: return -lit(f->kids()[0]);
      case Kind::And: {
        std::vector<int> kids;
        kids.reserve(f->kids().size());
        for (const auto& k : f->kids()) kids.push_back(lit(k));
        int t = pool_.fresh("ts");
        // t -> k_i, and (all k_i) -> t
        std::vector<int> big{t};
        for (int k : kids) {
          cnf_.add_clause({-t, k});
          big.push_back(-k);
        }
        cnf_.add_clause(std::move(big));
        return t;
      }
      case Kind::Or: {
        std::vector<int> kids;
        kids.reserve(f->kids().size());
        for (const auto& k : f->kids()) kids.push_back(lit(k));
        int t = pool_.fresh("ts");
        std::vector<int> big{-t};
        for (int k : kids) {
          cnf_.add_clause({t, -k});
          big.push_back(k);
        }
        cnf_.add_clause(std::move(big));
        return t;
      }
      case Kind::Implies: {
        int a = lit(f->kids()[0]);
        int b = lit(f->kids()[1]);
        int t = pool_.fresh("ts");
        cnf_.add_clause({-t, -a, b});
        cnf_.add_clause({t, a});
        cnf_.add_clause({t, -b});
        return t;
      }
      case Kind::Iff: {
        int a = lit(f->kids()[0]);
        int b = lit(f->kids()[1]);
        int t = pool_.fresh("ts");
        cnf_.add_clause({-t, -a, b});
        cnf_.add_clause({-t, a, -b});
        cnf_.add_clause({t, a, b});
        cnf_.add_clause({t, -a, -b});
        return t;
      }
    }
    throw Error("tseitin: unhandled node kind");
  }

  Cnf& cnf_;
  VarPool& pool_;
  std::unordered_map<const Formula*, int> memo_;
  int true_var_ = 0;
};

}  // namespace

TseitinResult tseitin(const FormulaRef& f, VarPool& pool) {
  TseitinResult res;
  Encoder enc(res.cnf, pool);
  int r = enc.lit(f);
  if (r > 0) {
    res.root = r;
  } else {
    int t = pool.fresh("ts");
    res.cnf.add_clause({-t, r});
    res.cnf.add_clause({t, -r});
    res.root = t;
  }
  if (res.cnf.var_count < pool.size()) res.cnf.var_count = pool.size();
  return res;
}

}  // namespace tsmv
