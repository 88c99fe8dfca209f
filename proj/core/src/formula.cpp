#include "tsmv/formula.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "tsmv/errors.hpp"

namespace tsmv {

using Kind = Formula::Kind;

namespace {

const FormulaRef& true_node() {
  static const FormulaRef t = std::make_shared<Formula>(Kind::True, 0, std::vector<FormulaRef>{});
  return t;
}

const FormulaRef& false_node() {
  static const FormulaRef f = std::make_shared<Formula>(Kind::False, 0, std::vector<FormulaRef>{});
  return f;
}

FormulaRef node(Kind k, std::vector<FormulaRef> kids) {
  return std::make_shared<Formula>(k, 0, std::move(kids));
}

}  // namespace

FormulaRef mk_true() { return true_node(); }
FormulaRef mk_false() { return false_node(); }
FormulaRef mk_const(bool b) { return b ? true_node() : false_node(); }

FormulaRef mk_var(int var) {
  if (var < 1) throw InputError("mk_var: variable ids are positive");
  return std::make_shared<Formula>(Kind::Var, var, std::vector<FormulaRef>{});
}

FormulaRef mk_not(const FormulaRef& f) {
  if (f->kind() == Kind::True) return false_node();
  if (f->kind() == Kind::False) return true_node();
  return node(Kind::Not, {f});
}

FormulaRef mk_and(std::vector<FormulaRef> kids) {
  std::vector<FormulaRef> kept;
  kept.reserve(kids.size());
  for (auto& k : kids) {
    if (k->kind() == Kind::False) return false_node();
    if (k->kind() == Kind::True) continue;
    kept.push_back(std::move(k));
  }
  if (kept.empty()) return true_node();
  if (kept.size() == 1) return kept.front();
  return node(Kind::And, std::move(kept));
}

FormulaRef mk_and(const FormulaRef& a, const FormulaRef& b) {
  return mk_and(std::vector<FormulaRef>{a, b});
}

FormulaRef mk_or(std::vector<FormulaRef> kids) {
  std::vector<FormulaRef> kept;
  kept.reserve(kids.size());
  for (auto& k : kids) {
    if (k->kind() == Kind::True) return true_node();
    if (k->kind() == Kind::False) continue;
    kept.push_back(std::move(k));
  }
  if (kept.empty()) return false_node();
  if (kept.size() == 1) return kept.front();
  return node(Kind::Or, std::move(kept));
}

FormulaRef mk_or(const FormulaRef& a, const FormulaRef& b) {
  return mk_or(std::vector<FormulaRef>{a, b});
}

namespace {

bool is_const(const FormulaRef& f) {
  return f->kind() == Formula::Kind::True || f->kind() == Formula::Kind::False;
}

}  // namespace

FormulaRef mk_implies(const FormulaRef& a, const FormulaRef& b) {
  if (is_const(a) && is_const(b)) {
    return mk_const(a->kind() == Kind::False || b->kind() == Kind::True);
  }
  return node(Kind::Implies, {a, b});
}

FormulaRef mk_iff(const FormulaRef& a, const FormulaRef& b) {
  if (is_const(a) && is_const(b)) return mk_const(a->kind() == b->kind());
  return node(Kind::Iff, {a, b});
}

namespace {

bool eval_rec(const Formula* f, const Assignment& a,
              std::unordered_map<const Formula*, bool>& memo) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  bool r = false;
  switch (f->kind()) {
    case Kind::True: r = true; break;
    case Kind::False: r = false; break;
    case Kind::Var:
      if (!a.has(f->var())) {
        throw InputError("eval: variable " + std::to_string(f->var()) + " unassigned");
      }
      r = a.value(f->var());
      break;
    case Kind::Not: r = !eval_rec(f->kids()[0].get(), a, memo); break;
    case Kind::And:
      r = true;
      for (const auto& k : f->kids()) r = eval_rec(k.get(), a, memo) && r;
      break;
    case Kind::Or:
      r = false;
      for (const auto& k : f->kids()) r = eval_rec(k.get(), a, memo) || r;
      break;
    case Kind::Implies:
      r = !eval_rec(f->kids()[0].get(), a, memo) || eval_rec(f->kids()[1].get(), a, memo);
      break;
    case Kind::Iff:
      r = eval_rec(f->kids()[0].get(), a, memo) == eval_rec(f->kids()[1].get(), a, memo);
      break;
  }
  memo.emplace(f, r);
  return r;
}

}  // namespace

bool eval(const FormulaRef& f, const Assignment& a) {
  std::unordered_map<const Formula*, bool> memo;
  return eval_rec(f.get(), a, memo);
}

namespace {

FormulaRef subst_rec(const FormulaRef& f, const Assignment& a,
                     std::unordered_map<const Formula*, FormulaRef>& memo) {
  auto it = memo.find(f.get());
  if (it != memo.end()) return it->second;
  FormulaRef r;
  switch (f->kind()) {
    case Kind::True:
    case Kind::False:
      r = f;
      break;
    case Kind::Var:
      r = a.has(f->var()) ? mk_const(a.value(f->var())) : f;
      break;
    case Kind::Not:
      r = mk_not(subst_rec(f->kids()[0], a, memo));
      break;
    case Kind::And:
    case Kind::Or: {
      std::vector<FormulaRef> kids;
      kids.reserve(f->kids().size());
      for (const auto& k : f->kids()) kids.push_back(subst_rec(k, a, memo));
      r = f->kind() == Kind::And ? mk_and(std::move(kids)) : mk_or(std::move(kids));
      break;
    }
    case Kind::Implies:
      r = mk_implies(subst_rec(f->kids()[0], a, memo), subst_rec(f->kids()[1], a, memo));
      break;
    case Kind::Iff:
      r = mk_iff(subst_rec(f->kids()[0], a, memo), subst_rec(f->kids()[1], a, memo));
      break;
  }
  memo.emplace(f.get(), r);
  return r;
}

}  // namespace

FormulaRef substitute(const FormulaRef& f, const Assignment& partial) {
  std::unordered_map<const Formula*, FormulaRef> memo;
  return subst_rec(f, partial, memo);
}

namespace {

void collect_rec(const Formula* f, std::set<int>& vars,
                 std::set<const Formula*>& seen) {
  if (!seen.insert(f).second) return;
  if (f->kind() == Kind::Var) vars.insert(f->var());
  for (const auto& k : f->kids()) collect_rec(k.get(), vars, seen);
}

void print_rec(const Formula* f, std::string& out) {
  switch (f->kind()) {
    case Kind::True: out += "true"; break;
    case Kind::False: out += "false"; break;
    case Kind::Var: out += "x" + std::to_string(f->var()); break;
    case Kind::Not:
      out += "~";
      print_rec(f->kids()[0].get(), out);
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff: {
      const char* op = f->kind() == Kind::And ? " & "
                       : f->kind() == Kind::Or ? " | "
                       : f->kind() == Kind::Implies ? " -> " : " <-> ";
      out += "(";
      for (size_t i = 0; i < f->kids().size(); ++i) {
        if (i) out += op;
        print_rec(f->kids()[i].get(), out);
      }
      out += ")";
      break;
    }
  }
}

}  // namespace

std::vector<int> collect_vars(const FormulaRef& f) {
  std::set<int> vars;
  std::set<const Formula*> seen;
  collect_rec(f.get(), vars, seen);
  return {vars.begin(), vars.end()};
}

std::string to_string(const FormulaRef& f) {
  std::string out;
  print_rec(f.get(), out);
  return out;
}

}  // namespace tsmv
