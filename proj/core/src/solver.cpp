#include "tsmv/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "tsmv/errors.hpp"

namespace tsmv {

namespace {

using Clock = std::chrono::steady_clock;

// Literal helpers. External literals are signed var ids; watch lists are
// indexed by 2*(var-1) + (negative ? 1 : 0).
inline int widx(int lit) { return 2 * (std::abs(lit) - 1) + (lit < 0); }

class Solver {
 public:
  Solver(const Cnf& cnf, const SolverOptions& opts)
      : opts_(opts), nvars_(cnf.var_count) {
    assigns_.assign(nvars_ + 1, -1);
    level_.assign(nvars_ + 1, 0);
    reason_.assign(nvars_ + 1, -1);
    seen_.assign(nvars_ + 1, 0);
    watches_.assign(2 * nvars_, {});
    if (opts_.use_vsids) activity_.assign(nvars_ + 1, 0.0);

    ok_ = true;
    for (const auto& clause : cnf.clauses) {
      if (!ok_) break;
      add_original(clause);
    }
  }

  SolveResult solve(const SolveBudget& budget, const Cnf& original) {
    const auto t0 = Clock::now();
    SolveResult res;
    auto finish = [&](SolveStatus st) {
      res.status = st;
      res.decisions = decisions_;
      res.conflicts = conflicts_;
      res.propagations = propagations_;
      res.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
      return res;
    };

    if (budget.has_deadline()) {
      deadline_ = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(budget.timeout_s));
      has_deadline_ = true;
      if (budget.timeout_s == 0.0) return finish(SolveStatus::Timeout);
    }

    if (!ok_) return finish(SolveStatus::Unsat);

    int64_t next_restart =
        opts_.use_restarts ? restart_unit_ * luby(restart_count_) : -1;

    for (;;) {
      int confl = propagate();
      if (confl >= 0) {
        ++conflicts_;
        ++conflicts_since_restart_;
        if (decision_level() == 0) return finish(SolveStatus::Unsat);
        if (budget.conflict_limit >= 0 && conflicts_ >= budget.conflict_limit) {
          return finish(SolveStatus::Timeout);
        }
        if (expired()) return finish(SolveStatus::Timeout);

        std::vector<int> learnt;
        int bt_level = analyze(confl, learnt);
        backtrack(bt_level);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          int ci = add_learnt(learnt);
          enqueue(learnt[0], ci);
        }
        if (opts_.use_vsids) decay_activity();
        if (next_restart >= 0 && conflicts_since_restart_ >= next_restart) {
          backtrack(0);
          conflicts_since_restart_ = 0;
          ++restart_count_;
          next_restart = restart_unit_ * luby(restart_count_);
        }
      } else {
        if (expired()) return finish(SolveStatus::Timeout);
        int v = pick_branch_var();
        if (v == 0) {
          // Complete assignment. Guard against implementation bugs before
          // reporting: the model must satisfy every input clause.
          for (int i = 1; i <= nvars_; ++i) res.assignment.set(i, assigns_[i] == 1);
          if (!original.satisfied_by(res.assignment)) {
            throw SolverError("embedded solver produced a bad model");
          }
          return finish(SolveStatus::Sat);
        }
        ++decisions_;
        trail_lim_.push_back(trail_.size());
        enqueue(v, -1);  // positive phase first
      }
    }
  }

 private:
  // ---- clause storage ----

  void add_original(const std::vector<int>& in) {
    std::vector<int> c(in);
    std::sort(c.begin(), c.end(), [](int a, int b) {
      int va = std::abs(a), vb = std::abs(b);
      return va != vb ? va < vb : a > b;
    });
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (size_t i = 0; i + 1 < c.size(); ++i) {
      if (c[i] == -c[i + 1]) return;  // tautology
    }
    if (c.empty()) {
      ok_ = false;
      return;
    }
    if (c.size() == 1) {
      if (!enqueue(c[0], -1)) ok_ = false;
      return;
    }
    clauses_.push_back(std::move(c));
    attach(clauses_.size() - 1);
  }

  int add_learnt(std::vector<int> c) {
    // c[0] is the asserting literal; watch it and a literal of the backjump
    // level so the watch invariant holds after backtracking.
    int ci = static_cast<int>(clauses_.size());
    int best = 1;
    for (int i = 2; i < static_cast<int>(c.size()); ++i) {
      if (level_[std::abs(c[i])] > level_[std::abs(c[best])]) best = i;
    }
    std::swap(c[1], c[best]);
    clauses_.push_back(std::move(c));
    attach(ci);
    return ci;
  }

  void attach(size_t ci) {
    const auto& c = clauses_[ci];
    watches_[widx(c[0])].push_back(ci);
    watches_[widx(c[1])].push_back(ci);
  }

  // ---- assignment ----

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  int lit_value(int lit) const {  // -1 unset, 0 false, 1 true
    int v = assigns_[std::abs(lit)];
    if (v < 0) return -1;
    return (v == 1) == (lit > 0);
  }

  bool enqueue(int lit, int reason) {
    int lv = lit_value(lit);
    if (lv == 1) return true;
    if (lv == 0) return false;
    int v = std::abs(lit);
    assigns_[v] = lit > 0;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(lit);
    return true;
  }

  // Returns the conflicting clause index, or -1.
  int propagate() {
    while (qhead_ < trail_.size()) {
      int p = trail_[qhead_++];
      ++propagations_;
      if ((propagations_ & 2047) == 0 && expired()) return -1;  // caller rechecks
      int false_lit = -p;
      auto& wl = watches_[widx(false_lit)];
      size_t keep = 0;
      for (size_t wi = 0; wi < wl.size(); ++wi) {
        size_t ci = wl[wi];
        auto& c = clauses_[ci];
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        if (lit_value(c[0]) == 1) {
          wl[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (size_t k = 2; k < c.size(); ++k) {
          if (lit_value(c[k]) != 0) {
            std::swap(c[1], c[k]);
            watches_[widx(c[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        wl[keep++] = ci;  // stays watched
        if (lit_value(c[0]) == 0) {
          for (size_t wj = wi + 1; wj < wl.size(); ++wj) wl[keep++] = wl[wj];
          wl.resize(keep);
          qhead_ = trail_.size();
          return static_cast<int>(ci);
        }
        enqueue(c[0], static_cast<int>(ci));
      }
      wl.resize(keep);
    }
    return -1;
  }

  // First-UIP learning; fills learnt (asserting literal first), returns the
  // backjump level.
  int analyze(int confl, std::vector<int>& learnt) {
    learnt.push_back(0);  // slot for the asserting literal
    int path = 0;
    int p = 0;
    int index = static_cast<int>(trail_.size()) - 1;

    int c = confl;
    do {
      const auto& cl = clauses_[c];
      for (size_t j = (p == 0 ? 0 : 1); j < cl.size(); ++j) {
        int q = cl[j];
        int v = std::abs(q);
        if (!seen_[v] && level_[v] > 0) {
          seen_[v] = 1;
          if (opts_.use_vsids) bump_activity(v);
          if (level_[v] >= decision_level()) {
            ++path;
          } else {
            learnt.push_back(q);
          }
        }
      }
      while (!seen_[std::abs(trail_[index])]) --index;
      p = trail_[index];
      c = reason_[std::abs(p)];
      seen_[std::abs(p)] = 0;
      --index;
      --path;
    } while (path > 0);
    learnt[0] = -p;

    int bt = 0;
    for (size_t i = 1; i < learnt.size(); ++i) {
      bt = std::max(bt, level_[std::abs(learnt[i])]);
    }
    for (size_t i = 1; i < learnt.size(); ++i) seen_[std::abs(learnt[i])] = 0;
    return bt;
  }

  void backtrack(int target) {
    if (decision_level() <= target) return;
    size_t bound = trail_lim_[target];
    for (size_t i = trail_.size(); i > bound; --i) {
      int v = std::abs(trail_[i - 1]);
      assigns_[v] = -1;
      reason_[v] = -1;
    }
    trail_.resize(bound);
    trail_lim_.resize(target);
    qhead_ = bound;
    search_from_ = 1;
  }

  int pick_branch_var() {
    if (opts_.use_vsids) {
      int best = 0;
      for (int v = 1; v <= nvars_; ++v) {
        if (assigns_[v] < 0 && (best == 0 || activity_[v] > activity_[best])) {
          best = v;
        }
      }
      return best;
    }
    for (int v = search_from_; v <= nvars_; ++v) {
      if (assigns_[v] < 0) {
        search_from_ = v;
        return v;
      }
    }
    return 0;
  }

  void bump_activity(int v) {
    activity_[v] += activity_inc_;
    if (activity_[v] > 1e100) {
      for (double& a : activity_) a *= 1e-100;
      activity_inc_ *= 1e-100;
    }
  }

  void decay_activity() { activity_inc_ /= 0.95; }

  // 1 1 2 1 1 2 4 1 1 2 ... for x = 0, 1, 2, ...
  static int64_t luby(int64_t x) {
    int64_t size = 1, seq = 0;
    while (size < x + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != x) {
      size = (size - 1) >> 1;
      --seq;
      x = x % size;
    }
    return 1LL << seq;
  }

  bool expired() {
    if (!has_deadline_) return false;
    return Clock::now() >= deadline_;
  }

  SolverOptions opts_;
  int nvars_;
  bool ok_ = true;

  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<size_t>> watches_;

  std::vector<int8_t> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<int8_t> seen_;
  std::vector<int> trail_;
  std::vector<size_t> trail_lim_;
  size_t qhead_ = 0;
  int search_from_ = 1;

  std::vector<double> activity_;
  double activity_inc_ = 1.0;
  int64_t restart_unit_ = 100;
  int64_t restart_count_ = 0;
  int64_t conflicts_since_restart_ = 0;

  int64_t decisions_ = 0;
  int64_t conflicts_ = 0;
  int64_t propagations_ = 0;

  bool has_deadline_ = false;
  Clock::time_point deadline_;
};

}  // namespace

SolveResult solve_embedded(const Cnf& cnf, const SolveBudget& budget,
                           const SolverOptions& opts) {
  Solver s(cnf, opts);
  return s.solve(budget, cnf);
}

SolverSpec parse_solver_spec(const std::string& text) {
  if (text == "embedded") return {SolverSpec::Kind::Embedded, ""};
  if (text.rfind("exec:", 0) == 0) {
    std::string cmd = text.substr(5);
    if (cmd.empty()) throw InputError("solver spec: empty command after 'exec:'");
    return {SolverSpec::Kind::External, cmd};
  }
  throw InputError("solver spec: expected 'embedded' or 'exec:<command>', got '" +
                   text + "'");
}

SolveResult solve_cnf(const Cnf& cnf, const SolverSpec& spec,
                      const SolveBudget& budget) {
  if (spec.kind == SolverSpec::Kind::Embedded) return solve_embedded(cnf, budget);
  return solve_external(cnf, spec.command, budget);
}

}  // namespace tsmv
