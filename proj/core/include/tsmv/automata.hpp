#pragma once

#include <vector>

#include "tsmv/bitinput.hpp"
#include "tsmv/model.hpp"
#include "tsmv/rng.hpp"

namespace tsmv {

// Two-action learning automaton with states 1..2N. States <= N choose
// Exclude, states > N choose Include. Reward deepens the current action,
// penalty moves one step toward the other action; the end states 1 and 2N
// absorb further rewards.
struct TsetlinAutomaton {
  int state = 0;
  int half_range = 0;  // N

  bool includes() const { return state > half_range; }

  void reward() {
    if (includes()) {
      if (state < 2 * half_range) ++state;
    } else {
      if (state > 1) --state;
    }
  }

  void penalty() {
    if (includes()) --state;
    else ++state;
  }
};

// The automaton teams for all monomials of one polarity. Team j holds
// 2*n_vars automata: slots 0..n_vars-1 guard the plain literals x_1..x_n,
// slots n_vars..2*n_vars-1 guard the negated ones. All automata start in
// state N, the Exclude state next to the action boundary.
class TaTeam {
 public:
  TaTeam(int monomial_count, int n_vars, int half_range);

  int n_vars() const { return n_vars_; }
  int half_range() const { return half_range_; }
  int monomial_count() const { return static_cast<int>(teams_.size()); }

  std::vector<TsetlinAutomaton>& automata(int j) { return teams_[j]; }
  const std::vector<TsetlinAutomaton>& automata(int j) const { return teams_[j]; }

  // Value of the literal guarded by a slot under the given input.
  bool literal_value(int slot, const BitInput& in) const;

  // Conjunction of the currently included literals; empty means true.
  bool monomial_value(int j, const BitInput& in) const;

  // A literal appears in the extracted monomial exactly when its automaton
  // sits in an Include state.
  Monomial extract_monomial(int j) const;
  std::vector<Monomial> extract_monomials() const;

 private:
  int n_vars_;
  int half_range_;
  std::vector<std::vector<TsetlinAutomaton>> teams_;
};

// Reinforcement for examples the monomial's polarity agrees with. Draws one
// uniform sample per automaton, slots in ascending order.
void type1_feedback(TaTeam& team, int j, const BitInput& in, double s,
                    SplitMix64& rng);

// Reinforcement against false positives: deterministically pushes excluded
// literals that are 0 into a true monomial, which makes the monomial false
// on this input. Never moves any automaton toward Exclude. Draws nothing.
void type2_feedback(TaTeam& team, int j, const BitInput& in);

}  // namespace tsmv
