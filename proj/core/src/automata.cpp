#include "tsmv/automata.hpp"

#include <cassert>

#include "tsmv/errors.hpp"

namespace tsmv {

TaTeam::TaTeam(int monomial_count, int n_vars, int half_range)
    : n_vars_(n_vars), half_range_(half_range) {
  if (monomial_count < 1 || n_vars < 1 || half_range < 1) {
    throw InputError("TaTeam: counts and state range must be positive");
  }
  teams_.assign(monomial_count,
                std::vector<TsetlinAutomaton>(
                    2 * n_vars, TsetlinAutomaton{half_range, half_range}));
}

bool TaTeam::literal_value(int slot, const BitInput& in) const {
  return slot < n_vars_ ? in.bits[slot] != 0 : in.bits[slot - n_vars_] == 0;
}

bool TaTeam::monomial_value(int j, const BitInput& in) const {
  const auto& team = teams_[j];
  for (int slot = 0; slot < 2 * n_vars_; ++slot) {
    if (team[slot].includes() && !literal_value(slot, in)) return false;
  }
  return true;
}

Monomial TaTeam::extract_monomial(int j) const {
  Monomial mo;
  const auto& team = teams_[j];
  for (int slot = 0; slot < 2 * n_vars_; ++slot) {
    if (team[slot].includes()) {
      mo.add(slot < n_vars_ ? pos(slot + 1) : neg(slot - n_vars_ + 1));
    }
  }
  return mo;
}

std::vector<Monomial> TaTeam::extract_monomials() const {
  std::vector<Monomial> out;
  out.reserve(teams_.size());
  for (int j = 0; j < monomial_count(); ++j) out.push_back(extract_monomial(j));
  return out;
}

void type1_feedback(TaTeam& team, int j, const BitInput& in, double s,
                    SplitMix64& rng) {
  if (s <= 1.0) throw InputError("type1_feedback: specificity must be > 1");
  const bool mono = team.monomial_value(j, in);
  auto& automata = team.automata(j);
  const double inv_s = 1.0 / s;
  const double rest = (s - 1.0) / s;

  for (int slot = 0; slot < static_cast<int>(automata.size()); ++slot) {
    TsetlinAutomaton& ta = automata[slot];
    const bool lit = team.literal_value(slot, in);

    // Probability split (reward, inaction, penalty) per table cell. An
    // included literal evaluating 0 forces the monomial to 0, so the cell
    // (Include, monomial=1, literal=0) cannot occur.
    double p_reward, p_penalty;
    if (ta.includes()) {
      if (mono) {
        assert(lit && "included literal cannot be 0 under a true monomial");
        p_reward = rest;
        p_penalty = 0.0;
      } else {
        p_reward = 0.0;
        p_penalty = inv_s;
      }
    } else {
      if (mono && lit) {
        p_reward = 0.0;
        p_penalty = rest;
      } else {
        p_reward = inv_s;
        p_penalty = 0.0;
      }
    }

    const double u = rng.uniform();
    if (u < p_reward) {
      ta.reward();
    } else if (u >= 1.0 - p_penalty) {
      ta.penalty();
    }
  }
}

void type2_feedback(TaTeam& team, int j, const BitInput& in) {
  if (!team.monomial_value(j, in)) return;
  auto& automata = team.automata(j);
  for (int slot = 0; slot < static_cast<int>(automata.size()); ++slot) {
    TsetlinAutomaton& ta = automata[slot];
    if (!ta.includes() && !team.literal_value(slot, in)) ta.penalty();
  }
}

}  // namespace tsmv
