#pragma once

#include <cstdint>
#include <random>
#include <variant>

#include "remnet/action.hpp"
#include "remnet/rem.hpp"

namespace remnet {

// Inputs of the reward rule: the measured energy efficiency plus the served
// counts under the evaluated action and under the all-on reference.
struct RewardObservation {
    double ee = 0.0;
    int served_under_action = 0;
    int served_under_all_on = 0;
};

// EE if the action kept every reachable UE connected, zero otherwise.
double reward(const RewardObservation& obs) noexcept;

struct EpsilonGreedy {
    double epsilon = 0.1; // in [0, 1]
};

struct Ucb {
    double c = 2.0; // exploration weight, >= 0
};

// Deterministic coverage policy: actions are visited in index order until
// each has at least one visit, then selection turns greedy.
struct ExhaustiveSweep {};

using ExplorationPolicy = std::variant<EpsilonGreedy, Ucb, ExhaustiveSweep>;

// Picks the next action to try for `entry` during the learning phase.
// `step` counts prior selections for this entry (used by UCB).
Action select_learning_action(const RemEntry& entry,
                              const ExplorationPolicy& policy,
                              std::uint64_t step,
                              std::mt19937_64& rng);

} // namespace remnet
