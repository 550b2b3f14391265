#include "remnet/bandit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace remnet {

namespace {

int pbs_count_of(const RemEntry& entry) {
    const std::size_t n = entry.stats.size();
    for (int p = 1; p <= Action::kMaxPbsCount; ++p) {
        if (Action::table_size(p) == n) return p;
    }
    throw std::invalid_argument("entry table size is not a power of two");
}

// Greedy over the full table with the same tie-break as greedy_action:
// max Q, then fewer active PBSs, then lower index.
Action full_table_greedy(const RemEntry& entry, int pbs_count) {
    Action best(0, pbs_count);
    double best_q = entry.stats[0].q_value;
    for (std::uint32_t i = 1; i < entry.stats.size(); ++i) {
        const Action a(i, pbs_count);
        const double q = entry.stats[i].q_value;
        const bool better =
            q > best_q ||
            (q == best_q && (a.active_count() < best.active_count() ||
                             (a.active_count() == best.active_count() &&
                              a.index() < best.index())));
        if (better) {
            best = a;
            best_q = q;
        }
    }
    return best;
}

} // namespace

double reward(const RewardObservation& obs) noexcept {
    return obs.served_under_action == obs.served_under_all_on ? obs.ee : 0.0;
}

Action select_learning_action(const RemEntry& entry,
                              const ExplorationPolicy& policy,
                              std::uint64_t step,
                              std::mt19937_64& rng) {
    if (entry.stats.empty()) {
        throw std::invalid_argument("entry table is not allocated");
    }
    const int pbs_count = pbs_count_of(entry);

    if (const auto* eg = std::get_if<EpsilonGreedy>(&policy)) {
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        if (coin(rng) < eg->epsilon) {
            std::uniform_int_distribution<std::uint32_t> pick(
                0, static_cast<std::uint32_t>(entry.stats.size()) - 1);
            return Action(pick(rng), pbs_count);
        }
        return full_table_greedy(entry, pbs_count);
    }

    if (const auto* ucb = std::get_if<Ucb>(&policy)) {
        const double log_step = std::log(std::max<double>(static_cast<double>(step), 1.0));
        std::uint32_t best = 0;
        double best_priority = -std::numeric_limits<double>::infinity();
        for (std::uint32_t i = 0; i < entry.stats.size(); ++i) {
            const ActionStats& s = entry.stats[i];
            double priority;
            if (s.visit_count == 0) {
                priority = std::numeric_limits<double>::infinity();
            } else {
                priority = s.q_value +
                           ucb->c * std::sqrt(log_step / static_cast<double>(s.visit_count));
            }
            if (priority > best_priority) {
                best_priority = priority;
                best = i;
            }
        }
        return Action(best, pbs_count);
    }

    // ExhaustiveSweep: lowest-index unvisited action, greedy once covered.
    for (std::uint32_t i = 0; i < entry.stats.size(); ++i) {
        if (entry.stats[i].visit_count == 0) {
            return Action(i, pbs_count);
        }
    }
    return full_table_greedy(entry, pbs_count);
}

} // namespace remnet
