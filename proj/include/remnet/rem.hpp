#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "remnet/action.hpp"
#include "remnet/geometry.hpp"

namespace remnet {

// Learned statistics for one (entry, action) pair.
struct ActionStats {
    double q_value = 0.0;          // running mean of observed rewards
    std::uint64_t visit_count = 0; // N(entry, action)
    std::optional<int> served_ues; // unknown before the first visit
};

// One map entry: a position-set tag plus a dense table of per-action stats.
// stats.size() == Action::table_size(pbs_count) always.
struct RemEntry {
    PositionSet tag;
    std::vector<ActionStats> stats;
};

// The Radio Environment Map: location-tagged action-value tables, one table
// row per possible PBS on/off configuration.
class Rem {
public:
    explicit Rem(int pbs_count);

    int pbs_count() const noexcept { return pbs_count_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const std::vector<RemEntry>& entries() const noexcept { return entries_; }
    const RemEntry& entry(std::size_t i) const { return entries_.at(i); }
    RemEntry& entry(std::size_t i) { return entries_.at(i); }

    // Appends a fresh entry (all stats zero-initialized, served counts
    // unknown) and returns its index. The tag must be non-empty.
    std::size_t add_entry(PositionSet tag);

    // Index of the entry whose tag is closest to `query` under `kind`.
    // Ties break toward the lowest index. Throws if the map is empty.
    std::size_t match_entry(const PositionSet& query, MetricKind kind) const;

    // JSON persistence. Round-trips exactly: integers bit-exact, reals via
    // shortest round-trip representation.
    void save(std::ostream& out) const;
    void save_file(const std::filesystem::path& path) const;
    static Rem load(std::istream& in);
    static Rem load_file(const std::filesystem::path& path);

private:
    int pbs_count_;
    std::vector<RemEntry> entries_;
};

// Actions recorded to serve exactly as many UEs as the all-on configuration.
// Unvisited actions are excluded: their served count is unknown, so the
// no-disconnection constraint cannot be certified for them. Throws if the
// all-on action has never been visited. The all-on action is always in the
// result, which is sorted by action index.
std::vector<Action> action_space_reduction(const RemEntry& entry, int pbs_count);

// argmax of q_value over `reduced`. Ties break toward fewer active PBSs,
// then toward the lower action index. Throws if `reduced` is empty.
Action greedy_action(const RemEntry& entry, std::span<const Action> reduced);

// Incremental sample-mean update: N += 1, Q += (reward - Q) / N, and the
// served count is overwritten with the latest observation.
void update_entry(RemEntry& entry, const Action& action, double reward, int served);

} // namespace remnet
