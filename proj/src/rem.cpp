#include "remnet/rem.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace remnet {

namespace {

constexpr int kSchemaVersion = 1;

using nlohmann::json;

} // namespace

Rem::Rem(int pbs_count) : pbs_count_(pbs_count) {
    Action::table_size(pbs_count); // validates the range
}

std::size_t Rem::add_entry(PositionSet tag) {
    if (tag.empty()) {
        throw std::invalid_argument("entry tag must be non-empty");
    }
    RemEntry entry;
    entry.tag = std::move(tag);
    entry.stats.resize(Action::table_size(pbs_count_));
    entries_.push_back(std::move(entry));
    return entries_.size() - 1;
}

std::size_t Rem::match_entry(const PositionSet& query, MetricKind kind) const {
    if (entries_.empty()) {
        throw std::invalid_argument("cannot match against an empty map");
    }
    std::size_t best = 0;
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const double d = set_distance(kind, entries_[i].tag, query);
        if (d < best_distance) {
            best_distance = d;
            best = i;
        }
    }
    return best;
}

void Rem::save(std::ostream& out) const {
    json doc;
    doc["version"] = kSchemaVersion;
    doc["pbs_count"] = pbs_count_;
    json entries = json::array();
    for (const RemEntry& entry : entries_) {
        json tag = json::array();
        for (const Position& p : entry.tag) {
            tag.push_back(json::array({p.x, p.y}));
        }
        json stats = json::array();
        for (const ActionStats& s : entry.stats) {
            json row;
            row["q"] = s.q_value;
            row["n"] = s.visit_count;
            row["served"] = s.served_ues ? json(*s.served_ues) : json(nullptr);
            stats.push_back(std::move(row));
        }
        entries.push_back(json{{"tag", std::move(tag)}, {"stats", std::move(stats)}});
    }
    doc["entries"] = std::move(entries);
    out << doc.dump(2) << '\n';
    if (!out) {
        throw std::runtime_error("failed to write map document");
    }
}

void Rem::save_file(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    save(out);
}

Rem Rem::load(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("malformed map document: ") + e.what());
    }
    try {
        const int version = doc.at("version").get<int>();
        if (version != kSchemaVersion) {
            throw std::runtime_error("unsupported map schema version " +
                                     std::to_string(version));
        }
        Rem rem(doc.at("pbs_count").get<int>());
        const std::size_t table = Action::table_size(rem.pbs_count());
        for (const json& je : doc.at("entries")) {
            RemEntry entry;
            for (const json& jp : je.at("tag")) {
                if (!jp.is_array() || jp.size() != 2) {
                    throw std::runtime_error("tag point must be an [x, y] pair");
                }
                entry.tag.push_back({jp[0].get<double>(), jp[1].get<double>()});
            }
            if (entry.tag.empty()) {
                throw std::runtime_error("entry tag must be non-empty");
            }
            const json& jstats = je.at("stats");
            if (jstats.size() != table) {
                throw std::runtime_error("action table length mismatch: expected " +
                                         std::to_string(table) + ", got " +
                                         std::to_string(jstats.size()));
            }
            for (const json& js : jstats) {
                ActionStats s;
                s.q_value = js.at("q").get<double>();
                s.visit_count = js.at("n").get<std::uint64_t>();
                const json& served = js.at("served");
                if (!served.is_null()) {
                    s.served_ues = served.get<int>();
                    if (s.visit_count == 0) {
                        throw std::runtime_error(
                            "served count recorded for an unvisited action");
                    }
                }
                entry.stats.push_back(s);
            }
            rem.entries_.push_back(std::move(entry));
        }
        return rem;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed map document: ") + e.what());
    }
}

Rem Rem::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path.string());
    }
    return load(in);
}

std::vector<Action> action_space_reduction(const RemEntry& entry, int pbs_count) {
    const Action all_on = Action::all_on(pbs_count);
    if (entry.stats.size() != Action::table_size(pbs_count)) {
        throw std::invalid_argument("entry table size does not match pbs_count");
    }
    const ActionStats& all_on_stats = entry.stats[all_on.index()];
    if (!all_on_stats.served_ues) {
        throw std::invalid_argument(
            "all-on action has no recorded served count; cannot reduce");
    }
    const int full_service = *all_on_stats.served_ues;
    std::vector<Action> kept;
    for (std::uint32_t i = 0; i < entry.stats.size(); ++i) {
        const ActionStats& s = entry.stats[i];
        if (s.served_ues && *s.served_ues == full_service) {
            kept.emplace_back(i, pbs_count);
        }
    }
    return kept;
}

Action greedy_action(const RemEntry& entry, std::span<const Action> reduced) {
    if (reduced.empty()) {
        throw std::invalid_argument("reduced action set is empty");
    }
    const Action* best = &reduced[0];
    double best_q = entry.stats.at(best->index()).q_value;
    for (const Action& a : reduced.subspan(1)) {
        const double q = entry.stats.at(a.index()).q_value;
        const bool better =
            q > best_q ||
            (q == best_q && (a.active_count() < best->active_count() ||
                             (a.active_count() == best->active_count() &&
                              a.index() < best->index())));
        if (better) {
            best = &a;
            best_q = q;
        }
    }
    return *best;
}

void update_entry(RemEntry& entry, const Action& action, double reward, int served) {
    ActionStats& s = entry.stats.at(action.index());
    s.visit_count += 1;
    s.q_value += (reward - s.q_value) / static_cast<double>(s.visit_count);
    s.served_ues = served;
}

} // namespace remnet
