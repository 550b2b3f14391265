#include "remnet/netsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "remnet/rng.hpp"

namespace remnet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSpeedOfLight = 299792458.0;
constexpr double kMinDistanceM = 1.0;

double median_of(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("median of empty range");
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) {
        return values[n / 2];
    }
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double wrap_heading(double h) noexcept {
    h = std::fmod(h, 2.0 * kPi);
    if (h < 0.0) h += 2.0 * kPi;
    return h;
}

} // namespace

void NetworkLayout::validate() const {
    if (bss.empty()) {
        throw std::invalid_argument("layout has no base stations");
    }
    if (bss[0].kind != BsKind::Macro) {
        throw std::invalid_argument("base station 0 must be the macro BS");
    }
    for (std::size_t i = 1; i < bss.size(); ++i) {
        if (bss[i].kind != BsKind::Pico) {
            throw std::invalid_argument("only base station 0 may be a macro BS");
        }
    }
    if (pbs_count() < 1) {
        throw std::invalid_argument("layout needs at least one pico BS");
    }
    for (const BsConfig& bs : bss) {
        if (bs.antenna_count < 1) {
            throw std::invalid_argument("antenna count must be >= 1");
        }
        if (bs.bandwidth_hz <= 0.0 || bs.carrier_hz <= 0.0) {
            throw std::invalid_argument("carrier and bandwidth must be positive");
        }
        if (!area.contains(bs.position)) {
            throw std::invalid_argument("base station outside the simulation area");
        }
    }
}

ShadowingField::ShadowingField(std::uint64_t seed, double cell_m, double sigma_db)
    : seed_(seed), cell_m_(cell_m), sigma_db_(sigma_db) {
    if (cell_m <= 0.0) {
        throw std::invalid_argument("shadowing cell size must be positive");
    }
    if (sigma_db < 0.0) {
        throw std::invalid_argument("shadowing sigma must be non-negative");
    }
}

double ShadowingField::sample_db(int bs_index, const Position& p) const noexcept {
    if (sigma_db_ == 0.0) {
        return 0.0;
    }
    const auto ix = static_cast<std::int64_t>(std::floor(p.x / cell_m_));
    const auto iy = static_cast<std::int64_t>(std::floor(p.y / cell_m_));
    const std::uint64_t h = derive_seed(seed_, static_cast<std::uint64_t>(bs_index),
                                        static_cast<std::uint64_t>(ix),
                                        static_cast<std::uint64_t>(iy));
    return sigma_db_ * gaussian_from_hash(h);
}

double beamforming_gain_db(BeamformingGain rule, int antenna_count) {
    if (antenna_count < 1) {
        throw std::invalid_argument("antenna count must be >= 1");
    }
    switch (rule) {
    case BeamformingGain::None:
        return 0.0;
    case BeamformingGain::LogArraySize:
        return 10.0 * std::log10(static_cast<double>(antenna_count));
    }
    throw std::invalid_argument("unknown beamforming gain rule");
}

double reference_loss_db(const ChannelParams& channel, const BsConfig& bs) {
    if (channel.reference_loss_db) {
        return *channel.reference_loss_db;
    }
    // Free-space loss at 1 m for the BS carrier.
    return 20.0 * std::log10(4.0 * kPi * bs.carrier_hz / kSpeedOfLight);
}

double rss_dbm(const Position& ue,
               const BsConfig& bs,
               const ChannelParams& channel,
               double shadowing_db) {
    const double d = std::max(euclidean(ue, bs.position), kMinDistanceM);
    const double exponent = bs.kind == BsKind::Macro ? channel.pathloss_exponent_macro
                                                     : channel.pathloss_exponent_pico;
    const double path_loss =
        reference_loss_db(channel, bs) + 10.0 * exponent * std::log10(d);
    return bs.tx_power_dbm + beamforming_gain_db(channel.beamforming_gain, bs.antenna_count) -
           path_loss - shadowing_db;
}

int Assignment::served_count() const noexcept {
    int n = 0;
    for (int s : serving_bs) {
        if (s != kUnserved) ++n;
    }
    return n;
}

Assignment associate(std::span<const UeState> ues,
                     const NetworkLayout& layout,
                     const Action& action,
                     const ChannelParams& channel,
                     const ShadowingField& shadowing) {
    if (action.pbs_count() != layout.pbs_count()) {
        throw std::invalid_argument("action length does not match layout PBS count");
    }
    Assignment assignment;
    assignment.serving_bs.reserve(ues.size());
    for (const UeState& ue : ues) {
        int best = Assignment::kUnserved;
        double best_rss = -std::numeric_limits<double>::infinity();
        for (std::size_t b = 0; b < layout.bss.size(); ++b) {
            const bool eligible = b == 0 || action.pbs_active(static_cast<int>(b) - 1);
            if (!eligible) continue;
            const double rss =
                rss_dbm(ue.position, layout.bss[b], channel,
                        shadowing.sample_db(static_cast<int>(b), ue.position));
            if (rss > best_rss) {
                best_rss = rss;
                best = static_cast<int>(b);
            }
        }
        if (best_rss < channel.rss_threshold_dbm) {
            best = Assignment::kUnserved;
        }
        assignment.serving_bs.push_back(best);
    }
    return assignment;
}

std::vector<double> throughput_bps(const Assignment& assignment,
                                   std::span<const UeState> ues,
                                   const NetworkLayout& layout,
                                   const Action& action,
                                   const ChannelParams& channel,
                                   const ShadowingField& shadowing) {
    if (assignment.serving_bs.size() != ues.size()) {
        throw std::invalid_argument("assignment size does not match UE count");
    }
    std::vector<int> load(layout.bss.size(), 0);
    for (int s : assignment.serving_bs) {
        if (s != Assignment::kUnserved) ++load[static_cast<std::size_t>(s)];
    }

    const double suppression = std::pow(10.0, -channel.interference_suppression_db / 10.0);
    std::vector<double> rates(ues.size(), 0.0);
    for (std::size_t i = 0; i < ues.size(); ++i) {
        const int serving = assignment.serving_bs[i];
        if (serving == Assignment::kUnserved) {
            continue;
        }
        const Position& pos = ues[i].position;
        double signal_mw = 0.0;
        double interference_mw = 0.0;
        for (std::size_t b = 0; b < layout.bss.size(); ++b) {
            const bool active = b == 0 || action.pbs_active(static_cast<int>(b) - 1);
            if (!active) continue;
            const double rss = rss_dbm(pos, layout.bss[b], channel,
                                       shadowing.sample_db(static_cast<int>(b), pos));
            const double mw = std::pow(10.0, rss / 10.0);
            if (static_cast<int>(b) == serving) {
                signal_mw = mw;
            } else {
                interference_mw += mw;
            }
        }
        const BsConfig& bs = layout.bss[static_cast<std::size_t>(serving)];
        const double noise_mw =
            std::pow(10.0, (-174.0 + 10.0 * std::log10(bs.bandwidth_hz) +
                            channel.noise_figure_db) /
                               10.0);
        const double sinr = signal_mw / (noise_mw + suppression * interference_mw);
        const double se =
            std::min(std::log2(1.0 + sinr), channel.spectral_efficiency_cap);
        const double share =
            bs.bandwidth_hz / static_cast<double>(load[static_cast<std::size_t>(serving)]);
        rates[i] = share * se;
    }
    return rates;
}

EvalOutcome evaluate_snapshots(std::span<const std::vector<UeState>> snapshots,
                               const NetworkLayout& layout,
                               const Action& action,
                               const ChannelParams& channel,
                               const PowerParams& power,
                               const ShadowingField& shadowing) {
    if (snapshots.empty()) {
        throw std::invalid_argument("episode needs at least one snapshot");
    }
    const std::size_t n_ues = snapshots[0].size();
    if (n_ues == 0) {
        throw std::invalid_argument("episode needs at least one UE");
    }
    std::vector<double> rate_sum(n_ues, 0.0);
    std::vector<bool> always_served(n_ues, true);
    for (const std::vector<UeState>& snap : snapshots) {
        if (snap.size() != n_ues) {
            throw std::invalid_argument("snapshots disagree on UE count");
        }
        const Assignment assignment = associate(snap, layout, action, channel, shadowing);
        const std::vector<double> rates =
            throughput_bps(assignment, snap, layout, action, channel, shadowing);
        for (std::size_t i = 0; i < n_ues; ++i) {
            rate_sum[i] += rates[i];
            if (assignment.serving_bs[i] == Assignment::kUnserved) {
                always_served[i] = false;
            }
        }
    }

    EvalOutcome outcome;
    outcome.per_ue_bitrates.resize(n_ues);
    for (std::size_t i = 0; i < n_ues; ++i) {
        outcome.per_ue_bitrates[i] = rate_sum[i] / static_cast<double>(snapshots.size());
        if (always_served[i]) ++outcome.served_ues;
    }
    outcome.median_bitrate_bps = median_of(outcome.per_ue_bitrates);
    const std::vector<BsPowerProfile> profiles = power_profiles(layout);
    outcome.avg_power_w = network_power(profiles, power, action);
    outcome.ee = energy_efficiency(outcome.median_bitrate_bps, outcome.avg_power_w);
    return outcome;
}

EvalOutcome evaluate_configuration(std::span<const UeState> ues,
                                   const NetworkLayout& layout,
                                   const Action& action,
                                   const ChannelParams& channel,
                                   const PowerParams& power,
                                   const EpisodeParams& episode,
                                   const ShadowingField& shadowing,
                                   std::mt19937_64 rng) {
    if (episode.snapshots < 1) {
        throw std::invalid_argument("episode needs at least one snapshot");
    }
    if (episode.mobility_dt_s <= 0.0 || episode.snapshot_interval_s <= 0.0) {
        throw std::invalid_argument("episode time steps must be positive");
    }
    std::vector<std::vector<UeState>> snapshots;
    snapshots.reserve(static_cast<std::size_t>(episode.snapshots));
    std::vector<UeState> current(ues.begin(), ues.end());
    snapshots.push_back(current);
    const int sub_steps = std::max(
        1, static_cast<int>(std::lround(episode.snapshot_interval_s / episode.mobility_dt_s)));
    const double dt = episode.snapshot_interval_s / sub_steps;
    for (int snap = 1; snap < episode.snapshots; ++snap) {
        for (int s = 0; s < sub_steps; ++s) {
            step_mobility(current, dt, layout.area, episode.heading_redraw_mean_s, rng);
        }
        snapshots.push_back(current);
    }
    return evaluate_snapshots(snapshots, layout, action, channel, power, shadowing);
}

void step_mobility(std::span<UeState> ues,
                   double dt_s,
                   const Rect& area,
                   double heading_redraw_mean_s,
                   std::mt19937_64& rng) {
    if (dt_s <= 0.0) {
        throw std::invalid_argument("mobility step must be positive");
    }
    const double redraw_probability =
        heading_redraw_mean_s > 0.0 ? 1.0 - std::exp(-dt_s / heading_redraw_mean_s) : 0.0;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (UeState& ue : ues) {
        double x = ue.position.x + ue.speed_mps * dt_s * std::cos(ue.heading_rad);
        double y = ue.position.y + ue.speed_mps * dt_s * std::sin(ue.heading_rad);
        double heading = ue.heading_rad;
        // Reflective boundaries; dt is small so one bounce per axis suffices,
        // but loop in case a corner clips both.
        while (!(x >= area.min_x && x <= area.max_x)) {
            if (x < area.min_x) x = 2.0 * area.min_x - x;
            if (x > area.max_x) x = 2.0 * area.max_x - x;
            heading = wrap_heading(kPi - heading);
        }
        while (!(y >= area.min_y && y <= area.max_y)) {
            if (y < area.min_y) y = 2.0 * area.min_y - y;
            if (y > area.max_y) y = 2.0 * area.max_y - y;
            heading = wrap_heading(-heading);
        }
        ue.position = {x, y};
        ue.heading_rad = heading;
        if (uniform(rng) < redraw_probability) {
            ue.heading_rad = angle(rng);
        }
    }
}

std::vector<UeState> generate_scenario(std::uint64_t seed,
                                       int n_ues,
                                       const Rect& area,
                                       double speed_mps) {
    if (n_ues < 1) {
        throw std::invalid_argument("scenario needs at least one UE");
    }
    if (speed_mps < 0.0) {
        throw std::invalid_argument("speed must be non-negative");
    }
    std::mt19937_64 rng = make_rng(seed);
    std::uniform_real_distribution<double> ux(area.min_x, area.max_x);
    std::uniform_real_distribution<double> uy(area.min_y, area.max_y);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::vector<UeState> ues;
    ues.reserve(static_cast<std::size_t>(n_ues));
    for (int i = 0; i < n_ues; ++i) {
        UeState ue;
        ue.position = {ux(rng), uy(rng)};
        ue.heading_rad = angle(rng);
        ue.speed_mps = speed_mps;
        ues.push_back(ue);
    }
    return ues;
}

std::vector<BsPowerProfile> power_profiles(const NetworkLayout& layout) {
    std::vector<BsPowerProfile> profiles;
    profiles.reserve(layout.bss.size());
    for (const BsConfig& bs : layout.bss) {
        profiles.push_back({bs.antenna_count, dbm_to_watts(bs.tx_power_dbm)});
    }
    return profiles;
}

PositionSet positions_of(std::span<const UeState> ues) {
    PositionSet points;
    points.reserve(ues.size());
    for (const UeState& ue : ues) {
        points.push_back(ue.position);
    }
    return points;
}

} // namespace remnet
