#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "remnet/action.hpp"
#include "remnet/geometry.hpp"
#include "remnet/power.hpp"

namespace remnet {

enum class BsKind { Macro, Pico };

struct BsConfig {
    Position position;
    BsKind kind = BsKind::Pico;
    int antenna_count = 1;
    double tx_power_dbm = 0.0;
    double carrier_hz = 3.55e9;
    double bandwidth_hz = 300e6;
};

struct Rect {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    double width() const noexcept { return max_x - min_x; }
    double height() const noexcept { return max_y - min_y; }
    bool contains(const Position& p) const noexcept {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }
};

// Base-station deployment. Index 0 must be the single macro BS; every
// following index b corresponds to PBS b-1 in action bit order.
struct NetworkLayout {
    std::vector<BsConfig> bss;
    Rect area;

    int pbs_count() const noexcept { return static_cast<int>(bss.size()) - 1; }
    void validate() const; // throws std::invalid_argument on a broken layout
};

struct UeState {
    Position position;
    double heading_rad = 0.0;
    double speed_mps = 0.0;
};

enum class BeamformingGain {
    None,
    LogArraySize, // 10*log10(antenna_count) dB
};

// Log-distance path loss with lognormal shadowing. The reference loss at
// 1 m defaults to free-space loss at the BS carrier when left unset.
struct ChannelParams {
    double pathloss_exponent_macro = 3.7;
    double pathloss_exponent_pico = 3.3;
    std::optional<double> reference_loss_db;
    double shadowing_sigma_db = 4.0;
    double shadowing_cell_m = 5.0;
    BeamformingGain beamforming_gain = BeamformingGain::LogArraySize;
    double noise_figure_db = 9.0;
    double rss_threshold_dbm = -120.0;
    // Received interference from active non-serving BSs is scaled down by
    // this many dB before entering the SINR, standing in for spatial
    // precoding suppression.
    double interference_suppression_db = 20.0;
    double spectral_efficiency_cap = 7.4; // bit/s/Hz
};

// Shadowing draws frozen over space: the value depends only on the BS index
// and the quantized position cell, so revisiting a location reproduces its
// radio conditions in every episode of the same experiment.
class ShadowingField {
public:
    ShadowingField(std::uint64_t seed, double cell_m, double sigma_db);
    double sample_db(int bs_index, const Position& p) const noexcept;

private:
    std::uint64_t seed_;
    double cell_m_;
    double sigma_db_;
};

double beamforming_gain_db(BeamformingGain rule, int antenna_count);
double reference_loss_db(const ChannelParams& channel, const BsConfig& bs);

// Received signal strength in dBm at `ue` from `bs` given a shadowing draw.
// Distance is clamped to 1 m.
double rss_dbm(const Position& ue,
               const BsConfig& bs,
               const ChannelParams& channel,
               double shadowing_db);

// Per-UE serving BS index, or kUnserved when no eligible BS reaches the
// RSS threshold. Eligible BSs are the macro plus the PBSs active in
// `action`; each UE attaches to the eligible BS with the highest RSS.
struct Assignment {
    static constexpr int kUnserved = -1;
    std::vector<int> serving_bs;

    int served_count() const noexcept;
};

Assignment associate(std::span<const UeState> ues,
                     const NetworkLayout& layout,
                     const Action& action,
                     const ChannelParams& channel,
                     const ShadowingField& shadowing);

// Shannon-style per-UE rates: each BS splits its bandwidth equally among
// the UEs it serves, spectral efficiency is log2(1 + SINR) capped at
// `spectral_efficiency_cap`, and unserved UEs get zero.
std::vector<double> throughput_bps(const Assignment& assignment,
                                   std::span<const UeState> ues,
                                   const NetworkLayout& layout,
                                   const Action& action,
                                   const ChannelParams& channel,
                                   const ShadowingField& shadowing);

struct EvalOutcome {
    double median_bitrate_bps = 0.0;
    double avg_power_w = 0.0;
    double ee = 0.0;
    int served_ues = 0;
    std::vector<double> per_ue_bitrates;
};

struct EpisodeParams {
    int snapshots = 15;
    double snapshot_interval_s = 1.0;
    double mobility_dt_s = 0.5;
    double heading_redraw_mean_s = 5.0;
};

// Median of per-UE mean bitrates across an explicit sequence of snapshot
// states, with the network power and EE of running `action`. A UE counts
// as served only when it has a serving BS in every snapshot.
EvalOutcome evaluate_snapshots(std::span<const std::vector<UeState>> snapshots,
                               const NetworkLayout& layout,
                               const Action& action,
                               const ChannelParams& channel,
                               const PowerParams& power,
                               const ShadowingField& shadowing);

// Runs an episode from `ues`: the initial state plus episode.snapshots - 1
// further snapshots separated by snapshot_interval_s of random-waypoint
// motion, then scores it via evaluate_snapshots. Deterministic given the
// rng state passed in (taken by value: one stream per evaluation).
EvalOutcome evaluate_configuration(std::span<const UeState> ues,
                                   const NetworkLayout& layout,
                                   const Action& action,
                                   const ChannelParams& channel,
                                   const PowerParams& power,
                                   const EpisodeParams& episode,
                                   const ShadowingField& shadowing,
                                   std::mt19937_64 rng);

// Advances every UE by speed*dt along its heading with reflective area
// boundaries, then redraws headings with the per-step probability implied
// by exponentially distributed redraw epochs of the given mean.
void step_mobility(std::span<UeState> ues,
                   double dt_s,
                   const Rect& area,
                   double heading_redraw_mean_s,
                   std::mt19937_64& rng);

// Uniform positions and headings, fixed speed. Deterministic per seed.
std::vector<UeState> generate_scenario(std::uint64_t seed,
                                       int n_ues,
                                       const Rect& area,
                                       double speed_mps);

std::vector<BsPowerProfile> power_profiles(const NetworkLayout& layout);

PositionSet positions_of(std::span<const UeState> ues);

} // namespace remnet
