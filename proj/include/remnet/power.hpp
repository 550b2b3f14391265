#pragma once

#include <span>
#include <vector>

#include "remnet/action.hpp"

namespace remnet {

// Hardware power model parameters shared by all base stations.
struct PowerParams {
    double amplifier_efficiency = 0.5; // in (0, 1]
    double per_antenna_power_w = 0.4;  // transceiver chain power per antenna
    double oscillator_power_w = 0.2;
    double fixed_power_w = 10.0;   // baseband + backhaul, active mode
    double standby_power_w = 10.0; // whole-BS draw in standby
};

// Per-BS inputs of the power model.
struct BsPowerProfile {
    int antenna_count = 1;
    double tx_power_w = 0.0;
};

double dbm_to_watts(double dbm) noexcept;
double watts_to_dbm(double watts);

// Radiated power divided by amplifier efficiency.
double effective_transmitted_power(const BsPowerProfile& profile, const PowerParams& params);

// antenna_count * per-antenna power + oscillator power.
double transceiver_chain_power(const BsPowerProfile& profile, const PowerParams& params) noexcept;

// Active: ETP + TCP + fixed. Standby: standby power only.
double bs_total_power(const BsPowerProfile& profile, const PowerParams& params, bool active);

// Network-wide draw. profiles[0] is the macro BS and is always active;
// profiles[1 + b] is active iff action bit b is set. Throws on a length
// mismatch between profiles and the action's PBS count.
double network_power(std::span<const BsPowerProfile> profiles,
                     const PowerParams& params,
                     const Action& action);

// Median UE bitrate over average network power, bit/s/W. Throws unless
// avg_power_w > 0.
double energy_efficiency(double median_bitrate_bps, double avg_power_w);

} // namespace remnet
