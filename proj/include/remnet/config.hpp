#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "remnet/bandit.hpp"
#include "remnet/geometry.hpp"
#include "remnet/localization.hpp"
#include "remnet/netsim.hpp"
#include "remnet/power.hpp"

namespace remnet {

// Configuration error carrying the dotted path of the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field_path, const std::string& message)
        : std::runtime_error(field_path + ": " + message),
          field_path_(std::move(field_path)) {}

    const std::string& field_path() const noexcept { return field_path_; }

private:
    std::string field_path_;
};

// One localization arm of the experiment, e.g. {"rtk", sigma 0.01 m}.
struct LocalizationArm {
    std::string name;
    LocalizationModel model;
};

struct ExperimentConfig {
    std::uint64_t seed = 1;
    int n_total_ues = 50;
    int n_subgroup = 40;
    int learning_runs = 30;
    int rem_entries_target = 15;
    int eval_runs = 45;
    double ue_speed_mps = 1.5;
    // Tag positions recorded during learning go through this error model.
    LocalizationModel learning_localization{0.01, false};
    std::vector<MetricKind> metrics{MetricKind::Hausdorff, MetricKind::Mean,
                                    MetricKind::Average, MetricKind::SumOfMinimums};
    std::vector<LocalizationArm> localization_arms{{"rtk", {0.01, false}},
                                                   {"gps", {6.0, false}}};
    ExplorationPolicy policy{ExhaustiveSweep{}};
    NetworkLayout layout;
    ChannelParams channel;
    PowerParams power;
    EpisodeParams episode;
};

// Built-in deployment: one central macro BS and a ring of five pico BSs in
// a 500 m x 500 m area, with the default channel/power/episode parameters.
ExperimentConfig default_config();

// Throws ConfigError naming the broken field.
void validate_config(const ExperimentConfig& config);

// JSON round trip. Loading applies defaults for absent fields, validates,
// and reports unreadable documents or invariant violations as ConfigError
// with the offending field path.
ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig load_config_file(const std::filesystem::path& path);
std::string config_to_json(const ExperimentConfig& config);

} // namespace remnet
