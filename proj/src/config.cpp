#include "remnet/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace remnet {

namespace {

using nlohmann::json;

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string join_path(const std::string& base, const std::string& key) {
    return base.empty() ? key : base + "." + key;
}

template <typename T>
T get_field(const json& obj, const std::string& base, const std::string& key, T fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(join_path(base, key), e.what());
    }
}

ChannelParams parse_channel(const json& j, const std::string& base, ChannelParams out) {
    out.pathloss_exponent_macro =
        get_field(j, base, "pathloss_exponent_macro", out.pathloss_exponent_macro);
    out.pathloss_exponent_pico =
        get_field(j, base, "pathloss_exponent_pico", out.pathloss_exponent_pico);
    if (j.contains("reference_loss_db")) {
        out.reference_loss_db = get_field(j, base, "reference_loss_db", 0.0);
    }
    out.shadowing_sigma_db = get_field(j, base, "shadowing_sigma_db", out.shadowing_sigma_db);
    out.shadowing_cell_m = get_field(j, base, "shadowing_cell_m", out.shadowing_cell_m);
    out.noise_figure_db = get_field(j, base, "noise_figure_db", out.noise_figure_db);
    out.rss_threshold_dbm = get_field(j, base, "rss_threshold_dbm", out.rss_threshold_dbm);
    out.interference_suppression_db =
        get_field(j, base, "interference_suppression_db", out.interference_suppression_db);
    out.spectral_efficiency_cap =
        get_field(j, base, "spectral_efficiency_cap", out.spectral_efficiency_cap);
    const std::string gain =
        get_field<std::string>(j, base, "beamforming_gain",
                               out.beamforming_gain == BeamformingGain::None
                                   ? "none"
                                   : "log_array_size");
    if (gain == "none") {
        out.beamforming_gain = BeamformingGain::None;
    } else if (gain == "log_array_size") {
        out.beamforming_gain = BeamformingGain::LogArraySize;
    } else {
        throw ConfigError(join_path(base, "beamforming_gain"),
                          "expected \"none\" or \"log_array_size\"");
    }
    return out;
}

PowerParams parse_power(const json& j, const std::string& base, PowerParams out) {
    out.amplifier_efficiency =
        get_field(j, base, "amplifier_efficiency", out.amplifier_efficiency);
    out.per_antenna_power_w = get_field(j, base, "per_antenna_power_w", out.per_antenna_power_w);
    out.oscillator_power_w = get_field(j, base, "oscillator_power_w", out.oscillator_power_w);
    out.fixed_power_w = get_field(j, base, "fixed_power_w", out.fixed_power_w);
    out.standby_power_w = get_field(j, base, "standby_power_w", out.standby_power_w);
    return out;
}

EpisodeParams parse_episode(const json& j, const std::string& base, EpisodeParams out) {
    out.snapshots = get_field(j, base, "snapshots", out.snapshots);
    out.snapshot_interval_s =
        get_field(j, base, "snapshot_interval_s", out.snapshot_interval_s);
    out.mobility_dt_s = get_field(j, base, "mobility_dt_s", out.mobility_dt_s);
    out.heading_redraw_mean_s =
        get_field(j, base, "heading_redraw_mean_s", out.heading_redraw_mean_s);
    return out;
}

Rect parse_area(const json& j, const std::string& base, Rect out) {
    out.min_x = get_field(j, base, "min_x", out.min_x);
    out.min_y = get_field(j, base, "min_y", out.min_y);
    out.max_x = get_field(j, base, "max_x", out.max_x);
    out.max_y = get_field(j, base, "max_y", out.max_y);
    return out;
}

std::vector<BsConfig> parse_bss(const json& arr,
                                const std::string& base,
                                double default_carrier,
                                double default_bandwidth) {
    std::vector<BsConfig> bss;
    std::size_t i = 0;
    for (const json& jb : arr) {
        const std::string path = base + "[" + std::to_string(i) + "]";
        if (!jb.is_object()) {
            throw ConfigError(path, "expected an object");
        }
        BsConfig bs;
        const std::string kind = get_field<std::string>(jb, path, "kind", "pico");
        if (kind == "macro") {
            bs.kind = BsKind::Macro;
        } else if (kind == "pico") {
            bs.kind = BsKind::Pico;
        } else {
            throw ConfigError(join_path(path, "kind"), "expected \"macro\" or \"pico\"");
        }
        bs.position.x = get_field(jb, path, "x", 0.0);
        bs.position.y = get_field(jb, path, "y", 0.0);
        bs.antenna_count = get_field(jb, path, "antennas", 1);
        bs.tx_power_dbm = get_field(jb, path, "tx_power_dbm", 0.0);
        bs.carrier_hz = get_field(jb, path, "carrier_hz", default_carrier);
        bs.bandwidth_hz = get_field(jb, path, "bandwidth_hz", default_bandwidth);
        bss.push_back(bs);
        ++i;
    }
    return bss;
}

ExplorationPolicy parse_policy(const json& j, const std::string& base) {
    const std::string kind = get_field<std::string>(j, base, "kind", "sweep");
    if (kind == "sweep") {
        return ExhaustiveSweep{};
    }
    if (kind == "epsilon_greedy") {
        EpsilonGreedy eg;
        eg.epsilon = get_field(j, base, "epsilon", 0.1);
        if (eg.epsilon < 0.0 || eg.epsilon > 1.0) {
            throw ConfigError(join_path(base, "epsilon"), "must be in [0, 1]");
        }
        return eg;
    }
    if (kind == "ucb") {
        Ucb ucb;
        ucb.c = get_field(j, base, "c", 2.0);
        if (ucb.c < 0.0) {
            throw ConfigError(join_path(base, "c"), "must be >= 0");
        }
        return ucb;
    }
    throw ConfigError(join_path(base, "kind"),
                      "expected \"sweep\", \"epsilon_greedy\" or \"ucb\"");
}

std::string policy_kind(const ExplorationPolicy& policy) {
    if (std::holds_alternative<ExhaustiveSweep>(policy)) return "sweep";
    if (std::holds_alternative<EpsilonGreedy>(policy)) return "epsilon_greedy";
    return "ucb";
}

} // namespace

ExperimentConfig default_config() {
    ExperimentConfig config;

    config.layout.area = {0.0, 0.0, 500.0, 500.0};
    BsConfig macro;
    macro.kind = BsKind::Macro;
    macro.position = {250.0, 250.0};
    macro.antenna_count = 128;
    macro.tx_power_dbm = 46.0;
    config.layout.bss.push_back(macro);
    const double ring_radius = 160.0;
    const int n_pbs = 5;
    for (int k = 0; k < n_pbs; ++k) {
        BsConfig pico;
        pico.kind = BsKind::Pico;
        const double angle = 2.0 * kPi * k / n_pbs + kPi / 2.0;
        pico.position = {250.0 + ring_radius * std::cos(angle),
                         250.0 + ring_radius * std::sin(angle)};
        pico.antenna_count = 32;
        pico.tx_power_dbm = 30.0;
        config.layout.bss.push_back(pico);
    }
    return config;
}

void validate_config(const ExperimentConfig& config) {
    if (config.n_total_ues < 1) throw ConfigError("n_total_ues", "must be >= 1");
    if (config.n_subgroup < 1) throw ConfigError("n_subgroup", "must be >= 1");
    if (config.n_subgroup > config.n_total_ues) {
        throw ConfigError("n_subgroup", "must be <= n_total_ues");
    }
    if (config.learning_runs < 1) throw ConfigError("learning_runs", "must be >= 1");
    if (config.rem_entries_target < 1) {
        throw ConfigError("rem_entries_target", "must be >= 1");
    }
    if (config.eval_runs < 1) throw ConfigError("eval_runs", "must be >= 1");
    if (config.ue_speed_mps < 0.0) throw ConfigError("ue_speed_mps", "must be >= 0");
    if (config.metrics.empty()) throw ConfigError("metrics", "must be non-empty");
    if (config.localization_arms.empty()) {
        throw ConfigError("localization_arms", "must be non-empty");
    }
    for (std::size_t i = 0; i < config.localization_arms.size(); ++i) {
        const LocalizationArm& arm = config.localization_arms[i];
        const std::string path = "localization_arms[" + std::to_string(i) + "]";
        if (arm.name.empty()) throw ConfigError(path + ".name", "must be non-empty");
        if (arm.model.sigma_m < 0.0) throw ConfigError(path + ".sigma_m", "must be >= 0");
    }
    if (config.learning_localization.sigma_m < 0.0) {
        throw ConfigError("learning_localization_sigma_m", "must be >= 0");
    }
    try {
        config.layout.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("bss", e.what());
    }
    if (config.layout.pbs_count() > Action::kMaxPbsCount) {
        throw ConfigError("bss", "too many pico BSs for a dense action table");
    }
    if (config.channel.pathloss_exponent_macro < 2.0 ||
        config.channel.pathloss_exponent_pico < 2.0) {
        throw ConfigError("channel.pathloss_exponent_macro", "exponents must be >= 2");
    }
    if (config.channel.shadowing_sigma_db < 0.0) {
        throw ConfigError("channel.shadowing_sigma_db", "must be >= 0");
    }
    if (config.channel.shadowing_cell_m <= 0.0) {
        throw ConfigError("channel.shadowing_cell_m", "must be > 0");
    }
    if (!std::isfinite(config.channel.rss_threshold_dbm)) {
        throw ConfigError("channel.rss_threshold_dbm", "must be finite");
    }
    if (config.channel.spectral_efficiency_cap <= 0.0) {
        throw ConfigError("channel.spectral_efficiency_cap", "must be > 0");
    }
    if (config.power.amplifier_efficiency <= 0.0 ||
        config.power.amplifier_efficiency > 1.0) {
        throw ConfigError("power.amplifier_efficiency", "must be in (0, 1]");
    }
    if (config.power.per_antenna_power_w < 0.0 || config.power.oscillator_power_w < 0.0 ||
        config.power.fixed_power_w < 0.0 || config.power.standby_power_w < 0.0) {
        throw ConfigError("power", "power terms must be >= 0");
    }
    if (config.episode.snapshots < 1) {
        throw ConfigError("episode.snapshots", "must be >= 1");
    }
    if (config.episode.snapshot_interval_s <= 0.0 || config.episode.mobility_dt_s <= 0.0) {
        throw ConfigError("episode.snapshot_interval_s", "time steps must be > 0");
    }
    if (config.episode.heading_redraw_mean_s < 0.0) {
        throw ConfigError("episode.heading_redraw_mean_s", "must be >= 0");
    }
}

ExperimentConfig config_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("(document)", e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("(document)", "top level must be a JSON object");
    }

    ExperimentConfig config = default_config();
    config.seed = get_field(doc, "", "seed", config.seed);
    config.n_total_ues = get_field(doc, "", "n_total_ues", config.n_total_ues);
    config.n_subgroup = get_field(doc, "", "n_subgroup", config.n_subgroup);
    config.learning_runs = get_field(doc, "", "learning_runs", config.learning_runs);
    config.rem_entries_target =
        get_field(doc, "", "rem_entries_target", config.rem_entries_target);
    config.eval_runs = get_field(doc, "", "eval_runs", config.eval_runs);
    config.ue_speed_mps = get_field(doc, "", "ue_speed_mps", config.ue_speed_mps);
    config.learning_localization.sigma_m = get_field(
        doc, "", "learning_localization_sigma_m", config.learning_localization.sigma_m);

    if (doc.contains("metrics")) {
        if (!doc["metrics"].is_array()) {
            throw ConfigError("metrics", "expected an array of metric names");
        }
        config.metrics.clear();
        std::size_t i = 0;
        for (const json& jm : doc["metrics"]) {
            try {
                config.metrics.push_back(metric_from_string(jm.get<std::string>()));
            } catch (const std::exception& e) {
                throw ConfigError("metrics[" + std::to_string(i) + "]", e.what());
            }
            ++i;
        }
    }

    if (doc.contains("localization_arms")) {
        if (!doc["localization_arms"].is_array()) {
            throw ConfigError("localization_arms", "expected an array");
        }
        config.localization_arms.clear();
        std::size_t i = 0;
        for (const json& ja : doc["localization_arms"]) {
            const std::string path = "localization_arms[" + std::to_string(i) + "]";
            if (!ja.is_object()) {
                throw ConfigError(path, "expected an object");
            }
            LocalizationArm arm;
            arm.name = get_field<std::string>(ja, path, "name", "");
            arm.model.sigma_m = get_field(ja, path, "sigma_m", 0.0);
            arm.model.per_axis_sigma = get_field(ja, path, "per_axis_sigma", false);
            config.localization_arms.push_back(std::move(arm));
            ++i;
        }
    }

    if (doc.contains("policy")) {
        if (!doc["policy"].is_object()) {
            throw ConfigError("policy", "expected an object");
        }
        config.policy = parse_policy(doc["policy"], "policy");
    }
    if (doc.contains("area")) {
        if (!doc["area"].is_object()) {
            throw ConfigError("area", "expected an object");
        }
        config.layout.area = parse_area(doc["area"], "area", config.layout.area);
    }
    const double default_carrier = get_field(doc, "", "carrier_hz", 3.55e9);
    const double default_bandwidth = get_field(doc, "", "bandwidth_hz", 300e6);
    if (doc.contains("bss")) {
        if (!doc["bss"].is_array()) {
            throw ConfigError("bss", "expected an array");
        }
        config.layout.bss = parse_bss(doc["bss"], "bss", default_carrier, default_bandwidth);
    } else {
        for (BsConfig& bs : config.layout.bss) {
            bs.carrier_hz = default_carrier;
            bs.bandwidth_hz = default_bandwidth;
        }
    }
    if (doc.contains("channel")) {
        if (!doc["channel"].is_object()) {
            throw ConfigError("channel", "expected an object");
        }
        config.channel = parse_channel(doc["channel"], "channel", config.channel);
    }
    if (doc.contains("power")) {
        if (!doc["power"].is_object()) {
            throw ConfigError("power", "expected an object");
        }
        config.power = parse_power(doc["power"], "power", config.power);
    }
    if (doc.contains("episode")) {
        if (!doc["episode"].is_object()) {
            throw ConfigError("episode", "expected an object");
        }
        config.episode = parse_episode(doc["episode"], "episode", config.episode);
    }

    validate_config(config);
    return config;
}

ExperimentConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("(file)", "cannot open config file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return config_from_json(buffer.str());
}

std::string config_to_json(const ExperimentConfig& config) {
    json doc;
    doc["seed"] = config.seed;
    doc["n_total_ues"] = config.n_total_ues;
    doc["n_subgroup"] = config.n_subgroup;
    doc["learning_runs"] = config.learning_runs;
    doc["rem_entries_target"] = config.rem_entries_target;
    doc["eval_runs"] = config.eval_runs;
    doc["ue_speed_mps"] = config.ue_speed_mps;
    doc["learning_localization_sigma_m"] = config.learning_localization.sigma_m;
    json metrics = json::array();
    for (MetricKind m : config.metrics) metrics.push_back(to_string(m));
    doc["metrics"] = std::move(metrics);
    json arms = json::array();
    for (const LocalizationArm& arm : config.localization_arms) {
        arms.push_back(json{{"name", arm.name},
                            {"sigma_m", arm.model.sigma_m},
                            {"per_axis_sigma", arm.model.per_axis_sigma}});
    }
    doc["localization_arms"] = std::move(arms);
    json policy;
    policy["kind"] = policy_kind(config.policy);
    if (const auto* eg = std::get_if<EpsilonGreedy>(&config.policy)) {
        policy["epsilon"] = eg->epsilon;
    } else if (const auto* ucb = std::get_if<Ucb>(&config.policy)) {
        policy["c"] = ucb->c;
    }
    doc["policy"] = std::move(policy);
    doc["area"] = json{{"min_x", config.layout.area.min_x},
                       {"min_y", config.layout.area.min_y},
                       {"max_x", config.layout.area.max_x},
                       {"max_y", config.layout.area.max_y}};
    json bss = json::array();
    for (const BsConfig& bs : config.layout.bss) {
        bss.push_back(json{{"kind", bs.kind == BsKind::Macro ? "macro" : "pico"},
                           {"x", bs.position.x},
                           {"y", bs.position.y},
                           {"antennas", bs.antenna_count},
                           {"tx_power_dbm", bs.tx_power_dbm},
                           {"carrier_hz", bs.carrier_hz},
                           {"bandwidth_hz", bs.bandwidth_hz}});
    }
    doc["bss"] = std::move(bss);
    json channel;
    channel["pathloss_exponent_macro"] = config.channel.pathloss_exponent_macro;
    channel["pathloss_exponent_pico"] = config.channel.pathloss_exponent_pico;
    if (config.channel.reference_loss_db) {
        channel["reference_loss_db"] = *config.channel.reference_loss_db;
    }
    channel["shadowing_sigma_db"] = config.channel.shadowing_sigma_db;
    channel["shadowing_cell_m"] = config.channel.shadowing_cell_m;
    channel["beamforming_gain"] =
        config.channel.beamforming_gain == BeamformingGain::None ? "none"
                                                                 : "log_array_size";
    channel["noise_figure_db"] = config.channel.noise_figure_db;
    channel["rss_threshold_dbm"] = config.channel.rss_threshold_dbm;
    channel["interference_suppression_db"] = config.channel.interference_suppression_db;
    channel["spectral_efficiency_cap"] = config.channel.spectral_efficiency_cap;
    doc["channel"] = std::move(channel);
    doc["power"] = json{{"amplifier_efficiency", config.power.amplifier_efficiency},
                        {"per_antenna_power_w", config.power.per_antenna_power_w},
                        {"oscillator_power_w", config.power.oscillator_power_w},
                        {"fixed_power_w", config.power.fixed_power_w},
                        {"standby_power_w", config.power.standby_power_w}};
    doc["episode"] = json{{"snapshots", config.episode.snapshots},
                          {"snapshot_interval_s", config.episode.snapshot_interval_s},
                          {"mobility_dt_s", config.episode.mobility_dt_s},
                          {"heading_redraw_mean_s", config.episode.heading_redraw_mean_s}};
    return doc.dump(2) + "\n";
}

} // namespace remnet
