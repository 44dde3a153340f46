#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ati/calibrator.hpp"
#include "ati/config.hpp"
#include "ati/envelope.hpp"
#include "ati/grids.hpp"
#include "ati/percept.hpp"
#include "ati/router.hpp"
#include "ati/sensecam.hpp"

namespace ati {

enum class SensingMode { AE, L1, L1_L2_learning, L1_L2_inference };
enum class InferenceMode { L3_only, L4_only, L3_L4_split };

const char* to_string(SensingMode m);
const char* to_string(InferenceMode m);
SensingMode sensing_mode_from(const std::string& s);
InferenceMode inference_mode_from(const std::string& s);

struct ObjectSpec {
    int label = 0;
    double difficulty = 0.0;
};

struct AeParams {
    double target = 0.5;
    double deadband = 0.1;
    int initial_exp_idx = 4;  // 1/60 s on the default grid
    int initial_iso_idx = 1;  // ISO 100
};

struct ExperimentConfig {
    EnvTrajectory scenario;
    std::vector<ObjectSpec> objects{{0, 0.0}};
    SensingMode sensing_mode = SensingMode::L1;
    InferenceMode inference_mode = InferenceMode::L3_only;
    RoutingThresholds thresholds;
    SettingGrids grids = SettingGrids::defaults();
    EnvelopeParams envelope = EnvelopeParams::defaults();
    CameraModelParams camera;
    BinEdges bins;
    RewardParams reward;
    BanditParams bandit;
    LocalOracleParams local_oracle;
    RemoteOracleParams remote_oracle;
    NetworkState network;
    TaskMeta task{30000.0, 1.0, 0.05};
    AeParams ae;
    uint64_t seed = 1;
    int laps = 50;  // per object
    int scene_size = 64;
    int downsample = 32;
    std::string out_dir;
    std::string log_prefix;
    bool dump_frames = false;

    void validate() const;

    // Canonical low-light closed-track scenario; every knob overridable.
    static ExperimentConfig defaults();
    static ExperimentConfig from_ini(const IniFile& ini);
};

// One row of the per-frame log (AP-style schema).
struct FrameRow {
    double timestamp_ms = 0.0;
    int lap = 0;
    double lux = 0.0;
    double acc_mag = 0.0;
    double gyro_mag = 0.0;
    int exp_idx = 0;
    double exp_s = 0.0;
    double iso = 0.0;
    double mean_brightness = 0.0;
    double lapvar = 0.0;
    double saturation_ratio = 0.0;
    double l3_conf = 0.0;
    int l3_label = kBackgroundLabel;
    int truth_label = 0;
    bool visible = false;
    std::string mode;
    int iso_idx = 0;  // not logged; kept for settle analysis
};

// One row of the per-lap log (RL-style schema plus replay extensions).
struct LapRow {
    int lap = 0;
    int motion_bin = 0;
    int light_bin = 0;
    bool has_action = false;
    CalibAction action;
    bool has_reward = false;
    double reward = 0.0;
    double epsilon = 0.0;
    double q_after = 0.0;
    double peak_conf = 0.0;
    double peak_sharpness = 0.0;
    std::string decision;
    std::string reason;
    bool l4_called = false;
    bool has_l4 = false;
    double l4_conf = 0.0;
    bool correct = false;
    bool l3_correct = false;
    bool l4_correct = false;
    int truth_label = 0;
};

struct RunMetrics {
    int laps = 0;
    int correct = 0;
    int escalated = 0;
    double total_accuracy = 0.0;
    double l4_call_rate = 0.0;
    double mean_confidence = 0.0;
    double ttfd_ms = 0.0;
    std::map<int, int> per_class_laps;
    std::map<int, int> per_class_correct;
    std::map<int, double> per_class_accuracy;

    bool operator==(const RunMetrics&) const = default;
};

struct RunOutput {
    RunMetrics metrics;
    std::vector<FrameRow> frame_rows;
    std::vector<LapRow> lap_rows;
    std::vector<LapTrace> traces;  // split mode only
    std::string frame_log_path;
    std::string lap_log_path;
    int policy_misses = 0;
};

struct RunHooks {
    const ConsolidatedPolicy* policy = nullptr;
    BanditTable* table = nullptr;  // learned in place when given
};

// Proportional brightness controller: exposure index first, ISO when exposure
// is pinned at a grid bound. Motion-blind by design.
SensorSetting auto_exposure_step(const SensorSetting& prev, double mean_brightness,
                                 const SettingGrids& g, const AeParams& ae);

// Advance the virtual clock frame by frame through every lap of every object,
// applying the configured sensing controller and inference path. Deterministic
// per (config, seed); writes CSV logs when out_dir is set.
RunOutput run_experiment(const ExperimentConfig& cfg, const RunHooks& hooks = {});

struct GridRow {
    SensingMode sensing;
    InferenceMode inference;
    RunMetrics metrics;
};

// Run every (sensing, inference) combination on the identical scenario and
// seed. Rows execute in parallel; they share nothing but the config.
std::vector<GridRow> run_grid(const ExperimentConfig& base,
                              std::span<const std::pair<SensingMode, InferenceMode>> modes,
                              const ConsolidatedPolicy* policy);

std::vector<std::pair<SensingMode, InferenceMode>> default_grid_modes();

// One split-inference run, then offline re-routing at each tau_conf.
std::vector<AblationRow> run_threshold_ablation(const ExperimentConfig& base,
                                                std::span<const double> taus,
                                                const ConsolidatedPolicy* policy);

struct DynamicResult {
    RunMetrics ae;
    RunMetrics ati;
    double ae_l3_accuracy = 0.0;
    double ati_l3_accuracy = 0.0;
    int ae_min_settle = 0;  // frames to a stable setting after each lux flip
    int ae_max_settle = 0;
    int ati_max_settle = 0;
};

// AE versus consolidated-policy inference on the identical alternating-light
// trajectory.
DynamicResult run_dynamic_lighting(const ExperimentConfig& base,
                                   const ConsolidatedPolicy& policy,
                                   BanditTable* table = nullptr);

// Recompute routing decisions and metrics from a lap log without
// re-simulating capture. Replaying with the original thresholds reproduces
// the original metrics exactly.
RunMetrics replay(const std::string& lap_csv_path, const RoutingThresholds& th,
                  const ExperimentConfig& cfg);

// Settle-frame analysis shared with tests: for each lap after the first, the
// number of frames until the setting stops changing (0 = never changed).
std::vector<int> settle_frames(const std::vector<FrameRow>& rows, int frames_per_lap);

}  // namespace ati
