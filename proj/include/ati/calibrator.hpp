#pragma once

#include <array>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "ati/envelope.hpp"
#include "ati/grids.hpp"
#include "ati/rng.hpp"
#include "ati/router.hpp"

namespace ati {

constexpr int kContextBins = 5;
constexpr int kNumContexts = kContextBins * kContextBins;  // 25
constexpr int kNumActions = 9;

// Discretized motion-light state. motion uses the normalized magnitude
// max(acc/acc_ref, gyro/gyro_ref) against four ascending edges (lower edge
// inclusive), light uses raw lux the same way.
struct BinEdges {
    std::array<double, 4> motion_edges{0.2, 0.4, 0.6, 0.8};
    std::array<double, 4> light_edges{15.0, 25.0, 60.0, 150.0};
    double acc_ref = 2.0;
    double gyro_ref = 1.0;

    void validate() const;
};

struct SensingContext {
    int motion_bin = 0;
    int light_bin = 0;

    int flat() const { return motion_bin * kContextBins + light_bin; }
    bool operator==(const SensingContext&) const = default;
    auto operator<=>(const SensingContext&) const = default;
};

struct CalibAction {
    int d_iso = 0;
    int d_exp = 0;

    bool operator==(const CalibAction&) const = default;
};

// Fixed enumeration: index = (d_iso+1)*3 + (d_exp+1).
int action_index(const CalibAction& a);
CalibAction action_from_index(int idx);

SensingContext discretize_context(const MotionSample& m, const LightSample& l,
                                  const BinEdges& bins);

struct RewardParams {
    double alpha = 0.9;    // weight on peak confidence
    double v_ref = 100.0;  // sharpness normalization, 0-255 variance units

    void validate() const;
};

// Lap reward: alpha * peak confidence + (1-alpha) * normalized sharpness of
// the frame that produced that peak. Throws DataError on an empty lap.
double compute_reward(const LapSummary& lap, const RewardParams& rp);

struct BanditParams {
    double eps0 = 0.3;        // initial exploration probability
    double eps_tau = 20.0;    // visits that halve epsilon
    int min_visits = 10;      // consolidation: context visit threshold
    int stability_window = 5; // consolidation: unchanged-argmax run length
    int history_cap = 8;      // retained greedy-argmax history per context

    void validate() const;
};

struct PolicyEntry {
    CalibAction action;
    int visits_at_freeze = 0;
    double q_at_freeze = 0.0;
};

// Persistent context -> action lookup table produced by consolidation.
struct ConsolidatedPolicy {
    std::map<SensingContext, PolicyEntry> entries;

    const PolicyEntry* find(const SensingContext& c) const;
    void merge(const ConsolidatedPolicy& other);  // union; other wins on overlap

    void save(const std::string& path) const;
    static ConsolidatedPolicy load(const std::string& path);
};

// Tabular contextual bandit over 25 contexts x 9 actions with per-context
// decaying epsilon-greedy exploration and incremental-mean value estimates.
class BanditTable {
public:
    explicit BanditTable(BanditParams params = {});

    const BanditParams& params() const { return params_; }

    double q(const SensingContext& c, const CalibAction& a) const;
    int visit_count(const SensingContext& c, const CalibAction& a) const;
    int total_visits(const SensingContext& c) const;
    double epsilon(const SensingContext& c) const;

    // Argmax over q; ties break toward the smallest |d_iso|+|d_exp|, then the
    // enumeration order.
    CalibAction greedy(const SensingContext& c) const;

    // Epsilon-greedy draw from the seeded stream.
    CalibAction select_action(const SensingContext& c, Rng& rng) const;

    // Incremental-mean update; appends the post-update greedy argmax to the
    // context's history.
    void update(const SensingContext& c, const CalibAction& a, double reward);

    ConsolidatedPolicy consolidate() const;

    void save(const std::string& path) const;  // checkpoint for resuming
    static BanditTable load(const std::string& path, BanditParams params = {});

private:
    BanditParams params_;
    std::array<std::array<double, kNumActions>, kNumContexts> q_{};
    std::array<std::array<int, kNumActions>, kNumContexts> count_{};
    std::array<int, kNumContexts> total_{};
    std::array<std::deque<int>, kNumContexts> argmax_history_;
};

// Offset the baseline by the action, clip to the grids, clamp into the safety
// envelope. Exploration can therefore never leave the safe set.
SensorSetting apply_action(const SensorSetting& baseline, const CalibAction& a,
                           const SafetyEnvelope& env, const SettingGrids& g);

enum class CalibMode { learning, inference };

struct CalibOutcome {
    SensorSetting setting;
    CalibAction action;
    enum class Source { explored_or_greedy, consolidated } source =
        Source::explored_or_greedy;
};

// Learning mode runs the epsilon-greedy bandit. Inference mode consults the
// consolidated policy first (no exploration, no table mutation) and falls
// back to the greedy bandit action on a miss.
CalibOutcome calibrate(CalibMode mode, const SensorSetting& baseline,
                       const SensingContext& c, const BanditTable& table,
                       const ConsolidatedPolicy* policy, const SafetyEnvelope& env,
                       const SettingGrids& g, Rng& rng);

}  // namespace ati
