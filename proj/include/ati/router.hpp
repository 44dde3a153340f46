#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ati/percept.hpp"

namespace ati {

struct RoutingThresholds {
    double tau_conf = 0.5;    // local-confidence acceptance threshold
    double tau_valid = 20.0;  // raw sharpness validity threshold
    double tau_task = 0.5;    // frame-level uncertainty threshold
    double qv_min_sharp = 5.0;
    double qv_max_sat = 0.5;

    void validate() const;
};

// Peak-confidence record for one lap. A new frame replaces the peak only when
// its confidence is strictly higher.
struct LapSummary {
    int lap_index = 0;
    int n_frames = 0;
    double peak_conf = -1.0;  // below any real confidence until the first frame
    Prediction peak_pred;
    double peak_sharpness = 0.0;
    Frame peak_frame;
    double lap_start_ms = 0.0;
    double lap_end_ms = 0.0;
};

struct NetworkState {
    double rtt_ms = 0.0;
    double energy_headroom = 1.0;  // carried and logged; no default gate uses it

    void validate() const;
};

struct TaskMeta {
    double deadline_ms = 0.0;  // absolute
    double error_cost = 1.0;
    double comm_cost_per_call = 0.05;

    void validate() const;
};

enum class Verdict { accept_local, accept_remote, resample, no_escalation };

enum class Reason {
    confident_local,
    blur_filtered,
    remote_better,
    remote_worse_kept_local,
    deadline_infeasible,
    qv_blinded,
    negative_benefit,
    stale_discarded,
};

struct RoutingDecision {
    Verdict verdict = Verdict::accept_local;
    Reason reason = Reason::confident_local;
};

const char* to_string(Verdict v);
const char* to_string(Reason r);

// Track the lap's peak; strict comparison keeps the earlier frame on ties.
void lap_update(LapSummary& s, const Prediction& pred, double sharpness,
                const Frame& frame);

using RemoteInference = std::function<EscalationResponse(const EscalationRequest&)>;

struct LapDecision {
    Prediction final;
    RoutingDecision decision;
    bool l4_called = false;
    bool has_response = false;
    EscalationResponse response;
    double decided_at_ms = 0.0;
};

// Lap-level policy: accept local when confident; accept local without
// escalating when the peak is too blurred to benefit from the remote path;
// otherwise escalate and keep the remote answer only when it is strictly more
// confident and arrives within the horizon. Throws DataError on an empty lap.
LapDecision lap_coordinate(const LapSummary& s, const RoutingThresholds& th,
                           const RemoteInference& l4, double horizon_ms);

using BenefitModel = std::function<double(double u, const TaskMeta& task)>;

// Frame-level gates, evaluated in order: confident enough locally, quality
// vector not blinded, deadline feasible, positive net benefit. The returned
// accept_remote verdict means "escalate"; the response is still pending.
RoutingDecision frame_route(double u, const QualityVector& qv,
                            const RoutingThresholds& th, const NetworkState& net,
                            const TaskMeta& task, double now_ms,
                            double l4_latency_ms,
                            const BenefitModel& benefit = {});

// Offline re-routing of recorded laps under different tau_conf values.
struct LapTrace {
    double peak_conf = 0.0;
    double peak_sharpness = 0.0;
    int local_label = kBackgroundLabel;
    int remote_label = kBackgroundLabel;
    double remote_conf = 0.0;
    bool remote_available = false;
    int truth_label = 0;
};

struct AblationRow {
    double tau_conf = 0.0;
    double accuracy = 0.0;
    double escalation_rate = 0.0;
};

std::vector<AblationRow> ablate_tau(std::span<const LapTrace> laps,
                                    std::span<const double> taus,
                                    double tau_valid);

}  // namespace ati
