#pragma once

#include <map>

#include "ati/rng.hpp"
#include "ati/sensecam.hpp"

namespace ati {

// Class id reported for frames without a recognizable object.
constexpr int kBackgroundLabel = -1;

enum class PredictionSource { local, remote };

struct Prediction {
    int label = kBackgroundLabel;
    double confidence = 0.0;
    PredictionSource source = PredictionSource::local;
    double frame_timestamp_ms = 0.0;
};

// Capture-quality response shared by both oracles: a brightness tent peaking
// at a well-exposed mean, a saturating sharpness term, and the scene's
// inherent difficulty. Zero when the object is not visible.
struct QualityModel {
    double brightness_peak = 0.5;
    double brightness_width = 0.45;  // tent reaches zero at peak +- width
    double sharp_half = 150.0;       // Laplacian variance at half response
};

struct LocalOracleParams {
    QualityModel quality;
    double conf_noise_sd = 0.03;
    double infer_latency_ms = 32.0;
    int n_classes = 8;

    void validate() const;
};

struct RemoteOracleParams {
    double capability_boost = 0.25;
    double misalign_prob = 0.1;  // chance of the configured wrong-but-plausible label
    double infer_latency_ms = 2220.0;
    std::map<int, int> confusable;  // true class -> misaligned label

    void validate() const;
};

struct EscalationRequest {
    Frame payload;
    double budget_ms = 0.0;
    double origin_timestamp_ms = 0.0;
};

struct EscalationResponse {
    Prediction prediction;
    double origin_timestamp_ms = 0.0;
    double arrival_time_ms = 0.0;
};

double quality_score(const Frame& f, const QualityModel& qm, int downsample = 32);

// Fast local classifier stand-in. Confidence is the quality score plus
// Gaussian jitter; the label matches the truth with probability equal to the
// quality score, otherwise a uniformly random wrong class.
Prediction l3_infer(const Frame& f, const LocalOracleParams& p, Rng& rng,
                    int downsample = 32);

// Remote deep-inference stand-in: same quality model with a capability boost,
// optional task-misaligned labels on confusable classes, and a scheduled
// virtual-time arrival. Background payloads come back with confidence zero.
EscalationResponse l4_infer(const EscalationRequest& req, const QualityModel& qm,
                            const RemoteOracleParams& p, int n_classes,
                            double now_ms, Rng& rng, int downsample = 32);

// True when the response arrived after the scene epoch ended (strictly;
// arrival exactly at the boundary is still fresh).
bool is_stale(const EscalationResponse& resp, double scene_epoch_end_ms);

}  // namespace ati
