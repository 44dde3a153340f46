#pragma once

#include <string>

#include "ati/grids.hpp"
#include "ati/kernels.hpp"
#include "ati/rng.hpp"

namespace ati {

// Scene carried by every lap: a fixed grayscale pattern standing in for the
// physical object, plus the class label and an inherent hardness knob.
struct ScenePattern {
    Image base;           // W x H, values in [0,1]
    int object_id = 0;
    double difficulty = 0.0;  // in [0,1); scales down attainable confidence
};

// High-contrast default pattern: two separable sine products whose periods
// divide the raster, so the mean is exactly 0.5 and blur response is smooth.
ScenePattern make_default_scene(int size, int object_id, double difficulty);

struct CameraModelParams {
    double k_cam = 0.4;       // shared with EnvelopeParams.k_cam
    double c_blur = 120.0;    // blur pixels per (motion-unit * s)
    double sigma0 = 0.002;    // noise sd at ISO 100, 0-1 pixel scale
    double sat_level = 0.98;  // saturation threshold for the quality vector
    double scene_mean = 0.5;  // assumed scene reflectance for lux inversion

    void validate() const;
};

struct FrameTruth {
    int object_id = 0;
    bool visible = false;
    double difficulty = 0.0;
};

struct Frame {
    Image pixels;
    double timestamp_ms = 0.0;
    SensorSetting setting;
    double exp_s = 0.0;  // resolved grid values of `setting`
    double iso = 0.0;
    FrameTruth truth;
};

// Per-frame signal-health metrics flowing from sensing to inference.
struct QualityVector {
    double blur_score = 0.0;        // Laplacian variance, 0-255 scale units
    double saturation_ratio = 0.0;  // fraction of pixels >= sat_level
    double est_lux = 0.0;           // mean brightness mapped back through the model
};

// brightness = lux * exp_s * (iso/100) * k_cam; blur is a horizontal box of
// length round(c_blur * max(acc,gyro) * exp_s); per-pixel Gaussian noise with
// sd sigma0 * sqrt(iso/100); result clipped to [0,1].
Frame capture_frame(const ScenePattern& scene, bool visible,
                    const SensorSetting& setting, const MotionSample& m,
                    const LightSample& l, const CameraModelParams& p,
                    const SettingGrids& g, double timestamp_ms, Rng& rng);

// Downsample by area averaging, scale to 0-255, 3x3 Laplacian over the valid
// interior, population variance of the response.
double laplacian_variance(const Frame& f, int downsample = 32);

QualityVector quality_vector(const Frame& f, const CameraModelParams& p,
                             int downsample = 32);

// Environment generator. lap_track sweeps the accelerometer magnitude within
// each lap (raised-sine profile peaking mid-lap) over a constant gyroscope
// magnitude; alternating_light flips the lux level at every lap boundary
// (even laps dark). constant ignores time entirely.
enum class Scenario { constant, lap_track, alternating_light };

struct MotionProfile {
    double acc_base = 0.15;
    double acc_amp = 0.9;   // sweep amplitude; 0 gives constant motion
    double gyro_base = 0.95;
    double gyro_amp = 0.0;
};

struct EnvTrajectory {
    Scenario scenario = Scenario::lap_track;
    double lap_ms = 3000.0;
    double frame_period_ms = 100.0;
    double lux = 10.0;         // constant and lap_track
    double dark_lux = 10.0;    // alternating_light
    double bright_lux = 150.0;
    MotionProfile motion;
    double vis_begin = 0.25;  // visibility window, fractions of the lap
    double vis_end = 0.75;

    void validate() const;
    int frames_per_lap() const {
        return static_cast<int>(lap_ms / frame_period_ms + 0.5);
    }
};

struct EnvSample {
    LightSample light;
    MotionSample motion;
    bool visible = false;
};

EnvSample next_env(const EnvTrajectory& traj, double t_ms);

// Binary PGM dump for qualitative inspection.
void write_pgm(const Image& img, const std::string& path);

}  // namespace ati
