#pragma once

#include <vector>

#include "ati/grids.hpp"

namespace ati {

// Ordered lux bands: lookup(lux) = values[number of thresholds <= lux].
// thresholds strictly ascending; values has one more entry than thresholds
// (the last value is the open top band).
struct LuxTable {
    std::vector<double> thresholds;
    std::vector<double> values;

    double lookup(double lux) const;
    void validate(const char* name) const;
};

// L1 reflex parameters. The motion rule is a blur-length budget: a motion
// component m may be exposed for at most k_max_blur / (c_blur * m) seconds.
struct EnvelopeParams {
    double k_max_blur = 4.0;      // max tolerated blur length, pixels
    double c_blur_acc = 120.0;    // pixels per ((m/s^2) * s)
    double c_blur_gyro = 120.0;   // pixels per ((rad/s) * s)
    LuxTable lux_floor;           // minimum exposure seconds per lux band
    LuxTable iso_cap;             // maximum ISO per lux band
    double exp_def = 1.0 / 60.0;  // reference exposure, must stay 1/60 s
    double b_sat = 1.2;           // brightness ceiling, 1.0 = well exposed
    double k_cam = 0.4;           // lux * s * (iso/100) -> relative brightness

    static EnvelopeParams defaults();
    void validate(const SettingGrids& g) const;
};

// Index-space safety envelope: exposure allowed in [min_exp_idx, max_exp_idx],
// ISO allowed in [0, max_iso_idx].
struct SafetyEnvelope {
    int min_exp_idx = 0;
    int max_exp_idx = 0;
    int max_iso_idx = 0;

    bool contains(const SensorSetting& s) const {
        return s.exp_idx >= min_exp_idx && s.exp_idx <= max_exp_idx &&
               s.iso_idx >= 0 && s.iso_idx <= max_iso_idx;
    }
};

// Motion-safe exposure bound: min over components of k_max_blur/(c*m).
// A zero component contributes no constraint (+inf).
double t_safe_motion(const MotionSample& m, const EnvelopeParams& p);

// Illuminance-dependent minimum exposure (floor table band lookup).
double t_safe_lux(const LightSample& l, const EnvelopeParams& p);

// ISO giving relative brightness 1.0 at exp_def, clamped to the grid's value
// range. lux = 0 maps to the maximum grid ISO.
double iso_default(const LightSample& l, const EnvelopeParams& p,
                   const SettingGrids& g);

// Continuous intermediates of the baseline rule, before grid snapping.
// iso_pre_cap stays exactly reciprocal in exp_t for fixed lux.
struct BaselineCurve {
    double exp_t = 0.0;        // after motion rule, lux floor, saturation cap
    double iso_pre_cap = 0.0;  // iso_default * exp_def / exp_t
    double iso_t = 0.0;        // after the noise-aware cap
};

BaselineCurve baseline_curve(const MotionSample& m, const LightSample& l,
                             const EnvelopeParams& p, const SettingGrids& g);

// Reflexive baseline setting: continuous rule, snapped to the grids, then
// clamped into the safety envelope of the same inputs.
SensorSetting baseline_setting(const MotionSample& m, const LightSample& l,
                               const EnvelopeParams& p, const SettingGrids& g);

// Non-bypassable envelope for the current (motion, light). When the lux floor
// and the anti-saturation cap conflict, the floor wins and the envelope
// degenerates to a single exposure index.
SafetyEnvelope safety_envelope(const MotionSample& m, const LightSample& l,
                               const EnvelopeParams& p, const SettingGrids& g);

// Clamp each index independently into the envelope. Idempotent.
SensorSetting clamp_to_envelope(const SensorSetting& s, const SafetyEnvelope& env);

}  // namespace ati
