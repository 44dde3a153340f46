#pragma once

#include <cmath>

#include "ati/grids.hpp"

namespace ati {

struct RoiBox {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
};

// Low-level control surface between the reflex/calibration layers and the
// sensor. Shutter and gain are the two live primitives of this camera model;
// the HDR, ROI and gimbal primitives are accepted and ignored.
class SensorControl {
public:
    explicit SensorControl(const SettingGrids& grids, SensorSetting initial = {})
        : grids_(&grids), setting_(initial) {}

    // discrete shutter step, clamped to the grid
    void set_shutter(int step_idx) {
        int hi = grids_->exp_count() - 1;
        setting_.exp_idx = step_idx < 0 ? 0 : (step_idx > hi ? hi : step_idx);
    }

    // nearest grid gain for an ISO value
    void set_gain(double iso) { setting_.iso_idx = grids_->snap_iso(iso); }

    // analog amplification relative to ISO 100 (doubling per ~6.02 dB)
    void set_gain_db(double db) { set_gain(100.0 * std::pow(10.0, db / 20.0)); }

    void apply(const SensorSetting& s) {
        set_shutter(s.exp_idx);
        setting_.iso_idx = s.iso_idx < 0 ? 0
                           : (s.iso_idx > grids_->iso_count() - 1
                                  ? grids_->iso_count() - 1
                                  : s.iso_idx);
    }

    const SensorSetting& current() const { return setting_; }
    double shutter_seconds() const { return grids_->exposure_steps[setting_.exp_idx]; }
    double gain_iso() const { return grids_->iso_steps[setting_.iso_idx]; }

    // no-op stubs: this sensor has no HDR bracketing, ROI readout or gimbal
    void set_hdr(int /*mode*/) {}
    void set_roi(const RoiBox& /*box*/) {}
    void slew_gimbal(double /*pan_rate*/, double /*tilt_rate*/) {}

private:
    const SettingGrids* grids_;
    SensorSetting setting_;
};

}  // namespace ati
