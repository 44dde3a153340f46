#pragma once

#include <vector>

namespace ati {

struct MotionSample {
    double acc_mag = 0.0;   // accelerometer magnitude, m/s^2
    double gyro_mag = 0.0;  // gyroscope magnitude, rad/s
};

struct LightSample {
    double lux = 0.0;  // ambient illuminance
};

// Discrete hardware grids for exposure duration and ISO gain.
// Both lists strictly ascending, length >= 2.
struct SettingGrids {
    std::vector<double> exposure_steps;  // seconds
    std::vector<double> iso_steps;       // unitless sensitivity numbers

    static SettingGrids defaults();
    void validate() const;  // throws ConfigError on a bad grid

    int exp_count() const { return static_cast<int>(exposure_steps.size()); }
    int iso_count() const { return static_cast<int>(iso_steps.size()); }

    // Nearest grid index by absolute difference. Midpoints break toward the
    // lower index (shorter exposure / lower ISO).
    int snap_exposure(double seconds) const;
    int snap_iso(double iso) const;
};

struct SensorSetting {
    int exp_idx = 0;
    int iso_idx = 0;

    bool operator==(const SensorSetting&) const = default;
};

}  // namespace ati
