#pragma once

namespace relbohm {

// SI values used internally everywhere; natural-unit normalization
// (velocities in units of c, squared mass in units of (hbar*omega0)^2)
// is applied only when results are reported, never inside solvers.
struct PhysicalConstants {
    double speed_of_light = 2.99792458e8;  // m/s
    double reduced_planck = 1.054571817e-34;  // J*s
    bool natural_units = true;

    bool valid() const { return speed_of_light > 0.0 && reduced_planck > 0.0; }
};

inline constexpr double kSpeedOfLight = 2.99792458e8;

}  // namespace relbohm
