#pragma once

namespace eit::constants {

// CODATA 2018 exact / recommended values, SI.
inline constexpr double kElementaryCharge = 1.602176634e-19;       // C
inline constexpr double kHbar = 1.054571817e-34;                   // J s
inline constexpr double kHbarEv = kHbar / kElementaryCharge;       // eV s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;    // F/m
inline constexpr double kSpeedOfLight = 299792458.0;               // m/s
inline constexpr double kPi = 3.14159265358979323846;

}  // namespace eit::constants
