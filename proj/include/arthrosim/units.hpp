#pragma once

#include <numbers>

namespace arthro {

inline constexpr double kPi = std::numbers::pi_v<double>;

// Internal representation is SI (m, N, N/m, N*m) with angles in radians.
// Conversions live at the config/CSV boundary only.
constexpr double deg2rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad2deg(double rad) { return rad * (180.0 / kPi); }
constexpr double mm2m(double mm) { return mm * 1e-3; }
constexpr double m2mm(double m) { return m * 1e3; }

}  // namespace arthro
