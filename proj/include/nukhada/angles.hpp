#pragma once

#include <cmath>

namespace nukhada {

inline constexpr double kPi = 3.14159265358979323846;

// Unit conversions used throughout: marine speeds in knots, distances in
// nautical miles, angles in radians unless a name says otherwise.
inline constexpr double kKnotsToMps = 1852.0 / 3600.0;
inline constexpr double kMetersPerNauticalMile = 1852.0;

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }
constexpr double knots2mps(double kn) { return kn * kKnotsToMps; }
constexpr double mps2knots(double mps) { return mps / kKnotsToMps; }

// Wrap an angle to (-pi, pi]. std::remainder lands in [-pi, pi]; the lone
// -pi case is folded up to +pi so the interval is half-open on the left.
inline double wrap_pi(double angle) {
  double r = std::remainder(angle, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

inline double clamp_unit(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace nukhada
