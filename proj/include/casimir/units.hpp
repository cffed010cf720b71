#pragma once

#include <numbers>

namespace casimir {

/// Physical constants used to turn scaled results into SI quantities.
/// All library quantities are SI; the converters below exist for I/O.
struct UnitContext {
  double hbar_c = 3.16152677e-26;  // J m (CODATA 2018)
  double k_B = 1.380649e-23;       // J/K (exact)

  /// Throws DomainError unless both constants are positive.
  void validate() const;

  /// pi hbar c / (k_B T): the plate distance at which v = 1 for temperature T.
  double length_scale(double temperature) const;
};

namespace units {

inline constexpr double kMicron = 1e-6;              // m
inline constexpr double kPascalPerNPerCm2 = 1e4;     // 1 N/cm^2 = 1e4 Pa
inline constexpr double kPascalPerPNPerCm2 = 1e-8;   // 1 pN/cm^2 = 1e-8 Pa
inline constexpr double kKgPerM2PerGPerCm2 = 10.0;   // 1 g/cm^2 = 10 kg/m^2
inline constexpr double kZeroCelsius = 273.15;       // K

constexpr double from_micron(double um) { return um * kMicron; }
constexpr double to_micron(double m) { return m / kMicron; }
constexpr double to_n_per_cm2(double pa) { return pa / kPascalPerNPerCm2; }
constexpr double to_pn_per_cm2(double pa) { return pa / kPascalPerPNPerCm2; }
constexpr double from_celsius(double c) { return c + kZeroCelsius; }

}  // namespace units
}  // namespace casimir
