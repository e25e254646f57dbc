#pragma once

#include <cmath>
#include <numbers>

#include "pulsebound/error.hpp"

namespace pulsebound {

enum class UnitMode { normalized, si };

/// Physical constants plus the normalization frequency omega0.
///
/// Everything inside the library runs in normalized units
/// (hbar = eps0 = c = omega0 = 1, so k0 = 1 and lambda0 = 2 pi). A SI
/// instance only supplies the scale factors used at the input/output
/// boundary: lengths scale by 1/k0, times by 1/omega0, energy densities by
/// hbar*omega0*k0^3.
struct UnitSystem {
  double hbar = 1.0;
  double epsilon0 = 1.0;
  double mu0 = 1.0;
  double c = 1.0;
  double omega0 = 1.0;
  double k0 = 1.0;
  double lambda0 = 2.0 * std::numbers::pi;
  UnitMode mode = UnitMode::normalized;

  static UnitSystem normalized() { return {}; }

  static UnitSystem si_from_omega0(double omega0) {
    require(std::isfinite(omega0) && omega0 > 0.0, "omega0 must be positive and finite");
    UnitSystem u;
    u.hbar = 1.054571817e-34;
    u.epsilon0 = 8.8541878128e-12;
    u.c = 299792458.0;
    u.mu0 = 1.0 / (u.epsilon0 * u.c * u.c);
    u.omega0 = omega0;
    u.k0 = omega0 / u.c;
    u.lambda0 = 2.0 * std::numbers::pi / u.k0;
    u.mode = UnitMode::si;
    return u;
  }

  static UnitSystem si_from_lambda0_nm(double lambda0_nm) {
    require(std::isfinite(lambda0_nm) && lambda0_nm > 0.0, "lambda0 must be positive and finite");
    constexpr double c = 299792458.0;
    return si_from_omega0(2.0 * std::numbers::pi * c / (lambda0_nm * 1e-9));
  }

  bool is_si() const { return mode == UnitMode::si; }

  double length_scale() const { return 1.0 / k0; }
  double time_scale() const { return 1.0 / omega0; }
  double energy_density_scale() const { return hbar * omega0 * k0 * k0 * k0; }
  double intensity_scale() const { return c * energy_density_scale(); }
  double electric_field_scale() const { return std::sqrt(energy_density_scale() / epsilon0); }
  double magnetic_field_scale() const { return electric_field_scale() / c; }
};

inline const char* unit_label(UnitMode mode) {
  return mode == UnitMode::si ? "SI" : "normalized";
}

}  // namespace pulsebound
