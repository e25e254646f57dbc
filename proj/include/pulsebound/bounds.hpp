#pragma once

#include <cmath>
#include <numbers>

#include "pulsebound/band.hpp"
#include "pulsebound/units.hpp"

namespace pulsebound {

enum class FieldKind { electric, magnetic };

inline const char* kind_label(FieldKind k) { return k == FieldKind::electric ? "electric" : "magnetic"; }

/// beta^4 - alpha^4, factored to keep narrow bands accurate.
template <typename Scalar>
Scalar quartic_span(Scalar alpha, Scalar beta) {
  return (beta - alpha) * (beta + alpha) * (beta * beta + alpha * alpha);
}

/// Squared norm of the unnormalized matched filter, (2 pi / 3)(beta^4 - alpha^4).
template <typename Scalar>
Scalar normalization_constant(Scalar alpha, Scalar beta) {
  return Scalar(2) * std::numbers::pi_v<Scalar> / Scalar(3) * quartic_span(alpha, beta);
}

inline double normalization_constant(const FrequencyBand& band) {
  return normalization_constant(band.alpha(), band.beta());
}

/// Peak normal-ordered energy density in units of hbar*omega0*k0^3.
template <typename Scalar>
Scalar ultimate_bound_normalized(Scalar alpha, Scalar beta, Scalar mean_photons) {
  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  return std::numbers::pi_v<Scalar> / Scalar(3) * mean_photons * quartic_span(alpha, beta) /
         (two_pi * two_pi * two_pi);
}

struct BoundReport {
  FieldKind kind;
  FrequencyBand band;
  double mean_photons;
  double value;
  UnitMode units;
};

/// (pi/3) <N> (hbar w2 / l2^3 - hbar w1 / l1^3), evaluated directly in the
/// constants of `units`. The electric and magnetic bounds coincide.
inline BoundReport ultimate_energy_density_bound(FieldKind kind, const FrequencyBand& band,
                                                 double mean_photons,
                                                 const UnitSystem& units = UnitSystem::normalized()) {
  require(std::isfinite(mean_photons) && mean_photons >= 0.0, "mean photon number must be ≥ 0");
  // hbar*omega/lambda^3 with lambda = 2 pi c / omega; zero at omega = 0.
  auto photon_term = [&](double omega) {
    const double k = omega / (2.0 * std::numbers::pi * units.c);
    return units.hbar * omega * k * k * k;
  };
  const double value = std::numbers::pi / 3.0 * mean_photons *
                       (photon_term(band.omega2(units)) - photon_term(band.omega1(units)));
  return {kind, band, mean_photons, value, units.mode};
}

/// Slowly-varying-envelope bound on c*U_e: (2/3) <N> hbar w0 dw / l0^2,
/// with l0 the wavelength of the centre frequency `omega_center`.
inline double narrowband_intensity_bound(double omega_center, double delta_omega, double mean_photons,
                                         const UnitSystem& units = UnitSystem::normalized()) {
  require(std::isfinite(delta_omega) && delta_omega >= 0.0, "delta_omega must be ≥ 0");
  require(std::isfinite(omega_center) && omega_center >= 0.0, "omega0 must be ≥ 0");
  require(std::isfinite(mean_photons) && mean_photons >= 0.0, "mean photon number must be ≥ 0");
  const double k = omega_center / (2.0 * std::numbers::pi * units.c);
  return 2.0 / 3.0 * mean_photons * units.hbar * omega_center * delta_omega * k * k;
}

}  // namespace pulsebound
