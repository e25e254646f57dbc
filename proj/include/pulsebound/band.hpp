#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "pulsebound/error.hpp"
#include "pulsebound/units.hpp"

namespace pulsebound {

/// Normalized spectral band [alpha, beta] in units of omega0.
class FrequencyBand {
 public:
  FrequencyBand(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    require(std::isfinite(alpha) && std::isfinite(beta), "band edges must be finite");
    require(alpha >= 0.0, "alpha must be ≥ 0");
    require(beta >= alpha, "beta must be ≥ alpha");
  }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double width() const { return beta_ - alpha_; }
  bool degenerate() const { return beta_ == alpha_; }
  bool contains(double omega) const { return omega >= alpha_ && omega <= beta_; }

  double omega1(const UnitSystem& u = {}) const { return alpha_ * u.omega0; }
  double omega2(const UnitSystem& u = {}) const { return beta_ * u.omega0; }
  double delta_omega(const UnitSystem& u = {}) const { return omega2(u) - omega1(u); }
  // Infinite for alpha = 0.
  double lambda1(const UnitSystem& u = {}) const { return wavelength(omega1(u), u); }
  double lambda2(const UnitSystem& u = {}) const { return wavelength(omega2(u), u); }

  friend bool operator==(const FrequencyBand&, const FrequencyBand&) = default;

 private:
  static double wavelength(double omega, const UnitSystem& u) {
    if (omega == 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::numbers::pi * u.c / omega;
  }

  double alpha_;
  double beta_;
};

}  // namespace pulsebound
