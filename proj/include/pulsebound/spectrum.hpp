#pragma once

#include <span>
#include <vector>

#include "pulsebound/geometry.hpp"

namespace pulsebound {

/// Magnitude spectrum of a sampled vector signal, ascending in omega.
/// Uses the analysis kernel exp(+i omega t), so a positive-frequency field
/// exp(-i Omega t) shows up at omega = +Omega.
struct Spectrum {
  std::vector<double> omega;
  std::vector<double> amplitude;  // |sum_j w_j x_j exp(i omega t_j)| * dt
};

/// Periodic Hann window followed by a DFT. dt is the sampling step.
Spectrum hann_spectrum(std::span<const CVector3> series, double dt);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  int points = 0;
};

/// Least-squares fit of log(amplitude) against log(omega) over [lo, hi].
SlopeFit fit_log_log(const Spectrum& s, double lo, double hi);

/// Largest amplitude at |omega - band| > guard relative to the largest
/// amplitude inside [lo, hi].
double out_of_band_leakage(const Spectrum& s, double lo, double hi, double guard);

}  // namespace pulsebound
