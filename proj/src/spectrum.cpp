#include "pulsebound/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "pulsebound/error.hpp"

namespace pulsebound {

Spectrum hann_spectrum(std::span<const CVector3> series, double dt) {
  const std::size_t n = series.size();
  require(n >= 2, "spectrum needs at least two samples");
  require(dt > 0.0, "sampling step must be positive");

  Eigen::FFT<double> fft;
  std::vector<double> power(n, 0.0);
  std::vector<std::complex<double>> in(n);
  std::vector<std::complex<double>> out;
  for (int comp = 0; comp < 3; ++comp) {
    for (std::size_t j = 0; j < n; ++j) {
      const double w = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * j / n));
      // conj in, conj out turns the forward kernel exp(-i...) into exp(+i...)
      in[j] = std::conj(w * series[j][comp]);
    }
    fft.fwd(out, in);
    for (std::size_t k = 0; k < n; ++k) power[k] += std::norm(out[k]);
  }

  Spectrum s;
  s.omega.reserve(n);
  s.amplitude.reserve(n);
  const double dw = 2.0 * std::numbers::pi / (n * dt);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t k = half; k < n; ++k) {
    s.omega.push_back(dw * (static_cast<double>(k) - static_cast<double>(n)));
    s.amplitude.push_back(std::sqrt(power[k]) * dt);
  }
  for (std::size_t k = 0; k < half; ++k) {
    s.omega.push_back(dw * static_cast<double>(k));
    s.amplitude.push_back(std::sqrt(power[k]) * dt);
  }
  return s;
}

SlopeFit fit_log_log(const Spectrum& s, double lo, double hi) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (std::size_t k = 0; k < s.omega.size(); ++k) {
    if (s.omega[k] < lo || s.omega[k] > hi || s.omega[k] <= 0.0 || s.amplitude[k] <= 0.0) continue;
    const double x = std::log(s.omega[k]);
    const double y = std::log(s.amplitude[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  require(m >= 2, "not enough spectral bins to fit a slope");
  SlopeFit fit;
  fit.points = m;
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / m;
  return fit;
}

double out_of_band_leakage(const Spectrum& s, double lo, double hi, double guard) {
  double peak = 0.0;
  double leak = 0.0;
  for (std::size_t k = 0; k < s.omega.size(); ++k) {
    const double w = s.omega[k];
    if (w >= lo && w <= hi) peak = std::max(peak, s.amplitude[k]);
    if (w < lo - guard || w > hi + guard) leak = std::max(leak, s.amplitude[k]);
  }
  require(peak > 0.0, "no in-band spectral content");
  return leak / peak;
}

}  // namespace pulsebound
