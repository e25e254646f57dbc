#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pulsebound/fields.hpp"
#include "pulsebound/spectrum.hpp"
#include "pulsebound/states.hpp"

namespace pulsebound {

enum class Comparison {
  relative,  // |computed - reference| <= tolerance * |reference|
  absolute,  // |computed - reference| <= tolerance
  at_most,   // computed <= reference + tolerance
  at_least,  // computed >= reference - tolerance
  info,      // reported only
};

struct Metric {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::info;

  bool passed() const;
};

struct VerificationReport {
  std::string name;
  std::vector<Metric> metrics;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> warnings;
  std::vector<double> samples;  // per-trial values where applicable, in trial order

  bool passed() const;
  void add(std::string metric, double computed, double reference, double tolerance, Comparison cmp);
  void note(std::string key, std::string value);
};

/// I(tau) = integral over [alpha, beta] of Omega^3 exp(-i Omega tau), closed form.
std::complex<double> cubic_moment_transform(double alpha, double beta, double tau);

/// E+(r0, t0 + tau) of the matched electric state, evaluated without quadrature.
CVector3 axial_profile_oracle(const FrequencyBand& band, double mean_photons, double tau,
                              const Vector3& axis = Vector3::UnitZ());

/// Spatial finite-difference step lambda2 / 50 (time step h / c).
double default_fd_step(const FrequencyBand& band);

VerificationReport saturation_check(const FrequencyBand& band, double mean_photons, const GridPtr& grid,
                                    FieldKind kind = FieldKind::electric, const Vector3& axis = Vector3::UnitZ());

VerificationReport oracle_agreement_check(const FrequencyBand& band, double mean_photons, const GridPtr& grid,
                                          const std::vector<double>& taus = {0.5, 5.0, 50.0});

VerificationReport monte_carlo_schwarz(const FrequencyBand& band, double mean_photons, const GridPtr& grid,
                                       int trials, std::uint64_t seed);

/// Ratios U_e/bound for a list of amplitudes probed at the origin.
std::vector<double> focal_ratios(const std::vector<ModeAmplitude>& amps, double mean_photons);

VerificationReport maxwell_residual(const ModeAmplitude& amp, double mean_photons, const Vector3& point,
                                    double time, double h);

struct SpectrumSettings {
  double half_span = 200.0;  // series covers tau in [-half_span, half_span)
  int samples = 4096;
  int min_band_bins = 64;    // half_span is widened until the band holds this many bins
};

struct SpectrumAnalysis {
  Spectrum spectrum;
  SlopeFit fit;
  double leakage = 0.0;
  double fit_lo = 0.0;
  double fit_hi = 0.0;
  double half_span = 0.0;
  int samples = 0;
  int band_bins = 0;
  int n_omega = 0;
};

/// Focal time series of the matched electric state, Hann-windowed DFT and
/// log-log fit over the central 60% of the band.
SpectrumAnalysis analyze_focal_spectrum(const FrequencyBand& band, const QuadratureGrid& grid,
                                        const SpectrumSettings& settings = {});

VerificationReport spectrum_slope_check(const FrequencyBand& band, const GridPtr& grid,
                                        const SpectrumSettings& settings = {});

VerificationReport magnetic_null_check(const FrequencyBand& band, double mean_photons, const GridPtr& grid);

/// Explicit N-photon amplitudes on a small discrete mode set, summed directly
/// over companion photons and compared with the factorized expression.
VerificationReport discrete_fock_check(const FrequencyBand& band, const PhotonStatistics& stats,
                                       const GridPtr& grid_small, int n_max, const ModeAmplitude& photon,
                                       const Vector3& axis, const Vector3& point, double time);

VerificationReport narrowband_consistency_check(const FrequencyBand& band);

struct SuiteConfig {
  FrequencyBand band{0.5, 1.5};
  double mean_photons = 1.0;
  GridOrders orders;
  std::uint64_t seed = 42;
  int trials = 10000;
  int maxwell_points = 5;
};

std::vector<VerificationReport> run_suite(const SuiteConfig& config);

struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<std::size_t> counts;
};

Histogram ratio_histogram(const std::vector<double>& samples, int bins, double lo = 0.0, double hi = 1.0);

}  // namespace pulsebound
