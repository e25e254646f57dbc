#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pulsebound/bounds.hpp"
#include "pulsebound/quadrature.hpp"

namespace pulsebound {

/// Single-photon amplitude sampled on a quadrature grid.
///
/// value(node, sigma) is a density with respect to dOmega d(cos theta) dphi,
/// so norm2() = sum over nodes of weight * |value|^2. The amplitude with
/// respect to the dOmega dtheta dphi measure is value * sqrt(sin theta).
/// Only nodes of the grid are represented; the grid spans the band, so the
/// amplitude vanishes outside it by construction.
class ModeAmplitude {
 public:
  ModeAmplitude(GridPtr grid, std::vector<std::complex<double>> values);

  static ModeAmplitude zero(GridPtr grid);

  const QuadratureGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::span<const std::complex<double>> values() const { return values_; }

  std::complex<double> value(std::size_t node, int sigma) const { return values_[2 * node + sigma]; }
  std::complex<double> angle_measure_value(std::size_t node, int sigma) const;

  double norm2() const;

  /// Coordinates in the orthonormal discrete mode basis: sqrt(weight) * value.
  std::vector<std::complex<double>> discrete_coordinates() const;

  ModeAmplitude normalized() const;

 private:
  GridPtr grid_;
  std::vector<std::complex<double>> values_;
};

struct MatchedSpec {
  FieldKind kind = FieldKind::electric;
  FrequencyBand band{0.0, 1.0};
  Vector3 axis = Vector3::UnitZ();
  Vector3 focus = Vector3::Zero();
  double focus_time = 0.0;
};

/// Matched amplitude that saturates the energy-density bound at the focus:
///   -i C^{-1/2} Omega^{3/2} (axis . V) exp(-i k.r0 + i Omega t0)
/// with V = eps for the electric kind and V = kappa x eps for the magnetic kind.
ModeAmplitude matched_amplitude(const MatchedSpec& spec, const GridPtr& grid);

/// Applies exp(i chi(node)) to every node (both polarizations).
ModeAmplitude with_node_phases(const ModeAmplitude& amp, std::span<const double> chi);

/// Haar-random unit vector of the discrete mode space: i.i.d. complex normal
/// discrete coordinates, normalized. Deterministic in `seed`.
ModeAmplitude random_band_amplitude(const GridPtr& grid, std::uint64_t seed);

struct PhotonStatistics {
  std::vector<double> coefficients;  // C_N, N = 0..n_max
  double mean_photons = 0.0;

  double total_probability() const;
  double truncated_mean() const;
};

/// Poissonian coefficients exp(-<N>/2) <N>^{N/2} / sqrt(N!), in log space.
PhotonStatistics coherent_coefficients(double mean_photons, int n_max);

}  // namespace pulsebound
