#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pulsebound/states.hpp"
#include "pulsebound/units.hpp"

namespace pulsebound {

/// Positive-frequency fields and normal-ordered energy densities at one
/// spacetime point: u_e = eps0 |E+|^2, u_b = |B+|^2 / mu0.
struct FieldSample {
  Vector3 point = Vector3::Zero();
  double time = 0.0;
  CVector3 e_plus = CVector3::Zero();
  CVector3 b_plus = CVector3::Zero();
  double u_e = 0.0;
  double u_b = 0.0;
};

/// Instantaneous classical densities (eps0/2)(2 Re E+)^2 and (1/2mu0)(2 Re B+)^2.
double classical_electric_density(const FieldSample& s, const UnitSystem& units = UnitSystem::normalized());
double classical_magnetic_density(const FieldSample& s, const UnitSystem& units = UnitSystem::normalized());

/// Mean coherent-state fields of `amp` with <N> photons at (point, time).
/// point and time are read in `units`, and the sample is reported in them.
FieldSample synthesize_field(const ModeAmplitude& amp, double mean_photons, const Vector3& point, double time,
                             const UnitSystem& units = UnitSystem::normalized());

/// E+ at a fixed point for a list of uniformly spaced times. The sampling
/// step must resolve the band edge: dt < pi / omega2.
std::vector<CVector3> time_series_at_focus(const ModeAmplitude& amp, double mean_photons, const Vector3& focus,
                                           std::span<const double> times,
                                           const UnitSystem& units = UnitSystem::normalized());

/// Linear functionals amp -> E+(r, t), amp -> B+(r, t) for a fixed point,
/// tabulated once so that many amplitudes can be probed cheaply.
/// point and time are in normalized units.
class FieldProbe {
 public:
  FieldProbe(const QuadratureGrid& grid, double mean_photons, const Vector3& point, double time);

  CVector3 electric(const ModeAmplitude& amp) const { return apply(e_coeffs_, amp.values()); }
  CVector3 magnetic(const ModeAmplitude& amp) const { return apply(b_coeffs_, amp.values()); }

  /// Same functionals acting on discrete (orthonormal) coordinates.
  CVector3 electric_discrete(std::span<const std::complex<double>> psi) const { return apply(e_discrete_, psi); }
  std::span<const CVector3> electric_discrete_coefficients() const { return e_discrete_; }

 private:
  static CVector3 apply(const std::vector<CVector3>& coeffs, std::span<const std::complex<double>> v);

  std::vector<CVector3> e_coeffs_;
  std::vector<CVector3> b_coeffs_;
  std::vector<CVector3> e_discrete_;
};

struct ScanAxis {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  double at(int i) const { return count == 1 ? lo : lo + (hi - lo) * i / (count - 1); }
};

/// Offsets along x, y, z and t relative to (origin, origin_time).
struct ScanSpec {
  ScanAxis x, y, z, t;
  Vector3 origin = Vector3::Zero();
  double origin_time = 0.0;

  std::size_t size() const;
};

struct ScanResult {
  std::vector<FieldSample> rows;  // t-major, then z, y, x
  std::size_t peak_u_e = 0;       // lowest row index on ties
  std::size_t peak_u_b = 0;
};

ScanResult scan(const ModeAmplitude& amp, double mean_photons, const ScanSpec& spec,
                const UnitSystem& units = UnitSystem::normalized());

}  // namespace pulsebound
