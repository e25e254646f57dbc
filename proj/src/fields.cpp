#include "pulsebound/fields.hpp"

#include <cmath>
#include <numbers>

namespace pulsebound {

using cd = std::complex<double>;

namespace {

// sqrt(<N> hbar w0 / (2 eps0 lambda0^3)) in normalized units; also the
// magnetic prefactor since c = mu0 = 1 there.
double field_prefactor(double mean_photons) {
  require(std::isfinite(mean_photons) && mean_photons >= 0.0, "mean photon number must be ≥ 0");
  const double two_pi = 2.0 * std::numbers::pi;
  return std::sqrt(mean_photons / (2.0 * two_pi * two_pi * two_pi));
}

struct SpectralSums {
  std::vector<CVector3> electric;  // one per frequency node
  std::vector<CVector3> magnetic;
};

// Angular sums at a fixed point, one per frequency node, with the radial
// weight w * Omega^{3/2} folded in. The field at time t is
// i * prefactor * sum_j exp(-i Omega_j t) * sums[j].
SpectralSums spectral_sums(const ModeAmplitude& amp, const Vector3& r) {
  const QuadratureGrid& grid = amp.grid();
  const auto values = amp.values();
  SpectralSums out;
  out.electric.reserve(grid.frequencies().size());
  out.magnetic.reserve(grid.frequencies().size());
  std::size_t node = 0;
  for (const auto& fn : grid.frequencies()) {
    CVector3 e = CVector3::Zero();
    CVector3 b = CVector3::Zero();
    for (const auto& dn : grid.directions()) {
      const cd carrier = std::polar(dn.weight, fn.omega * dn.frame.kappa.dot(r));
      const cd g0 = carrier * values[2 * node];
      const cd g1 = carrier * values[2 * node + 1];
      // kappa x eps1 = eps2, kappa x eps2 = -eps1
      e += g0 * dn.frame.eps1.cast<cd>() + g1 * dn.frame.eps2.cast<cd>();
      b += g0 * dn.frame.eps2.cast<cd>() - g1 * dn.frame.eps1.cast<cd>();
      ++node;
    }
    const double radial = fn.weight * fn.omega * std::sqrt(fn.omega);
    out.electric.push_back(radial * e);
    out.magnetic.push_back(radial * b);
  }
  return out;
}

void evaluate(const SpectralSums& sums, const QuadratureGrid& grid, double prefactor, double t, CVector3& e,
              CVector3& b) {
  e.setZero();
  b.setZero();
  const auto freqs = grid.frequencies();
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    const cd phase = std::polar(1.0, -freqs[j].omega * t);
    e += phase * sums.electric[j];
    b += phase * sums.magnetic[j];
  }
  const cd scale(0.0, prefactor);
  e *= scale;
  b *= scale;
}

FieldSample make_sample(const Vector3& point, double time, const CVector3& e_norm, const CVector3& b_norm,
                        const UnitSystem& units) {
  FieldSample s;
  s.point = point;
  s.time = time;
  s.e_plus = e_norm * units.electric_field_scale();
  s.b_plus = b_norm * units.magnetic_field_scale();
  s.u_e = units.epsilon0 * s.e_plus.squaredNorm();
  s.u_b = s.b_plus.squaredNorm() / units.mu0;
  return s;
}

}  // namespace

double classical_electric_density(const FieldSample& s, const UnitSystem& units) {
  return 2.0 * units.epsilon0 * s.e_plus.real().squaredNorm();
}

double classical_magnetic_density(const FieldSample& s, const UnitSystem& units) {
  return 2.0 * s.b_plus.real().squaredNorm() / units.mu0;
}

FieldSample synthesize_field(const ModeAmplitude& amp, double mean_photons, const Vector3& point, double time,
                             const UnitSystem& units) {
  const double prefactor = field_prefactor(mean_photons);
  require(point.allFinite() && std::isfinite(time), "field point must be finite");
  const SpectralSums sums = spectral_sums(amp, point / units.length_scale());
  CVector3 e, b;
  evaluate(sums, amp.grid(), prefactor, time / units.time_scale(), e, b);
  return make_sample(point, time, e, b, units);
}

std::vector<CVector3> time_series_at_focus(const ModeAmplitude& amp, double mean_photons, const Vector3& focus,
                                           std::span<const double> times, const UnitSystem& units) {
  const double prefactor = field_prefactor(mean_photons);
  if (times.size() >= 2) {
    const double dt = (times[1] - times[0]) / units.time_scale();
    require(dt > 0.0, "times must be increasing");
    for (std::size_t i = 1; i < times.size(); ++i) {
      const double step = (times[i] - times[i - 1]) / units.time_scale();
      require(std::abs(step - dt) <= 1e-9 * dt, "times must be uniformly spaced");
    }
    const double omega_max = amp.grid().band().beta();
    if (!(std::numbers::pi / dt > omega_max)) {
      throw DomainError("time step too coarse: sampling rate must exceed omega2/pi, i.e. dt < " +
                        std::to_string(std::numbers::pi / omega_max * units.time_scale()));
    }
  }
  const SpectralSums sums = spectral_sums(amp, focus / units.length_scale());
  std::vector<CVector3> out;
  out.reserve(times.size());
  for (double t : times) {
    CVector3 e, b;
    evaluate(sums, amp.grid(), prefactor, t / units.time_scale(), e, b);
    out.push_back(e * units.electric_field_scale());
  }
  return out;
}

FieldProbe::FieldProbe(const QuadratureGrid& grid, double mean_photons, const Vector3& point, double time) {
  const double prefactor = field_prefactor(mean_photons);
  e_coeffs_.reserve(grid.mode_count());
  b_coeffs_.reserve(grid.mode_count());
  e_discrete_.reserve(grid.mode_count());
  std::size_t node = 0;
  for (const auto& fn : grid.frequencies()) {
    const double radial = fn.weight * fn.omega * std::sqrt(fn.omega);
    for (const auto& dn : grid.directions()) {
      const double w = radial * dn.weight;
      const cd c = cd(0.0, prefactor) * std::polar(w, fn.omega * (dn.frame.kappa.dot(point) - time));
      const double inv_sqrt_weight = 1.0 / std::sqrt(grid.weight(node));
      for (int s = 0; s < 2; ++s) {
        const CVector3 ce = c * dn.frame.eps(s).cast<cd>();
        e_coeffs_.push_back(ce);
        b_coeffs_.push_back(c * dn.frame.kappa_cross_eps(s).cast<cd>());
        e_discrete_.push_back(ce * inv_sqrt_weight);
      }
      ++node;
    }
  }
}

CVector3 FieldProbe::apply(const std::vector<CVector3>& coeffs, std::span<const std::complex<double>> v) {
  require(coeffs.size() == v.size(), "amplitude does not match the probe grid");
  CVector3 acc = CVector3::Zero();
  for (std::size_t m = 0; m < v.size(); ++m) acc += coeffs[m] * v[m];
  return acc;
}

std::size_t ScanSpec::size() const {
  return static_cast<std::size_t>(x.count) * y.count * z.count * t.count;
}

ScanResult scan(const ModeAmplitude& amp, double mean_photons, const ScanSpec& spec, const UnitSystem& units) {
  for (const ScanAxis* a : {&spec.x, &spec.y, &spec.z, &spec.t}) {
    require(a->count >= 1, "scan counts must be ≥ 1");
    require(std::isfinite(a->lo) && std::isfinite(a->hi), "scan extents must be finite");
  }
  require(spec.origin.allFinite() && std::isfinite(spec.origin_time), "scan origin must be finite");
  const double prefactor = field_prefactor(mean_photons);

  const std::size_t n_space = static_cast<std::size_t>(spec.x.count) * spec.y.count * spec.z.count;
  ScanResult result;
  result.rows.resize(spec.size());
  std::size_t ispace = 0;
  for (int iz = 0; iz < spec.z.count; ++iz) {
    for (int iy = 0; iy < spec.y.count; ++iy) {
      for (int ix = 0; ix < spec.x.count; ++ix, ++ispace) {
        const Vector3 point = spec.origin + Vector3(spec.x.at(ix), spec.y.at(iy), spec.z.at(iz));
        const SpectralSums sums = spectral_sums(amp, point / units.length_scale());
        for (int it = 0; it < spec.t.count; ++it) {
          const double time = spec.origin_time + spec.t.at(it);
          CVector3 e, b;
          evaluate(sums, amp.grid(), prefactor, time / units.time_scale(), e, b);
          result.rows[it * n_space + ispace] = make_sample(point, time, e, b, units);
        }
      }
    }
  }
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    if (result.rows[i].u_e > result.rows[result.peak_u_e].u_e) result.peak_u_e = i;
    if (result.rows[i].u_b > result.rows[result.peak_u_b].u_b) result.peak_u_b = i;
  }
  return result;
}

}  // namespace pulsebound
