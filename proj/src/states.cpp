#include "pulsebound/states.hpp"

#include <cmath>
#include <utility>

#include "pulsebound/rng.hpp"

namespace pulsebound {

using cd = std::complex<double>;

ModeAmplitude::ModeAmplitude(GridPtr grid, std::vector<cd> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  require(grid_ != nullptr, "mode amplitude needs a grid");
  require(values_.size() == grid_->mode_count(), "amplitude size does not match the grid");
}

ModeAmplitude ModeAmplitude::zero(GridPtr grid) {
  const std::size_t n = grid ? grid->mode_count() : 0;
  return {std::move(grid), std::vector<cd>(n)};
}

cd ModeAmplitude::angle_measure_value(std::size_t node, int sigma) const {
  return value(node, sigma) * std::sqrt(std::sin(grid_->direction_of(node).theta));
}

double ModeAmplitude::norm2() const {
  double total = 0.0;
  for (std::size_t i = 0; i < grid_->size(); ++i)
    total += grid_->weight(i) * (std::norm(values_[2 * i]) + std::norm(values_[2 * i + 1]));
  return total;
}

std::vector<cd> ModeAmplitude::discrete_coordinates() const {
  std::vector<cd> out(values_.size());
  for (std::size_t i = 0; i < grid_->size(); ++i) {
    const double s = std::sqrt(grid_->weight(i));
    out[2 * i] = s * values_[2 * i];
    out[2 * i + 1] = s * values_[2 * i + 1];
  }
  return out;
}

ModeAmplitude ModeAmplitude::normalized() const {
  const double n2 = norm2();
  require(n2 > 0.0, "cannot normalize a zero amplitude");
  std::vector<cd> v = values_;
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& x : v) x *= scale;
  return {grid_, std::move(v)};
}

ModeAmplitude matched_amplitude(const MatchedSpec& spec, const GridPtr& grid) {
  require(grid != nullptr, "matched amplitude needs a grid");
  require(!spec.band.degenerate(), "degenerate band: matched amplitude undefined (C = 0)");
  require(grid->band() == spec.band, "grid band differs from the matched band");
  require(std::abs(spec.axis.norm() - 1.0) <= 1e-12, "axis must be a unit vector");

  const double scale = 1.0 / std::sqrt(normalization_constant(spec.band));
  std::vector<cd> values(grid->mode_count());
  std::size_t node = 0;
  for (const auto& fn : grid->frequencies()) {
    const double radial = scale * std::pow(fn.omega, 1.5);
    for (const auto& dn : grid->directions()) {
      const double phase = -fn.omega * dn.frame.kappa.dot(spec.focus) + fn.omega * spec.focus_time;
      const cd carrier = cd(0.0, -1.0) * std::polar(radial, phase);
      for (int s = 0; s < 2; ++s) {
        const Vector3 v = spec.kind == FieldKind::electric ? dn.frame.eps(s) : dn.frame.kappa_cross_eps(s);
        values[2 * node + s] = carrier * spec.axis.dot(v);
      }
      ++node;
    }
  }
  return {grid, std::move(values)};
}

ModeAmplitude with_node_phases(const ModeAmplitude& amp, std::span<const double> chi) {
  require(chi.size() == amp.grid().size(), "one phase per node required");
  std::vector<cd> v(amp.values().begin(), amp.values().end());
  for (std::size_t i = 0; i < chi.size(); ++i) {
    const cd rot = std::polar(1.0, chi[i]);
    v[2 * i] *= rot;
    v[2 * i + 1] *= rot;
  }
  return {amp.grid_ptr(), std::move(v)};
}

ModeAmplitude random_band_amplitude(const GridPtr& grid, std::uint64_t seed) {
  require(grid != nullptr && !grid->empty(), "random amplitude needs a nonempty grid");
  GaussianSource source(seed);
  std::vector<cd> v(grid->mode_count());
  double total = 0.0;
  for (auto& x : v) {
    x = source.complex_normal();
    total += std::norm(x);
  }
  const double scale = 1.0 / std::sqrt(total);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double s = scale / std::sqrt(grid->weight(i));
    v[2 * i] *= s;
    v[2 * i + 1] *= s;
  }
  return {grid, std::move(v)};
}

double PhotonStatistics::total_probability() const {
  double total = 0.0;
  for (double c : coefficients) total += c * c;
  return total;
}

double PhotonStatistics::truncated_mean() const {
  double total = 0.0;
  for (std::size_t n = 0; n < coefficients.size(); ++n) total += coefficients[n] * coefficients[n] * n;
  return total;
}

PhotonStatistics coherent_coefficients(double mean_photons, int n_max) {
  require(std::isfinite(mean_photons) && mean_photons >= 0.0, "mean photon number must be ≥ 0");
  require(n_max >= 0, "n_max must be ≥ 0");
  PhotonStatistics stats;
  stats.mean_photons = mean_photons;
  stats.coefficients.assign(n_max + 1, 0.0);
  if (mean_photons == 0.0) {
    stats.coefficients[0] = 1.0;
    return stats;
  }
  const double log_mean = std::log(mean_photons);
  for (int n = 0; n <= n_max; ++n) {
    const double log_c = -0.5 * mean_photons + 0.5 * n * log_mean - 0.5 * std::lgamma(n + 1.0);
    stats.coefficients[n] = std::exp(log_c);
  }
  return stats;
}

}  // namespace pulsebound
