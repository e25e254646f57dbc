#include "pulsebound/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace pulsebound {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double prev = 1.0;
  double cur = x;
  for (int k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  if (n == 1) prev = 1.0;
  return {cur, n * (x * cur - prev) / (x * x - 1.0)};
}

}  // namespace

GaussRule gauss_legendre(int n, double a, double b) {
  require(n >= 1, "quadrature order must be ≥ 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(n, x).second;
    const double w = half * 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = mid;
  return rule;
}

QuadratureGrid::QuadratureGrid(const FrequencyBand& band, int n_omega, int n_theta, int n_phi)
    : band_(band), n_omega_(n_omega), n_theta_(n_theta), n_phi_(n_phi) {
  require(n_omega >= 1 && n_theta >= 1 && n_phi >= 1, "quadrature orders must be ≥ 1");
  if (!band.degenerate()) {
    const GaussRule radial = gauss_legendre(n_omega, band.alpha(), band.beta());
    frequencies_.reserve(n_omega);
    for (int i = 0; i < n_omega; ++i) frequencies_.push_back({radial.nodes[i], radial.weights[i]});
  }
  const GaussRule polar = gauss_legendre(n_theta, -1.0, 1.0);
  const double dphi = 2.0 * std::numbers::pi / n_phi;
  directions_.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  for (int it = 0; it < n_theta; ++it) {
    const double u = polar.nodes[it];
    for (int ip = 0; ip < n_phi; ++ip) {
      const double phi = dphi * ip;
      directions_.push_back(
          {u, std::acos(u), phi, polar.weights[it] * dphi, frame_from_cos_theta(u, phi)});
    }
  }
}

ModeCoordinate QuadratureGrid::coordinate(std::size_t node, int sigma) const {
  const auto& d = direction_of(node);
  return {frequency_of(node).omega, d.theta, d.phi, sigma};
}

std::vector<ModeCoordinate> QuadratureGrid::nodes() const {
  std::vector<ModeCoordinate> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(coordinate(i, 0));
  return out;
}

std::vector<double> QuadratureGrid::weights() const {
  std::vector<double> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(weight(i));
  return out;
}

GridPtr build_quadrature(const FrequencyBand& band, int n_omega, int n_theta, int n_phi) {
  return std::make_shared<const QuadratureGrid>(band, n_omega, n_theta, n_phi);
}

}  // namespace pulsebound
