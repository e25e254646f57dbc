#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "pulsebound/band.hpp"
#include "pulsebound/geometry.hpp"

namespace pulsebound {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree 2n-1.
GaussRule gauss_legendre(int n, double a, double b);

struct FrequencyNode {
  double omega;
  double weight;
};

/// Direction on the unit sphere. The weight is with respect to
/// d(cos theta) d(phi), so sin(theta) never appears explicitly.
struct AngularNode {
  double cos_theta;
  double theta;
  double phi;
  double weight;
  PolarizationFrame<double> frame;
};

/// Tensor-product rule for integrals over (Omega, cos theta, phi).
///
/// Gauss-Legendre in Omega over [alpha, beta], Gauss-Legendre in
/// u = cos(theta) over [-1, 1], uniform in phi. Node i pairs frequency
/// i / directions().size() with direction i % directions().size().
/// A degenerate band yields an empty grid.
class QuadratureGrid {
 public:
  QuadratureGrid(const FrequencyBand& band, int n_omega, int n_theta, int n_phi);

  const FrequencyBand& band() const { return band_; }
  int n_omega() const { return n_omega_; }
  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }

  std::span<const FrequencyNode> frequencies() const { return frequencies_; }
  std::span<const AngularNode> directions() const { return directions_; }

  std::size_t size() const { return frequencies_.size() * directions_.size(); }
  std::size_t mode_count() const { return 2 * size(); }
  bool empty() const { return size() == 0; }

  const FrequencyNode& frequency_of(std::size_t node) const {
    return frequencies_[node / directions_.size()];
  }
  const AngularNode& direction_of(std::size_t node) const {
    return directions_[node % directions_.size()];
  }
  double weight(std::size_t node) const {
    return frequency_of(node).weight * direction_of(node).weight;
  }
  ModeCoordinate coordinate(std::size_t node, int sigma) const;

  /// One entry per node (sigma = 0); polarization is not part of the measure.
  std::vector<ModeCoordinate> nodes() const;
  std::vector<double> weights() const;

  /// Sum of weight * f(omega, direction) over all nodes.
  template <typename F>
  double integrate(F&& f) const {
    double total = 0.0;
    for (const auto& fn : frequencies_) {
      double inner = 0.0;
      for (const auto& dn : directions_) inner += dn.weight * f(fn.omega, dn);
      total += fn.weight * inner;
    }
    return total;
  }

 private:
  FrequencyBand band_;
  int n_omega_;
  int n_theta_;
  int n_phi_;
  std::vector<FrequencyNode> frequencies_;
  std::vector<AngularNode> directions_;
};

using GridPtr = std::shared_ptr<const QuadratureGrid>;

GridPtr build_quadrature(const FrequencyBand& band, int n_omega, int n_theta, int n_phi);

struct GridOrders {
  int n_omega = 32;
  int n_theta = 32;
  int n_phi = 16;
};

inline GridPtr build_quadrature(const FrequencyBand& band, const GridOrders& orders = {}) {
  return build_quadrature(band, orders.n_omega, orders.n_theta, orders.n_phi);
}

}  // namespace pulsebound
