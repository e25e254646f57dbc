#pragma once

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "pulsebound/error.hpp"

namespace pulsebound {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

using Vector3 = Vec3<double>;
using CVector3 = Eigen::Vector3cd;

/// A point (Omega, theta, phi, sigma) of normalized momentum space.
/// sigma is 0 or 1 (the two transverse polarizations).
struct ModeCoordinate {
  double omega = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  int sigma = 0;
};

/// Propagation direction kappa with the real transverse pair
/// eps1 = theta-hat, eps2 = phi-hat. Right-handed: eps1 x eps2 = kappa.
template <typename Scalar>
struct PolarizationFrame {
  Vec3<Scalar> kappa;
  Vec3<Scalar> eps1;
  Vec3<Scalar> eps2;

  const Vec3<Scalar>& eps(int sigma) const { return sigma == 0 ? eps1 : eps2; }

  // kappa x eps(sigma), i.e. the magnetic polarization of the mode.
  Vec3<Scalar> kappa_cross_eps(int sigma) const { return sigma == 0 ? eps2 : Vec3<Scalar>(-eps1); }
};

template <typename Scalar>
PolarizationFrame<Scalar> frame_from_cos_theta(Scalar cos_theta, Scalar phi) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const Scalar st = sqrt((Scalar(1) - cos_theta) * (Scalar(1) + cos_theta));
  const Scalar cp = cos(phi);
  const Scalar sp = sin(phi);
  PolarizationFrame<Scalar> f;
  f.kappa << st * cp, st * sp, cos_theta;
  f.eps1 << cos_theta * cp, cos_theta * sp, -st;
  f.eps2 << -sp, cp, Scalar(0);
  return f;
}

template <typename Scalar>
PolarizationFrame<Scalar> polarization_frame(Scalar theta, Scalar phi) {
  using std::cos;
  using std::sin;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  require(theta > Scalar(0) && theta < pi, "theta must lie in (0, pi)");
  require(phi >= Scalar(0) && phi < Scalar(2) * pi, "phi must lie in [0, 2 pi)");
  const Scalar st = sin(theta);
  const Scalar ct = cos(theta);
  const Scalar cp = cos(phi);
  const Scalar sp = sin(phi);
  PolarizationFrame<Scalar> f;
  f.kappa << st * cp, st * sp, ct;
  f.eps1 << ct * cp, ct * sp, -st;
  f.eps2 << -sp, cp, Scalar(0);
  return f;
}

/// Rotates the transverse pair of `frame` by psi about kappa.
template <typename Scalar>
PolarizationFrame<Scalar> rotate_transverse(const PolarizationFrame<Scalar>& frame, Scalar psi) {
  using std::cos;
  using std::sin;
  PolarizationFrame<Scalar> r = frame;
  r.eps1 = cos(psi) * frame.eps1 + sin(psi) * frame.eps2;
  r.eps2 = -sin(psi) * frame.eps1 + cos(psi) * frame.eps2;
  return r;
}

}  // namespace pulsebound
