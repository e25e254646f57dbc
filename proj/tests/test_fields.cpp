#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pulsebound/fields.hpp"
#include "pulsebound/rng.hpp"

using namespace pulsebound;
using cd = std::complex<double>;
using std::numbers::pi;

namespace {

double bound(const FrequencyBand& band, double n) {
  return ultimate_energy_density_bound(FieldKind::electric, band, n).value;
}

}  // namespace

TEST_CASE("matched states saturate the bound at the focus") {
  for (auto [a, b] : {std::pair{0.5, 1.5}, {0.0, 1.0}, {0.9, 1.1}}) {
    const FrequencyBand band(a, b);
    const auto grid = build_quadrature(band);
    const Vector3 r0(0.4, -0.3, 1.2);
    const double t0 = -2.5;
    const auto e = matched_amplitude({FieldKind::electric, band, Vector3::UnitZ(), r0, t0}, grid);
    const auto m = matched_amplitude({FieldKind::magnetic, band, Vector3::UnitZ(), r0, t0}, grid);
    CHECK(synthesize_field(e, 1.0, r0, t0).u_e == doctest::Approx(bound(band, 1.0)).epsilon(1e-8));
    CHECK(synthesize_field(m, 1.0, r0, t0).u_b == doctest::Approx(bound(band, 1.0)).epsilon(1e-8));
    // the focal field points along the axis
    const auto s = synthesize_field(e, 1.0, r0, t0);
    CHECK(std::norm(s.e_plus.x()) + std::norm(s.e_plus.y()) < 1e-20 * s.e_plus.squaredNorm());
  }
}

TEST_CASE("focal value does not depend on the axis") {
  const FrequencyBand band(0.5, 1.5);
  const auto grid = build_quadrature(band);
  std::mt19937_64 rng(17);
  std::normal_distribution<double> n;
  for (int i = 0; i < 20; ++i) {
    const Vector3 axis = Vector3(n(rng), n(rng), n(rng)).normalized();
    const auto e = matched_amplitude({FieldKind::electric, band, axis}, grid);
    const auto s = synthesize_field(e, 2.0, Vector3::Zero(), 0.0);
    CHECK(s.u_e == doctest::Approx(bound(band, 2.0)).epsilon(1e-10));
    CHECK(std::abs(s.e_plus.dot(axis.cast<cd>())) == doctest::Approx(s.e_plus.norm()).epsilon(1e-10));
  }
}

TEST_CASE("density is linear in the photon number") {
  const FrequencyBand band(0.5, 1.5);
  const auto grid = build_quadrature(band, 12, 12, 8);
  const auto amp = random_band_amplitude(grid, 5);
  const Vector3 r(0.2, 0.9, -0.4);
  const auto one = synthesize_field(amp, 1.0, r, 1.5);
  const auto two = synthesize_field(amp, 2.0, r, 1.5);
  CHECK(two.u_e == doctest::Approx(2 * one.u_e).epsilon(1e-13));
  CHECK(two.u_b == doctest::Approx(2 * one.u_b).epsilon(1e-13));
  CHECK(synthesize_field(amp, 0.0, r, 1.5).u_e == 0.0);
  CHECK_THROWS_AS(synthesize_field(amp, -1.0, r, 1.5), DomainError);
}

TEST_CASE("matched field is symmetric under joint space and time reversal about the focus") {
  const FrequencyBand band(0.5, 1.5);
  const auto grid = build_quadrature(band, 16, 16, 8);
  const auto amp = matched_amplitude({FieldKind::electric, band}, grid);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 10; ++i) {
    const Vector3 r(u(rng), u(rng), u(rng));
    const double t = u(rng);
    const auto p = synthesize_field(amp, 1.0, r, t);
    const auto q = synthesize_field(amp, 1.0, -r, -t);
    CHECK((p.e_plus - q.e_plus.conjugate()).norm() < 1e-12);
    CHECK(p.u_e == doctest::Approx(q.u_e).epsilon(1e-10));
  }
}

TEST_CASE("no normalized amplitude exceeds the bound anywhere") {
  const FrequencyBand band(0.5, 1.5);
  const auto grid = build_quadrature(band, 8, 8, 6);
  const double b = bound(band, 1.0);
  ScanSpec spec;
  spec.x = {-2, 2, 5};
  spec.y = {-2, 2, 3};
  spec.z = {-2, 2, 5};
  spec.t = {-3, 3, 4};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto amp = random_band_amplitude(grid, mix_seed(77, seed));
    const auto res = scan(amp, 1.0, spec);
    for (const auto& row : res.rows) {
      CHECK(row.u_e <= b * (1 + 1e-9));
      CHECK(row.u_b <= b * (1 + 1e-9));
    }
  }
  // complex polarization states too
  std::vector<cd> v(grid->mode_count());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    v[2 * i] = 1.0;
    v[2 * i + 1] = cd(0, 1);
  }
  const auto circ = ModeAmplitude(grid, v).normalized();
  for (const auto& row : scan(circ, 1.0, spec).rows) CHECK(row.u_e <= b * (1 + 1e-9));
}

TEST_CASE("scan finds its maximum at the focus") {
  const FrequencyBand band(0.5, 1.5);
  const auto grid = build_quadrature(band, 16, 16, 8);
  const Vector3 r0(1.0, 0.0, -1.0);
  const double t0 = 2.0;
  const auto amp = matched_amplitude({FieldKind::electric, band, Vector3::UnitX(), r0, t0}, grid);
  ScanSpec spec;
  spec.origin = r0;
  spec.origin_time = t0;
  spec.x = {-1, 1, 5};
  spec.y = {-1, 1, 5};
  spec.z = {-1, 1, 3};
  spec.t = {-1, 1, 5};
  const auto res = scan(amp, 1.0, spec);
  CHECK(res.rows.size() == spec.size());
  const auto& peak = res.rows[res.peak_u_e];
  CHECK((peak.point - r0).norm() < 1e-12);
  CHECK(std::abs(peak.time - t0) < 1e-12);
  // t-major, then z, y, x
  CHECK(res.rows[1].point.x() == doctest::Approx(r0.x() - 0.5));
  CHECK(res.rows[5].point.y() == doctest::Approx(r0.y() - 0.5));
  CHECK(res.rows[75].time == doctest::Approx(t0 - 0.5));
}

TEST_CASE("scan peak ties resolve to the first row") {
  const auto grid = build_quadrature(FrequencyBand(0.5, 1.5), 4, 4, 4);
  ScanSpec spec;
  spec.x = {0, 1, 3};
  const auto res = scan(ModeAmplitude::zero(grid), 1.0, spec);
  CHECK(res.peak_u_e == 0);
  CHECK(res.peak_u_b == 0);
  spec.x.count = 0;
  CHECK_THROWS_AS(scan(ModeAmplitude::zero(grid), 1.0, spec), DomainError);
}

TEST_CASE("probe matches direct synthesis") {
  const FrequencyBand band(0.5, 1.5);
  const auto grid = build_quadrature(band, 8, 8, 6);
  const Vector3 r(0.5, 1.0, -0.25);
  const double t = 0.75;
  const FieldProbe probe(*grid, 3.0, r, t);
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto amp = random_band_amplitude(grid, seed);
    const auto s = synthesize_field(amp, 3.0, r, t);
    CHECK((probe.electric(amp) - s.e_plus).norm() < 1e-13 * s.e_plus.norm() + 1e-16);
    CHECK((probe.magnetic(amp) - s.b_plus).norm() < 1e-13 * s.b_plus.norm() + 1e-16);
    const auto psi = amp.discrete_coordinates();
    CHECK((probe.electric_discrete(psi) - s.e_plus).norm() < 1e-13 * s.e_plus.norm() + 1e-16);
  }
}

TEST_CASE("SI evaluation rescales points, times and densities") {
  const FrequencyBand band(0.5, 1.5);
  const auto grid = build_quadrature(band, 10, 10, 6);
  const auto amp = random_band_amplitude(grid, 11);
  const UnitSystem si = UnitSystem::si_from_lambda0_nm(800);
  const Vector3 r(0.3, -0.7, 1.1);
  const double t = 0.9;
  const auto n = synthesize_field(amp, 1.0, r, t);
  const auto s = synthesize_field(amp, 1.0, r * si.length_scale(), t * si.time_scale(), si);
  CHECK(s.u_e == doctest::Approx(n.u_e * si.energy_density_scale()).epsilon(1e-10));
  CHECK(s.u_b == doctest::Approx(n.u_b * si.energy_density_scale()).epsilon(1e-10));
  CHECK(s.b_plus.norm() == doctest::Approx(n.b_plus.norm() * si.magnetic_field_scale()).epsilon(1e-10));
  CHECK(classical_electric_density(s, si) ==
        doctest::Approx(classical_electric_density(n) * si.energy_density_scale()).epsilon(1e-10));
}

TEST_CASE("classical densities average to the normal-ordered ones") {
  // For a single frequency the instantaneous 2 eps0 (Re E+)^2 averages to eps0 |E+|^2 over a period.
  const auto grid = build_quadrature(FrequencyBand(0.99, 1.01), 1, 4, 4);
  const auto amp = random_band_amplitude(grid, 3);
  const double w = grid->frequencies()[0].omega;
  const int steps = 64;
  double avg = 0;
  for (int k = 0; k < steps; ++k) {
    const auto s = synthesize_field(amp, 1.0, Vector3(0.1, 0.2, 0.3), 2 * pi * k / (steps * w));
    avg += classical_electric_density(s) / steps;
  }
  const auto s0 = synthesize_field(amp, 1.0, Vector3(0.1, 0.2, 0.3), 0.0);
  CHECK(avg == doctest::Approx(s0.u_e).epsilon(1e-12));
}

TEST_CASE("time series") {
  const FrequencyBand band(0.5, 1.5);
  const auto grid = build_quadrature(band, 16, 8, 4);
  const auto amp = matched_amplitude({FieldKind::electric, band}, grid);
  std::vector<double> times;
  for (int i = -4; i <= 4; ++i) times.push_back(0.5 * i);
  const auto series = time_series_at_focus(amp, 1.0, Vector3::Zero(), times);
  REQUIRE(series.size() == times.size());
  CHECK((series[4] - synthesize_field(amp, 1.0, Vector3::Zero(), 0.0).e_plus).norm() < 1e-15);
  CHECK((series[7] - synthesize_field(amp, 1.0, Vector3::Zero(), 1.5).e_plus).norm() < 1e-15);

  const std::vector<double> coarse{0.0, 2.2, 4.4};  // pi / 1.5 = 2.094
  CHECK_THROWS_WITH_AS(time_series_at_focus(amp, 1.0, Vector3::Zero(), coarse),
                       doctest::Contains("time step too coarse"), DomainError);
  const std::vector<double> uneven{0.0, 0.1, 0.3};
  CHECK_THROWS_AS(time_series_at_focus(amp, 1.0, Vector3::Zero(), uneven), DomainError);
  const std::vector<double> backwards{0.0, -0.1};
  CHECK_THROWS_AS(time_series_at_focus(amp, 1.0, Vector3::Zero(), backwards), DomainError);
}
