#include "pulsebound/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "pulsebound/bounds.hpp"
#include "pulsebound/format.hpp"
#include "pulsebound/rng.hpp"

namespace pulsebound {

using cd = std::complex<double>;

bool Metric::passed() const {
  if (!std::isfinite(computed)) return comparison == Comparison::info;
  switch (comparison) {
    case Comparison::relative:
      return std::abs(computed - reference) <= tolerance * std::abs(reference);
    case Comparison::absolute:
      return std::abs(computed - reference) <= tolerance;
    case Comparison::at_most:
      return computed <= reference + tolerance;
    case Comparison::at_least:
      return computed >= reference - tolerance;
    case Comparison::info:
      return true;
  }
  return false;
}

bool VerificationReport::passed() const {
  return std::all_of(metrics.begin(), metrics.end(), [](const Metric& m) { return m.passed(); });
}

void VerificationReport::add(std::string metric, double computed, double reference, double tolerance,
                             Comparison cmp) {
  metrics.push_back({std::move(metric), computed, reference, tolerance, cmp});
}

void VerificationReport::note(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

namespace {

void note_grid(VerificationReport& r, const QuadratureGrid& g) {
  r.note("band", format_number(g.band().alpha()) + ":" + format_number(g.band().beta()));
  r.note("grid", std::to_string(g.n_omega()) + "x" + std::to_string(g.n_theta()) + "x" + std::to_string(g.n_phi()));
}

double relative_difference(const CVector3& a, const CVector3& b) { return (a - b).norm() / b.norm(); }

}  // namespace

std::complex<double> cubic_moment_transform(double alpha, double beta, double tau) {
  const double reach = std::max(std::abs(alpha), std::abs(beta)) * std::abs(tau);
  if (reach < 1.0) {
    // Taylor series of exp(-i Omega tau), integrated term by term.
    cd sum = 0.0;
    cd coeff = 1.0;  // (-i tau)^k / k!
    double a_pow = alpha * alpha * alpha * alpha;
    double b_pow = beta * beta * beta * beta;
    for (int k = 0; k < 60; ++k) {
      const cd term = coeff * (b_pow - a_pow) / double(k + 4);
      sum += term;
      if (k > 2 && std::abs(term) <= 1e-18 * std::abs(sum)) break;
      coeff *= cd(0.0, -tau) / double(k + 1);
      a_pow *= alpha;
      b_pow *= beta;
    }
    return sum;
  }
  // Antiderivative exp(-i W tau) [i W^3/tau + 3 W^2/tau^2 - 6 i W/tau^3 - 6/tau^4].
  const auto antiderivative = [tau](double w) {
    const double t2 = tau * tau;
    const cd poly(3.0 * w * w / t2 - 6.0 / (t2 * t2), w * w * w / tau - 6.0 * w / (t2 * tau));
    return std::polar(1.0, -w * tau) * poly;
  };
  return antiderivative(beta) - antiderivative(alpha);
}

CVector3 axial_profile_oracle(const FrequencyBand& band, double mean_photons, double tau, const Vector3& axis) {
  require(!band.degenerate(), "degenerate band: matched amplitude undefined (C = 0)");
  require(mean_photons >= 0.0, "mean photon number must be ≥ 0");
  const double two_pi = 2.0 * std::numbers::pi;
  const double scale = std::sqrt(mean_photons / (2.0 * two_pi * two_pi * two_pi)) /
                       std::sqrt(normalization_constant(band)) * (8.0 * std::numbers::pi / 3.0);
  return (scale * cubic_moment_transform(band.alpha(), band.beta(), tau)) * axis.cast<cd>();
}

double default_fd_step(const FrequencyBand& band) {
  require(band.beta() > 0.0, "finite-difference step needs beta > 0");
  return band.lambda2() / 50.0;
}

VerificationReport saturation_check(const FrequencyBand& band, double mean_photons, const GridPtr& grid,
                                    FieldKind kind, const Vector3& axis) {
  VerificationReport r;
  r.name = kind == FieldKind::electric ? "saturation_electric" : "saturation_magnetic";
  note_grid(r, *grid);
  const ModeAmplitude amp = matched_amplitude({kind, band, axis, Vector3::Zero(), 0.0}, grid);
  const FieldSample s = synthesize_field(amp, mean_photons, Vector3::Zero(), 0.0);
  const double bound = ultimate_energy_density_bound(kind, band, mean_photons).value;
  const double focal = kind == FieldKind::electric ? s.u_e : s.u_b;
  const CVector3& f = kind == FieldKind::electric ? s.e_plus : s.b_plus;
  r.add("norm2", amp.norm2(), 1.0, 1e-10, Comparison::relative);
  r.add("focal_density", focal, bound, 1e-8, Comparison::relative);
  // focal field is linearly polarized along the axis
  const double parallel_defect = f.norm() > 0.0 ? (f - axis.cast<cd>() * axis.cast<cd>().dot(f)).norm() / f.norm() : 0.0;
  r.add("off_axis_fraction", parallel_defect, 0.0, 1e-10, Comparison::at_most);
  return r;
}

VerificationReport oracle_agreement_check(const FrequencyBand& band, double mean_photons, const GridPtr& grid,
                                          const std::vector<double>& taus) {
  VerificationReport r;
  r.name = "oracle_agreement";
  note_grid(r, *grid);
  const ModeAmplitude amp = matched_amplitude({FieldKind::electric, band, Vector3::UnitZ(), Vector3::Zero(), 0.0}, grid);
  for (double tau : taus) {
    const CVector3 quad = synthesize_field(amp, mean_photons, Vector3::Zero(), tau).e_plus;
    const CVector3 exact = axial_profile_oracle(band, mean_photons, tau);
    r.add("tau=" + format_number(tau), relative_difference(quad, exact), 0.0, 1e-8, Comparison::at_most);
  }
  return r;
}

std::vector<double> focal_ratios(const std::vector<ModeAmplitude>& amps, double mean_photons) {
  std::vector<double> out;
  if (amps.empty()) return out;
  const QuadratureGrid& grid = amps.front().grid();
  const FieldProbe probe(grid, mean_photons, Vector3::Zero(), 0.0);
  const double bound = ultimate_energy_density_bound(FieldKind::electric, grid.band(), mean_photons).value;
  for (const auto& a : amps) out.push_back(probe.electric(a).squaredNorm() / bound);
  return out;
}

VerificationReport monte_carlo_schwarz(const FrequencyBand& band, double mean_photons, const GridPtr& grid,
                                       int trials, std::uint64_t seed) {
  require(trials >= 1, "trials must be ≥ 1");
  require(mean_photons > 0.0, "Schwarz check needs <N> > 0");
  VerificationReport r;
  r.name = "schwarz_monte_carlo";
  note_grid(r, *grid);
  r.note("seed", std::to_string(seed));
  r.note("trials", std::to_string(trials));
  r.note("rng", GaussianSource::algorithm);

  const FieldProbe probe(*grid, mean_photons, Vector3::Zero(), 0.0);
  const double bound = ultimate_energy_density_bound(FieldKind::electric, band, mean_photons).value;
  r.samples.resize(trials);
  for (int i = 0; i < trials; ++i) {
    const ModeAmplitude a = random_band_amplitude(grid, mix_seed(seed, static_cast<std::uint64_t>(i)));
    r.samples[i] = probe.electric(a).squaredNorm() / bound;
  }
  const ModeAmplitude matched = matched_amplitude({FieldKind::electric, band, Vector3::UnitZ(), Vector3::Zero(), 0.0}, grid);
  const double matched_ratio = probe.electric(matched).squaredNorm() / bound;

  double mean = 0.0;
  for (double v : r.samples) mean += v;
  mean /= trials;
  r.add("max_random_ratio", *std::max_element(r.samples.begin(), r.samples.end()), 1.0, 1e-9, Comparison::at_most);
  r.add("matched_ratio", matched_ratio, 1.0, 1e-8, Comparison::at_least);
  r.add("matched_ratio_upper", matched_ratio, 1.0, 1e-9, Comparison::at_most);
  r.add("mean_random_ratio", mean, 0.0, 0.0, Comparison::info);
  return r;
}

namespace {

constexpr double kRoundoffFloor = 1e-12;

struct Residuals {
  double faraday = 0.0;
  double ampere = 0.0;
  double div_e = 0.0;
  double div_b = 0.0;
  double curl_e = 0.0;
};

Residuals central_difference_residuals(const ModeAmplitude& amp, double n, const Vector3& r0, double t0, double h) {
  const double ht = h;  // h / c, c = 1
  std::array<CVector3, 3> de, db;  // de[j] = dE/dx_j
  for (int j = 0; j < 3; ++j) {
    const Vector3 step = h * Vector3::Unit(j);
    const FieldSample plus = synthesize_field(amp, n, r0 + step, t0);
    const FieldSample minus = synthesize_field(amp, n, r0 - step, t0);
    de[j] = (plus.e_plus - minus.e_plus) / (2.0 * h);
    db[j] = (plus.b_plus - minus.b_plus) / (2.0 * h);
  }
  const FieldSample later = synthesize_field(amp, n, r0, t0 + ht);
  const FieldSample earlier = synthesize_field(amp, n, r0, t0 - ht);
  const CVector3 dt_e = (later.e_plus - earlier.e_plus) / (2.0 * ht);
  const CVector3 dt_b = (later.b_plus - earlier.b_plus) / (2.0 * ht);

  auto curl = [](const std::array<CVector3, 3>& d) {
    return CVector3(d[1][2] - d[2][1], d[2][0] - d[0][2], d[0][1] - d[1][0]);
  };
  auto div = [](const std::array<CVector3, 3>& d) { return d[0][0] + d[1][1] + d[2][2]; };

  const CVector3 curl_e = curl(de);
  const CVector3 curl_b = curl(db);
  Residuals res;
  res.curl_e = curl_e.norm();
  res.faraday = (curl_e + dt_b).norm() / res.curl_e;
  res.ampere = (curl_b - dt_e).norm() / res.curl_e;
  res.div_e = std::abs(div(de)) / res.curl_e;
  res.div_b = std::abs(div(db)) / res.curl_e;
  return res;
}

}  // namespace

VerificationReport maxwell_residual(const ModeAmplitude& amp, double mean_photons, const Vector3& point, double time,
                                    double h) {
  require(h > 0.0 && std::isfinite(h), "finite-difference step must be positive");
  require(point.allFinite() && std::isfinite(time), "evaluation point must be finite");
  require(mean_photons > 0.0, "Maxwell check needs <N> > 0");
  VerificationReport r;
  r.name = "maxwell_residual";
  note_grid(r, amp.grid());
  r.note("point", format_number(point.x()) + "," + format_number(point.y()) + "," + format_number(point.z()));
  r.note("time", format_number(time));
  r.note("h", format_number(h));

  const Residuals coarse = central_difference_residuals(amp, mean_photons, point, time, h);
  const Residuals fine = central_difference_residuals(amp, mean_photons, point, time, h / 2.0);
  require(coarse.curl_e > 0.0, "field has no curl at this point");

  const std::array<std::pair<const char*, std::pair<double, double>>, 4> rows{{
      {"faraday", {coarse.faraday, fine.faraday}},
      {"ampere", {coarse.ampere, fine.ampere}},
      {"div_e", {coarse.div_e, fine.div_e}},
      {"div_b", {coarse.div_b, fine.div_b}},
  }};
  for (const auto& [label, values] : rows) {
    const auto [at_h, at_half] = values;
    r.add(std::string(label), at_h, 0.0, 1e-3, Comparison::at_most);
    if (at_h < kRoundoffFloor) {
      // Vanishes identically here (symmetry); the ratio of two roundoff values carries no order information.
      r.add(std::string(label) + "_order_ratio", at_h / at_half, 4.0, 0.5, Comparison::info);
      r.warnings.push_back(std::string(label) + ": residual at roundoff floor, order check not applicable");
    } else {
      r.add(std::string(label) + "_order_ratio", at_h / at_half, 4.0, 0.5, Comparison::absolute);
      if (at_half < 1e3 * kRoundoffFloor) r.warnings.push_back(std::string(label) + ": step close to the roundoff floor");
    }
  }
  return r;
}

SpectrumAnalysis analyze_focal_spectrum(const FrequencyBand& band, const QuadratureGrid& grid,
                                        const SpectrumSettings& settings) {
  require(!band.degenerate(), "degenerate band: no spectrum to fit");
  require(settings.samples >= 16 && settings.half_span > 0.0, "invalid spectrum settings");
  const double width = band.width();
  const double pi = std::numbers::pi;

  SpectrumAnalysis out;
  // DFT resolution is pi / half_span.
  out.half_span = std::max(settings.half_span, settings.min_band_bins * pi / width);
  // Sample at least four times faster than the band edge demands.
  const double dt_max = pi / (4.0 * band.beta());
  int samples = settings.samples;
  while (2.0 * out.half_span / samples > dt_max) {
    require(samples < (1 << 20), "band too narrow for the spectral analysis series length");
    samples *= 2;
  }
  out.samples = samples;
  const double dt = 2.0 * out.half_span / samples;
  out.band_bins = static_cast<int>(width * out.half_span / pi);
  require(out.band_bins >= 8, "band too narrow: fewer than 8 in-band DFT bins");

  // Enough radial nodes for exp(-i Omega tau) to be integrated across the whole record.
  const double phase_span = 0.5 * width * out.half_span;
  const int needed = static_cast<int>(std::ceil(0.5 * (phase_span + 12.0 * std::cbrt(phase_span)))) + 8;
  out.n_omega = std::max(grid.n_omega(), needed);
  const GridPtr series_grid = build_quadrature(band, out.n_omega, grid.n_theta(), grid.n_phi());
  const ModeAmplitude amp =
      matched_amplitude({FieldKind::electric, band, Vector3::UnitZ(), Vector3::Zero(), 0.0}, series_grid);

  std::vector<double> times(samples);
  for (int j = 0; j < samples; ++j) times[j] = -out.half_span + j * dt;
  const std::vector<CVector3> series = time_series_at_focus(amp, 1.0, Vector3::Zero(), times);

  out.spectrum = hann_spectrum(series, dt);
  out.fit_lo = band.alpha() + 0.2 * width;
  out.fit_hi = band.beta() - 0.2 * width;
  out.fit = fit_log_log(out.spectrum, out.fit_lo, out.fit_hi);
  out.leakage = out_of_band_leakage(out.spectrum, band.alpha(), band.beta(), 0.25 * width);
  return out;
}

VerificationReport spectrum_slope_check(const FrequencyBand& band, const GridPtr& grid,
                                        const SpectrumSettings& settings) {
  const SpectrumAnalysis a = analyze_focal_spectrum(band, *grid, settings);
  VerificationReport r;
  r.name = "spectrum_slope";
  note_grid(r, *grid);
  r.note("series_half_span", format_number(a.half_span));
  r.note("series_samples", std::to_string(a.samples));
  r.note("series_n_omega", std::to_string(a.n_omega));
  r.note("fit_bins", std::to_string(a.fit.points));
  r.add("amplitude_slope", a.fit.slope, 3.0, 0.05, Comparison::absolute);
  r.add("power_slope", 2.0 * a.fit.slope, 6.0, 0.10, Comparison::absolute);
  r.add("out_of_band_leakage", a.leakage, 0.0, 1e-3, Comparison::at_most);
  return r;
}

VerificationReport magnetic_null_check(const FrequencyBand& band, double mean_photons, const GridPtr& grid) {
  require(mean_photons > 0.0, "magnetic null check needs <N> > 0");
  VerificationReport r;
  r.name = "magnetic_null";
  note_grid(r, *grid);
  const double bound = ultimate_energy_density_bound(FieldKind::electric, band, mean_photons).value;
  const Vector3 axis = Vector3::UnitX();

  const ModeAmplitude fe = matched_amplitude({FieldKind::electric, band, axis, Vector3::Zero(), 0.0}, grid);
  const ModeAmplitude fb = matched_amplitude({FieldKind::magnetic, band, axis, Vector3::Zero(), 0.0}, grid);
  r.add("u_b_over_bound_for_electric_state", synthesize_field(fe, mean_photons, Vector3::Zero(), 0.0).u_b / bound,
        0.0, 1e-12, Comparison::at_most);
  r.add("u_e_over_bound_for_magnetic_state", synthesize_field(fb, mean_photons, Vector3::Zero(), 0.0).u_e / bound,
        0.0, 1e-12, Comparison::at_most);

  // (1 + 0.1 cos theta) breaks the inversion symmetry behind the null.
  std::vector<cd> perturbed(fe.values().begin(), fe.values().end());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double f = 1.0 + 0.1 * grid->direction_of(i).cos_theta;
    perturbed[2 * i] *= f;
    perturbed[2 * i + 1] *= f;
  }
  const ModeAmplitude fp = ModeAmplitude(grid, std::move(perturbed)).normalized();
  r.add("u_b_over_bound_for_perturbed_state", synthesize_field(fp, mean_photons, Vector3::Zero(), 0.0).u_b / bound,
        1e-6, 0.0, Comparison::at_least);
  return r;
}

VerificationReport discrete_fock_check(const FrequencyBand& band, const PhotonStatistics& stats,
                                       const GridPtr& grid_small, int n_max, const ModeAmplitude& photon,
                                       const Vector3& axis, const Vector3& point, double time) {
  require(n_max >= 0 && n_max <= 3, "direct N-photon summation supports n_max ≤ 3");
  require(grid_small->band() == band, "grid band differs from the requested band");
  require(grid_small->mode_count() <= 200, "direct N-photon summation supports at most 200 modes");
  require(photon.grid_ptr() == grid_small, "photon amplitude must live on the small grid");
  require(static_cast<int>(stats.coefficients.size()) > n_max, "photon statistics shorter than n_max");

  VerificationReport r;
  r.name = "discrete_fock";
  note_grid(r, *grid_small);
  r.note("modes", std::to_string(grid_small->mode_count()));
  r.note("n_max", std::to_string(n_max));

  const std::vector<cd> psi = photon.normalized().discrete_coordinates();
  const std::size_t modes = psi.size();
  // p . E+ per discrete mode for one photon (<N> = 1 prefactor).
  const FieldProbe probe(*grid_small, 1.0, point, time);
  std::vector<cd> filter(modes);
  for (std::size_t m = 0; m < modes; ++m) filter[m] = axis.cast<cd>().dot(probe.electric_discrete_coefficients()[m]);

  cd overlap = 0.0;
  for (std::size_t m = 0; m < modes; ++m) overlap += filter[m] * psi[m];
  const double single = std::norm(overlap);

  double direct = 0.0;
  double mean_truncated = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    std::size_t tail = 1;
    for (int k = 1; k < n; ++k) tail *= modes;
    const std::size_t total = tail * modes;

    // Symmetrized product amplitude over all orderings of the n photons.
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[k] = k;
    std::vector<std::vector<int>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<cd> phi(total);
    std::vector<std::size_t> idx(n);
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rem = flat;
      for (int k = n - 1; k >= 0; --k) {
        idx[k] = rem % modes;
        rem /= modes;
      }
      cd acc = 0.0;
      for (const auto& p : perms) {
        cd prod = 1.0;
        for (int k = 0; k < n; ++k) prod *= psi[idx[p[k]]];
        acc += prod;
      }
      phi[flat] = acc / static_cast<double>(perms.size());
    }

    double norm = 0.0;
    for (const cd& v : phi) norm += std::norm(v);
    r.add("normalization_n" + std::to_string(n), norm, 1.0, 1e-10, Comparison::absolute);

    if (n >= 2) {
      double asym = 0.0;
      std::vector<std::size_t> swapped(n);
      for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (int k = n - 1; k >= 0; --k) {
          idx[k] = rem % modes;
          rem /= modes;
        }
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) {
            swapped = idx;
            std::swap(swapped[a], swapped[b]);
            std::size_t other = 0;
            for (int k = 0; k < n; ++k) other = other * modes + swapped[k];
            asym = std::max(asym, std::abs(phi[flat] - phi[other]));
          }
        }
      }
      r.add("exchange_asymmetry_n" + std::to_string(n), asym, 0.0, 1e-15, Comparison::at_most);
    }

    // n * sum over companion photons of |sum_m filter_m Phi(m, companions)|^2
    double companions = 0.0;
    for (std::size_t t = 0; t < tail; ++t) {
      cd s = 0.0;
      for (std::size_t m = 0; m < modes; ++m) s += filter[m] * phi[m * tail + t];
      companions += std::norm(s);
    }
    const double per_state = n * companions;
    if (n == 1) r.add("single_photon", per_state, single, 1e-12, Comparison::relative);
    const double weight = stats.coefficients[n] * stats.coefficients[n];
    direct += weight * per_state;
    mean_truncated += weight * n;
  }

  const double factorized = mean_truncated * single;
  r.add("direct_vs_factorized", direct, factorized, 1e-10, Comparison::relative);
  const CVector3 e = synthesize_field(photon.normalized(), mean_truncated, point, time).e_plus;
  r.add("direct_vs_mean_field", direct, std::norm(axis.cast<cd>().dot(e)), 1e-10, Comparison::relative);
  return r;
}

VerificationReport narrowband_consistency_check(const FrequencyBand& band) {
  VerificationReport r;
  r.name = "narrowband_consistency";
  r.note("band", format_number(band.alpha()) + ":" + format_number(band.beta()));
  const double exact = ultimate_energy_density_bound(FieldKind::electric, band, 1.0).value;
  const double centre = 0.5 * (band.alpha() + band.beta());
  const double approx = narrowband_intensity_bound(centre, band.width(), 1.0);
  r.add("exact", exact, 0.0, 0.0, Comparison::info);
  r.add("narrowband", approx, 0.0, 0.0, Comparison::info);
  r.add("exact_over_narrowband", exact / approx, 1.0025, 0.0005, Comparison::absolute);
  return r;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& cfg) {
  const FrequencyBand& band = cfg.band;
  const double n = cfg.mean_photons;
  const GridPtr grid = build_quadrature(band, cfg.orders);

  std::vector<VerificationReport> out;
  out.push_back(saturation_check(band, n, grid, FieldKind::electric));
  out.push_back(saturation_check(band, n, grid, FieldKind::magnetic));
  out.push_back(oracle_agreement_check(band, n, grid));
  out.push_back(monte_carlo_schwarz(band, n, grid, cfg.trials, cfg.seed));

  const double h = default_fd_step(band);
  const ModeAmplitude matched =
      matched_amplitude({FieldKind::electric, band, Vector3::UnitZ(), Vector3::Zero(), 0.0}, grid);
  const ModeAmplitude random = random_band_amplitude(grid, mix_seed(cfg.seed, 0xF1E1D5ull));
  GaussianSource points(mix_seed(cfg.seed, 0x5ACE71ull));
  const double lambda0 = 2.0 * std::numbers::pi;
  for (int i = 0; i < cfg.maxwell_points; ++i) {
    Vector3 p;
    for (int j = 0; j < 3; ++j) p[j] = lambda0 * (2.0 * points.uniform() - 1.0);
    const double t = 10.0 * (2.0 * points.uniform() - 1.0);
    VerificationReport a = maxwell_residual(matched, n, p, t, h);
    a.name = "maxwell_matched_" + std::to_string(i + 1);
    out.push_back(std::move(a));
    VerificationReport b = maxwell_residual(random, n, p, t, h);
    b.name = "maxwell_random_" + std::to_string(i + 1);
    out.push_back(std::move(b));
  }

  out.push_back(spectrum_slope_check(band, grid));
  out.push_back(magnetic_null_check(band, n, grid));

  const GridPtr small = build_quadrature(band, 2, 2, 4);
  const PhotonStatistics stats = coherent_coefficients(n, 3);
  const ModeAmplitude photon = random_band_amplitude(small, mix_seed(cfg.seed, 0xF0C5ull));
  out.push_back(discrete_fock_check(band, stats, small, 3, photon, Vector3(0.6, 0.0, 0.8), Vector3(0.3, -0.2, 0.1), 0.4));
  return out;
}

Histogram ratio_histogram(const std::vector<double>& samples, int bins, double lo, double hi) {
  require(bins >= 1 && hi > lo, "invalid histogram range");
  Histogram h{lo, hi, std::vector<std::size_t>(bins, 0)};
  for (double v : samples) {
    int b = static_cast<int>(std::floor((v - lo) / (hi - lo) * bins));
    b = std::clamp(b, 0, bins - 1);
    ++h.counts[b];
  }
  return h;
}

}  // namespace pulsebound
