// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "pulsebound/cli.hpp"
#include "pulsebound/format.hpp"
#include "pulsebound/rng.hpp"
#include "pulsebound/verify.hpp"

using namespace pulsebound;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Worst judged metric of a report, for the summary line.
std::string worst(const VerificationReport& r) {
  for (const auto& m : r.metrics)
    if (!m.passed()) return m.name + "=" + format_number(m.computed);
  return "all metrics within tolerance";
}

Outcome bound_values() {
  const FrequencyBand band(0.5, 1.5);
  const double v = ultimate_energy_density_bound(FieldKind::electric, band, 1.0).value;
  Outcome o;
  o.passed = std::abs(v - 0.0211086) <= 1e-6;
  double linearity = 0.0;
  for (double n : {0.0, 0.5, 2.0, 10.0, 1e3, 1e6}) {
    const double vn = ultimate_energy_density_bound(FieldKind::electric, band, n).value;
    linearity = std::max(linearity, std::abs(vn - n * v) / std::max(n * v, 1e-300));
  }
  o.passed = o.passed && linearity <= 1e-12;
  o.detail = "bound=" + format_number(v) + " max linearity defect=" + fmt(linearity);
  return o;
}

Outcome saturation() {
  Outcome o;
  double worst_rel = 0.0;
  for (auto [a, b] : {std::pair{0.5, 1.5}, {0.0, 1.0}, {0.9, 1.1}}) {
    const FrequencyBand band(a, b);
    const GridPtr grid = build_quadrature(band);
    for (auto kind : {FieldKind::electric, FieldKind::magnetic}) {
      const auto t0 = std::chrono::steady_clock::now();
      const VerificationReport r = saturation_check(band, 1.0, grid, kind);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      for (const auto& m : r.metrics)
        if (m.name == "focal_density") worst_rel = std::max(worst_rel, std::abs(m.computed / m.reference - 1.0));
      o.passed = o.passed && r.passed() && secs < 1.0;
    }
  }
  o.detail = "3 bands x {electric, magnetic}, max relative error=" + fmt(worst_rel);
  return o;
}

Outcome schwarz() {
  const FrequencyBand band(0.5, 1.5);
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport r = monte_carlo_schwarz(band, 1.0, build_quadrature(band), 10000, 42);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o;
  o.passed = r.passed() && secs < 60.0;
  double max_ratio = 0.0, matched = 0.0;
  for (const auto& m : r.metrics) {
    if (m.name == "max_random_ratio") max_ratio = m.computed;
    if (m.name == "matched_ratio") matched = m.computed;
  }
  o.detail = "10000 trials, max ratio=" + fmt(max_ratio) + " matched=" + format_number(matched) + " (" + fmt(secs) +
             " s)";
  return o;
}

Outcome maxwell() {
  const FrequencyBand band(0.5, 1.5);
  const GridPtr grid = build_quadrature(band);
  const ModeAmplitude matched = matched_amplitude({FieldKind::electric, band}, grid);
  const ModeAmplitude random = random_band_amplitude(grid, mix_seed(42, 0xF1E1D5ull));
  GaussianSource source(mix_seed(42, 0x5ACE71ull));
  const double lambda0 = 2.0 * std::numbers::pi;
  const double h = default_fd_step(band);

  Outcome o;
  double secs = 0.0;
  int passing = 0, total = 0;
  double max_residual = 0.0, max_residual_fine = 0.0, min_ratio = 1e300, max_ratio = 0.0;
  for (int i = 0; i < 5; ++i) {
    Vector3 p;
    for (int j = 0; j < 3; ++j) p[j] = lambda0 * (2.0 * source.uniform() - 1.0);
    const double t = 10.0 * (2.0 * source.uniform() - 1.0);
    for (const ModeAmplitude* amp : {&matched, &random}) {
      const auto t0 = std::chrono::steady_clock::now();
      const VerificationReport r = maxwell_residual(*amp, 1.0, p, t, h);
      secs += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const VerificationReport fine = maxwell_residual(*amp, 1.0, p, t, h / 2.0);
      ++total;
      if (r.passed()) ++passing;
      o.passed = o.passed && r.passed();
      for (const auto& m : r.metrics) {
        if (m.name.ends_with("_order_ratio")) {
          if (m.comparison != Comparison::info) {
            min_ratio = std::min(min_ratio, m.computed);
            max_ratio = std::max(max_ratio, m.computed);
          }
        } else {
          max_residual = std::max(max_residual, m.computed);
        }
      }
      for (const auto& m : fine.metrics)
        if (!m.name.ends_with("_order_ratio")) max_residual_fine = std::max(max_residual_fine, m.computed);
    }
  }
  o.passed = o.passed && secs < 10.0;
  o.detail = std::to_string(passing) + "/" + std::to_string(total) + " point-states pass; max residual at lambda2/50=" +
             fmt(max_residual) + ", order ratio in [" + fmt(min_ratio) + ", " + fmt(max_ratio) +
             "] (" + fmt(secs) + " s); at lambda2/100 max residual=" + fmt(max_residual_fine) + " (informational)";
  return o;
}

Outcome magnetic_null() {
  const FrequencyBand band(0.5, 1.5);
  const VerificationReport r = magnetic_null_check(band, 1.0, build_quadrature(band));
  Outcome o{r.passed(), ""};
  for (const auto& m : r.metrics) o.detail += m.name + "=" + fmt(m.computed) + " ";
  return o;
}

Outcome spectrum() {
  const FrequencyBand band(0.5, 1.5);
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport r = spectrum_slope_check(band, build_quadrature(band));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o{r.passed() && secs < 10.0, ""};
  for (const auto& m : r.metrics) o.detail += m.name + "=" + format_number(m.computed) + " ";
  o.detail += "(" + fmt(secs) + " s)";
  return o;
}

Outcome narrowband() {
  const VerificationReport r = narrowband_consistency_check(FrequencyBand(0.95, 1.05));
  Outcome o{r.passed(), ""};
  for (const auto& m : r.metrics)
    if (m.name == "exact_over_narrowband") o.detail = "exact/narrowband=" + format_number(m.computed);
  return o;
}

Outcome oracle() {
  const FrequencyBand band(0.5, 1.5);
  const VerificationReport r = oracle_agreement_check(band, 1.0, build_quadrature(band));
  Outcome o{r.passed(), ""};
  for (const auto& m : r.metrics) o.detail += m.name + ":" + fmt(m.computed) + " ";
  return o;
}

Outcome fock() {
  const FrequencyBand band(0.5, 1.5);
  const GridPtr small = build_quadrature(band, 2, 2, 4);
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport r =
      discrete_fock_check(band, coherent_coefficients(1.0, 3), small, 3, random_band_amplitude(small, mix_seed(42, 0xF0C5ull)),
                          Vector3(0.6, 0.0, 0.8), Vector3(0.3, -0.2, 0.1), 0.4);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o{r.passed() && secs < 30.0, std::to_string(small->mode_count()) + " modes, N <= 3; " + worst(r)};
  return o;
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  std::string contents[2];
  int codes[2];
  for (int k = 0; k < 2; ++k) {
    const fs::path file = dir / ("pulsebound_acceptance_verify_" + std::to_string(k) + ".csv");
    std::ostringstream out, err;
    codes[k] = cli::run({"verify", "--seed", "42", "-o", file.string()}, out, err);
    std::ifstream in(file, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    contents[k] = ss.str();
    fs::remove(file);
  }
  Outcome o;
  o.passed = !contents[0].empty() && contents[0] == contents[1] && codes[0] == codes[1];
  o.detail = std::to_string(contents[0].size()) + " bytes per report, " +
             (contents[0] == contents[1] ? "identical" : "different") + ", exit codes " + std::to_string(codes[0]) +
             "/" + std::to_string(codes[1]);
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"bound values", bound_values},
      {"saturation", saturation},
      {"schwarz dominance", schwarz},
      {"maxwell residuals", maxwell},
      {"magnetic null", magnetic_null},
      {"spectrum slope", spectrum},
      {"narrowband consistency", narrowband},
      {"oracle agreement", oracle},
      {"discrete fock", fock},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << index++ << " " << name << ": " << o.detail << std::endl;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
