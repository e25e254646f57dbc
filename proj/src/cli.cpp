#include "pulsebound/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "pulsebound/bounds.hpp"
#include "pulsebound/fields.hpp"
#include "pulsebound/format.hpp"
#include "pulsebound/rng.hpp"
#include "pulsebound/verify.hpp"

namespace pulsebound::cli {

namespace {

struct RunConfig {
  double alpha = 0.5;
  double beta = 1.5;
  std::optional<double> lambda0_nm;
  std::optional<double> lambda_min_nm;
  std::optional<double> lambda_max_nm;
  double mean_photons = 1.0;
  std::string kind = "electric";
  std::string state = "matched";
  std::vector<double> axis{0.0, 0.0, 1.0};
  std::vector<double> focus{0.0, 0.0, 0.0};
  double focus_time = 0.0;
  std::vector<double> point{0.0, 0.0, 0.0};
  double time = 0.0;
  int n_omega = 32;
  int n_theta = 32;
  int n_phi = 16;
  std::uint64_t seed = 42;
  int trials = 10000;
  int bins = 50;
  std::vector<double> x{0.0, 0.0, 1.0};
  std::vector<double> y{0.0, 0.0, 1.0};
  std::vector<double> z{0.0, 0.0, 1.0};
  std::vector<double> t{0.0, 0.0, 1.0};
  bool classical = false;
  double half_span = 200.0;
  int samples = 4096;
  std::string output;
};

Vector3 to_vector(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

std::string fmt(double v) { return format_number(v); }

std::string fmt3(const Vector3& v) { return fmt(v.x()) + "," + fmt(v.y()) + "," + fmt(v.z()); }

FrequencyBand make_band(const RunConfig& c) {
  if (c.lambda_min_nm || c.lambda_max_nm) {
    require(c.lambda0_nm.has_value(), "wavelength band edges need --lambda0-nm");
    require(c.lambda_min_nm && c.lambda_max_nm, "give both --lambda-min-nm and --lambda-max-nm");
    require(*c.lambda_min_nm > 0.0 && *c.lambda_max_nm > 0.0, "wavelengths must be positive");
    return {*c.lambda0_nm / *c.lambda_max_nm, *c.lambda0_nm / *c.lambda_min_nm};
  }
  return {c.alpha, c.beta};
}

UnitSystem make_units(const RunConfig& c) {
  return c.lambda0_nm ? UnitSystem::si_from_lambda0_nm(*c.lambda0_nm) : UnitSystem::normalized();
}

FieldKind make_kind(const RunConfig& c) {
  return c.kind == "magnetic" ? FieldKind::magnetic : FieldKind::electric;
}

Vector3 unit_axis(const RunConfig& c) {
  const Vector3 a = to_vector(c.axis);
  require(a.norm() > 0.0 && a.allFinite(), "axis must be a nonzero vector");
  return a.normalized();
}

ScanAxis make_axis(const std::vector<double>& v, const char* name) {
  require(v[2] >= 1.0 && v[2] == std::floor(v[2]), std::string("--") + name + " count must be an integer ≥ 1");
  return {v[0], v[1], static_cast<int>(v[2])};
}

ModeAmplitude make_amplitude(const RunConfig& c, const FrequencyBand& band, const GridPtr& grid) {
  if (c.state == "random") return random_band_amplitude(grid, c.seed);
  return matched_amplitude({make_kind(c), band, unit_axis(c), to_vector(c.focus), c.focus_time}, grid);
}

// Shared preamble for every file the tool writes.
void write_metadata(std::ostream& os, const std::string& command, const RunConfig& c, const FrequencyBand& band,
                    const UnitSystem& units, bool with_grid, bool with_seed) {
  os << "# " << kVersion << "\n";
  os << "# command: " << command << "\n";
  os << "# units: " << unit_label(units.mode);
  if (units.is_si()) os << " (lambda0_nm=" << fmt(*c.lambda0_nm) << ")";
  os << "\n";
  os << "# band: alpha=" << fmt(band.alpha()) << " beta=" << fmt(band.beta()) << "\n";
  os << "# mean_photons: " << fmt(c.mean_photons) << "\n";
  if (with_grid) os << "# grid: " << c.n_omega << "x" << c.n_theta << "x" << c.n_phi << "\n";
  if (with_seed) os << "# seed: " << c.seed << " rng=" << GaussianSource::algorithm << "\n";
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DomainError("cannot open output file " + path);
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& stream() { return *stream_; }
  bool to_file() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

int cmd_bound(const RunConfig& c, std::ostream& out) {
  const FrequencyBand band = make_band(c);
  const UnitSystem units = make_units(c);
  const FieldKind kind = make_kind(c);
  const BoundReport normalized = ultimate_energy_density_bound(kind, band, c.mean_photons);
  const double centre = 0.5 * (band.alpha() + band.beta());

  Sink sink(c.output, out);
  std::ostream& os = sink.stream();
  os << "kind " << kind_label(kind) << "\n";
  os << "alpha " << fmt(band.alpha()) << "\n";
  os << "beta " << fmt(band.beta()) << "\n";
  os << "mean_photons " << fmt(c.mean_photons) << "\n";
  os << "units normalized\n";
  os << "bound " << fmt(normalized.value) << "\n";
  os << "normalization_constant " << fmt(normalization_constant(band)) << "\n";
  os << "narrowband_intensity " << fmt(narrowband_intensity_bound(centre, band.width(), c.mean_photons)) << "\n";
  if (units.is_si()) {
    const BoundReport si = ultimate_energy_density_bound(kind, band, c.mean_photons, units);
    os << "lambda0_nm " << fmt(*c.lambda0_nm) << "\n";
    os << "omega1_rad_per_s " << fmt(band.omega1(units)) << "\n";
    os << "omega2_rad_per_s " << fmt(band.omega2(units)) << "\n";
    os << "lambda1_m " << fmt(band.lambda1(units)) << "\n";
    os << "lambda2_m " << fmt(band.lambda2(units)) << "\n";
    os << "bound_J_per_m3 " << fmt(si.value) << "\n";
    os << "narrowband_intensity_W_per_m2 "
       << fmt(narrowband_intensity_bound(centre * units.omega0, band.delta_omega(units), c.mean_photons, units))
       << "\n";
  }
  return 0;
}

void write_sample(std::ostream& os, const FieldSample& s, const UnitSystem& units, double bound, bool classical) {
  os << "point " << fmt3(s.point) << "\n";
  os << "time " << fmt(s.time) << "\n";
  const char* axes = "xyz";
  for (int j = 0; j < 3; ++j)
    os << "E" << axes[j] << " " << fmt(s.e_plus[j].real()) << " " << fmt(s.e_plus[j].imag()) << "\n";
  for (int j = 0; j < 3; ++j)
    os << "B" << axes[j] << " " << fmt(s.b_plus[j].real()) << " " << fmt(s.b_plus[j].imag()) << "\n";
  os << "Ue " << fmt(s.u_e) << "\n";
  os << "Ub " << fmt(s.u_b) << "\n";
  os << "bound " << fmt(bound) << "\n";
  if (bound > 0.0) {
    os << "Ue_over_bound " << fmt(s.u_e / bound) << "\n";
    os << "Ub_over_bound " << fmt(s.u_b / bound) << "\n";
  }
  if (classical) {
    os << "Ue_classical_instantaneous " << fmt(classical_electric_density(s, units)) << "\n";
    os << "Ub_classical_instantaneous " << fmt(classical_magnetic_density(s, units)) << "\n";
  }
}

int cmd_synthesize(const RunConfig& c, std::ostream& out) {
  const FrequencyBand band = make_band(c);
  const UnitSystem units = make_units(c);
  const GridPtr grid = build_quadrature(band, c.n_omega, c.n_theta, c.n_phi);
  const ModeAmplitude amp = make_amplitude(c, band, grid);
  const FieldSample s = synthesize_field(amp, c.mean_photons, to_vector(c.point) * units.length_scale(),
                                         c.time * units.time_scale(), units);
  const double bound = ultimate_energy_density_bound(FieldKind::electric, band, c.mean_photons, units).value;

  Sink sink(c.output, out);
  std::ostream& os = sink.stream();
  write_metadata(os, "synthesize", c, band, units, true, c.state == "random");
  os << "state " << c.state << (c.state == "matched" ? std::string(" ") + c.kind : std::string()) << "\n";
  write_sample(os, s, units, bound, c.classical);
  return 0;
}

int cmd_scan(const RunConfig& c, std::ostream& out) {
  const FrequencyBand band = make_band(c);
  const UnitSystem units = make_units(c);
  const GridPtr grid = build_quadrature(band, c.n_omega, c.n_theta, c.n_phi);
  const ModeAmplitude amp = make_amplitude(c, band, grid);

  const double ls = units.length_scale();
  const double ts = units.time_scale();
  auto scaled = [](ScanAxis a, double s) {
    a.lo *= s;
    a.hi *= s;
    return a;
  };
  ScanSpec spec;
  spec.x = scaled(make_axis(c.x, "x"), ls);
  spec.y = scaled(make_axis(c.y, "y"), ls);
  spec.z = scaled(make_axis(c.z, "z"), ls);
  spec.t = scaled(make_axis(c.t, "t"), ts);
  spec.origin = to_vector(c.focus) * ls;
  spec.origin_time = c.focus_time * ts;
  const ScanResult result = scan(amp, c.mean_photons, spec, units);

  Sink sink(c.output, out);
  std::ostream& os = sink.stream();
  write_metadata(os, "scan", c, band, units, true, c.state == "random");
  os << "# state: " << c.state << (c.state == "matched" ? std::string(" ") + c.kind : std::string()) << "\n";
  os << "x,y,z,t,Ue,Ub,ReEx,ImEx,ReEy,ImEy,ReEz,ImEz,ReBx,ImBx,ReBy,ImBy,ReBz,ImBz";
  if (c.classical) os << ",Ue_classical,Ub_classical";
  os << "\n";
  for (const FieldSample& s : result.rows) {
    os << fmt(s.point.x()) << "," << fmt(s.point.y()) << "," << fmt(s.point.z()) << "," << fmt(s.time) << ","
       << fmt(s.u_e) << "," << fmt(s.u_b);
    for (int j = 0; j < 3; ++j) os << "," << fmt(s.e_plus[j].real()) << "," << fmt(s.e_plus[j].imag());
    for (int j = 0; j < 3; ++j) os << "," << fmt(s.b_plus[j].real()) << "," << fmt(s.b_plus[j].imag());
    if (c.classical)
      os << "," << fmt(classical_electric_density(s, units)) << "," << fmt(classical_magnetic_density(s, units));
    os << "\n";
  }
  auto summary = [&](const char* label, std::size_t row, double value) {
    const FieldSample& s = result.rows[row];
    os << "# " << label << " row=" << row << " x=" << fmt(s.point.x()) << " y=" << fmt(s.point.y())
       << " z=" << fmt(s.point.z()) << " t=" << fmt(s.time) << " value=" << fmt(value) << "\n";
  };
  summary("peak_Ue", result.peak_u_e, result.rows[result.peak_u_e].u_e);
  summary("peak_Ub", result.peak_u_b, result.rows[result.peak_u_b].u_b);
  if (sink.to_file()) out << "wrote " << result.rows.size() << " rows to " << c.output << "\n";
  return 0;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  const FrequencyBand band = make_band(c);
  const UnitSystem units = make_units(c);
  const GridPtr grid = build_quadrature(band, c.n_omega, c.n_theta, c.n_phi);
  SpectrumSettings settings;
  settings.half_span = c.half_span;
  settings.samples = c.samples;
  const SpectrumAnalysis a = analyze_focal_spectrum(band, *grid, settings);

  Sink sink(c.output, out);
  std::ostream& os = sink.stream();
  write_metadata(os, "spectrum", c, band, units, true, false);
  os << "# series: half_span=" << fmt(a.half_span) << " samples=" << a.samples << " n_omega=" << a.n_omega
     << " window=hann\n";
  os << "omega,amplitude,power\n";
  const double fs = units.is_si() ? units.omega0 : 1.0;
  for (std::size_t k = 0; k < a.spectrum.omega.size(); ++k) {
    const double w = a.spectrum.omega[k];
    if (w < 0.0 || w > 2.0 * band.beta()) continue;
    const double amp = a.spectrum.amplitude[k];
    os << fmt(w * fs) << "," << fmt(amp) << "," << fmt(amp * amp) << "\n";
  }
  os << "# fit_range: " << fmt(a.fit_lo) << ":" << fmt(a.fit_hi) << " bins=" << a.fit.points << "\n";
  os << "# amplitude_slope: " << fmt(a.fit.slope) << "\n";
  os << "# power_slope: " << fmt(2.0 * a.fit.slope) << "\n";
  os << "# out_of_band_leakage: " << fmt(a.leakage) << "\n";
  if (sink.to_file()) {
    out << "amplitude_slope " << fmt(a.fit.slope) << "\n";
    out << "power_slope " << fmt(2.0 * a.fit.slope) << "\n";
  }
  return 0;
}

const char* comparison_label(Comparison c) {
  switch (c) {
    case Comparison::relative: return "rel";
    case Comparison::absolute: return "abs";
    case Comparison::at_most: return "<=";
    case Comparison::at_least: return ">=";
    case Comparison::info: return "info";
  }
  return "?";
}

void write_reports(std::ostream& os, const std::vector<VerificationReport>& reports) {
  os << "check,metric,computed,reference,tolerance,mode,status\n";
  for (const auto& r : reports) {
    for (const auto& m : r.metrics) {
      os << r.name << "," << m.name << "," << fmt(m.computed) << "," << fmt(m.reference) << ","
         << fmt(m.tolerance) << "," << comparison_label(m.comparison) << ","
         << (m.comparison == Comparison::info ? "info" : m.passed() ? "pass" : "FAIL") << "\n";
    }
  }
  os << "#\n";
  std::size_t failed = 0;
  for (const auto& r : reports) {
    os << "# " << (r.passed() ? "PASS " : "FAIL ") << r.name;
    for (const auto& [k, v] : r.metadata) os << " " << k << "=" << v;
    os << "\n";
    for (const auto& w : r.warnings) os << "#   warning: " << w << "\n";
    if (!r.passed()) ++failed;
  }
  os << "# summary: " << reports.size() - failed << "/" << reports.size() << " checks passed\n";
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  SuiteConfig cfg;
  cfg.band = make_band(c);
  cfg.mean_photons = c.mean_photons;
  cfg.orders = {c.n_omega, c.n_theta, c.n_phi};
  cfg.seed = c.seed;
  cfg.trials = c.trials;
  const UnitSystem units = make_units(c);
  const std::vector<VerificationReport> reports = run_suite(cfg);

  Sink sink(c.output, out);
  std::ostream& os = sink.stream();
  write_metadata(os, "verify", c, cfg.band, units, true, true);
  os << "# trials: " << c.trials << "\n";
  write_reports(os, reports);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (sink.to_file()) {
    for (const auto& r : reports) out << (r.passed() ? "PASS " : "FAIL ") << r.name << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_mc(const RunConfig& c, std::ostream& out) {
  const FrequencyBand band = make_band(c);
  const UnitSystem units = make_units(c);
  require(c.bins >= 1, "bins must be ≥ 1");
  const GridPtr grid = build_quadrature(band, c.n_omega, c.n_theta, c.n_phi);
  const VerificationReport r = monte_carlo_schwarz(band, c.mean_photons, grid, c.trials, c.seed);
  const double top = *std::max_element(r.samples.begin(), r.samples.end());
  const Histogram h = ratio_histogram(r.samples, c.bins, 0.0, top > 0.0 ? top : 1.0);

  Sink sink(c.output, out);
  std::ostream& os = sink.stream();
  write_metadata(os, "mc", c, band, units, true, true);
  os << "# trials: " << c.trials << "\n";
  os << "bin_lo,bin_hi,count\n";
  const double width = (h.hi - h.lo) / static_cast<double>(h.counts.size());
  for (std::size_t b = 0; b < h.counts.size(); ++b)
    os << fmt(h.lo + b * width) << "," << fmt(b + 1 == h.counts.size() ? h.hi : h.lo + (b + 1) * width) << ","
       << h.counts[b] << "\n";
  for (const auto& m : r.metrics) os << "# " << m.name << ": " << fmt(m.computed) << "\n";
  os << "# status: " << (r.passed() ? "pass" : "FAIL") << "\n";
  if (sink.to_file()) {
    for (const auto& m : r.metrics) out << m.name << " " << fmt(m.computed) << "\n";
    out << "status " << (r.passed() ? "pass" : "FAIL") << "\n";
  }
  return r.passed() ? 0 : 1;
}

void add_band_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--alpha", c.alpha, "Lower band edge in units of omega0")->capture_default_str();
  sub->add_option("--beta", c.beta, "Upper band edge in units of omega0")->capture_default_str();
  sub->add_option("--lambda0-nm", c.lambda0_nm, "Normalization wavelength in nm; enables SI output");
  sub->add_option("--lambda-min-nm", c.lambda_min_nm, "Shortest wavelength in nm (sets beta; needs --lambda0-nm)");
  sub->add_option("--lambda-max-nm", c.lambda_max_nm, "Longest wavelength in nm (sets alpha; needs --lambda0-nm)");
  sub->add_option("--n-mean", c.mean_photons, "Mean photon number <N>")->capture_default_str();
  sub->add_option("--output,-o", c.output, "Output file (default: stdout)");
}

void add_grid_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--n-omega", c.n_omega, "Gauss-Legendre order in Omega")->capture_default_str();
  sub->add_option("--n-theta", c.n_theta, "Gauss-Legendre order in cos(theta)")->capture_default_str();
  sub->add_option("--n-phi", c.n_phi, "Uniform order in phi")->capture_default_str();
}

void add_state_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--kind", c.kind, "Matched state: electric or magnetic")
      ->check(CLI::IsMember({"electric", "magnetic"}))
      ->capture_default_str();
  sub->add_option("--state", c.state, "Amplitude: matched or random")
      ->check(CLI::IsMember({"matched", "random"}))
      ->capture_default_str();
  sub->add_option("--axis", c.axis, "Field axis at the focus, x,y,z")->delimiter(',')->expected(3);
  sub->add_option("--focus", c.focus, "Focus r0 (normalized lengths), x,y,z")->delimiter(',')->expected(3);
  sub->add_option("--t0", c.focus_time, "Focus time t0 (normalized)")->capture_default_str();
  sub->add_option("--seed", c.seed, "Seed for --state random")->capture_default_str();
  sub->add_flag("--classical", c.classical, "Also report instantaneous classical densities");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ultimate electric and magnetic energy densities of bandlimited pulses", "pulsebound"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kVersion);
  RunConfig c;

  auto* bound = app.add_subcommand("bound", "Closed-form energy-density bounds");
  add_band_options(bound, c);
  bound->add_option("--kind", c.kind, "electric or magnetic")
      ->check(CLI::IsMember({"electric", "magnetic"}))
      ->capture_default_str();

  auto* synth = app.add_subcommand("synthesize", "Fields and energy densities at one spacetime point");
  add_band_options(synth, c);
  add_grid_options(synth, c);
  add_state_options(synth, c);
  synth->add_option("--point", c.point, "Evaluation point (normalized lengths), x,y,z")->delimiter(',')->expected(3);
  synth->add_option("--time", c.time, "Evaluation time (normalized)")->capture_default_str();

  auto* scan_cmd = app.add_subcommand("scan", "CSV field map over a spacetime grid");
  add_band_options(scan_cmd, c);
  add_grid_options(scan_cmd, c);
  add_state_options(scan_cmd, c);
  for (auto [name, target] : {std::pair{"--x", &c.x}, std::pair{"--y", &c.y}, std::pair{"--z", &c.z}, std::pair{"--t", &c.t}}) {
    scan_cmd->add_option(name, *target, "Offset range from the focus: lo,hi,count (use --x=-1,1,11)")
        ->delimiter(',')
        ->expected(3);
  }

  auto* spectrum = app.add_subcommand("spectrum", "Focal spectrum of the matched electric state");
  add_band_options(spectrum, c);
  add_grid_options(spectrum, c);
  spectrum->add_option("--half-span", c.half_span, "Series covers [-T, T) around the focus time")->capture_default_str();
  spectrum->add_option("--samples", c.samples, "Series length")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run every verification check; exit 0 iff all pass");
  add_band_options(verify, c);
  add_grid_options(verify, c);
  verify->add_option("--seed", c.seed, "Seed for random amplitudes and sample points")->capture_default_str();
  verify->add_option("--trials", c.trials, "Monte Carlo trials")->capture_default_str();

  auto* mc = app.add_subcommand("mc", "Monte Carlo Schwarz dominance; writes a ratio histogram");
  add_band_options(mc, c);
  add_grid_options(mc, c);
  mc->add_option("--seed", c.seed, "Seed")->capture_default_str();
  mc->add_option("--trials", c.trials, "Number of random amplitudes")->capture_default_str();
  mc->add_option("--bins", c.bins, "Histogram bins")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*bound) return cmd_bound(c, out);
    if (*synth) return cmd_synthesize(c, out);
    if (*scan_cmd) return cmd_scan(c, out);
    if (*spectrum) return cmd_spectrum(c, out);
    if (*verify) return cmd_verify(c, out);
    if (*mc) return cmd_mc(c, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace pulsebound::cli
