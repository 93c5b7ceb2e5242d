#include "eit/scenarios.hpp"

#include <cmath>
#include <system_error>

#include "eit/constants.hpp"
#include "eit/errors.hpp"
#include "eit/format.hpp"
#include "eit/spectrum_io.hpp"
#include "eit/susceptibility.hpp"

namespace eit {

namespace {

bool wants_csv(OutputFormat f) { return f != OutputFormat::Json; }
bool wants_json(OutputFormat f) { return f != OutputFormat::Csv; }

void prepare(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
}

void emit(RunReport& report, const RunOptions& options, const std::string& stem,
          const std::string& csv, const std::string& json) {
  if (wants_csv(options.format)) {
    report.files.push_back(options.out_dir / (stem + ".csv"));
    io::write_file(report.files.back(), csv);
  }
  if (wants_json(options.format)) {
    report.files.push_back(options.out_dir / (stem + ".json"));
    io::write_file(report.files.back(), json);
  }
}

std::string two_digit(std::size_t k) {
  return (k < 10 ? "0" : "") + std::to_string(k);
}

}  // namespace

RunReport run_spectrum(const ScenarioConfig& config, const RunOptions& options) {
  prepare(options.out_dir);
  const auto provenance = eit::provenance(config);
  const LadderSystem system = config.system();
  const FieldDrive drive = config.drive();
  const auto tables =
      spectrum_map(system, drive, config.omega.values(), config.spectrum_controls,
                   options.threads);
  RunReport report;
  for (std::size_t k = 0; k < tables.size(); ++k) {
    const auto window = window_metrics(system, tables[k].drive);
    // Only the CSV or JSON that was asked for gets built.
    const std::string csv =
        wants_csv(options.format) ? io::spectrum_csv(tables[k], provenance) : "";
    const std::string json =
        wants_json(options.format) ? io::spectrum_json(tables[k], window, provenance) : "";
    emit(report, options, "spectrum_" + two_digit(k), csv, json);
    report.notes.push_back(
        "Omega2 = " + format_double(config.spectrum_controls[k]) + " rad/s: " +
        (window.present ? "window width " + format_double(window.width) + " rad/s, n_g " +
                              format_double(window.ng_center)
                        : std::string(window.dip ? "shallow dip, above half depth"
                                                 : "no transparency window")));
  }
  return report;
}

RunReport run_sweep(const ScenarioConfig& config, const RunOptions& options) {
  prepare(options.out_dir);
  const auto provenance = eit::provenance(config);
  const auto sweep =
      sweep_control(config.system(), config.drive(), config.sweep_values(), options.threads);
  RunReport report;
  emit(report, options, "sweep",
       wants_csv(options.format) ? io::sweep_csv(sweep, provenance) : "",
       wants_json(options.format) ? io::sweep_json(sweep, provenance) : "");
  const auto& best = sweep.rows[sweep.argmax];
  report.notes.push_back("argmax Omega2 = " + format_double(best.rabi_control) +
                         " rad/s, n_g = " + format_double(best.ng_center) +
                         " (refined " + format_double(sweep.refined_argmax) + " rad/s)");
  return report;
}

RunReport run_levels(const ScenarioConfig& config, const RunOptions& options) {
  prepare(options.out_dir);
  const auto provenance = eit::provenance(config);
  config.levels.validate();
  const auto rows = levels::level_table(config.levels, config.levels_n_max);
  const std::vector<levels::MixedState> mixed{levels::mixed_2p(config.levels),
                                              levels::mixed_10s(config.levels)};
  const double dipole_sq =
      levels::dipole_moment_squared(config.levels, levels::eta_lm(1, 1, config.levels.anisotropy));
  RunReport report;
  emit(report, options, "levels",
       wants_csv(options.format) ? io::levels_csv(rows, provenance) : "",
       wants_json(options.format) ? io::levels_json(rows, mixed, dipole_sq, provenance) : "");
  report.notes.push_back(std::to_string(rows.size()) + " level rows, |M_10|^2 = " +
                         format_double(dipole_sq) + " C^2 m^2");
  return report;
}

RunReport run_propagation(const ScenarioConfig& config, const RunOptions& options) {
  prepare(options.out_dir);
  const auto provenance = eit::provenance(config);
  const LadderSystem system = config.system();
  const FieldDrive drive = config.drive();
  const double duration = config.pulse_duration
                              ? *config.pulse_duration
                              : default_pulse_duration(system, drive, config.slab_length);
  const auto grid = default_propagation_grid(system, drive, config.slab_length, duration,
                                             config.z_steps, config.t_steps);
  const auto input = gaussian_pulse(Complex(config.rabi_probe, 0.0), 0.0, duration);
  PropagationOptions popts;
  popts.source = config.propagation_source;
  popts.bloch = config.bloch;
  popts.check_convergence = config.convergence_check;
  const PulseRecord record = propagate_pulse(input, grid, drive, system, popts);

  const double center = two_photon_resonance(drive);
  io::PulseSummary summary;
  summary.pulse_duration = duration;
  summary.expected_transit = config.slab_length / group_velocity(center, system, drive);
  summary.expected_attenuation = std::exp(-drive.omega1 * chi(center, system, drive).imag() *
                                          config.slab_length / (2.0 * constants::kSpeedOfLight));
  const auto analytic =
      analytic_envelope(input, record.times, config.slab_length, drive, system);
  summary.analytic_l2_deviation = relative_l2_deviation(record.envelope_out, analytic);

  RunReport report;
  emit(report, options, "pulse",
       wants_csv(options.format) ? io::pulse_csv(record, provenance) : "",
       wants_json(options.format) ? io::pulse_json(record, grid, summary, provenance) : "");
  report.notes.push_back("transit " + format_double(record.transit_time) + " s (L/v_g " +
                         format_double(summary.expected_transit) + " s), slowdown " +
                         format_double(record.slowdown_factor()) + ", attenuation " +
                         format_double(record.measured_attenuation));
  for (const auto& w : record.warnings) report.notes.push_back("warning: " + w);
  return report;
}

}  // namespace eit
