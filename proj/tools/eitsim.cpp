// eitsim: spectra, control sweeps, exciton level tables and pulse propagation
// for a ladder-type EIT medium, written as CSV/JSON.
//
// Exit codes: 0 ok, 2 configuration error, 3 numerical failure, 4 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "eit/config.hpp"
#include "eit/errors.hpp"
#include "eit/scenarios.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 2, kNumericalError = 3, kIoError = 4 };

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw eit::IoError("cannot open config '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw eit::IoError("failed reading config '" + path + "'");
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ladder-type EIT simulator for Rydberg excitons"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_dir = ".";
  std::string format;
  unsigned threads = 0;

  auto add_common = [&](CLI::App* sub, bool writes) {
    sub->add_option("--config", config_path, "Configuration file (defaults when omitted)");
    if (!writes) return;
    sub->add_option("--out", out_dir, "Output directory")->capture_default_str();
    sub->add_option("--format", format, "Override output_format")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    sub->add_option("--threads", threads, "Worker threads, 0 = all cores")
        ->capture_default_str();
  };

  auto* spectrum = app.add_subcommand("spectrum", "chi and n_g over the omega grid");
  auto* sweep = app.add_subcommand("sweep", "n_g(0) and chi''(0) against Omega2");
  auto* levels = app.add_subcommand("levels", "exciton level table and mixed states");
  auto* propagate = app.add_subcommand("propagate", "Gaussian probe through the slab");
  auto* validate = app.add_subcommand("validate", "parse and echo the resolved config");
  for (auto* sub : {spectrum, sweep, levels, propagate}) add_common(sub, true);
  add_common(validate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    const eit::ScenarioConfig config =
        eit::parse_config(config_path.empty() ? std::string() : read_text(config_path));

    if (validate->parsed()) {
      for (const auto& [key, value] : eit::provenance(config)) {
        std::cout << key << " = " << value << '\n';
      }
      return kOk;
    }

    eit::RunOptions options;
    options.out_dir = out_dir;
    options.format = config.output_format;
    if (format == "csv") options.format = eit::OutputFormat::Csv;
    if (format == "json") options.format = eit::OutputFormat::Json;
    if (format == "both") options.format = eit::OutputFormat::Both;
    options.threads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());

    eit::RunReport report;
    if (spectrum->parsed()) report = eit::run_spectrum(config, options);
    if (sweep->parsed()) report = eit::run_sweep(config, options);
    if (levels->parsed()) report = eit::run_levels(config, options);
    if (propagate->parsed()) report = eit::run_propagation(config, options);

    for (const auto& note : report.notes) std::cerr << note << '\n';
    for (const auto& file : report.files) std::cout << file.string() << '\n';
    return kOk;
  } catch (const eit::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const eit::DomainError& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kConfigError;
  } catch (const eit::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  } catch (const eit::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIoError;
  }
}
