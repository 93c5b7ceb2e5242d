#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eit/bloch.hpp"
#include "eit/ladder.hpp"
#include "eit/levels.hpp"
#include "eit/propagation.hpp"

namespace eit {

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 1;

  /// Evenly spaced values, min..max inclusive. Throws DomainError unless
  /// points >= 1 and min < max (min == max allowed for one point).
  std::vector<double> values() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

enum class OutputFormat { Csv, Json, Both };

/// Everything a run needs. Physical values are held in canonical SI units
/// (frequencies in rad/s, energies in eV, lengths in m, fields in V/m).
///
/// The medium defaults are the Cu2O ladder (10S-2P-valence) parameter set:
/// omega_ab = 3266.576 Trad/s, omega_ac = 31.402 Trad/s,
/// gamma_ab = 45.573 Grad/s, gamma_bc = 7.596 Grad/s, N = 6.2422e19 cm^-3,
/// |d_ab|^2 = 0.334e-60 C^2 m^2, F = 15 V/cm, L = 30 um.
///
/// |d_ab|^2 is given without units in the source data; it is read as
/// C^2 m^2, which is what the susceptibility prefactor needs.
struct ScenarioConfig {
  // medium
  double omega_ab = 3266.576e12;
  double omega_ac = 31.402e12;
  double gamma_ab = 45.573e9;
  double gamma_bc = 7.596e9;
  std::optional<double> gamma_ac;        // default Gamma_ca / 2
  std::optional<double> population_ab;   // default 2 gamma_ab
  std::optional<double> population_ca;   // default 2 gamma_bc
  double density = 6.2422e25;            // m^-3
  double dipole_ab_sq = 0.334e-60;       // C^2 m^2
  double dipole_ac = 0.0;                // C m

  // drive
  double delta1 = 0.0;
  double delta2 = 0.0;
  double rabi_probe = 1e6;
  double rabi_control = 25e9;

  // spectra and sweeps
  GridSpec omega{-150e9, 150e9, 3001};
  std::vector<double> spectrum_controls{0.0, 10e9, 25e9, 50e9};
  GridSpec sweep{0.25e9, 100e9, 400};
  std::optional<std::vector<double>> sweep_controls;  // overrides `sweep`

  // exciton levels
  levels::LevelModelParams levels = default_level_params();
  int levels_n_max = 10;

  // propagation
  double slab_length = 30e-6;
  int z_steps = 200;
  int t_steps = 2048;
  std::optional<double> pulse_duration;  // automatic when empty
  SourceModel propagation_source = SourceModel::Linearized;
  bool convergence_check = true;

  BlochOptions bloch;
  OutputFormat output_format = OutputFormat::Both;

  LadderSystem system() const;
  FieldDrive drive() const;
  std::vector<double> sweep_values() const;

  /// Placeholder Cu2O exciton parameters (gap, Rydberg, Bohr radius,
  /// dielectric constant, LT splitting, coherence radius), chosen so the
  /// level model reproduces omega_ab, omega_ac and |d_ab|^2 above.
  static levels::LevelModelParams default_level_params();

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Parses the line-oriented `key = value[, value...] unit` format. Missing
/// keys keep their defaults. Throws ConfigError with line and column.
ScenarioConfig parse_config(std::string_view text);

/// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

/// The resolved parameter set as (key, "value unit") pairs, every key
/// explicit, for embedding in output files.
std::vector<std::pair<std::string, std::string>> provenance(const ScenarioConfig& config);

}  // namespace eit
