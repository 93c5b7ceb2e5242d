#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "eit/levels.hpp"
#include "eit/propagation.hpp"
#include "eit/susceptibility.hpp"

namespace eit::io {

/// Bumped whenever a column or JSON field changes meaning.
inline constexpr int kSchemaVersion = 1;

using Provenance = std::vector<std::pair<std::string, std::string>>;

// CSV files start with `# key = value` comment lines (the provenance block and
// schema_version), then one header row. Numbers use 17 significant digits.
// JSON files hold the same provenance under "parameters" and write numbers as
// decimal strings.

std::string spectrum_csv(const SpectrumTable& table, const Provenance& provenance);
std::string spectrum_json(const SpectrumTable& table, const WindowMetrics& window,
                          const Provenance& provenance);

std::string sweep_csv(const ControlSweep& sweep, const Provenance& provenance);
std::string sweep_json(const ControlSweep& sweep, const Provenance& provenance);

std::string levels_csv(const std::vector<levels::LevelRow>& rows,
                       const Provenance& provenance);
std::string levels_json(const std::vector<levels::LevelRow>& rows,
                        const std::vector<levels::MixedState>& mixed,
                        double dipole_sq, const Provenance& provenance);

/// Extra numbers reported next to a propagated pulse.
struct PulseSummary {
  double pulse_duration = 0.0;
  double expected_transit = 0.0;      // L / v_g
  double expected_attenuation = 1.0;  // exp(-omega1 chi''(0) L / 2c)
  double analytic_l2_deviation = 0.0;
};

std::string pulse_csv(const PulseRecord& record, const Provenance& provenance);
std::string pulse_json(const PulseRecord& record, const PropagationParams& grid,
                       const PulseSummary& summary, const Provenance& provenance);

/// Writes `content` to `path` in binary mode. Throws IoError naming the path.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace eit::io
