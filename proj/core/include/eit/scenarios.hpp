#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "eit/config.hpp"

namespace eit {

struct RunOptions {
  std::filesystem::path out_dir = ".";
  OutputFormat format = OutputFormat::Both;
  unsigned threads = 1;
};

/// Files written by a run plus short human-readable notes for the console.
struct RunReport {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> notes;
};

/// One spectrum per entry of spectrum_Omega2: spectrum_<k>.csv / .json.
RunReport run_spectrum(const ScenarioConfig& config, const RunOptions& options);

/// n_g and chi'' at the two-photon resonance across the Omega2 grid: sweep.csv / .json.
RunReport run_sweep(const ScenarioConfig& config, const RunOptions& options);

/// Exciton level table with the 2P and 10S secular roots: levels.csv / .json.
RunReport run_levels(const ScenarioConfig& config, const RunOptions& options);

/// Gaussian probe through the slab at the configured drive: pulse.csv / .json.
RunReport run_propagation(const ScenarioConfig& config, const RunOptions& options);

}  // namespace eit
