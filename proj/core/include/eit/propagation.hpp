#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "eit/bloch.hpp"
#include "eit/ladder.hpp"

namespace eit {

/// Probe envelope as a function of time (rad/s Rabi frequency).
using Envelope = std::function<Complex(double)>;

/// exp(-(t - center)^2 / (2 duration^2)), scaled by `amplitude`.
Envelope gaussian_pulse(Complex amplitude, double center, double duration);

/// Slab and grid for the co-moving-frame solver. Times are retarded times
/// tau = t - z/c; the tau grid is t_start + k dt for k < t_steps.
struct PropagationParams {
  double kappa1_sq = 0.0;  // N |d_ab|^2 omega1 / (2 hbar eps0), rad^2/s^2
  double length = 0.0;     // m
  int z_steps = 200;
  int t_steps = 2048;
  double t_start = 0.0;
  double dt = 0.0;
  double dz = 0.0;

  /// Fills kappa1_sq from the medium and dz = length / z_steps, then
  /// validates. Throws DomainError when dz > c dt or a size is invalid.
  static PropagationParams from_medium(const LadderSystem& system,
                                       const FieldDrive& drive, double length,
                                       int z_steps, double t_start, double dt,
                                       int t_steps);

  std::vector<double> times() const;
  void validate() const;
};

enum class SourceModel {
  /// First-order probe response; the regime where the steady-state
  /// susceptibility and the analytic envelope apply.
  Linearized,
  /// All six Bloch components driven by the local probe (strong-probe runs).
  FullBloch,
};

struct PropagationOptions {
  SourceModel source = SourceModel::Linearized;
  BlochOptions bloch;
  /// Repeat the run at doubled z and tau resolution and warn when delay or
  /// attenuation move by more than 1%.
  bool check_convergence = false;
};

struct PulseRecord {
  std::vector<double> times;  // retarded time
  std::vector<Complex> envelope_in;
  std::vector<Complex> envelope_out;
  double slab_length = 0.0;
  /// Shift of the intensity centroid in retarded time (0 in vacuum).
  double measured_delay = 0.0;
  /// Lab-frame transit time, measured_delay + L / c.
  double transit_time = 0.0;
  double measured_attenuation = 1.0;  // |peak_out| / |peak_in|
  double measured_phase = 0.0;        // rad
  std::vector<std::string> warnings;

  /// c * transit_time / L.
  double slowdown_factor() const;
};

/// Marches the probe envelope through the slab. At every z step the medium
/// response is advanced along tau and sources the envelope through
/// c dOmega1/dz = i kappa1^2 sigma_ab.
PulseRecord propagate_pulse(const Envelope& input, const PropagationParams& params,
                            const FieldDrive& drive, const LadderSystem& system,
                            const PropagationOptions& options = {});

/// The same, for an input already sampled on params.times().
PulseRecord propagate_pulse(std::span<const Complex> input,
                            const PropagationParams& params, const FieldDrive& drive,
                            const LadderSystem& system,
                            const PropagationOptions& options = {});

/// exp(i omega1 chi'(0) z/2c - omega1 chi''(0) z/2c) * input(t - z/v_g),
/// returned in retarded time on `times`.
std::vector<Complex> analytic_envelope(const Envelope& input,
                                       const std::vector<double>& times, double z,
                                       const FieldDrive& drive,
                                       const LadderSystem& system);

/// Sampled-input variant; the shifted evaluation interpolates linearly on the
/// grid and is zero outside it.
std::vector<Complex> analytic_envelope(std::span<const Complex> input,
                                       const std::vector<double>& times, double z,
                                       const FieldDrive& drive,
                                       const LadderSystem& system);

/// ||a - b||_2 / ||b||_2.
double relative_l2_deviation(std::span<const Complex> a, std::span<const Complex> b);

/// Pulse duration long enough that the slab response is close to its
/// first-order expansion across the pulse bandwidth:
/// max(10 / window width, 50 sqrt(|chi''(0)| omega1 L / 2c)).
double default_pulse_duration(const LadderSystem& system, const FieldDrive& drive,
                              double length);

/// Grid centred on a pulse at tau = 0: [-8T, 8T + 2 excess delay].
PropagationParams default_propagation_grid(const LadderSystem& system,
                                           const FieldDrive& drive, double length,
                                           double duration, int z_steps = 200,
                                           int t_steps = 2048);

}  // namespace eit
