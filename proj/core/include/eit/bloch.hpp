#pragma once

#include <complex>
#include <vector>

#include "eit/ladder.hpp"
#include "eit/ode.hpp"

namespace eit {

/// Slowly varying density-matrix components in the rotating frame.
struct DensityMatrixState {
  double aa = 0.0;
  double bb = 1.0;
  double cc = 0.0;
  Complex ab{0.0, 0.0};
  Complex bc{0.0, 0.0};
  Complex ac{0.0, 0.0};

  double trace() const { return aa + bb + cc; }

  static DensityMatrixState ground() { return DensityMatrixState{}; }

  friend bool operator==(const DensityMatrixState&, const DensityMatrixState&) = default;
};

/// How population damping enters the occupation equations.
enum class DampingConvention {
  /// Transcribed term for term: sigma_aa gains (Gamma_ca - Gamma_ab) sigma_aa,
  /// sigma_bb gains Gamma_ab sigma_aa, sigma_cc loses Gamma_ca sigma_aa. The
  /// trace is conserved, but sigma_cc may go negative.
  Literal,
  /// Conventional decay of a into b (Gamma_ab) and into c (Gamma_ca).
  StandardDecay,
};

/// The printed a-c coherence equation multiplies its detuning term by
/// sigma_ca while the left side is d sigma_ac / dt.
enum class AcCoherenceTerm {
  /// Use sigma_ac, which keeps the equation linear in the coherence.
  SelfConsistent,
  /// Use sigma_ca = conj(sigma_ac) as printed.
  AsPrinted,
};

struct BlochOptions {
  DampingConvention damping = DampingConvention::Literal;
  AcCoherenceTerm ac_term = AcCoherenceTerm::SelfConsistent;

  friend bool operator==(const BlochOptions&, const BlochOptions&) = default;
};

/// Time derivative of the six components.
DensityMatrixState bloch_rhs(const DensityMatrixState& state, const FieldDrive& drive,
                             const LadderSystem& system, BlochOptions options = {});

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrixState> states;
  ode::Stats stats;

  /// Largest |trace - 1| over the samples.
  double max_trace_drift() const;
};

/// Adaptive Dormand-Prince integration of the full equations over [0, T],
/// sampled at `samples` + 1 equally spaced times. `tolerance` is the relative
/// tolerance; the absolute one is tolerance * 1e-3.
Trajectory integrate_bloch(const DensityMatrixState& initial, const FieldDrive& drive,
                           const LadderSystem& system, double duration,
                           double tolerance = 1e-9, int samples = 100,
                           BlochOptions options = {});

/// First-order probe response: sigma_ab and sigma_cb = conj(sigma_bc).
struct LinearResponse {
  Complex ab{0.0, 0.0};
  Complex cb{0.0, 0.0};

  Complex bc() const { return std::conj(cb); }
};

LinearResponse linearized_rhs(const LinearResponse& state, const FieldDrive& drive,
                              const LadderSystem& system);

struct LinearTrajectory {
  std::vector<double> times;
  std::vector<LinearResponse> states;
  ode::Stats stats;
};

/// Integrates the linearized equations from the unexcited medium.
LinearTrajectory integrate_linearized(const FieldDrive& drive,
                                      const LadderSystem& system, double duration,
                                      double tolerance = 1e-9, int samples = 100);

/// Time-independent solution of the linearized equations by Cramer's rule.
/// `probe_offset` shifts the probe frequency, i.e. replaces delta1 by
/// delta1 - probe_offset. Throws NumericalError when the system is singular.
LinearResponse steady_state_linearized(const FieldDrive& drive,
                                       const LadderSystem& system,
                                       double probe_offset = 0.0);

}  // namespace eit
