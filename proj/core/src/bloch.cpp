#include "eit/bloch.hpp"

#include <array>
#include <cmath>

#include "eit/errors.hpp"

namespace eit {

namespace {

constexpr Complex kI{0.0, 1.0};

using Packed = std::array<double, 9>;

Packed pack(const DensityMatrixState& s) {
  return {s.aa, s.bb, s.cc, s.ab.real(), s.ab.imag(), s.bc.real(),
          s.bc.imag(), s.ac.real(), s.ac.imag()};
}

DensityMatrixState unpack(const Packed& p) {
  return DensityMatrixState{p[0], p[1], p[2], Complex(p[3], p[4]),
                            Complex(p[5], p[6]), Complex(p[7], p[8])};
}

std::vector<double> sample_times(double duration, int samples) {
  if (!(duration > 0.0)) throw DomainError("integration time must be > 0");
  if (samples < 1) throw DomainError("need at least one sample");
  std::vector<double> times(samples + 1);
  for (int i = 0; i <= samples; ++i) times[i] = duration * i / samples;
  times.back() = duration;
  return times;
}

}  // namespace

DensityMatrixState bloch_rhs(const DensityMatrixState& s, const FieldDrive& drive,
                             const LadderSystem& system, BlochOptions options) {
  const Complex o1 = drive.rabi_probe;
  const Complex o2 = drive.rabi_control;
  const Complex ba = std::conj(s.ab);
  const Complex ca = std::conj(s.ac);
  const Complex cb = std::conj(s.bc);
  const double gab = system.population_damping_ab;
  const double gca = system.population_damping_ca;

  // Right-hand sides of i d(sigma)/dt.
  Complex i_aa = -o1 * ba + std::conj(o1) * s.ab - o2 * ca + std::conj(o2) * s.ac;
  Complex i_bb = -std::conj(o1) * s.ab + o1 * ba;
  Complex i_cc = -std::conj(o2) * s.ac + o2 * ca;
  if (options.damping == DampingConvention::Literal) {
    i_aa += -kI * (gab - gca) * s.aa;
    i_bb += kI * gab * s.aa;
    i_cc += -kI * gca * s.aa;
  } else {
    i_aa += -kI * (gab + gca) * s.aa;
    i_bb += kI * gab * s.aa;
    i_cc += kI * gca * s.aa;
  }
  const Complex i_ab =
      Complex(drive.delta1, -system.coherence_damping_ab) * s.ab -
      o1 * (s.bb - s.aa) - o2 * cb;
  const Complex i_bc =
      Complex(drive.delta2 - drive.delta1, -system.coherence_damping_bc) * s.bc +
      o2 * ba - std::conj(o1) * s.ac;
  const Complex ac_term =
      options.ac_term == AcCoherenceTerm::SelfConsistent ? s.ac : ca;
  const Complex i_ac =
      Complex(drive.delta2, -system.coherence_damping_ac) * ac_term -
      o2 * (s.cc - s.aa) - o1 * s.bc;

  // d/dt = -i * (i d/dt); occupations are real by construction.
  return DensityMatrixState{(-kI * i_aa).real(), (-kI * i_bb).real(),
                            (-kI * i_cc).real(), -kI * i_ab,
                            -kI * i_bc,          -kI * i_ac};
}

double Trajectory::max_trace_drift() const {
  double drift = 0.0;
  for (const auto& s : states) drift = std::max(drift, std::fabs(s.trace() - 1.0));
  return drift;
}

Trajectory integrate_bloch(const DensityMatrixState& initial, const FieldDrive& drive,
                           const LadderSystem& system, double duration,
                           double tolerance, int samples, BlochOptions options) {
  Trajectory traj;
  traj.times = sample_times(duration, samples);
  traj.states.reserve(traj.times.size());
  auto rhs = [&](double, const Packed& y, Packed& dydt) {
    dydt = pack(bloch_rhs(unpack(y), drive, system, options));
  };
  auto observe = [&](double, const Packed& y) { traj.states.push_back(unpack(y)); };
  traj.stats = ode::dormand_prince<9>(rhs, pack(initial), 0.0, traj.times,
                                      {tolerance, tolerance * 1e-3}, observe);
  return traj;
}

LinearResponse linearized_rhs(const LinearResponse& s, const FieldDrive& drive,
                              const LadderSystem& system) {
  // i d(ab)/dt = (delta1 - i gamma_ab) ab - Omega1 - Omega2 cb
  // i d(bc)/dt = (delta2 - delta1 - i gamma_bc) bc + Omega2 ba, conjugated
  //   => i d(cb)/dt = (delta1 - delta2 - i gamma_bc) cb - conj(Omega2) ab
  const Complex o2 = drive.rabi_control;
  const Complex i_ab = Complex(drive.delta1, -system.coherence_damping_ab) * s.ab -
                       drive.rabi_probe - o2 * s.cb;
  const Complex i_cb =
      Complex(drive.delta1 - drive.delta2, -system.coherence_damping_bc) * s.cb -
      std::conj(o2) * s.ab;
  return LinearResponse{-kI * i_ab, -kI * i_cb};
}

LinearTrajectory integrate_linearized(const FieldDrive& drive,
                                      const LadderSystem& system, double duration,
                                      double tolerance, int samples) {
  using State = std::array<double, 4>;
  LinearTrajectory traj;
  traj.times = sample_times(duration, samples);
  traj.states.reserve(traj.times.size());
  auto rhs = [&](double, const State& y, State& dydt) {
    const auto d = linearized_rhs({Complex(y[0], y[1]), Complex(y[2], y[3])},
                                  drive, system);
    dydt = {d.ab.real(), d.ab.imag(), d.cb.real(), d.cb.imag()};
  };
  auto observe = [&](double, const State& y) {
    traj.states.push_back({Complex(y[0], y[1]), Complex(y[2], y[3])});
  };
  // The response scales with Omega1, so the absolute tolerance must too.
  const double scale =
      std::max(std::abs(drive.rabi_probe) / std::max(system.coherence_damping_ab, 1.0),
               1e-300);
  traj.stats = ode::dormand_prince<4>(rhs, State{}, 0.0, traj.times,
                                      {tolerance, tolerance * 1e-3 * scale}, observe);
  return traj;
}

LinearResponse steady_state_linearized(const FieldDrive& drive,
                                       const LadderSystem& system,
                                       double probe_offset) {
  // [ d1 - i g_ab      -Omega2          ] [ab]   [Omega1]
  // [ -conj(Omega2)    d1 - d2 - i g_bc ] [cb] = [  0   ]
  const double d1 = drive.delta1 - probe_offset;
  const Complex m11(d1, -system.coherence_damping_ab);
  const Complex m12 = -drive.rabi_control;
  const Complex m21 = -std::conj(drive.rabi_control);
  const Complex m22(d1 - drive.delta2, -system.coherence_damping_bc);
  const Complex det = m11 * m22 - m12 * m21;
  if (det == 0.0) {
    throw NumericalError(
        "linearized steady state is singular: zero coherence damping at an "
        "exact dressed-state resonance (gamma_ab = gamma_bc = 0 or "
        "|Omega2|^2 = (delta1 - i gamma_ab)(delta1 - delta2 - i gamma_bc))");
  }
  const Complex rhs1 = drive.rabi_probe;
  return LinearResponse{rhs1 * m22 / det, -m21 * rhs1 / det};
}

}  // namespace eit
