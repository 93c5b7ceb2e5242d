#include "eit/propagation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "eit/constants.hpp"
#include "eit/errors.hpp"
#include "eit/susceptibility.hpp"

namespace eit {

namespace {

using constants::kPi;
using constants::kSpeedOfLight;
constexpr Complex kI{0.0, 1.0};

using Mat4 = std::array<std::array<Complex, 4>, 4>;

Mat4 multiply(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

// Scaling and squaring with a truncated Taylor series.
Mat4 expm(Mat4 a) {
  double norm = 0.0;
  for (int j = 0; j < 4; ++j) {
    double col = 0.0;
    for (int i = 0; i < 4; ++i) col += std::abs(a[i][j]);
    norm = std::max(norm, col);
  }
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const double scale = std::ldexp(1.0, -squarings);
  for (auto& row : a)
    for (auto& v : row) v *= scale;

  Mat4 result{};
  Mat4 term{};
  for (int i = 0; i < 4; ++i) result[i][i] = term[i][i] = 1.0;
  for (int k = 1; k <= 24; ++k) {
    term = multiply(term, a);
    for (auto& row : term)
      for (auto& v : row) v /= static_cast<double>(k);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) result[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s) result = multiply(result, result);
  return result;
}

// Exact one-step map of the linearized response (sigma_ab, sigma_cb) over dt
// for a probe that varies linearly across the step.
struct LinearStepper {
  std::array<std::array<Complex, 2>, 2> decay{};
  std::array<Complex, 2> from_value{};
  std::array<Complex, 2> from_slope{};

  LinearStepper(const FieldDrive& drive, const LadderSystem& system, double dt) {
    Mat4 a{};
    a[0][0] = Complex(-system.coherence_damping_ab, -drive.delta1);
    a[0][1] = kI * drive.rabi_control;
    a[1][0] = kI * std::conj(drive.rabi_control);
    a[1][1] = Complex(-system.coherence_damping_bc, -(drive.delta1 - drive.delta2));
    a[0][2] = kI;      // probe drives sigma_ab
    a[2][3] = 1.0;     // probe value advances with its slope
    for (auto& row : a)
      for (auto& v : row) v *= dt;
    const Mat4 e = expm(a);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) decay[i][j] = e[i][j];
      from_value[i] = e[i][2];
      from_slope[i] = e[i][3];
    }
  }

  // sigma_ab along tau for the probe samples u, starting from rest.
  void response(std::span<const Complex> u, double dt, std::vector<Complex>& out) const {
    out.resize(u.size());
    Complex ab{0.0, 0.0};
    Complex cb{0.0, 0.0};
    if (!u.empty()) out[0] = ab;
    for (std::size_t k = 0; k + 1 < u.size(); ++k) {
      const Complex slope = (u[k + 1] - u[k]) / dt;
      const Complex nab = decay[0][0] * ab + decay[0][1] * cb +
                          from_value[0] * u[k] + from_slope[0] * slope;
      const Complex ncb = decay[1][0] * ab + decay[1][1] * cb +
                          from_value[1] * u[k] + from_slope[1] * slope;
      ab = nab;
      cb = ncb;
      out[k + 1] = ab;
    }
  }
};

// Full Bloch response along tau with fixed-step RK4 substeps.
struct FullStepper {
  FieldDrive drive;
  LadderSystem system;
  BlochOptions options;
  double fixed_rate;

  void response(std::span<const Complex> u, double dt, std::vector<Complex>& out) const {
    out.resize(u.size());
    double peak = 0.0;
    for (const auto& v : u) peak = std::max(peak, std::abs(v));
    const double rate = fixed_rate + 2.0 * peak;
    const int sub = std::max(1, static_cast<int>(std::ceil(rate * dt / 0.2)));
    const double h = dt / sub;
    DensityMatrixState s = DensityMatrixState::ground();
    if (!u.empty()) out[0] = s.ab;
    auto axpy = [](const DensityMatrixState& y, double a, const DensityMatrixState& k) {
      return DensityMatrixState{y.aa + a * k.aa, y.bb + a * k.bb, y.cc + a * k.cc,
                                y.ab + a * k.ab, y.bc + a * k.bc, y.ac + a * k.ac};
    };
    FieldDrive d = drive;
    for (std::size_t k = 0; k + 1 < u.size(); ++k) {
      for (int j = 0; j < sub; ++j) {
        const double f0 = static_cast<double>(j) / sub;
        const double f1 = (j + 0.5) / sub;
        const double f2 = (j + 1.0) / sub;
        auto probe = [&](double f) { return u[k] + f * (u[k + 1] - u[k]); };
        d.rabi_probe = probe(f0);
        const auto k1 = bloch_rhs(s, d, system, options);
        d.rabi_probe = probe(f1);
        const auto k2 = bloch_rhs(axpy(s, 0.5 * h, k1), d, system, options);
        const auto k3 = bloch_rhs(axpy(s, 0.5 * h, k2), d, system, options);
        d.rabi_probe = probe(f2);
        const auto k4 = bloch_rhs(axpy(s, h, k3), d, system, options);
        s = DensityMatrixState{
            s.aa + h / 6 * (k1.aa + 2 * k2.aa + 2 * k3.aa + k4.aa),
            s.bb + h / 6 * (k1.bb + 2 * k2.bb + 2 * k3.bb + k4.bb),
            s.cc + h / 6 * (k1.cc + 2 * k2.cc + 2 * k3.cc + k4.cc),
            s.ab + h / 6 * (k1.ab + 2.0 * k2.ab + 2.0 * k3.ab + k4.ab),
            s.bc + h / 6 * (k1.bc + 2.0 * k2.bc + 2.0 * k3.bc + k4.bc),
            s.ac + h / 6 * (k1.ac + 2.0 * k2.ac + 2.0 * k3.ac + k4.ac)};
      }
      out[k + 1] = s.ab;
    }
  }
};

double intensity_centroid(const std::vector<double>& t, std::span<const Complex> f) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double w = std::norm(f[i]);
    num += w * t[i];
    den += w;
  }
  if (den == 0.0) throw NumericalError("pulse has zero energy; centroid undefined");
  return num / den;
}

std::size_t peak_index(std::span<const Complex> f) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (std::abs(f[i]) > std::abs(f[best])) best = i;
  }
  return best;
}

double wrap_phase(double p) {
  p = std::remainder(p, 2.0 * kPi);
  return p <= -kPi ? p + 2.0 * kPi : p;
}

template <typename Stepper>
std::vector<Complex> march(std::span<const Complex> input, const PropagationParams& p,
                           const Stepper& stepper) {
  std::vector<Complex> u(input.begin(), input.end());
  const std::size_t n = u.size();
  const Complex coupling = kI * p.kappa1_sq / kSpeedOfLight;
  std::vector<Complex> sigma, stage(n), k1(n), k2(n), k3(n), k4(n);
  auto source = [&](const std::vector<Complex>& field, std::vector<Complex>& k) {
    stepper.response(field, p.dt, sigma);
    for (std::size_t i = 0; i < n; ++i) k[i] = coupling * sigma[i];
  };
  const double h = p.dz;
  for (int step = 0; step < p.z_steps; ++step) {
    source(u, k1);
    for (std::size_t i = 0; i < n; ++i) stage[i] = u[i] + 0.5 * h * k1[i];
    source(stage, k2);
    for (std::size_t i = 0; i < n; ++i) stage[i] = u[i] + 0.5 * h * k2[i];
    source(stage, k3);
    for (std::size_t i = 0; i < n; ++i) stage[i] = u[i] + h * k3[i];
    source(stage, k4);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
  }
  return u;
}

PulseRecord run(std::span<const Complex> input, const PropagationParams& params,
                const FieldDrive& drive, const LadderSystem& system,
                const PropagationOptions& options) {
  params.validate();
  if (input.size() != static_cast<std::size_t>(params.t_steps)) {
    throw DomainError("input envelope length does not match t_steps");
  }
  PulseRecord rec;
  rec.times = params.times();
  rec.slab_length = params.length;
  rec.envelope_in.assign(input.begin(), input.end());
  if (options.source == SourceModel::Linearized) {
    rec.envelope_out = march(input, params, LinearStepper(drive, system, params.dt));
  } else {
    const double fixed = std::abs(drive.delta1) + std::abs(drive.delta2) +
                         2.0 * std::abs(drive.rabi_control) +
                         system.coherence_damping_ab + system.coherence_damping_bc +
                         system.coherence_damping_ac + system.population_damping_ab +
                         system.population_damping_ca;
    rec.envelope_out =
        march(input, params, FullStepper{drive, system, options.bloch, fixed});
  }
  rec.measured_delay = intensity_centroid(rec.times, rec.envelope_out) -
                       intensity_centroid(rec.times, rec.envelope_in);
  rec.transit_time = rec.measured_delay + params.length / kSpeedOfLight;
  const std::size_t pin = peak_index(rec.envelope_in);
  const std::size_t pout = peak_index(rec.envelope_out);
  rec.measured_attenuation =
      std::abs(rec.envelope_out[pout]) / std::abs(rec.envelope_in[pin]);
  rec.measured_phase =
      wrap_phase(std::arg(rec.envelope_out[pout]) - std::arg(rec.envelope_in[pin]));
  return rec;
}

void compare_refined(PulseRecord& rec, const PulseRecord& fine) {
  const double delay_change =
      std::fabs(fine.transit_time - rec.transit_time) / std::fabs(fine.transit_time);
  const double att_change = std::fabs(fine.measured_attenuation - rec.measured_attenuation) /
                            fine.measured_attenuation;
  if (delay_change > 0.01) {
    rec.warnings.push_back("grid too coarse: transit time changes by " +
                           std::to_string(100.0 * delay_change) +
                           "% under refinement");
  }
  if (att_change > 0.01) {
    rec.warnings.push_back("grid too coarse: attenuation changes by " +
                           std::to_string(100.0 * att_change) +
                           "% under refinement");
  }
}

PropagationParams refined(const PropagationParams& p) {
  PropagationParams r = p;
  r.z_steps = 2 * p.z_steps;
  r.dz = p.dz / 2.0;
  r.t_steps = 2 * p.t_steps - 1;
  r.dt = p.dt / 2.0;
  return r;
}

std::vector<Complex> sample(const Envelope& f, const std::vector<double>& t) {
  std::vector<Complex> out(t.size());
  std::transform(t.begin(), t.end(), out.begin(), f);
  return out;
}

}  // namespace

Envelope gaussian_pulse(Complex amplitude, double center, double duration) {
  if (!(duration > 0.0)) throw DomainError("pulse duration must be > 0");
  return [=](double t) {
    const double x = (t - center) / duration;
    return amplitude * std::exp(-0.5 * x * x);
  };
}

PropagationParams PropagationParams::from_medium(const LadderSystem& system,
                                                 const FieldDrive& drive,
                                                 double length, int z_steps,
                                                 double t_start, double dt,
                                                 int t_steps) {
  PropagationParams p;
  p.kappa1_sq = 0.5 * system.susceptibility_prefactor() * drive.omega1;
  p.length = length;
  p.z_steps = z_steps;
  p.t_start = t_start;
  p.dt = dt;
  p.t_steps = t_steps;
  p.dz = z_steps > 0 ? length / z_steps : 0.0;
  p.validate();
  return p;
}

std::vector<double> PropagationParams::times() const {
  std::vector<double> t(static_cast<std::size_t>(std::max(t_steps, 0)));
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = t_start + dt * static_cast<double>(i);
  return t;
}

void PropagationParams::validate() const {
  if (!(length >= 0.0)) throw DomainError("slab length must be >= 0");
  if (z_steps < 1 || t_steps < 2) throw DomainError("grid needs z_steps >= 1, t_steps >= 2");
  if (!(dt > 0.0)) throw DomainError("time step must be > 0");
  if (!(kappa1_sq >= 0.0)) throw DomainError("kappa1^2 must be >= 0");
  if (std::fabs(dz * z_steps - length) > 1e-9 * std::max(length, 1e-300)) {
    throw DomainError("dz * z_steps must equal the slab length");
  }
  if (dz > kSpeedOfLight * dt) {
    throw DomainError("grid violates dz <= c dt");
  }
}

double PulseRecord::slowdown_factor() const {
  return kSpeedOfLight * transit_time / slab_length;
}

PulseRecord propagate_pulse(std::span<const Complex> input,
                            const PropagationParams& params, const FieldDrive& drive,
                            const LadderSystem& system,
                            const PropagationOptions& options) {
  PulseRecord rec = run(input, params, drive, system, options);
  if (options.check_convergence) {
    // Interpolate the input onto the refined grid: even samples are the
    // originals, odd ones the midpoints.
    const PropagationParams fine = refined(params);
    std::vector<Complex> fine_input(fine.t_steps);
    for (int i = 0; i < fine.t_steps; ++i) {
      fine_input[i] = i % 2 == 0 ? input[i / 2] : 0.5 * (input[i / 2] + input[i / 2 + 1]);
    }
    compare_refined(rec, run(fine_input, fine, drive, system, options));
  }
  return rec;
}

PulseRecord propagate_pulse(const Envelope& input, const PropagationParams& params,
                            const FieldDrive& drive, const LadderSystem& system,
                            const PropagationOptions& options) {
  params.validate();
  const auto samples = sample(input, params.times());
  PulseRecord rec = run(samples, params, drive, system, options);
  if (options.check_convergence) {
    const PropagationParams fine = refined(params);
    compare_refined(rec, run(sample(input, fine.times()), fine, drive, system, options));
  }
  return rec;
}

namespace {

struct AnalyticFactors {
  Complex gain;
  double shift;  // retarded-time delay z/v_g - z/c
};

AnalyticFactors analytic_factors(double z, const FieldDrive& drive,
                                 const LadderSystem& system) {
  const Complex c0 = chi(0.0, system, drive);
  const double k = drive.omega1 * z / (2.0 * kSpeedOfLight);
  const Complex gain = std::exp(Complex(-k * c0.imag(), k * c0.real()));
  const double shift = z / group_velocity(0.0, system, drive) - z / kSpeedOfLight;
  return {gain, shift};
}

}  // namespace

std::vector<Complex> analytic_envelope(const Envelope& input,
                                       const std::vector<double>& times, double z,
                                       const FieldDrive& drive,
                                       const LadderSystem& system) {
  const auto [gain, shift] = analytic_factors(z, drive, system);
  std::vector<Complex> out(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) out[i] = gain * input(times[i] - shift);
  return out;
}

std::vector<Complex> analytic_envelope(std::span<const Complex> input,
                                       const std::vector<double>& times, double z,
                                       const FieldDrive& drive,
                                       const LadderSystem& system) {
  if (input.size() != times.size() || times.size() < 2) {
    throw DomainError("analytic_envelope: input and time grid differ in length");
  }
  const auto [gain, shift] = analytic_factors(z, drive, system);
  const double t0 = times.front();
  const double dt = times[1] - times[0];
  std::vector<Complex> out(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double pos = (times[i] - shift - t0) / dt;
    if (pos < 0.0 || pos > static_cast<double>(times.size() - 1)) continue;
    const auto j = static_cast<std::size_t>(std::floor(pos));
    const double f = pos - static_cast<double>(j);
    const Complex v = j + 1 < times.size() ? (1.0 - f) * input[j] + f * input[j + 1]
                                           : input[j];
    out[i] = gain * v;
  }
  return out;
}

double relative_l2_deviation(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DomainError("relative_l2_deviation: size mismatch");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  if (den == 0.0) throw NumericalError("relative_l2_deviation: reference is zero");
  return std::sqrt(num / den);
}

double default_pulse_duration(const LadderSystem& system, const FieldDrive& drive,
                              double length) {
  const WindowMetrics w = window_metrics(system, drive);
  const double width = w.present && w.width > 0.0 ? w.width : system.coherence_damping_ab;
  double duration = 10.0 / width;
  const double curvature =
      std::abs(chi_second_derivative(w.center, system, drive)) * drive.omega1 * length /
      (2.0 * kSpeedOfLight);
  duration = std::max(duration, 50.0 * std::sqrt(curvature));
  return duration;
}

PropagationParams default_propagation_grid(const LadderSystem& system,
                                           const FieldDrive& drive, double length,
                                           double duration, int z_steps, int t_steps) {
  const double ng = group_index(0.0, system, drive);
  const double excess = std::max(0.0, (ng - 1.0) * length / kSpeedOfLight);
  // The slab can absorb e^-35 of the peak at the window center, so the
  // truncated Gaussian tails must sit well below that or their broadband
  // edges dominate the output.
  const double t_start = -12.0 * duration;
  const double t_end = 12.0 * duration + 2.0 * excess;
  const double dt = (t_end - t_start) / (t_steps - 1);
  return PropagationParams::from_medium(system, drive, length, z_steps, t_start, dt,
                                        t_steps);
}

}  // namespace eit
