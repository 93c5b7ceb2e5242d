#include "eit/susceptibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eit/constants.hpp"
#include "eit/errors.hpp"
#include "eit/parallel.hpp"

namespace eit {

namespace {

constexpr Complex kI{0.0, 1.0};

struct Denominators {
  Complex probe;     // omega - delta1 + i gamma_ab
  Complex two_photon;  // omega - delta1 + delta2 + i gamma_bc
  double coupling;   // |Omega2|^2
};

Denominators denominators(double omega, const LadderSystem& s, const FieldDrive& d) {
  return Denominators{
      Complex(omega - d.delta1, s.coherence_damping_ab),
      Complex(omega - d.delta1 + d.delta2, s.coherence_damping_bc),
      std::norm(d.rabi_control)};
}

[[noreturn]] void pole(double omega) {
  throw NumericalError("susceptibility pole at probe offset " +
                       std::to_string(omega) +
                       " rad/s (zero damping at an exact resonance)");
}

double chi_im_at(double omega, const LadderSystem& s, const FieldDrive& d) {
  return chi(omega, s, d).imag();
}

// Maximizes f on [a, b]; f is assumed unimodal there.
template <typename F>
double golden_section_max(F&& f, double a, double b, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < 200 && std::fabs(b - a) > tol; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Root of g on [a, b] where g(a) and g(b) have opposite signs.
template <typename G>
double bisect(G&& g, double a, double b) {
  double ga = g(a);
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b) break;
    const double gm = g(m);
    if ((gm < 0.0) == (ga < 0.0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Walks from `start` in direction `dir` until chi'' reaches `level`, then
// bisects. Returns start + dir * span if the level is never reached.
double crossing(const LadderSystem& s, const FieldDrive& d, double start,
                double dir, double span, double level, int steps) {
  const double h = span / steps;
  double prev = start;
  for (int i = 1; i <= steps; ++i) {
    const double x = start + dir * h * i;
    if (chi_im_at(x, s, d) >= level) {
      return bisect([&](double w) { return chi_im_at(w, s, d) - level; }, prev, x);
    }
    prev = x;
  }
  return start + dir * span;
}

double scan_span(const LadderSystem& s, const FieldDrive& d) {
  return std::max(10.0 * s.coherence_damping_ab, 4.0 * std::abs(d.rabi_control));
}

void check_grid(const std::vector<double>& grid, const char* what) {
  if (grid.empty()) throw DomainError(std::string(what) + " grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw DomainError(std::string(what) + " grid must be strictly increasing");
    }
  }
}

}  // namespace

Complex chi(double omega, const LadderSystem& system, const FieldDrive& drive) {
  const double a = system.susceptibility_prefactor();
  const auto [x, y, omega2_sq] = denominators(omega, system, drive);
  if (y == 0.0) {
    if (omega2_sq > 0.0) return Complex(0.0, 0.0);
    if (x == 0.0) pole(omega);
    return -a / x;
  }
  const Complex denom = x - omega2_sq / y;
  if (denom == 0.0) pole(omega);
  return -a / denom;
}

Complex chi_derivative(double omega, const LadderSystem& system,
                       const FieldDrive& drive) {
  const double a = system.susceptibility_prefactor();
  const auto [x, y, omega2_sq] = denominators(omega, system, drive);
  if (omega2_sq == 0.0) {
    if (x == 0.0) pole(omega);
    return a / (x * x);
  }
  // chi = -a y / P with P = x y - |Omega2|^2.
  const Complex p = x * y - omega2_sq;
  if (p == 0.0) pole(omega);
  return a * (omega2_sq + y * y) / (p * p);
}

Complex chi_second_derivative(double omega, const LadderSystem& system,
                              const FieldDrive& drive) {
  const double a = system.susceptibility_prefactor();
  const auto [x, y, omega2_sq] = denominators(omega, system, drive);
  if (omega2_sq == 0.0) {
    if (x == 0.0) pole(omega);
    return -2.0 * a / (x * x * x);
  }
  const Complex p = x * y - omega2_sq;
  if (p == 0.0) pole(omega);
  return 2.0 * a * (y * p - (omega2_sq + y * y) * (x + y)) / (p * p * p);
}

double group_index(double omega, const LadderSystem& system,
                   const FieldDrive& drive) {
  return 1.0 + 0.5 * drive.omega1 * chi_derivative(omega, system, drive).real();
}

double group_index_finite_difference(double omega, const LadderSystem& system,
                                     const FieldDrive& drive, double step) {
  const double up = chi(omega + step, system, drive).real();
  const double down = chi(omega - step, system, drive).real();
  return 1.0 + 0.5 * drive.omega1 * (up - down) / (2.0 * step);
}

double group_velocity(double omega, const LadderSystem& system,
                      const FieldDrive& drive) {
  const double denom = 1.0 + 0.5 * chi(omega, system, drive).real() +
                       0.5 * drive.omega1 *
                           chi_derivative(omega, system, drive).real();
  if (denom == 0.0) {
    throw NumericalError("group velocity undefined: zero denominator");
  }
  return constants::kSpeedOfLight / denom;
}

double two_photon_resonance(const FieldDrive& drive) {
  return drive.delta1 - drive.delta2;
}

WindowMetrics window_metrics(const LadderSystem& system, const FieldDrive& drive) {
  WindowMetrics m;
  m.center = two_photon_resonance(drive);
  m.center_abs = chi_im_at(m.center, system, drive);
  m.bare_peak = chi_im_at(drive.delta1, system, drive.with_control(0.0));
  m.ng_center = group_index(m.center, system, drive);
  m.slope = chi_derivative(m.center, system, drive).real();
  m.left_edge = m.right_edge = m.center;
  m.dip = std::abs(drive.rabi_control) > 0.0 &&
          chi_second_derivative(m.center, system, drive).imag() > 0.0;

  const double half = 0.5 * m.bare_peak;
  if (std::abs(drive.rabi_control) == 0.0 || m.center_abs >= half) return m;

  const double span = scan_span(system, drive);
  constexpr int kSteps = 20000;
  m.right_edge = crossing(system, drive, m.center, +1.0, span, half, kSteps);
  m.left_edge = crossing(system, drive, m.center, -1.0, span, half, kSteps);
  m.width = m.right_edge - m.left_edge;
  m.present = true;
  return m;
}

std::vector<double> absorption_maxima(const LadderSystem& system,
                                      const FieldDrive& drive, double lo,
                                      double hi, int coarse_points) {
  if (!(hi > lo) || coarse_points < 3) {
    throw DomainError("absorption_maxima: need hi > lo and >= 3 points");
  }
  std::vector<double> xs(coarse_points);
  std::vector<double> fs(coarse_points);
  const double h = (hi - lo) / (coarse_points - 1);
  for (int i = 0; i < coarse_points; ++i) {
    xs[i] = lo + h * i;
    fs[i] = chi_im_at(xs[i], system, drive);
  }
  std::vector<double> maxima;
  const double tol = 1e-13 * std::max(std::fabs(lo), std::fabs(hi)) + 1e-300;
  for (int i = 1; i + 1 < coarse_points; ++i) {
    if (fs[i] > fs[i - 1] && fs[i] >= fs[i + 1]) {
      maxima.push_back(golden_section_max(
          [&](double w) { return chi_im_at(w, system, drive); }, xs[i - 1],
          xs[i + 1], tol));
    }
  }
  return maxima;
}

AbsorptionFwhm absorption_fwhm(const LadderSystem& system, const FieldDrive& drive) {
  const double span = 50.0 * system.coherence_damping_ab +
                      4.0 * std::abs(drive.rabi_control);
  const double center = drive.delta1;
  const auto maxima =
      absorption_maxima(system, drive, center - span, center + span, 20001);
  if (maxima.empty()) throw NumericalError("absorption_fwhm: no peak found");
  AbsorptionFwhm out;
  out.peak_value = -std::numeric_limits<double>::infinity();
  for (double x : maxima) {
    const double v = chi_im_at(x, system, drive);
    if (v > out.peak_value) {
      out.peak_value = v;
      out.peak_position = x;
    }
  }
  // Walk outward looking for the level from above.
  const double half = 0.5 * out.peak_value;
  auto below = [&](double dir) {
    const double h = span / 20000.0;
    double prev = out.peak_position;
    for (int i = 1; i <= 40000; ++i) {
      const double x = out.peak_position + dir * h * i;
      if (chi_im_at(x, system, drive) <= half) {
        return bisect([&](double w) { return chi_im_at(w, system, drive) - half; },
                      prev, x);
      }
      prev = x;
    }
    throw NumericalError("absorption_fwhm: half maximum not reached");
  };
  out.right = below(+1.0);
  out.left = below(-1.0);
  return out;
}

DressedPeakCheck dressed_peaks(const LadderSystem& system, const FieldDrive& drive) {
  if (drive.delta2 != 0.0) {
    throw DomainError("dressed_peaks: the +-Omega2 doublet needs delta2 = 0");
  }
  const double rabi = std::abs(drive.rabi_control);
  const double center = two_photon_resonance(drive);
  DressedPeakCheck check;
  check.predicted_left = center - rabi;
  check.predicted_right = center + rabi;
  const double gamma = system.coherence_damping_ab;
  check.bound = rabi > 0.0 ? gamma * gamma / rabi
                           : std::numeric_limits<double>::infinity();

  const double span = scan_span(system, drive);
  const auto maxima =
      absorption_maxima(system, drive, center - span, center + span, 40001);
  double best_left = -std::numeric_limits<double>::infinity();
  double best_right = -std::numeric_limits<double>::infinity();
  for (double x : maxima) {
    const double v = chi_im_at(x, system, drive);
    if (x <= center && v > best_left) {
      best_left = v;
      check.located_left = x;
    }
    if (x >= center && v > best_right) {
      best_right = v;
      check.located_right = x;
    }
  }
  // A single merged peak sitting just off center counts for both sides.
  if (maxima.size() == 1) {
    check.located_left = check.located_right = maxima.front();
  }
  check.max_deviation = std::numeric_limits<double>::infinity();
  if (check.located_left && check.located_right) {
    check.max_deviation =
        std::max(std::fabs(*check.located_left - check.predicted_left),
                 std::fabs(*check.located_right - check.predicted_right));
  }
  return check;
}

void SpectrumTable::validate() const {
  const std::size_t n = omega.size();
  if (chi_re.size() != n || chi_im.size() != n || n_g.size() != n) {
    throw DomainError("spectrum columns differ in length");
  }
  check_grid(omega, "spectrum omega");
  double max_abs = 0.0;
  for (double v : chi_im) max_abs = std::max(max_abs, std::fabs(v));
  for (double v : chi_im) {
    if (v < -1e-12 * max_abs) {
      throw DomainError("spectrum shows gain (chi'' < 0) in a passive medium");
    }
  }
}

SpectrumTable compute_spectrum(const LadderSystem& system, const FieldDrive& drive,
                               const std::vector<double>& omega_grid) {
  check_grid(omega_grid, "omega");
  SpectrumTable t;
  t.system = system;
  t.drive = drive;
  t.omega = omega_grid;
  t.chi_re.reserve(omega_grid.size());
  t.chi_im.reserve(omega_grid.size());
  t.n_g.reserve(omega_grid.size());
  for (double w : omega_grid) {
    const Complex c = chi(w, system, drive);
    t.chi_re.push_back(c.real());
    t.chi_im.push_back(c.imag());
    t.n_g.push_back(group_index(w, system, drive));
  }
  return t;
}

ControlSweep sweep_control(const LadderSystem& system, const FieldDrive& drive,
                           const std::vector<double>& omega2_grid,
                           unsigned threads) {
  check_grid(omega2_grid, "Omega2");
  ControlSweep sweep;
  sweep.rows.resize(omega2_grid.size());
  const double center = two_photon_resonance(drive);
  parallel_for(omega2_grid.size(), threads, [&](std::size_t i) {
    const FieldDrive d = drive.with_control(omega2_grid[i]);
    sweep.rows[i] = ControlSweepRow{omega2_grid[i], group_index(center, system, d),
                                    chi(center, system, d).imag()};
  });
  const auto best = std::max_element(
      sweep.rows.begin(), sweep.rows.end(),
      [](const auto& a, const auto& b) { return a.ng_center < b.ng_center; });
  sweep.argmax = static_cast<std::size_t>(best - sweep.rows.begin());
  sweep.refined_argmax = best->rabi_control;
  sweep.refined_max = best->ng_center;
  if (omega2_grid.size() >= 3) {
    const std::size_t lo = sweep.argmax == 0 ? 0 : sweep.argmax - 1;
    const std::size_t hi = std::min(sweep.argmax + 1, omega2_grid.size() - 1);
    auto ng = [&](double rabi) {
      return group_index(center, system, drive.with_control(rabi));
    };
    const double x = golden_section_max(
        ng, omega2_grid[lo], omega2_grid[hi],
        1e-12 * std::max(std::fabs(omega2_grid[hi]), 1.0));
    if (ng(x) >= sweep.refined_max) {
      sweep.refined_argmax = x;
      sweep.refined_max = ng(x);
    }
  }
  return sweep;
}

std::vector<SpectrumTable> spectrum_map(const LadderSystem& system,
                                        const FieldDrive& drive,
                                        const std::vector<double>& omega_grid,
                                        const std::vector<double>& omega2_grid,
                                        unsigned threads) {
  check_grid(omega_grid, "omega");
  std::vector<SpectrumTable> out(omega2_grid.size());
  parallel_for(omega2_grid.size(), threads, [&](std::size_t i) {
    out[i] = compute_spectrum(system, drive.with_control(omega2_grid[i]), omega_grid);
  });
  return out;
}

}  // namespace eit
