#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "eit/errors.hpp"

namespace eit::ode {

struct Tolerance {
  double relative = 1e-9;
  double absolute = 1e-12;
};

struct Stats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

/// Dormand-Prince 5(4) with FSAL and elementary step control. The state is a
/// fixed-size array of doubles; `rhs(t, y, dydt)` fills the derivative.
/// `observe(t, y)` is called at every requested output time, which the
/// integrator lands on exactly.
template <std::size_t N, typename Rhs, typename Observe>
Stats dormand_prince(Rhs&& rhs, std::array<double, N> y, double t0,
                     const std::vector<double>& output_times, Tolerance tol,
                     Observe&& observe, double initial_step = 0.0) {
  using State = std::array<double, N>;
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                          e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  Stats stats;
  double t = t0;
  State k1{}, k2{}, k3{}, k4{}, k5{}, k6{}, k7{}, tmp{}, y_new{};
  rhs(t, y, k1);

  const double t_end = output_times.empty() ? t0 : output_times.back();
  double h = initial_step > 0.0 ? initial_step : (t_end - t0) * 1e-6;
  if (h <= 0.0) h = 1e-12;

  std::size_t next_out = 0;
  while (next_out < output_times.size() && output_times[next_out] <= t) {
    observe(output_times[next_out], y);
    ++next_out;
  }

  while (next_out < output_times.size()) {
    const double target = output_times[next_out];
    bool land = false;
    const double proposed = h;
    if (t + h >= target) {
      h = target - t;
      land = true;
    }
    if (h <= 1e-14 * std::max(std::fabs(t), std::fabs(t_end - t0))) {
      throw NumericalError(
          "step size underflow at t = " + std::to_string(t) +
          " s; the system is too stiff for the explicit integrator (reduce "
          "damping * time step or use an implicit scheme)");
    }

    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, tmp, k2);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, tmp, k3);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, tmp, k4);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, tmp, k5);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                           a65 * k5[i]);
    rhs(t + h, tmp, k6);
    for (std::size_t i = 0; i < N; ++i)
      y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                             b6 * k6[i]);
    rhs(t + h, y_new, k7);

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
      const double scale =
          tol.absolute + tol.relative * std::max(std::fabs(y[i]), std::fabs(y_new[i]));
      err = std::max(err, std::fabs(e) / scale);
    }

    if (err <= 1.0) {
      t = land ? target : t + h;
      y = y_new;
      k1 = k7;
      ++stats.accepted;
      while (next_out < output_times.size() && output_times[next_out] <= t) {
        observe(output_times[next_out], y);
        ++next_out;
      }
    } else {
      ++stats.rejected;
    }
    const double factor =
        err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    // A landing step may have been artificially short; resume from the step
    // that was proposed before clipping.
    h = (land && err <= 1.0) ? std::max(proposed, h * factor) : h * factor;
  }
  return stats;
}

}  // namespace eit::ode
