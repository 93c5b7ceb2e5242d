#include <doctest.h>

#include <cmath>

#include "eit/config.hpp"
#include "eit/constants.hpp"
#include "eit/errors.hpp"
#include "eit/propagation.hpp"
#include "eit/susceptibility.hpp"

using namespace eit;

namespace {

struct Setup {
  LadderSystem system;
  FieldDrive drive;
  double length = 30e-6;
};

Setup make(double density_scale, double omega2 = 21.5e9) {
  ScenarioConfig c;
  c.density *= density_scale;
  c.rabi_control = omega2;
  return {c.system(), c.drive(), c.slab_length};
}

std::size_t leading_edge(std::span<const Complex> f, double fraction) {
  double peak = 0.0;
  for (auto v : f) peak = std::max(peak, std::abs(v));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(f[i]) > fraction * peak) return i;
  }
  return f.size();
}

}  // namespace

TEST_CASE("empty medium passes the pulse unchanged") {
  const Setup s = make(0.0);
  const double duration = 1e-9;
  const auto grid = default_propagation_grid(s.system, s.drive, s.length, duration, 50, 512);
  const auto rec = propagate_pulse(gaussian_pulse(1e6, 0.0, duration), grid, s.drive, s.system);
  CHECK(rec.envelope_out == rec.envelope_in);
  CHECK(rec.measured_delay == 0.0);
  CHECK(rec.measured_attenuation == 1.0);
  CHECK(rec.transit_time == doctest::Approx(s.length / constants::kSpeedOfLight));
  CHECK(rec.slowdown_factor() == doctest::Approx(1.0));
}

TEST_CASE("dilute medium: delay, attenuation and shape follow the envelope solution") {
  const Setup s = make(0.1);
  const double duration = default_pulse_duration(s.system, s.drive, s.length);
  const auto grid = default_propagation_grid(s.system, s.drive, s.length, duration, 100, 1024);
  const auto input = gaussian_pulse(1e6, 0.0, duration);
  PropagationOptions opt;
  opt.check_convergence = true;
  const auto rec = propagate_pulse(input, grid, s.drive, s.system, opt);
  // Oracle from the steady-state response at the window center.
  const double ng = group_index(0.0, s.system, s.drive);
  const Complex c0 = chi(0.0, s.system, s.drive);
  const double vg = constants::kSpeedOfLight / (1.0 + 0.5 * c0.real() + (ng - 1.0));
  const double att = std::exp(-s.drive.omega1 * c0.imag() * s.length / (2.0 * constants::kSpeedOfLight));
  CHECK(rec.transit_time == doctest::Approx(s.length / vg).epsilon(0.01));
  CHECK(rec.measured_attenuation == doctest::Approx(att).epsilon(0.01));
  const auto analytic = analytic_envelope(input, rec.times, s.length, s.drive, s.system);
  CHECK(relative_l2_deviation(rec.envelope_out, analytic) < 0.01);
  CHECK(rec.warnings.empty());
}

TEST_CASE("output never leads the input by more than a grid cell") {
  const Setup s = make(1.0);
  const double duration = 5e-9;  // broadband on purpose
  const auto grid = default_propagation_grid(s.system, s.drive, s.length, duration, 100, 1024);
  const auto rec = propagate_pulse(gaussian_pulse(1.0, 0.0, duration), grid, s.drive, s.system);
  for (double fraction : {1e-3, 1e-2, 0.1, 0.5}) {
    CHECK(leading_edge(rec.envelope_out, fraction) + 1 >= leading_edge(rec.envelope_in, fraction));
  }
}

TEST_CASE("sampled and callable inputs give the same result") {
  const Setup s = make(0.3);
  const double duration = 20e-9;
  const auto grid = default_propagation_grid(s.system, s.drive, s.length, duration, 40, 512);
  const auto pulse = gaussian_pulse(Complex(1e6, 1e5), 0.0, duration);
  std::vector<Complex> samples;
  for (double t : grid.times()) samples.push_back(pulse(t));
  const auto a = propagate_pulse(pulse, grid, s.drive, s.system);
  const auto b = propagate_pulse(samples, grid, s.drive, s.system);
  CHECK(a.envelope_out == b.envelope_out);
  const auto ea = analytic_envelope(pulse, grid.times(), s.length, s.drive, s.system);
  const auto eb = analytic_envelope(samples, grid.times(), s.length, s.drive, s.system);
  CHECK(relative_l2_deviation(eb, ea) < 1e-3);
}

TEST_CASE("full Bloch source agrees with the linearized one for a weak probe") {
  const Setup s = make(0.05);
  const double duration = 20e-9;
  const auto grid = default_propagation_grid(s.system, s.drive, s.length, duration, 20, 256);
  const auto input = gaussian_pulse(1e4, 0.0, duration);
  PropagationOptions full;
  full.source = SourceModel::FullBloch;
  const auto a = propagate_pulse(input, grid, s.drive, s.system);
  const auto b = propagate_pulse(input, grid, s.drive, s.system, full);
  CHECK(relative_l2_deviation(b.envelope_out, a.envelope_out) < 1e-4);
}

TEST_CASE("grid and pulse validation") {
  const Setup s = make(1.0);
  CHECK_THROWS_AS(gaussian_pulse(1.0, 0.0, 0.0), DomainError);
  // dz = 30 um exceeds c dt for dt = 1 fs.
  CHECK_THROWS_AS(PropagationParams::from_medium(s.system, s.drive, s.length, 1, 0.0, 1e-15, 64),
                  DomainError);
  auto grid = default_propagation_grid(s.system, s.drive, s.length, 1e-9, 10, 64);
  std::vector<Complex> wrong(10);
  CHECK_THROWS_AS(propagate_pulse(wrong, grid, s.drive, s.system), DomainError);
}
