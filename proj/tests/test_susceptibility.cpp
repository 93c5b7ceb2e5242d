#include <doctest.h>

#include <cmath>
#include <random>

#include "eit/bloch.hpp"
#include "eit/config.hpp"
#include "eit/constants.hpp"
#include "eit/errors.hpp"
#include "eit/susceptibility.hpp"

using namespace eit;

namespace {

LadderSystem defaults() { return ScenarioConfig{}.system(); }

FieldDrive drive_for(const LadderSystem& s, double omega2, double d1 = 0.0, double d2 = 0.0) {
  return FieldDrive::from_detunings(s, d1, d2, Complex(1e6, 0.0), Complex(omega2, 0.0));
}

// Steady state of the linearized pair (sigma_ab, sigma_cb) solved by Cramer's
// rule, then scaled to chi. Offset probe frequency w shifts delta1 -> delta1 - w.
Complex chi_oracle(double w, const LadderSystem& s, const FieldDrive& d) {
  const Complex i(0.0, 1.0);
  const double d1 = d.delta1 - w;
  const double d2 = d.delta2;
  // 0 = (-i d1 - g_ab) ab + i O1 + i O2 cb
  // 0 = (-i (d1 - d2) - g_bc) cb + i conj(O2) ab
  const Complex a11 = -i * d1 - s.coherence_damping_ab;
  const Complex a12 = i * d.rabi_control;
  const Complex a21 = i * std::conj(d.rabi_control);
  const Complex a22 = -i * (d1 - d2) - s.coherence_damping_bc;
  const Complex b1 = -i * d.rabi_probe;
  const Complex det = a11 * a22 - a12 * a21;
  const Complex ab = b1 * a22 / det;
  const double prefactor = s.density * s.dipole_ab_sq /
                           (constants::kHbar * constants::kVacuumPermittivity);
  return prefactor * ab / d.rabi_probe;
}

}  // namespace

TEST_CASE("chi equals the scaled steady state of the linearized equations") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    LadderSystem s = defaults();
    s.coherence_damping_ab = 1e9 + 1e11 * u(rng);
    s.coherence_damping_bc = 1e8 + 3e10 * u(rng);
    s.density *= 0.1 + 2.0 * u(rng);
    const FieldDrive d = drive_for(s, 1e11 * u(rng), 1e11 * (u(rng) - 0.5),
                                   1e11 * (u(rng) - 0.5));
    const double w = 3e11 * (u(rng) - 0.5);
    const Complex got = chi(w, s, d);
    const Complex want = chi_oracle(w, s, d);
    worst = std::max(worst, std::abs(got - want) / std::abs(want));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("library steady state gives chi = A sigma_ab / Omega1") {
  const LadderSystem s = defaults();
  const FieldDrive d = drive_for(s, 25e9, 3e9, -2e9);
  for (double w : {-4e10, 0.0, 1e9, 5e10}) {
    const LinearResponse r = steady_state_linearized(d, s, w);
    const Complex scaled = s.susceptibility_prefactor() * r.ab / d.rabi_probe;
    CHECK(std::abs(scaled - chi(w, s, d)) < 1e-12 * std::abs(chi(w, s, d)));
  }
}

TEST_CASE("the medium is passive: chi'' >= 0") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const LadderSystem s = defaults();
    const FieldDrive d = drive_for(s, 1e11 * u(rng), 5e10 * (u(rng) - 0.5), 5e10 * (u(rng) - 0.5));
    for (int j = -500; j <= 500; ++j) CHECK(chi(j * 4e8, s, d).imag() >= 0.0);
  }
}

TEST_CASE("analytic derivatives match finite differences of the oracle") {
  const LadderSystem s = defaults();
  for (double o2 : {0.0, 10e9, 21.5e9, 80e9}) {
    const FieldDrive d = drive_for(s, o2, 1e9, 0.0);
    for (double w : {-3e10, 0.0, 7e9}) {
      const double h = 1e6;
      const Complex fd =
          (chi_oracle(w + h, s, d) - chi_oracle(w - h, s, d)) / (2.0 * h);
      CHECK(std::abs(chi_derivative(w, s, d) - fd) < 1e-6 * std::abs(fd) + 1e-30);
      const Complex fd2 = (chi_oracle(w + 1e7, s, d) - 2.0 * chi_oracle(w, s, d) +
                           chi_oracle(w - 1e7, s, d)) / 1e14;
      CHECK(std::abs(chi_second_derivative(w, s, d) - fd2) < 1e-4 * std::abs(fd2));
      const double ng_fd = 1.0 + 0.5 * d.omega1 * fd.real();
      CHECK(group_index(w, s, d) == doctest::Approx(ng_fd).epsilon(1e-6));
      CHECK(group_index_finite_difference(w, s, d, 1e6) ==
            doctest::Approx(group_index(w, s, d)).epsilon(1e-6));
    }
  }
}

TEST_CASE("group velocity includes the phase index") {
  const LadderSystem s = defaults();
  const FieldDrive d = drive_for(s, 21.5e9);
  const double w = 2e9;
  const double expected =
      constants::kSpeedOfLight /
      (1.0 + 0.5 * chi(w, s, d).real() + 0.5 * d.omega1 * chi_derivative(w, s, d).real());
  CHECK(group_velocity(w, s, d) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("Kramers-Kronig: chi' follows from chi''") {
  const LadderSystem s = defaults();
  const FieldDrive d = drive_for(s, 30e9);
  // Principal value with subtraction, on a sinh-stretched grid about x0.
  for (double x0 : {0.0, 2e10, -6e10}) {
    const double f0 = chi(x0, s, d).imag();
    const double scale = 1e8;
    const double umax = std::asinh(1e16 / scale);
    const int n = 400000;
    double sum = 0.0;
    for (int side : {-1, 1}) {
      for (int k = 0; k < n; ++k) {
        const double ua = umax * k / n;
        const double ub = umax * (k + 1) / n;
        const double um = 0.5 * (ua + ub);
        const double dx = scale * std::cosh(um) * (ub - ua);
        const double x = x0 + side * scale * std::sinh(um);
        sum += (chi(x, s, d).imag() - f0) / (x - x0) * dx;
      }
    }
    // The subtracted constant integrates to zero over a symmetric range.
    const double kk = sum / constants::kPi;
    const double direct = chi(x0, s, d).real();
    CHECK(std::fabs(kk - direct) < 0.02 * std::max(std::fabs(direct), 0.05 * chi(0, s, d.with_control(0.0)).imag()));
  }
}

TEST_CASE("without control the absorption is a Lorentzian of FWHM 2 gamma_ab") {
  const LadderSystem s = defaults();
  const FieldDrive d = drive_for(s, 0.0);
  const AbsorptionFwhm f = absorption_fwhm(s, d);
  CHECK(std::fabs(f.width() - 2.0 * s.coherence_damping_ab) <
        1e-3 * 2.0 * s.coherence_damping_ab);
  for (double w : {1e9, 3e10, 1e11}) CHECK(chi(w, s, d).imag() == doctest::Approx(chi(-w, s, d).imag()).epsilon(1e-14));
  CHECK_FALSE(window_metrics(s, d).present);
  CHECK(window_metrics(s, d).width == 0.0);
}

TEST_CASE("no ground-state dephasing means perfect transparency at two-photon resonance") {
  LadderSystem s = defaults();
  s.coherence_damping_bc = 0.0;
  const FieldDrive d = drive_for(s, 20e9, 4e9, 1e9);
  CHECK(chi(two_photon_resonance(d), s, d) == Complex(0.0, 0.0));
}

TEST_CASE("bare resonance without any damping is a pole") {
  LadderSystem s = defaults();
  s.coherence_damping_ab = 0.0;
  CHECK_THROWS_AS(chi(0.0, s, drive_for(s, 0.0)), NumericalError);
}

TEST_CASE("strong control splits the line into a doublet at +-Omega2") {
  const LadderSystem s = defaults();
  for (double mult : {5.0, 8.0, 12.0, 20.0}) {
    const FieldDrive d = drive_for(s, mult * s.coherence_damping_ab);
    const DressedPeakCheck c = dressed_peaks(s, d);
    REQUIRE(c.located_left.has_value());
    REQUIRE(c.located_right.has_value());
    CHECK(std::fabs(*c.located_right - mult * s.coherence_damping_ab) <= c.bound);
    CHECK(std::fabs(*c.located_left + mult * s.coherence_damping_ab) <= c.bound);
    CHECK(c.max_deviation <= c.bound);
  }
  CHECK_THROWS_AS(dressed_peaks(s, drive_for(s, 3e11, 0.0, 1e9)), DomainError);
}

TEST_CASE("window opens, widens and clears with control strength") {
  const LadderSystem s = defaults();
  double last_width = 0.0;
  double last_abs = 1e300;
  for (double o2 = 25e9; o2 <= 200e9; o2 += 5e9) {
    const WindowMetrics m = window_metrics(s, drive_for(s, o2));
    REQUIRE(m.present);
    CHECK(m.width > last_width);
    CHECK(m.center_abs < last_abs);
    CHECK(m.center_abs < 0.5 * m.bare_peak);
    CHECK(m.right_edge - m.left_edge == m.width);
    last_width = m.width;
    last_abs = m.center_abs;
  }
  const WindowMetrics weak = window_metrics(s, drive_for(s, 10e9));
  CHECK(weak.dip);
  CHECK_FALSE(weak.present);
}

TEST_CASE("window edges sit at half the bare peak") {
  const LadderSystem s = defaults();
  const FieldDrive d = drive_for(s, 40e9, 2e9, 2e9);
  const WindowMetrics m = window_metrics(s, d);
  REQUIRE(m.present);
  CHECK(m.center == 0.0);
  CHECK(chi(m.left_edge, s, d).imag() == doctest::Approx(0.5 * m.bare_peak).epsilon(1e-8));
  CHECK(chi(m.right_edge, s, d).imag() == doctest::Approx(0.5 * m.bare_peak).epsilon(1e-8));
}

TEST_CASE("group index at resonance peaks at sqrt(gamma_bc (gamma_ab + 2 gamma_bc))") {
  // At omega = 0, n_g - 1 is proportional to (O^2 - g_bc^2) / (g_ab g_bc + O^2)^2.
  const LadderSystem s = defaults();
  const double gab = s.coherence_damping_ab;
  const double gbc = s.coherence_damping_bc;
  const double best = std::sqrt(gbc * (gab + 2.0 * gbc));
  std::vector<double> grid;
  for (int i = 0; i < 400; ++i) grid.push_back(0.25e9 + i * 0.25e9);
  const ControlSweep sw = sweep_control(s, drive_for(s, 0.0), grid, 3);
  CHECK(sw.refined_argmax == doctest::Approx(best).epsilon(1e-6));
  CHECK(std::fabs(sw.rows[sw.argmax].rabi_control - best) <= 0.25e9);
  const double ng_best = 1.0 + 0.5 * s.omega_ab() * s.susceptibility_prefactor() *
                                   (best * best - gbc * gbc) /
                                   std::pow(gab * gbc + best * best, 2);
  CHECK(sw.refined_max == doctest::Approx(ng_best).epsilon(1e-9));
  // Beyond the optimum center absorption keeps falling.
  for (std::size_t i = sw.argmax + 1; i < sw.rows.size(); ++i) {
    CHECK(sw.rows[i].chi_im_center < sw.rows[i - 1].chi_im_center);
  }
}

TEST_CASE("sweep grid handling") {
  const LadderSystem s = defaults();
  const ControlSweep one = sweep_control(s, drive_for(s, 0.0), {12e9});
  CHECK(one.rows.size() == 1);
  CHECK(one.argmax == 0);
  CHECK_THROWS_AS(sweep_control(s, drive_for(s, 0.0), {3e9, 2e9}), DomainError);
  CHECK_THROWS_AS(sweep_control(s, drive_for(s, 0.0), {}), DomainError);
}

TEST_CASE("parallel evaluation is deterministic") {
  const LadderSystem s = defaults();
  std::vector<double> w;
  for (int i = 0; i <= 300; ++i) w.push_back(-1.5e11 + i * 1e9);
  const auto a = spectrum_map(s, drive_for(s, 0.0), w, {0.0, 10e9, 25e9}, 1);
  const auto b = spectrum_map(s, drive_for(s, 0.0), w, {0.0, 10e9, 25e9}, 4);
  REQUIRE(a.size() == 3);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].chi_re == b[k].chi_re);
    CHECK(a[k].chi_im == b[k].chi_im);
    CHECK(a[k].n_g == b[k].n_g);
    CHECK(std::abs(a[k].drive.rabi_control) == std::vector<double>{0.0, 10e9, 25e9}[k]);
  }
}
