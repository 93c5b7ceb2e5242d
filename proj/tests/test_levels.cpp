#include <doctest.h>

#include <cmath>

#include "eit/config.hpp"
#include "eit/errors.hpp"
#include "eit/levels.hpp"

using namespace eit;
using namespace eit::levels;

namespace {

// eta_00 in closed form: the angular average of 1/sqrt(1 - (1 - g^2) x^2).
double eta00_oracle(double g) {
  if (g < 1.0) {
    const double s = std::sqrt(1.0 - g * g);
    return std::asin(s) / s;
  }
  const double s = std::sqrt(g * g - 1.0);
  return std::asinh(s) / s;
}

LevelModelParams params() { return ScenarioConfig::default_level_params(); }

}  // namespace

TEST_CASE("eta_00 matches its closed form") {
  for (double g : {0.1, 0.3, 0.47, 0.8, 0.999, 1.001, 1.5, 3.0, 10.0}) {
    CHECK(eta_lm(0, 0, g) == doctest::Approx(eta00_oracle(g)).epsilon(1e-12));
  }
}

TEST_CASE("eta is one for an isotropic medium") {
  for (int l = 0; l <= 4; ++l) {
    for (int m = -l; m <= l; ++m) CHECK(std::fabs(eta_lm(l, m, 1.0) - 1.0) < 1e-10);
  }
}

TEST_CASE("eta depends on |m| only and grows as gamma shrinks") {
  CHECK(eta_lm(2, 1, 0.5) == eta_lm(2, -1, 0.5));
  CHECK(eta_lm(1, 0, 0.4) > eta_lm(1, 0, 0.6));
  // Above one the m = 0 P state binds less than S.
  CHECK(eta_lm(1, 0, 1.3) < eta_lm(0, 0, 1.3));
  CHECK_THROWS_AS(eta_lm(1, 2, 0.5), DomainError);
  CHECK_THROWS_AS(eta_lm(0, 0, 0.0), DomainError);
}

TEST_CASE("eta_00 decreases monotonically for gamma >= 1") {
  double last = eta_lm(0, 0, 1.0);
  for (double g = 1.05; g <= 5.0; g += 0.05) {
    const double e = eta_lm(0, 0, g);
    CHECK(e < last);
    last = e;
  }
}

TEST_CASE("isotropic energies are hydrogenic") {
  LevelModelParams p = params();
  p.anisotropy = 1.0;
  for (int n = 1; n <= 10; ++n) {
    for (int l = 0; l < n; ++l) {
      CHECK(energy_nlm(n, l, 0, p) ==
            doctest::Approx(-p.rydberg / (n * n)).epsilon(1e-10));
    }
  }
}

TEST_CASE("v010 closed form") {
  CHECK(v010(2) == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(v010(3) == doctest::Approx(-18.0 / std::sqrt(6.0)).epsilon(1e-14));
  // Equivalent form -3 n sqrt(n^2 - 1) / (2 sqrt 3).
  for (int n : {4, 10, 40}) {
    CHECK(v010(n) == doctest::Approx(-3.0 * n * std::sqrt(n * n - 1.0) / (2.0 * std::sqrt(3.0)))
                         .epsilon(1e-13));
  }
  CHECK_THROWS_AS(v010(1), DomainError);
}

TEST_CASE("v010 radial integral agrees with the closed form") {
  for (int n = 2; n <= 12; ++n) {
    CHECK(std::fabs(v010_integral(n) - v010(n)) < 1e-8 * std::fabs(v010(n)));
  }
}

TEST_CASE("secular roots satisfy Vieta and the characteristic equation") {
  const Complex t1(2.1, -0.002);
  const Complex t2(2.05, -0.01);
  for (double v : {0.0, 1e-4, 0.01, 0.3}) {
    const SecularRoots r = solve_secular(t1, t2, v);
    CHECK(std::abs(r.upper + r.lower - (t1 + t2)) < 1e-12 * std::abs(t1 + t2));
    CHECK(std::abs(r.upper * r.lower - (t1 * t2 - v * v)) < 1e-12 * std::abs(t1 * t2));
    for (Complex e : {r.upper, r.lower}) {
      CHECK(std::abs((t1 - e) * (t2 - e) - v * v) < 1e-12 * std::abs(t1 * t2));
    }
    CHECK(r.upper.real() >= r.lower.real());
  }
}

TEST_CASE("secular roots reduce to the thresholds and second-order shifts") {
  const Complex t1(2.1, -0.002);
  const Complex t2(2.05, -0.01);
  SecularRoots r = solve_secular(t1, t2, 0.0);
  CHECK(std::abs(r.upper - t1) < 1e-15 * std::abs(t1));
  CHECK(std::abs(r.lower - t2) < 1e-15 * std::abs(t2));
  const double v = 1e-4;
  r = solve_secular(t1, t2, v);
  const Complex shift = v * v / (t1 - t2);
  CHECK(std::abs(r.upper - (t1 + shift)) < 1e-3 * std::abs(shift));
  CHECK(std::abs(r.lower - (t2 - shift)) < 1e-3 * std::abs(shift));
}

TEST_CASE("default mixed states keep their branch and solve their pair") {
  const LevelModelParams p = params();
  const MixedState two_p = mixed_2p(p);
  const MixedState ten_s = mixed_10s(p);
  CHECK(two_p.state == StateIndex{2, 1, 0});
  CHECK(two_p.partner == StateIndex{2, 0, 0});
  CHECK(ten_s.state == StateIndex{10, 0, 0});
  CHECK(two_p.selected() == two_p.roots.upper);
  CHECK(ten_s.selected() == ten_s.roots.lower);
  for (const auto* m : {&two_p, &ten_s}) {
    const Complex a = threshold(m->state, p);
    const Complex b = threshold(m->partner, p);
    for (Complex e : {m->roots.upper, m->roots.lower}) {
      CHECK(std::abs((a - e) * (b - e) - m->coupling * m->coupling) <
            1e-12 * p.rydberg * p.rydberg);
    }
  }
  // Coupling is v010 F a* in eV.
  CHECK(two_p.coupling == doctest::Approx(v010(2) * p.field * p.bohr_radius)
                              .epsilon(1e-14));
}

TEST_CASE("zero field leaves the thresholds unmixed") {
  LevelModelParams p = params();
  p.field = 0.0;
  for (const MixedState& m : {mixed_10s(p), mixed_2p(p)}) {
    CHECK(std::abs(m.selected() - threshold(m.state, p)) < 1e-15 * p.gap_energy);
    CHECK(std::abs(m.other() - threshold(m.partner, p)) < 1e-15 * p.gap_energy);
  }
}

TEST_CASE("default levels reproduce the ladder transition energies") {
  const LevelModelParams p = params();
  const double e_10s = mixed_10s(p).selected().real();
  const double e_2p = mixed_2p(p).selected().real();
  CHECK(e_10s == doctest::Approx(2.1503).epsilon(1e-5));
  CHECK(e_10s - e_2p == doctest::Approx(20.6714e-3).epsilon(1e-3));
}

TEST_CASE("dipole moment from the oscillator strength formula") {
  const LevelModelParams p = params();
  const double eta11 = eta_lm(1, 1, p.anisotropy);
  const double pi = 3.14159265358979323846;
  const double lt_joule = p.lt_splitting * 1.602176634e-19;
  const double ratio = p.coherence_radius / p.bohr_radius;
  const double expected = 4.0 * 8.8541878128e-12 * p.background_dielectric *
                          std::pow(p.bohr_radius, 3) * lt_joule /
                          (pi * ratio * ratio * std::pow(eta11, 5));
  CHECK(dipole_moment_squared(p, eta11) == doctest::Approx(expected).epsilon(1e-13));
  // The placeholder parameters land near the listed 0.334e-60 C^2 m^2.
  CHECK(dipole_moment_squared(p, eta11) == doctest::Approx(0.334e-60).epsilon(0.01));
}

TEST_CASE("level table rows") {
  const LevelModelParams p = params();
  const auto rows = level_table(p, 4);
  int unmixed = 0;
  for (const auto& r : rows) {
    if (r.branch == "unmixed") {
      ++unmixed;
      CHECK(r.energy.real() == doctest::Approx(energy_nlm(r.state.n, r.state.l, r.state.m, p)));
      CHECK(r.energy.imag() == -p.damping_of(r.state));
    }
  }
  // Sum over n of sum over l of (l + 1) for m = 0..l.
  CHECK(unmixed == 1 + 3 + 6 + 10);
  CHECK(rows.size() == static_cast<std::size_t>(unmixed + 4));
  CHECK(rows.back().branch == "10S:partner");
}

TEST_CASE("parameter validation") {
  LevelModelParams p = params();
  p.rydberg = -1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  CHECK_THROWS_AS(energy_nlm(2, 2, 0, params()), DomainError);
}
