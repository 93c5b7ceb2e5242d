#include <doctest.h>

#include <cmath>
#include <random>

#include "eit/constants.hpp"
#include "eit/errors.hpp"
#include "eit/format.hpp"
#include "eit/units.hpp"

using namespace eit;

TEST_CASE("listed energy and frequency pairs agree under E / hbar") {
  struct Pair {
    double rad_s;
    double mev;
  };
  // Transition frequencies (Trad/s, meV) and damping rates (Grad/s, ueV).
  const Pair pairs[] = {{3266.576e12, 2150.3}, {31.402e12, 20.6714},
                        {45.573e9, 30e-3},     {7.596e9, 5e-3}};
  for (const auto& p : pairs) {
    const double hbar_mev_s = 1.054571817e-34 / 1.602176634e-19 * 1e3;
    const double expected = p.mev / hbar_mev_s;
    CHECK(std::fabs(energy_to_angular_frequency(p.mev) - expected) / expected < 1e-14);
    CHECK(std::fabs(p.rad_s - expected) / expected < 5e-4);
  }
}

TEST_CASE("conversions invert each other") {
  for (double mev : {1e-3, 0.03, 20.6714, 2150.3}) {
    CHECK(angular_frequency_to_energy(energy_to_angular_frequency(mev)) ==
          doctest::Approx(mev).epsilon(1e-14));
    CHECK(angular_frequency_to_ev(ev_to_angular_frequency(mev)) ==
          doctest::Approx(mev).epsilon(1e-14));
  }
  CHECK(ev_to_joule(1.0) == constants::kElementaryCharge);
}

TEST_CASE("rabi frequency is d E / hbar and rejects negative dipoles") {
  CHECK(rabi_frequency(1e-29, 1e5) == doctest::Approx(1e-24 / 1.054571817e-34));
  CHECK_THROWS_AS(rabi_frequency(-1.0, 1.0), DomainError);
}

TEST_CASE("17-digit formatting round-trips exactly") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    const double v = std::ldexp(mant(rng), expo(rng));
    const auto back = parse_double(format_double(v));
    REQUIRE(back.has_value());
    CHECK(*back == v);
  }
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("number parsing is strict") {
  CHECK(parse_double("+2.5e3") == 2500.0);
  CHECK_FALSE(parse_double("").has_value());
  CHECK_FALSE(parse_double("1e").has_value());
  CHECK_FALSE(parse_double("1.0x").has_value());
  CHECK_FALSE(parse_double("nan").has_value());
  CHECK_FALSE(parse_double("inf").has_value());
  CHECK(parse_integer("42") == 42);
  CHECK_FALSE(parse_integer("4.2").has_value());
}
