#include "eit/ladder.hpp"

#include <cmath>

#include "eit/constants.hpp"
#include "eit/errors.hpp"
#include "eit/units.hpp"

namespace eit {

double LadderSystem::omega_ab() const {
  return ev_to_angular_frequency(energy_a - energy_b);
}

double LadderSystem::omega_ac() const {
  return ev_to_angular_frequency(energy_a - energy_c);
}

double LadderSystem::susceptibility_prefactor() const {
  return density * dipole_ab_sq /
         (constants::kHbar * constants::kVacuumPermittivity);
}

void LadderSystem::validate() const {
  if (!(energy_a > energy_c && energy_c > energy_b)) {
    throw DomainError("ladder ordering E_a > E_c > E_b violated");
  }
  const double rates[] = {population_damping_ab, population_damping_ca,
                          coherence_damping_ab, coherence_damping_bc,
                          coherence_damping_ac};
  for (double r : rates) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw DomainError("damping rates must be finite and non-negative");
    }
  }
  if (!(density >= 0.0) || !std::isfinite(density)) {
    throw DomainError("exciton density must be finite and non-negative");
  }
  if (!(dipole_ab_sq >= 0.0)) {
    throw DomainError("|d_ab|^2 must be non-negative");
  }
}

LadderSystem LadderSystem::from_transitions(double omega_ab, double omega_ac,
                                            double gamma_ab, double gamma_bc,
                                            double density,
                                            double dipole_ab_sq) {
  LadderSystem s;
  s.energy_b = 0.0;
  s.energy_a = angular_frequency_to_ev(omega_ab);
  s.energy_c = s.energy_a - angular_frequency_to_ev(omega_ac);
  s.coherence_damping_ab = gamma_ab;
  s.coherence_damping_bc = gamma_bc;
  s.population_damping_ab = 2.0 * gamma_ab;
  s.population_damping_ca = 2.0 * gamma_bc;
  s.coherence_damping_ac = 0.5 * s.population_damping_ca;
  s.density = density;
  s.dipole_ab_sq = dipole_ab_sq;
  return s;
}

FieldDrive FieldDrive::from_detunings(const LadderSystem& system, double delta1,
                                      double delta2, Complex rabi_probe,
                                      Complex rabi_control) {
  FieldDrive d;
  d.delta1 = delta1;
  d.delta2 = delta2;
  d.omega1 = system.omega_ab() - delta1;
  d.omega2 = system.omega_ac() - delta2;
  d.k1 = d.omega1 / constants::kSpeedOfLight;
  d.k2 = d.omega2 / constants::kSpeedOfLight;
  d.rabi_probe = rabi_probe;
  d.rabi_control = rabi_control;
  return d;
}

FieldDrive FieldDrive::from_carriers(const LadderSystem& system, double omega1,
                                     double omega2, Complex rabi_probe,
                                     Complex rabi_control) {
  FieldDrive d;
  d.omega1 = omega1;
  d.omega2 = omega2;
  d.k1 = omega1 / constants::kSpeedOfLight;
  d.k2 = omega2 / constants::kSpeedOfLight;
  d.delta1 = system.omega_ab() - omega1;
  d.delta2 = system.omega_ac() - omega2;
  d.rabi_probe = rabi_probe;
  d.rabi_control = rabi_control;
  return d;
}

FieldDrive FieldDrive::with_control(Complex rabi_control) const {
  FieldDrive d = *this;
  d.rabi_control = rabi_control;
  return d;
}

}  // namespace eit
