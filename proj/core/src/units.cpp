#include "eit/units.hpp"

#include "eit/constants.hpp"
#include "eit/errors.hpp"

namespace eit {

using constants::kElementaryCharge;
using constants::kHbar;

double energy_to_angular_frequency(double energy_mev) {
  return energy_mev * 1e-3 * kElementaryCharge / kHbar;
}

double angular_frequency_to_energy(double omega_rad_s) {
  return omega_rad_s * kHbar / (1e-3 * kElementaryCharge);
}

double ev_to_angular_frequency(double energy_ev) {
  return energy_ev * kElementaryCharge / kHbar;
}

double angular_frequency_to_ev(double omega_rad_s) {
  return omega_rad_s * kHbar / kElementaryCharge;
}

double ev_to_joule(double energy_ev) { return energy_ev * kElementaryCharge; }

double rabi_frequency(double dipole_cm, double field_v_per_m) {
  if (dipole_cm < 0.0) {
    throw DomainError("rabi_frequency: dipole moment must be non-negative");
  }
  return dipole_cm * field_v_per_m / kHbar;
}

}  // namespace eit
