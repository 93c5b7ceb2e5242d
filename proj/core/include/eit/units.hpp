#pragma once

namespace eit {

// Energies and angular frequencies are related through E = hbar * omega.
// Frequencies are always angular (rad/s) inside the library.

double energy_to_angular_frequency(double energy_mev);
double angular_frequency_to_energy(double omega_rad_s);  // meV

double ev_to_angular_frequency(double energy_ev);
double angular_frequency_to_ev(double omega_rad_s);

double ev_to_joule(double energy_ev);

/// Omega = d * field / hbar. Throws DomainError for negative d.
double rabi_frequency(double dipole_cm, double field_v_per_m);

}  // namespace eit
