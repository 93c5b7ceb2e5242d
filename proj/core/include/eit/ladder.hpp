#pragma once

#include <complex>

namespace eit {

using Complex = std::complex<double>;

/// Three-level ladder medium b -> a -> c. The probe drives b-a, the control
/// drives c-a, and a lies above c which lies above b.
///
/// Energies are in eV, damping rates in rad/s, density in m^-3. The probe
/// dipole enters every formula only as |d_ab|^2, so that is what is stored.
struct LadderSystem {
  double energy_a = 0.0;
  double energy_b = 0.0;
  double energy_c = 0.0;

  double dipole_ab_sq = 0.0;  // C^2 m^2
  double dipole_ac = 0.0;     // C m, only needed to turn a control field into Omega2

  double population_damping_ab = 0.0;  // Gamma_ab
  double population_damping_ca = 0.0;  // Gamma_ca
  double coherence_damping_ab = 0.0;   // gamma_ab
  double coherence_damping_bc = 0.0;   // gamma_bc
  double coherence_damping_ac = 0.0;   // gamma_ac

  double density = 0.0;

  /// Transition angular frequencies (E_a - E_b)/hbar and (E_a - E_c)/hbar.
  double omega_ab() const;
  double omega_ac() const;

  /// N |d_ab|^2 / (hbar eps0), the rad/s prefactor of the susceptibility.
  double susceptibility_prefactor() const;

  /// Throws DomainError when ordering, sign or density constraints fail.
  /// A zero density is accepted (vacuum reference runs).
  void validate() const;

  /// Builds a ladder from transition frequencies and coherence dampings using
  /// gamma_ij = Gamma_ij / 2: Gamma_ab = 2 gamma_ab, Gamma_ca = 2 gamma_bc and
  /// gamma_ac = Gamma_ca / 2. Level b sits at zero energy.
  static LadderSystem from_transitions(double omega_ab, double omega_ac,
                                       double gamma_ab, double gamma_bc,
                                       double density, double dipole_ab_sq);

  friend bool operator==(const LadderSystem&, const LadderSystem&) = default;
};

/// Probe (1) and control (2) fields. Frequencies in rad/s, wave numbers in
/// 1/m. Rabi frequencies may be complex.
struct FieldDrive {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
  Complex rabi_probe{0.0, 0.0};
  Complex rabi_control{0.0, 0.0};
  double delta1 = 0.0;
  double delta2 = 0.0;

  /// Carrier frequencies fixed by the ladder and the requested detunings:
  /// omega1 = omega_ab - delta1, omega2 = omega_ac - delta2, k = omega/c.
  static FieldDrive from_detunings(const LadderSystem& system, double delta1,
                                   double delta2, Complex rabi_probe,
                                   Complex rabi_control);

  /// Detunings computed from explicit carrier frequencies.
  static FieldDrive from_carriers(const LadderSystem& system, double omega1,
                                  double omega2, Complex rabi_probe,
                                  Complex rabi_control);

  FieldDrive with_control(Complex rabi_control) const;

  friend bool operator==(const FieldDrive&, const FieldDrive&) = default;
};

}  // namespace eit
