#pragma once

#include <complex>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace eit::levels {

using Complex = std::complex<double>;

/// Hydrogen-like quantum numbers of an exciton state.
struct StateIndex {
  int n = 1;
  int l = 0;
  int m = 0;

  friend auto operator<=>(const StateIndex&, const StateIndex&) = default;
};

/// Material and field inputs for the anisotropic exciton model. Energies in
/// eV, lengths in m, field in V/m. Only the mass ratio mu_par/mu_z enters the
/// formulas, so the individual masses are not stored.
struct LevelModelParams {
  double gap_energy = 0.0;
  double rydberg = 0.0;
  double bohr_radius = 0.0;
  double anisotropy = 1.0;
  double background_dielectric = 1.0;
  double lt_splitting = 0.0;
  double coherence_radius = 0.0;
  double field = 0.0;
  std::map<StateIndex, double> damping;  // Gamma per state, eV

  double damping_of(const StateIndex& s) const;
  void validate() const;

  friend bool operator==(const LevelModelParams&, const LevelModelParams&) = default;
};

/// Angular average of |Y_lm|^2 / sqrt(sin^2 theta + gamma^2 cos^2 theta).
double eta_lm(int l, int m, double anisotropy);

/// -eta_lm^2 / n^2 * R*, relative to the gap.
double energy_nlm(int n, int l, int m, const LevelModelParams& params);

/// Stark coupling <n00|z|n10> in units of e F a*, closed binomial form.
double v010(int n);

/// The same matrix element from its Laguerre-product integral, evaluated by
/// Gauss-Laguerre quadrature.
double v010_integral(int n, int quadrature_order = 48);

struct SecularRoots {
  Complex upper;  // larger real part (ties: larger imaginary part)
  Complex lower;
};

/// Roots E of (T1 - E)(T2 - E) - V^2 = 0, damping folded into the complex
/// thresholds T1, T2.
SecularRoots solve_secular(Complex threshold_first, Complex threshold_second,
                           double coupling);

enum class Branch { Upper, Lower };

/// A field-mixed state: the root chosen for it and the one left over.
struct MixedState {
  std::string label;
  StateIndex state;    // the state the selected root is assigned to
  StateIndex partner;  // the state it is mixed with
  Branch branch = Branch::Upper;
  SecularRoots roots;
  double coupling = 0.0;  // eV

  Complex selected() const { return branch == Branch::Upper ? roots.upper : roots.lower; }
  Complex other() const { return branch == Branch::Upper ? roots.lower : roots.upper; }
};

/// Complex threshold E_g + E_nlm - i Gamma_nlm, in eV.
Complex threshold(const StateIndex& s, const LevelModelParams& params);

/// The n00 / n10 pair mixed by the field, keeping the root on `branch`.
/// Energies are absolute (they include the gap).
MixedState mix_pair(int n, Branch branch, const std::string& label,
                    const LevelModelParams& params);

/// The 2Pz state (larger root of the 2S/2P problem).
MixedState mixed_2p(const LevelModelParams& params);
/// The 10S state (smaller root of the 10S/10P problem).
MixedState mixed_10s(const LevelModelParams& params);

/// 4 eps0 eps_b a*^3 Delta_LT / (pi (r0/a*)^2 eta_11^5) in C^2 m^2.
double dipole_moment_squared(const LevelModelParams& params, double eta_11);

struct LevelRow {
  StateIndex state;
  double eta = 0.0;
  Complex energy;  // relative to the gap, eV
  std::string branch;
};

/// Unmixed rows for n = 1..n_max, all l, m = 0..l, followed by the 2P and
/// 10S secular roots (selected and partner root for each).
std::vector<LevelRow> level_table(const LevelModelParams& params, int n_max);

}  // namespace eit::levels
