#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "eit/ladder.hpp"

namespace eit {

/// Steady-state probe susceptibility of the ladder at probe offset `omega`
/// (rad/s). chi'' > 0 is absorption. Throws NumericalError on an exact pole.
///
/// At two-photon resonance with gamma_bc = 0 and Omega2 != 0 the coupling
/// term diverges and the result is exactly zero.
Complex chi(double omega, const LadderSystem& system, const FieldDrive& drive);

/// d chi / d omega, analytic.
Complex chi_derivative(double omega, const LadderSystem& system,
                       const FieldDrive& drive);

/// d^2 chi / d omega^2, analytic.
Complex chi_second_derivative(double omega, const LadderSystem& system,
                              const FieldDrive& drive);

/// n_g = 1 + (omega1 / 2) d Re chi / d omega.
double group_index(double omega, const LadderSystem& system,
                   const FieldDrive& drive);

/// Central-difference version of group_index, for cross-checks.
double group_index_finite_difference(double omega, const LadderSystem& system,
                                     const FieldDrive& drive, double step);

/// c / (1 + Re chi / 2 + (omega1 / 2) d Re chi / d omega). May be negative in
/// regions of anomalous dispersion. Throws NumericalError on a zero
/// denominator.
double group_velocity(double omega, const LadderSystem& system,
                      const FieldDrive& drive);

/// Offset omega = delta1 - delta2 at which the probe is two-photon resonant.
double two_photon_resonance(const FieldDrive& drive);

struct WindowMetrics {
  bool present = false;          // chi'' dips below bare_peak / 2
  bool dip = false;              // chi'' has a local minimum at center
  double center = 0.0;          // rad/s
  double center_abs = 0.0;      // chi'' at center
  double bare_peak = 0.0;       // chi'' peak without control
  double width = 0.0;           // rad/s, span with chi'' below bare_peak / 2
  double left_edge = 0.0;
  double right_edge = 0.0;
  double ng_center = 1.0;
  double slope = 0.0;           // d Re chi / d omega at center, s
};

/// Transparency-window measurements around two-photon resonance. The scan
/// covers +-max(10 gamma_ab, 4 |Omega2|) about the center.
WindowMetrics window_metrics(const LadderSystem& system, const FieldDrive& drive);

struct AbsorptionFwhm {
  double peak_position = 0.0;
  double peak_value = 0.0;
  double left = 0.0;
  double right = 0.0;
  double width() const { return right - left; }
};

/// Full width at half maximum of the dominant chi'' peak. Intended for the
/// single-Lorentzian (Omega2 = 0) case.
AbsorptionFwhm absorption_fwhm(const LadderSystem& system, const FieldDrive& drive);

struct DressedPeakCheck {
  double predicted_left = 0.0;
  double predicted_right = 0.0;
  std::optional<double> located_left;
  std::optional<double> located_right;
  double max_deviation = 0.0;
  double bound = 0.0;  // gamma_ab^2 / |Omega2|
};

/// Dressed-state doublet: chi'' maxima expected at resonance +- |Omega2|.
/// Requires delta2 == 0 (throws DomainError otherwise). The located maxima
/// come from a grid scan refined by golden-section search.
DressedPeakCheck dressed_peaks(const LadderSystem& system, const FieldDrive& drive);

/// Local maxima of chi'' on [lo, hi], refined.
std::vector<double> absorption_maxima(const LadderSystem& system,
                                      const FieldDrive& drive, double lo,
                                      double hi, int coarse_points);

struct SpectrumTable {
  std::vector<double> omega;
  std::vector<double> chi_re;
  std::vector<double> chi_im;
  std::vector<double> n_g;
  LadderSystem system;
  FieldDrive drive;

  std::size_t size() const { return omega.size(); }
  /// Shared length, strictly increasing grid, no spurious gain.
  void validate() const;
};

SpectrumTable compute_spectrum(const LadderSystem& system, const FieldDrive& drive,
                               const std::vector<double>& omega_grid);

struct ControlSweepRow {
  double rabi_control = 0.0;
  double ng_center = 0.0;
  double chi_im_center = 0.0;
};

struct ControlSweep {
  std::vector<ControlSweepRow> rows;
  std::size_t argmax = 0;   // index of the largest n_g(center)
  double refined_argmax = 0.0;  // golden-section refinement inside the bracket
  double refined_max = 0.0;
};

/// Window-center group index and absorption across a control grid. The grid
/// must be non-empty and strictly increasing. Work is spread across
/// `threads` workers; rows keep grid order.
ControlSweep sweep_control(const LadderSystem& system, const FieldDrive& drive,
                           const std::vector<double>& omega2_grid,
                           unsigned threads = 1);

/// Full spectra for every control value, in grid order.
std::vector<SpectrumTable> spectrum_map(const LadderSystem& system,
                                        const FieldDrive& drive,
                                        const std::vector<double>& omega_grid,
                                        const std::vector<double>& omega2_grid,
                                        unsigned threads = 1);

}  // namespace eit
