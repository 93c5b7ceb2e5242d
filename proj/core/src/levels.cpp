#include "eit/levels.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>

#include "eit/constants.hpp"
#include "eit/errors.hpp"
#include "eit/quadrature.hpp"
#include "eit/units.hpp"

namespace eit::levels {

namespace {

using constants::kPi;

const quadrature::Rule& legendre_rule(int order) {
  static const quadrature::Rule low = quadrature::gauss_legendre(16);
  static const quadrature::Rule high = quadrature::gauss_legendre(32);
  return order == 16 ? low : high;
}

double panel(const std::function<double(double)>& f, double a, double b,
             int order) {
  const auto& rule = legendre_rule(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

// Panels are split until the 16- and 32-point rules agree to `tol`.
double adaptive(const std::function<double(double)>& f, double a, double b,
                double tol, int depth) {
  const double coarse = panel(f, a, b, 16);
  const double fine = panel(f, a, b, 32);
  if (std::fabs(fine - coarse) <= tol || depth >= 40) return fine;
  const double mid = 0.5 * (a + b);
  return adaptive(f, a, mid, 0.5 * tol, depth + 1) +
         adaptive(f, mid, b, 0.5 * tol, depth + 1);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_state(int n, int l, int m) {
  if (n < 1 || l < 0 || l > n - 1 || std::abs(m) > l) {
    throw DomainError("invalid exciton quantum numbers (n=" + std::to_string(n) +
                      ", l=" + std::to_string(l) + ", m=" + std::to_string(m) +
                      ")");
  }
}

}  // namespace

double LevelModelParams::damping_of(const StateIndex& s) const {
  auto it = damping.find(s);
  if (it != damping.end()) return it->second;
  // |m| and -|m| share a width.
  it = damping.find(StateIndex{s.n, s.l, -s.m});
  return it != damping.end() ? it->second : 0.0;
}

void LevelModelParams::validate() const {
  if (!(anisotropy > 0.0)) throw DomainError("anisotropy ratio must be > 0");
  if (!(bohr_radius > 0.0)) throw DomainError("effective Bohr radius must be > 0");
  if (!(rydberg > 0.0)) throw DomainError("effective Rydberg must be > 0");
  if (!(coherence_radius > 0.0)) throw DomainError("coherence radius must be > 0");
}

double eta_lm(int l, int m, double anisotropy) {
  if (l < 0 || std::abs(m) > l) {
    throw DomainError("eta_lm: need 0 <= |m| <= l");
  }
  if (!(anisotropy > 0.0)) throw DomainError("eta_lm: anisotropy must be > 0");
  const unsigned ul = static_cast<unsigned>(l);
  const unsigned um = static_cast<unsigned>(std::abs(m));
  const double g2 = anisotropy * anisotropy;
  // x = cos(theta); |Y_lm|^2 is even in x and independent of phi.
  auto integrand = [&](double x) {
    const double y = std::sph_legendre(ul, um, std::acos(x));
    return y * y / std::sqrt(1.0 - x * x + g2 * x * x);
  };
  return 4.0 * kPi * adaptive(integrand, 0.0, 1.0, 1e-13, 0);
}

double energy_nlm(int n, int l, int m, const LevelModelParams& params) {
  check_state(n, l, m);
  const double eta = eta_lm(l, m, params.anisotropy);
  return -eta * eta / (static_cast<double>(n) * n) * params.rydberg;
}

double v010(int n) {
  if (n < 2) throw DomainError("v010: n must be >= 2");
  const double nn = n;
  return -std::sqrt(12.0 / (nn * nn * (nn * nn - 1.0))) * binomial(n, n - 2) *
         binomial(n + 1, n - 1);
}

double v010_integral(int n, int quadrature_order) {
  if (n < 2) throw DomainError("v010_integral: n must be >= 2");
  const auto rule = quadrature::gauss_laguerre(quadrature_order);
  double integral = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    integral += rule.weights[i] * x * x * x * x *
                quadrature::laguerre(n - 1, 1.0, x) *
                quadrature::laguerre(n - 2, 3.0, x);
  }
  // sqrt((n-1)!(n-2)! / (16 n! (n+1)!)) / sqrt(3)
  const double log_ratio = std::lgamma(n) + std::lgamma(n - 1) - std::log(16.0) -
                           std::lgamma(n + 1) - std::lgamma(n + 2);
  return std::exp(0.5 * log_ratio) / std::sqrt(3.0) * integral;
}

SecularRoots solve_secular(Complex threshold_first, Complex threshold_second,
                           double coupling) {
  const Complex mean = 0.5 * (threshold_first + threshold_second);
  const Complex half_gap = 0.5 * (threshold_first - threshold_second);
  const Complex split = std::sqrt(half_gap * half_gap + coupling * coupling);
  Complex a = mean + split;
  Complex b = mean - split;
  const bool swap = a.real() < b.real() ||
                    (a.real() == b.real() && a.imag() < b.imag());
  if (swap) std::swap(a, b);
  return SecularRoots{a, b};
}

Complex threshold(const StateIndex& s, const LevelModelParams& params) {
  return Complex(params.gap_energy + energy_nlm(s.n, s.l, s.m, params),
                 -params.damping_of(s));
}

MixedState mix_pair(int n, Branch branch, const std::string& label,
                    const LevelModelParams& params) {
  params.validate();
  const StateIndex s_state{n, 0, 0};
  const StateIndex p_state{n, 1, 0};
  MixedState mixed;
  mixed.label = label;
  mixed.branch = branch;
  // The upper root is assigned to the P state, the lower one to the S state.
  mixed.state = branch == Branch::Upper ? p_state : s_state;
  mixed.partner = branch == Branch::Upper ? s_state : p_state;
  mixed.coupling = v010(n) * params.field * params.bohr_radius;  // e F a* in eV
  mixed.roots = solve_secular(threshold(s_state, params),
                              threshold(p_state, params), mixed.coupling);
  return mixed;
}

MixedState mixed_2p(const LevelModelParams& params) {
  return mix_pair(2, Branch::Upper, "2Pz", params);
}

MixedState mixed_10s(const LevelModelParams& params) {
  return mix_pair(10, Branch::Lower, "10S", params);
}

double dipole_moment_squared(const LevelModelParams& params, double eta_11) {
  if (!(params.coherence_radius > 0.0)) {
    throw DomainError("dipole_moment_squared: r0 must be > 0");
  }
  if (!(eta_11 > 0.0)) throw DomainError("dipole_moment_squared: eta_11 must be > 0");
  const double a = params.bohr_radius;
  const double ratio = params.coherence_radius / a;
  return 4.0 * constants::kVacuumPermittivity * params.background_dielectric *
         a * a * a * ev_to_joule(params.lt_splitting) /
         (kPi * ratio * ratio * std::pow(eta_11, 5));
}

std::vector<LevelRow> level_table(const LevelModelParams& params, int n_max) {
  params.validate();
  if (n_max < 1) throw DomainError("level_table: n_max must be >= 1");
  std::vector<LevelRow> rows;
  std::map<std::pair<int, int>, double> eta_cache;
  auto eta_of = [&](int l, int m) {
    auto [it, inserted] = eta_cache.try_emplace({l, m}, 0.0);
    if (inserted) it->second = eta_lm(l, m, params.anisotropy);
    return it->second;
  };
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 0; l < n; ++l) {
      for (int m = 0; m <= l; ++m) {
        const double eta = eta_of(l, m);
        const double e = -eta * eta / (static_cast<double>(n) * n) * params.rydberg;
        rows.push_back(LevelRow{StateIndex{n, l, m}, eta,
                                Complex(e, -params.damping_of({n, l, m})),
                                "unmixed"});
      }
    }
  }
  for (const MixedState& mixed : {mixed_2p(params), mixed_10s(params)}) {
    rows.push_back(LevelRow{mixed.state, eta_of(mixed.state.l, mixed.state.m),
                            mixed.selected() - params.gap_energy,
                            mixed.label + ":selected"});
    rows.push_back(LevelRow{mixed.partner, eta_of(mixed.partner.l, mixed.partner.m),
                            mixed.other() - params.gap_energy,
                            mixed.label + ":partner"});
  }
  return rows;
}

}  // namespace eit::levels
