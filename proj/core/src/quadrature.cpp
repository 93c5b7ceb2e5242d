#include "eit/quadrature.hpp"

#include <cmath>

#include "eit/constants.hpp"
#include "eit/errors.hpp"

namespace eit::quadrature {

namespace {

// Newton on P_n(x), long double throughout so that high orders keep the
// nodes accurate to double precision.
Rule build_legendre(int order) {
  Rule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    long double x = std::cos(constants::kPi * (i + 0.75L) / (order + 0.5L));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L;
      long double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    // Recompute derivative at the converged node.
    long double p0 = 1.0L;
    long double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order * (x * p1 - p0) / (x * x - 1.0L);
    const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
    rule.nodes[i] = static_cast<double>(-x);
    rule.nodes[order - 1 - i] = static_cast<double>(x);
    rule.weights[i] = static_cast<double>(w);
    rule.weights[order - 1 - i] = static_cast<double>(w);
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

// Laguerre roots by Newton with the classical asymptotic starting guesses,
// each guess seeded from the previous roots.
Rule build_laguerre(int order) {
  Rule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const long double n = order;
  long double z = 0.0L;
  for (int i = 0; i < order; ++i) {
    if (i == 0) {
      z = 3.0L / (1.0L + 2.4L * n);
    } else if (i == 1) {
      z += 15.0L / (1.0L + 2.5L * n);
    } else {
      const long double ai = i - 1;
      z += ((1.0L + 2.55L * ai) / (1.9L * ai)) *
           (z - static_cast<long double>(rule.nodes[i - 2]));
    }
    long double p1 = 0.0L;
    long double p2 = 0.0L;
    long double pp = 0.0L;
    for (int iter = 0; iter < 200; ++iter) {
      p1 = 1.0L;
      p2 = 0.0L;
      for (int j = 1; j <= order; ++j) {
        const long double p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1 - z) * p2 - (j - 1) * p3) / j;
      }
      pp = (n * p1 - n * p2) / z;
      const long double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) <= 1e-18L * std::fabs(z)) break;
    }
    // Weight w_i = x_i / ((n+1)^2 L_{n+1}(x_i)^2).
    long double l0 = 1.0L;
    long double l1 = 1.0L - z;
    for (int j = 1; j < order + 1; ++j) {
      const long double l2 = ((2 * j + 1 - z) * l1 - j * l0) / (j + 1);
      l0 = l1;
      l1 = l2;
    }
    rule.nodes[i] = static_cast<double>(z);
    rule.weights[i] =
        static_cast<double>(z / ((n + 1.0L) * (n + 1.0L) * l1 * l1));
  }
  return rule;
}

}  // namespace

Rule gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be >= 1");
  return build_legendre(order);
}

Rule gauss_laguerre(int order) {
  if (order < 1) throw DomainError("gauss_laguerre: order must be >= 1");
  return build_laguerre(order);
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw DomainError("laguerre: degree must be >= 0");
  if (n == 0) return 1.0;
  double l0 = 1.0;
  double l1 = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double l2 = ((2 * k + 1 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

}  // namespace eit::quadrature
