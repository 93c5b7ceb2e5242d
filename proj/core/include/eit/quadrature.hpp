#pragma once

#include <vector>

namespace eit::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1] with `order` points.
Rule gauss_legendre(int order);

/// Gauss-Laguerre rule for weight e^{-x} on [0, inf) with `order` points.
Rule gauss_laguerre(int order);

/// Generalized Laguerre polynomial L_n^alpha(x), three-term recurrence.
double laguerre(int n, double alpha, double x);

}  // namespace eit::quadrature
