#pragma once

#include <vector>

namespace mps::specfun {

struct ValueDeriv {
  double value;
  double deriv;
};

/// Bessel function of the first kind J_m and its derivative, m >= 0, x >= 0.
ValueDeriv bessel_j(int m, double x);

/// Irregular Bessel function Y_0 and its derivative Y_0' = -Y_1.
/// Throws DomainError for x <= 0.
ValueDeriv bessel_y0(double x);

/// Y_1, needed for gradients of Y_0-based basis functions.
double bessel_y1(double x);

/// Ascending positive roots j_{m,1..count} of J_m.
struct BesselZeroTable {
  int order = 0;
  std::vector<double> zeros;
};

/// Zeros of J_m located by McMahon asymptotic brackets refined with
/// Newton iterations (bisection fallback when Newton leaves the bracket).
BesselZeroTable bessel_zeros(int m, int count);

}  // namespace mps::specfun
