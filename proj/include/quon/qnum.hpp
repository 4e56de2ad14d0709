#pragma once

#include "quon/qpoly.hpp"

namespace quon {

/// Validated deformation parameter; the statistics interpolation runs over
/// q in [-1, 1] with q = -1 fermions and q = +1 bosons.
class DeformationParameter {
 public:
  DeformationParameter(double q);  // NOLINT(google-explicit-constructor)
  double value() const { return q_; }
  operator double() const { return q_; }

 private:
  double q_;
};

/// [N] = 1 + q + ... + q^{N-1}, evaluated as the geometric sum so that q = 1
/// yields exactly N.
double q_bracket(int n, DeformationParameter q);

/// Exact polynomial form of [N]; [0] is the zero polynomial.
QPoly q_bracket_poly(int n);

/// [N]! = [N][N-1]...[1], with [0]! = 1.
double q_factorial(int n, DeformationParameter q);

/// Exact polynomial form of [N]!.
QPoly q_factorial_poly(int n);

}  // namespace quon
