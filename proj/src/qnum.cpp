#include "quon/qnum.hpp"

#include <stdexcept>

namespace quon {

DeformationParameter::DeformationParameter(double q) : q_(q) {
  if (!(q >= -1.0 && q <= 1.0))
    throw std::invalid_argument("deformation parameter q must lie in [-1, 1]");
}

double q_bracket(int n, DeformationParameter q) {
  if (n < 0) throw std::invalid_argument("q_bracket: N must be non-negative");
  double acc = 0.0, p = 1.0;
  for (int k = 0; k < n; ++k) {
    acc += p;
    p *= q.value();
  }
  return acc;
}

QPoly q_bracket_poly(int n) {
  if (n < 0) throw std::invalid_argument("q_bracket_poly: N must be non-negative");
  std::vector<BigInt> c(static_cast<std::size_t>(n), BigInt(1));
  return QPoly(std::move(c));
}

double q_factorial(int n, DeformationParameter q) {
  if (n < 0) throw std::invalid_argument("q_factorial: N must be non-negative");
  double acc = 1.0;
  for (int k = 1; k <= n; ++k) acc *= q_bracket(k, q);
  return acc;
}

QPoly q_factorial_poly(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial_poly: N must be non-negative");
  QPoly acc = QPoly::one();
  for (int k = 1; k <= n; ++k) acc *= q_bracket_poly(k);
  return acc;
}

}  // namespace quon
