#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace quon {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Polynomial in the deformation parameter q with exact integer coefficients.
/// coeff(k) is the coefficient of q^k; the representation is normalized so the
/// highest stored coefficient is nonzero (the zero polynomial stores nothing).
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<long long> coeffs);
  explicit QPoly(std::vector<BigInt> coeffs);

  static QPoly zero() { return QPoly{}; }
  static QPoly one() { return QPoly{1}; }
  static QPoly constant(BigInt c);
  /// c * q^k
  static QPoly monomial(BigInt c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(std::size_t k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs) { return *this = *this * rhs; }
  QPoly operator-() const;

  bool operator==(const QPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const QPoly& rhs) const { return !(*this == rhs); }

  /// Multiply by q^k.
  QPoly shifted(std::size_t k) const;
  QPoly scaled(const BigInt& c) const;

  /// Horner evaluation in double precision.
  double eval(double q) const;
  /// Exact rational evaluation.
  BigRat eval_exact(const BigRat& q) const;

  /// Divide every coefficient by d; throws std::domain_error unless exact.
  QPoly divided_exact(const BigInt& d) const;

  /// Ascending-power rendering, e.g. "1 + 2q + 2q^2 + q^3"; "0" when zero.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

}  // namespace quon
