#include "quon/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace quon {

QPoly::QPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly QPoly::constant(BigInt c) {
  QPoly p;
  p.coeffs_.push_back(std::move(c));
  p.normalize();
  return p;
}

QPoly QPoly::monomial(BigInt c, std::size_t k) {
  QPoly p;
  if (c != 0) {
    p.coeffs_.assign(k + 1, BigInt(0));
    p.coeffs_[k] = std::move(c);
  }
  return p;
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& QPoly::coeff(std::size_t k) const {
  static const BigInt kZero{0};
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return QPoly{};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly QPoly::operator-() const {
  QPoly p(*this);
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : QPoly{};
  std::vector<BigInt> out(coeffs_.size() + k, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
  return QPoly(std::move(out));
}

QPoly QPoly::scaled(const BigInt& c) const {
  if (c == 0) return QPoly{};
  QPoly p(*this);
  for (auto& x : p.coeffs_) x *= c;
  return p;
}

double QPoly::eval(double q) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * q + it->convert_to<double>();
  return acc;
}

BigRat QPoly::eval_exact(const BigRat& q) const {
  BigRat acc{0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + BigRat(*it);
  return acc;
}

QPoly QPoly::divided_exact(const BigInt& d) const {
  if (d == 0) throw std::domain_error("QPoly: division by zero");
  QPoly p(*this);
  for (auto& c : p.coeffs_) {
    if (c % d != 0) throw std::domain_error("QPoly: non-exact integer division");
    c /= d;
  }
  return p;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool unit = (a == 1);
    if (k == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str();
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace quon
