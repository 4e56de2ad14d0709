#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "quon/qnum.hpp"
#include "quon/qpoly.hpp"

namespace quon {

/// Single-particle state label. Oscillator modes +, -, 0 map to 0, 1, 2.
using Mode = std::uint8_t;

/// Ordered product of creators applied to the vacuum: a†_{w0} a†_{w1} ... |0>.
/// Order is significant; no commutation rule relates two creators at |q| < 1.
using CreationWord = std::vector<Mode>;

enum class OpKind : std::uint8_t { Create, Annihilate };

struct FockOp {
  Mode mode;
  OpKind kind;
  bool operator==(const FockOp&) const = default;
};

/// Operator string in bra-ket order, applied left to right as written.
using MixedWord = std::vector<FockOp>;

MixedWord creators(const CreationWord& w);
/// Annihilator string <0| a_{w_{N-1}} ... a_{w_0}, i.e. the adjoint of creators(w).
MixedWord annihilators_adjoint(const CreationWord& w);

/// <0| word |0> by exhaustive recursive rewriting with
/// a_i a†_j = δ_ij + q a†_j a_i and a_i|0> = 0. Exact; the module's oracle.
QPoly vev_rewrite_poly(const MixedWord& word);
double vev_rewrite(const MixedWord& word, DeformationParameter q);

/// <bra-ket overlap> <0| (bra)† ket |0> as a sum over mode-matching bijections
/// π from ket positions to bra positions, weighted q^{inv(π)} where inv counts
/// pairing-line crossings. Calibrated against vev_rewrite (exhaustively tested).
QPoly vev_qpermanent_poly(const CreationWord& bra, const CreationWord& ket);
double vev_qpermanent(const CreationWord& bra, const CreationWord& ket,
                      DeformationParameter q);

/// Superposition of equal-length creation words; Scalar is double (numeric
/// regime) or QPoly (exact regime). Zero coefficients are not stored.
template <class Scalar>
class FockVector {
 public:
  using TermMap = std::map<CreationWord, Scalar>;

  FockVector() = default;

  /// Adds c·|w>, merging with an existing term. All stored words must share
  /// one length (homogeneous quon number).
  void add_term(const CreationWord& w, Scalar c) {
    if (is_zero_scalar(c)) return;
    if (!terms_.empty() && terms_.begin()->first.size() != w.size())
      throw std::invalid_argument("FockVector: mixed quon numbers in one vector");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, std::move(c));
    } else {
      it->second += c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FockVector scaled(const Scalar& c) const {
    FockVector out;
    if (is_zero_scalar(c)) return out;
    for (const auto& [w, x] : terms_) out.terms_.emplace(w, x * c);
    return out;
  }

  bool operator==(const FockVector&) const = default;

 private:
  static bool is_zero_scalar(const double& c) { return c == 0.0; }
  static bool is_zero_scalar(const QPoly& c) { return c.is_zero(); }
  TermMap terms_;
};

/// a_i applied to a superposition of creation words:
/// a_i |w> = Σ_{p : w_p = i} q^p |w with position p removed>.
FockVector<QPoly> apply_annihilator(const FockVector<QPoly>& v, Mode i);
FockVector<double> apply_annihilator(const FockVector<double>& v, Mode i,
                                     DeformationParameter q);

/// <u|v> extended bilinearly over vev_qpermanent. Scalars are real.
double inner_product(const FockVector<double>& u, const FockVector<double>& v,
                     DeformationParameter q);
QPoly inner_product_poly(const FockVector<QPoly>& u, const FockVector<QPoly>& v);

}  // namespace quon
