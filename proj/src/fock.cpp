#include "quon/fock.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace quon {

MixedWord creators(const CreationWord& w) {
  MixedWord out;
  out.reserve(w.size());
  for (Mode m : w) out.push_back({m, OpKind::Create});
  return out;
}

MixedWord annihilators_adjoint(const CreationWord& w) {
  MixedWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({*it, OpKind::Annihilate});
  return out;
}

namespace {

// Compact byte encoding of a MixedWord, used as memo key.
std::string encode(const MixedWord& w) {
  std::string s;
  s.reserve(w.size());
  for (const FockOp& op : w)
    s.push_back(static_cast<char>((op.mode << 1) | (op.kind == OpKind::Annihilate ? 1 : 0)));
  return s;
}

struct PolyRing {
  using Scalar = QPoly;
  Scalar zero() const { return QPoly::zero(); }
  Scalar one() const { return QPoly::one(); }
  Scalar times_q(Scalar x) const { return x.shifted(1); }
  Scalar q_power(std::size_t k) const { return QPoly::monomial(1, k); }
};

struct NumericRing {
  double q;
  using Scalar = double;
  Scalar zero() const { return 0.0; }
  Scalar one() const { return 1.0; }
  Scalar times_q(Scalar x) const { return x * q; }
  Scalar q_power(std::size_t k) const {
    double acc = 1.0;
    for (std::size_t i = 0; i < k; ++i) acc *= q;
    return acc;
  }
};

template <class Ring>
typename Ring::Scalar vev_rewrite_rec(std::string& w, const Ring& ring,
                                      std::unordered_map<std::string, typename Ring::Scalar>& memo) {
  if (w.empty()) return ring.one();
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  // Locate the first annihilator immediately followed by a creator.
  std::size_t p = std::string::npos;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if ((w[k] & 1) && !(w[k + 1] & 1)) {
      p = k;
      break;
    }
  }
  typename Ring::Scalar result = ring.zero();
  if (p == std::string::npos) {
    // Anti-normal-ordered nonempty word: a_i|0> = 0 or <0|a†_j = 0.
    memo.emplace(w, result);
    return result;
  }
  const char ann = w[p], cre = w[p + 1];
  std::swap(w[p], w[p + 1]);
  result = ring.times_q(vev_rewrite_rec(w, ring, memo));
  std::swap(w[p], w[p + 1]);
  if ((ann >> 1) == (cre >> 1)) {
    std::string reduced;
    reduced.reserve(w.size() - 2);
    reduced.append(w, 0, p);
    reduced.append(w, p + 2, std::string::npos);
    result += vev_rewrite_rec(reduced, ring, memo);
  }
  memo.emplace(w, result);
  return result;
}

template <class Ring>
typename Ring::Scalar vev_rewrite_impl(const MixedWord& word, const Ring& ring) {
  std::unordered_map<std::string, typename Ring::Scalar> memo;
  std::string w = encode(word);
  return vev_rewrite_rec(w, ring, memo);
}

// Enumerates the mode-matching bijections ket position -> bra position and
// accumulates q^{inversions}. Returns false if the mode multisets differ.
template <class Ring>
bool qpermanent_impl(const CreationWord& bra, const CreationWord& ket, const Ring& ring,
                     typename Ring::Scalar& out) {
  out = ring.zero();
  if (bra.size() != ket.size()) return false;
  const std::size_t n = bra.size();
  if (n == 0) {
    out = ring.one();
    return true;
  }

  // bra positions grouped by mode; ket positions grouped the same way.
  std::map<Mode, std::vector<std::size_t>> bra_pos, ket_pos;
  for (std::size_t p = 0; p < n; ++p) bra_pos[bra[p]].push_back(p);
  for (std::size_t p = 0; p < n; ++p) ket_pos[ket[p]].push_back(p);
  if (bra_pos.size() != ket_pos.size()) return false;
  for (const auto& [m, ps] : bra_pos) {
    auto it = ket_pos.find(m);
    if (it == ket_pos.end() || it->second.size() != ps.size()) return false;
  }

  std::vector<std::size_t> pi(n);
  std::vector<std::pair<const std::vector<std::size_t>*, std::vector<std::size_t>>> groups;
  for (auto& [m, kps] : ket_pos) groups.emplace_back(&kps, bra_pos[m]);
  for (auto& g : groups) std::sort(g.second.begin(), g.second.end());

  bool done = false;
  while (!done) {
    for (const auto& [kps, bps] : groups)
      for (std::size_t i = 0; i < kps->size(); ++i) pi[(*kps)[i]] = bps[i];
    std::size_t inv = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (pi[a] > pi[b]) ++inv;
    out += ring.q_power(inv);
    // Advance the product of per-mode permutations (odometer style).
    done = true;
    for (auto& g : groups) {
      if (std::next_permutation(g.second.begin(), g.second.end())) {
        done = false;
        break;
      }
      // wrapped back to sorted order; carry to the next group
    }
  }
  return true;
}

}  // namespace

QPoly vev_rewrite_poly(const MixedWord& word) { return vev_rewrite_impl(word, PolyRing{}); }

double vev_rewrite(const MixedWord& word, DeformationParameter q) {
  return vev_rewrite_impl(word, NumericRing{q.value()});
}

QPoly vev_qpermanent_poly(const CreationWord& bra, const CreationWord& ket) {
  QPoly out;
  qpermanent_impl(bra, ket, PolyRing{}, out);
  return out;
}

double vev_qpermanent(const CreationWord& bra, const CreationWord& ket, DeformationParameter q) {
  double out = 0.0;
  qpermanent_impl(bra, ket, NumericRing{q.value()}, out);
  return out;
}

FockVector<QPoly> apply_annihilator(const FockVector<QPoly>& v, Mode i) {
  FockVector<QPoly> out;
  for (const auto& [w, c] : v.terms()) {
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] != i) continue;
      CreationWord reduced(w);
      reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(p));
      out.add_term(reduced, c.shifted(p));
    }
  }
  return out;
}

FockVector<double> apply_annihilator(const FockVector<double>& v, Mode i, DeformationParameter q) {
  FockVector<double> out;
  for (const auto& [w, c] : v.terms()) {
    double qp = 1.0;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] == i) {
        CreationWord reduced(w);
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(p));
        out.add_term(reduced, c * qp);
      }
      qp *= q.value();
    }
  }
  return out;
}

double inner_product(const FockVector<double>& u, const FockVector<double>& v,
                     DeformationParameter q) {
  double acc = 0.0;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms()) acc += cu * cv * vev_qpermanent(wu, wv, q);
  return acc;
}

QPoly inner_product_poly(const FockVector<QPoly>& u, const FockVector<QPoly>& v) {
  QPoly acc;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms()) acc += cu * cv * vev_qpermanent_poly(wu, wv);
  return acc;
}

}  // namespace quon
