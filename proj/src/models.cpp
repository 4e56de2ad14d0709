#include "quon/models.hpp"

#include <algorithm>
#include <cmath>

#include "quon/parallel.hpp"

namespace quon {

double oscillator_energy(int n_quanta, const OscillatorConfig& cfg) {
  if (n_quanta < 0) throw std::invalid_argument("oscillator_energy: N must be non-negative");
  if (!(cfg.hbar_omega > 0)) throw std::invalid_argument("oscillator_energy: hbar_omega must be positive");
  return 0.5 * cfg.hbar_omega * (q_bracket(n_quanta, cfg.q) * (1.0 + cfg.q.value()) + 3.0);
}

int oscillator_degeneracy(int n_quanta) {
  if (n_quanta < 0) throw std::invalid_argument("oscillator_degeneracy: N must be non-negative");
  return (n_quanta + 1) * (n_quanta + 2) / 2;
}

std::vector<EnergyLevel> oscillator_spectrum(int n_max, const OscillatorConfig& cfg) {
  std::vector<EnergyLevel> out;
  for (int n = 0; n <= n_max; ++n)
    out.push_back({{{"N", n}}, oscillator_energy(n, cfg), oscillator_degeneracy(n)});
  return out;
}

namespace {

std::vector<OccupancyVector> occupancies_with_total(int n_quanta) {
  std::vector<OccupancyVector> out;
  for (int np = 0; np <= n_quanta; ++np)
    for (int nm = 0; nm + np <= n_quanta; ++nm) {
      const int n0 = n_quanta - np - nm;
      out.push_back(OccupancyVector{{kModePlus, np}, {kModeMinus, nm}, {kModeZero, n0}});
    }
  return out;
}

// <w_a| a†_m a_m |w_b> for every mode, via the rewrite oracle.
double number_sandwich(const CreationWord& wa, const CreationWord& wb, DeformationParameter q) {
  double acc = 0.0;
  for (Mode m : {kModePlus, kModeMinus, kModeZero}) {
    MixedWord word = annihilators_adjoint(wa);
    word.push_back({m, OpKind::Create});
    word.push_back({m, OpKind::Annihilate});
    for (const FockOp& op : creators(wb)) word.push_back(op);
    acc += vev_rewrite(word, q);
  }
  return acc;
}

}  // namespace

FullSolveResult oscillator_full_solve(int n_quanta, const OscillatorConfig& cfg,
                                      std::optional<SectorKind> sector_filter, int cap) {
  if (n_quanta < 1) throw std::invalid_argument("oscillator_full_solve: N must be >= 1");
  if (n_quanta > cap)
    throw CapExceeded("oscillator_full_solve: N exceeds cap " + std::to_string(cap));
  const double q = cfg.q.value();
  const double hw = cfg.hbar_omega;

  FullSolveResult result;
  std::vector<std::pair<double, SectorLabel>> collected;

  for (const auto& occ : occupancies_with_total(n_quanta)) {
    const auto words = enumerate_permutation_words(occ);
    const auto n = static_cast<Eigen::Index>(words.size());
    const Eigen::MatrixXd S = gram_matrix(words, cfg.q);
    Eigen::MatrixXd H(n, n);
    parallel_for(words.size() * words.size(), [&](std::size_t idx) {
      const auto a = static_cast<Eigen::Index>(idx / words.size());
      const auto b = static_cast<Eigen::Index>(idx % words.size());
      H(a, b) = 0.5 * hw *
                (3.0 * S(a, b) + (1.0 + q) * number_sandwich(words[a], words[b], cfg.q));
    });

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gram_solver(S);
    const Eigen::VectorXd lam = gram_solver.eigenvalues();
    const double lam_max = lam(n - 1);
    const double null_threshold = 1e-10 * lam_max;

    // Rank-ambiguity guard near the statistics endpoints: eigenvalues falling
    // between the null threshold and 1e-6 of the largest make the surviving
    // basis ill-defined.
    Eigen::Index kept = 0;
    double lam_min_kept = lam_max;
    bool ambiguous = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (lam(i) < null_threshold) continue;
      ++kept;
      lam_min_kept = std::min(lam_min_kept, lam(i));
      if (lam(i) < 1e-6 * lam_max) ambiguous = true;
    }
    if (ambiguous && std::abs(std::abs(q) - 1.0) < 1e-6)
      throw std::domain_error(
          "oscillator_full_solve: Gram rank ambiguous this close to |q| = 1");
    result.gram_condition = std::max(result.gram_condition, lam_max / lam_min_kept);

    // Whiten the surviving range of S, solve the ordinary symmetric problem.
    Eigen::MatrixXd Y(n, kept);
    Eigen::Index col = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      if (lam(i) >= null_threshold) Y.col(col++) = gram_solver.eigenvectors().col(i) / std::sqrt(lam(i));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> hsolver(Y.transpose() * H * Y);

    // The symmetrizer direction (uniform over words) must itself solve the
    // generalized problem at the closed-form energy; so must the
    // antisymmetrizer direction when it exists and is not null. These are the
    // per-block consistency checks behind the sector grouping.
    const auto act = permutation_action(words);
    const Eigen::VectorXd u = Eigen::VectorXd::Ones(n);
    const Eigen::VectorXd Su = S * u;
    const double u_norm2 = u.dot(Su);
    {
      const double e_sym = u.dot(H * u) / u_norm2;
      const Eigen::VectorXd resid = H * u - e_sym * Su;
      if (resid.norm() > 1e-8 * (H * u).norm())
        throw std::runtime_error(
            "oscillator_full_solve: symmetric direction is not a generalized eigenvector");
    }
    Eigen::VectorXd Ss;
    double s_norm2 = 0.0;
    bool have_antisym = false;
    if (act.all_distinct && n > 1) {
      Ss = S * act.sign;
      s_norm2 = act.sign.dot(Ss);
      have_antisym = s_norm2 > null_threshold;
      if (have_antisym) {
        const double e_a = act.sign.dot(H * act.sign) / s_norm2;
        const Eigen::VectorXd resid = H * act.sign - e_a * Ss;
        if (resid.norm() > 1e-8 * (H * act.sign).norm())
          throw std::runtime_error(
              "oscillator_full_solve: antisymmetric direction is not a generalized eigenvector");
      }
    }

    // Label each generalized eigenvector by its S-weighted overlap with the
    // symmetrizer / antisymmetrizer directions; everything else is of mixed
    // symmetry. Both special directions span one dimension per block.
    for (Eigen::Index e = 0; e < hsolver.eigenvalues().size(); ++e) {
      const Eigen::VectorXd x = Y * hsolver.eigenvectors().col(e);  // x^T S x = 1
      SectorLabel label{SectorKind::Mixed, 0};
      const double cos_u = std::abs(x.dot(Su)) / std::sqrt(u_norm2);
      if (cos_u > 1.0 - 1e-8) {
        label.kind = SectorKind::Symmetric;
      } else if (have_antisym) {
        const double cos_s = std::abs(x.dot(Ss)) / std::sqrt(s_norm2);
        if (cos_s > 1.0 - 1e-8) label.kind = SectorKind::Antisymmetric;
      }
      collected.emplace_back(hsolver.eigenvalues()(e), label);
    }
  }

  // Merge equal (energy, sector) pairs across occupancy blocks.
  if (collected.empty()) return result;
  std::sort(collected.begin(), collected.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.to_string() < b.second.to_string();
  });
  const double merge_tol = 1e-9 * std::max(1.0, std::abs(collected.back().first));
  for (const auto& [energy, label] : collected) {
    if (sector_filter && label.kind != *sector_filter) continue;
    if (!result.levels.empty() &&
        std::abs(result.levels.back().energy - energy) <= merge_tol &&
        result.levels.back().sector.to_string() == label.to_string()) {
      ++result.levels.back().multiplicity;
    } else {
      result.levels.push_back({energy, label, 1});
    }
  }
  return result;
}

namespace {

struct NormalTerm {
  std::vector<Mode> create_seq;  // a†_{c0} a†_{c1} ...
  std::vector<Mode> annih_seq;   // a_{d0} a_{d1} ...
  double coeff = 0.0;
};

struct QuadTerm {
  Mode create;
  Mode annihilate;
  double coeff;
};

// (a†_x a_y)(a†_z a_w) = δ_yz a†_x a_w + q a†_x a†_z a_y a_w
std::vector<NormalTerm> quad_product(const std::vector<QuadTerm>& lhs,
                                     const std::vector<QuadTerm>& rhs, double q) {
  std::vector<NormalTerm> out;
  for (const auto& a : lhs)
    for (const auto& b : rhs) {
      if (a.annihilate == b.create)
        out.push_back({{a.create}, {b.annihilate}, a.coeff * b.coeff});
      out.push_back({{a.create, b.create}, {a.annihilate, b.annihilate}, q * a.coeff * b.coeff});
    }
  return out;
}

std::vector<NormalTerm> as_terms(const std::vector<QuadTerm>& quads) {
  std::vector<NormalTerm> out;
  for (const auto& t : quads) out.push_back({{t.create}, {t.annihilate}, t.coeff});
  return out;
}

std::vector<NormalTerm> minus(std::vector<NormalTerm> a, const std::vector<NormalTerm>& b) {
  for (const auto& t : b) a.push_back({t.create_seq, t.annih_seq, -t.coeff});
  return a;
}

std::vector<NormalTerm> plus_scaled(std::vector<NormalTerm> a, const std::vector<NormalTerm>& b,
                                    double s) {
  for (const auto& t : b) a.push_back({t.create_seq, t.annih_seq, s * t.coeff});
  return a;
}

// Π of lowering coefficients; applies right-to-left over the sequence given.
bool chain(const OccupancyVector& occ, const std::vector<Mode>& modes, DeformationParameter q,
           double& coeff, OccupancyVector& out) {
  coeff = 1.0;
  out = occ;
  for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
    const Lowering step = lower_symmetric(out, *it, q);
    if (step.coefficient == 0.0) return false;
    coeff *= step.coefficient;
    out = step.occ;
  }
  return true;
}

double term_element(const NormalTerm& term, const OccupancyVector& bra,
                    const OccupancyVector& ket, DeformationParameter q) {
  // <bra| a†_{c...} a_{d...} |ket> = chain(bra by c...)* chain(ket by d...) δ.
  // The creator string is lowered on the bra side (its adjoint), where the
  // last creator written is the first one lowered.
  double cb = 1.0, ck = 1.0;
  OccupancyVector ob, ok;
  std::vector<Mode> rev_create(term.create_seq.rbegin(), term.create_seq.rend());
  if (!chain(bra, rev_create, q, cb, ob)) return 0.0;
  if (!chain(ket, term.annih_seq, q, ck, ok)) return 0.0;
  if (!(ob == ok)) return 0.0;
  return term.coeff * cb * ck;
}

std::vector<NormalTerm> rotor_terms(RotorOp op, double q) {
  const std::vector<QuadTerm> Lp = {{kRotorPlus, kRotorMinus, 1.0}};
  const std::vector<QuadTerm> Lm = {{kRotorMinus, kRotorPlus, 1.0}};
  const std::vector<QuadTerm> L0 = {{kRotorPlus, kRotorPlus, 0.5},
                                    {kRotorMinus, kRotorMinus, -0.5}};
  switch (op) {
    case RotorOp::LPlus: return as_terms(Lp);
    case RotorOp::LMinus: return as_terms(Lm);
    case RotorOp::LZero: return as_terms(L0);
    case RotorOp::CommPlusMinus:
      return minus(quad_product(Lp, Lm, q), quad_product(Lm, Lp, q));
    case RotorOp::CommZeroPlus:
      return minus(quad_product(L0, Lp, q), quad_product(Lp, L0, q));
    case RotorOp::CommZeroMinus:
      return minus(quad_product(L0, Lm, q), quad_product(Lm, L0, q));
    case RotorOp::LSquared: {
      auto t = quad_product(L0, L0, q);
      t = plus_scaled(std::move(t), quad_product(Lp, Lm, q), 0.5);
      t = plus_scaled(std::move(t), quad_product(Lm, Lp, q), 0.5);
      return t;
    }
  }
  throw std::invalid_argument("rotor_matrix_element: unknown operator");
}

}  // namespace

double rotor_matrix_element(RotorOp op, const OccupancyVector& bra, const OccupancyVector& ket,
                            DeformationParameter q) {
  for (const auto& occ : {bra, ket})
    for (const auto& [m, c] : occ.counts())
      if (m != kRotorPlus && m != kRotorMinus)
        throw std::invalid_argument("rotor_matrix_element: occupancies live on modes +,- only");
  double acc = 0.0;
  for (const auto& term : rotor_terms(op, q.value())) acc += term_element(term, bra, ket, q);
  return acc;
}

double rotor_energy(int l, const RotorConfig& cfg) {
  // integer l only; half-integer angular momenta are not modelled
  if (l < 0) throw std::invalid_argument("rotor_energy: l must be non-negative");
  if (!(cfg.inertia_A > 0)) throw std::invalid_argument("rotor_energy: inertia_A must be positive");
  const double half = 0.5 * q_bracket(2 * l, cfg.q);
  return cfg.inertia_A * half * (half + 1.0);
}

std::vector<EnergyLevel> rotor_spectrum(int l_max, const RotorConfig& cfg) {
  std::vector<EnergyLevel> out;
  for (int l = 0; l <= l_max; ++l) out.push_back({{{"l", l}}, rotor_energy(l, cfg), 2 * l + 1});
  return out;
}

}  // namespace quon
