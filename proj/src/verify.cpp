#include "quon/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "quon/models.hpp"
#include "quon/symsector.hpp"

namespace quon::verify {

void SuiteResult::check(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failures;
    if (messages.size() < 8) messages.push_back(what);
  }
}

namespace {

std::vector<CreationWord> all_words(int len, int modes) {
  std::vector<CreationWord> out;
  CreationWord w(static_cast<std::size_t>(len), 0);
  while (true) {
    out.push_back(w);
    int p = len - 1;
    while (p >= 0 && w[static_cast<std::size_t>(p)] == modes - 1) {
      w[static_cast<std::size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
    ++w[static_cast<std::size_t>(p)];
  }
  return out;
}

std::vector<OccupancyVector> occupancies_three_modes(int n) {
  std::vector<OccupancyVector> out;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b)
      out.push_back(OccupancyVector{{0, a}, {1, b}, {2, n - a - b}});
  return out;
}

QPoly rewrite_overlap(const CreationWord& bra, const CreationWord& ket) {
  MixedWord w = annihilators_adjoint(bra);
  for (const FockOp& op : creators(ket)) w.push_back(op);
  return vev_rewrite_poly(w);
}

std::string describe(const CreationWord& w) {
  std::string s;
  for (Mode m : w) s += std::to_string(int(m));
  return s;
}

}  // namespace

SuiteResult oracle_equivalence(int max_len, int exhaustive_max_len, int random_pairs,
                               unsigned seed) {
  SuiteResult r;
  r.name = "oracle";
  const int exhaustive = std::min(max_len, exhaustive_max_len);
  for (int len = 1; len <= exhaustive; ++len) {
    const auto words = all_words(len, 3);
    for (const auto& bra : words)
      for (const auto& ket : words)
        r.check(vev_qpermanent_poly(bra, ket) == rewrite_overlap(bra, ket),
                "oracle mismatch at bra=" + describe(bra) + " ket=" + describe(ket));
  }
  if (max_len > exhaustive) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> mode(0, 2);
    for (int i = 0; i < random_pairs; ++i) {
      CreationWord bra(static_cast<std::size_t>(max_len)), ket(static_cast<std::size_t>(max_len));
      for (auto& m : bra) m = static_cast<Mode>(mode(rng));
      if (i % 2 == 0) {
        // same multiset, shuffled: exercises the nonzero branch
        ket = bra;
        std::shuffle(ket.begin(), ket.end(), rng);
      } else {
        for (auto& m : ket) m = static_cast<Mode>(mode(rng));
      }
      r.check(vev_qpermanent_poly(bra, ket) == rewrite_overlap(bra, ket),
              "oracle mismatch at bra=" + describe(bra) + " ket=" + describe(ket));
    }
  }
  // quon-number conservation: mismatched multisets give exactly zero
  r.check(rewrite_overlap({0, 0}, {0, 1}).is_zero(), "mode-mismatch vev must vanish");
  r.check(vev_qpermanent_poly({0, 0}, {0, 1}).is_zero(), "mode-mismatch q-permanent must vanish");
  return r;
}

SuiteResult appendix_induction(int max_n) {
  SuiteResult r;
  r.name = "appendix";
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& occ : occupancies_three_modes(n)) {
      const auto sym = symmetrized_word(occ);
      for (Mode i : {Mode(0), Mode(1), Mode(2)}) {
        const auto lhs = apply_annihilator(sym, i);
        if (occ.count(i) == 0) {
          r.check(lhs.empty(), "a_i on absent mode must vanish, occ=" + occ.to_string());
          continue;
        }
        const auto rhs = symmetrized_word(occ.lowered(i)).scaled(q_bracket_poly(n));
        r.check(lhs == rhs,
                "appendix identity fails at occ=" + occ.to_string() + " i=" + std::to_string(i));
      }
    }
  }
  return r;
}

SuiteResult symmetric_norms(int max_n, const std::vector<double>& qs, double tol) {
  SuiteResult r;
  r.name = "norm";
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& occ : occupancies_three_modes(n)) {
      for (double q : qs) {
        const auto state = symmetric_state(occ, q);
        const double nn = inner_product(state, state, q);
        std::ostringstream msg;
        msg << "norm " << nn << " at occ=" << occ.to_string() << " q=" << q;
        r.check(std::abs(nn - 1.0) <= tol, msg.str());
      }
    }
  }
  return r;
}

SuiteResult lowering_rule(int max_n, const std::vector<double>& qs, double tol) {
  SuiteResult r;
  r.name = "lowering";
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& occ : occupancies_three_modes(n)) {
      for (double q : qs) {
        const auto state = symmetric_state(occ, q);
        for (Mode i : {Mode(0), Mode(1), Mode(2)}) {
          const auto lowered = apply_annihilator(state, i, q);
          const auto rule = lower_symmetric(occ, i, q);
          if (occ.count(i) == 0) {
            r.check(rule.coefficient == 0.0 && rule.occ == occ,
                    "empty-mode lowering must be a no-op, occ=" + occ.to_string());
            continue;
          }
          // brute-force projection onto the target symmetric state
          const double proj =
              n == 1 ? (lowered.terms().count(CreationWord{})
                            ? lowered.terms().at(CreationWord{})
                            : 0.0)
                     : inner_product(symmetric_state(rule.occ, q), lowered, q);
          std::ostringstream msg;
          msg << "lowering coeff " << rule.coefficient << " vs projection " << proj
              << " at occ=" << occ.to_string() << " i=" << int(i) << " q=" << q;
          r.check(std::abs(proj - rule.coefficient) <= tol, msg.str());
          // the lowered vector must lie entirely in the symmetric subspace
          const double nn = inner_product(lowered, lowered, q);
          r.check(std::abs(nn - rule.coefficient * rule.coefficient) <= tol,
                  "a_i leaks out of the symmetric subspace at occ=" + occ.to_string());
          // conjugate rule
          const double raise = raise_symmetric_matrix_element(rule.occ, i, q);
          r.check(std::abs(raise - rule.coefficient) <= tol,
                  "raising element disagrees with lowering conjugate at occ=" + occ.to_string());
        }
      }
    }
  }
  return r;
}

SuiteResult gram_polynomials(int max_n) {
  SuiteResult r;
  r.name = "gram";
  const QPoly one_plus_q{1, 1}, one_minus_q{1, -1};

  {  // two distinct modes: Gram [[1, q], [q, 1]], eigenvalues 1 ± q
    const auto words = enumerate_permutation_words(OccupancyVector{{0, 1}, {1, 1}});
    const auto g = gram_matrix_poly(words);
    r.check(g[0][0] == QPoly::one() && g[1][1] == QPoly::one() &&
                g[0][1] == QPoly::monomial(1, 1) && g[1][0] == QPoly::monomial(1, 1),
            "two-mode Gram entries");
    const auto structure = exact_gram_structure(OccupancyVector{{0, 1}, {1, 1}});
    bool found_s = false, found_a = false;
    for (const auto& c : structure.clusters) {
      if (c.poly == one_plus_q && c.multiplicity == 1 && c.symmetric) found_s = true;
      if (c.poly == one_minus_q && c.multiplicity == 1 && c.antisymmetric) found_a = true;
    }
    r.check(found_s && found_a && structure.unresolved_dimension == 0,
            "two-mode eigenvalue polynomials 1+q, 1-q");
  }
  {  // repeated mode: single word, Gram [[1+q]]
    const auto words = enumerate_permutation_words(OccupancyVector{{0, 2}});
    const auto g = gram_matrix_poly(words);
    r.check(words.size() == 1 && g[0][0] == one_plus_q, "repeated-mode Gram [[1+q]]");
  }
  {  // three distinct modes: the six-dimensional factorization
    const OccupancyVector occ{{0, 1}, {1, 1}, {2, 1}};
    const QPoly s{1, 2, 2, 1}, a{1, -2, 2, -1}, m1{1, 1, -1, -1}, m2{1, -1, -1, 1};
    const auto structure = exact_gram_structure(occ);
    int hits = 0;
    for (const auto& c : structure.clusters) {
      if (c.poly == s) hits += (c.multiplicity == 1 && c.symmetric) ? 1 : 0;
      if (c.poly == a) hits += (c.multiplicity == 1 && c.antisymmetric) ? 1 : 0;
      if (c.poly == m1) hits += (c.multiplicity == 2) ? 1 : 0;
      if (c.poly == m2) hits += (c.multiplicity == 2) ? 1 : 0;
    }
    r.check(hits == 4 && structure.unresolved_dimension == 0,
            "three-quon eigenvalue polynomials");
    // trace identity: sum of eigenvalue polynomials equals the diagonal sum
    const auto words = enumerate_permutation_words(occ);
    const auto g = gram_matrix_poly(words);
    QPoly trace, eigsum;
    for (std::size_t i = 0; i < words.size(); ++i) trace += g[i][i];
    for (const auto& c : structure.clusters)
      eigsum += c.poly.scaled(BigInt(c.multiplicity));
    r.check(trace == eigsum, "trace equals eigenvalue sum (three quons)");
  }
  if (max_n >= 4) {  // four distinct modes: exact multiplicity profile
    const OccupancyVector occ{{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    for (const auto& q : {BigRat(2, 5), BigRat(3, 7)}) {
      const auto profile = gram_multiplicity_profile(occ, q);
      const std::map<int, int> expect{{1, 2}, {2, 2}, {3, 6}};
      r.check(profile == expect, "four-quon multiplicity profile at rational q");
    }
    const auto structure = exact_gram_structure(occ);
    int resolved = 0;
    bool sym_ok = false;
    for (const auto& c : structure.clusters) {
      resolved += c.multiplicity;
      if (c.symmetric) sym_ok = (c.poly == q_factorial_poly(4));
    }
    r.check(sym_ok, "four-quon symmetric eigenvalue equals [4]!");
    r.check(resolved + structure.unresolved_dimension == 24, "four-quon dimension accounting");
  }
  return r;
}

SuiteResult sector_structure(int max_n, const std::vector<double>& qs) {
  SuiteResult r;
  r.name = "sector";
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& occ : occupancies_three_modes(n)) {
      for (double q : qs) {
        const auto words = enumerate_permutation_words(occ);
        const auto spec = classify_sectors(gram_matrix(words, q), permutation_action(words));
        r.check(spec.total_multiplicity() == static_cast<int>(words.size()),
                "multiplicities must sum to the word count, occ=" + occ.to_string());
        int n_sym = 0, n_asym = 0;
        double lam_min = spec.clusters.front().eigenvalue;
        for (const auto& c : spec.clusters) {
          if (c.label.kind == SectorKind::Symmetric) ++n_sym;
          if (c.label.kind == SectorKind::Antisymmetric) ++n_asym;
          lam_min = std::min(lam_min, c.eigenvalue);
        }
        r.check(n_sym == 1, "exactly one symmetric cluster, occ=" + occ.to_string());
        if (std::abs(q) < 1.0)
          r.check(lam_min > -1e-9 * std::max(1.0, spec.clusters.front().eigenvalue),
                  "Gram positivity violated, occ=" + occ.to_string());
        const bool all_distinct = occ.distinct_modes() == occ.total();
        if (all_distinct && std::abs(q) < 0.45)  // generic region: no accidental merges
          r.check(n_asym == 1, "exactly one antisymmetric cluster, occ=" + occ.to_string());
        // symmetric eigenvalue is [N]!
        const auto* sym = spec.find(SectorKind::Symmetric);
        r.check(sym && std::abs(sym->eigenvalue - q_factorial(n, q)) <=
                           1e-9 * std::max(1.0, q_factorial(n, q)),
                "symmetric eigenvalue must equal [N]!, occ=" + occ.to_string());
        // orthonormality of the eigenvector columns
        const auto& V = spec.eigenvectors;
        r.check((V.transpose() * V - Eigen::MatrixXd::Identity(V.cols(), V.cols()))
                        .cwiseAbs()
                        .maxCoeff() < 1e-10,
                "sector eigenvectors must be orthonormal, occ=" + occ.to_string());
      }
    }
  }
  return r;
}

SuiteResult eq15_oracle(int max_n, const std::vector<double>& qs, double tol) {
  SuiteResult r;
  r.name = "osc";
  for (int n = 1; n <= max_n; ++n) {
    for (double q : qs) {
      const OscillatorConfig cfg{1.0, q};
      const auto solve = oscillator_full_solve(n, cfg);
      const double expect = oscillator_energy(n, cfg);
      double sym_energy = 0.0;
      int sym_mult = 0, sym_levels = 0;
      for (const auto& lvl : solve.levels) {
        if (lvl.sector.kind != SectorKind::Symmetric) continue;
        ++sym_levels;
        sym_energy = lvl.energy;
        sym_mult += lvl.multiplicity;
      }
      std::ostringstream msg;
      msg << "oscillator oracle at N=" << n << " q=" << q << ": got " << sym_energy << " want "
          << expect;
      r.check(sym_levels == 1, "symmetric sector must carry a single energy at N=" +
                                   std::to_string(n));
      r.check(std::abs(sym_energy - expect) <= tol * std::abs(expect), msg.str());
      r.check(sym_mult == oscillator_degeneracy(n),
              "symmetric multiplicity must be (N+1)(N+2)/2 at N=" + std::to_string(n));
    }
    {  // bosonic limit: spectrum collapses onto ħω(N + 3/2)
      const OscillatorConfig cfg{1.0, 1.0};
      const auto solve = oscillator_full_solve(n, cfg);
      r.check(solve.levels.size() == 1 &&
                  std::abs(solve.levels.front().energy - (n + 1.5)) < 1e-9 &&
                  solve.levels.front().sector.kind == SectorKind::Symmetric,
              "bosonic collapse at N=" + std::to_string(n));
      for (const auto& occ : occupancies_three_modes(n)) {
        const auto words = enumerate_permutation_words(occ);
        const auto spec = classify_sectors(gram_matrix(words, 1.0), permutation_action(words));
        for (const auto& c : spec.clusters)
          if (c.label.kind != SectorKind::Symmetric)
            r.check(c.null_state, "non-symmetric sectors must be null at q=1");
      }
    }
  }
  return r;
}

SuiteResult rotor_algebra(int max_n, const std::vector<double>& qs, double tol) {
  SuiteResult r;
  r.name = "rotor";
  for (int n = 1; n <= max_n; ++n) {
    std::vector<OccupancyVector> occs;
    for (int k = 0; k <= n; ++k)
      occs.push_back(OccupancyVector{{kRotorPlus, k}, {kRotorMinus, n - k}});
    for (double q : qs) {
      const double bn = q_bracket(n, q);
      for (const auto& bra : occs) {
        for (const auto& ket : occs) {
          const double comm_pm = rotor_matrix_element(RotorOp::CommPlusMinus, bra, ket, q);
          const double two_l0 = 2.0 * rotor_matrix_element(RotorOp::LZero, bra, ket, q);
          r.check(std::abs(comm_pm - two_l0) <= tol,
                  "[L+,L-] must equal 2 L0 at N=" + std::to_string(n));
          if (bra == ket) {
            const double expect =
                bn / n * (ket.count(kRotorPlus) - ket.count(kRotorMinus));
            r.check(std::abs(two_l0 - expect) <= tol,
                    "2 L0 diagonal must be ([N]/N)(n+ - n-) at N=" + std::to_string(n));
            const double l2 = rotor_matrix_element(RotorOp::LSquared, bra, ket, q);
            r.check(std::abs(l2 - 0.5 * bn * (0.5 * bn + 1.0)) <= tol,
                    "L² diagonal must be ([N]/2)([N]/2+1) at N=" + std::to_string(n));
          } else {
            r.check(std::abs(two_l0) <= tol, "L0 must be diagonal");
            r.check(std::abs(rotor_matrix_element(RotorOp::LSquared, bra, ket, q)) <= tol,
                    "L² must be diagonal");
          }
          const double comm_0p = rotor_matrix_element(RotorOp::CommZeroPlus, bra, ket, q);
          const double lp = rotor_matrix_element(RotorOp::LPlus, bra, ket, q);
          r.check(std::abs(comm_0p - lp) <= tol, "[L0,L+] must equal +L+");
          const double comm_0m = rotor_matrix_element(RotorOp::CommZeroMinus, bra, ket, q);
          const double lm = rotor_matrix_element(RotorOp::LMinus, bra, ket, q);
          r.check(std::abs(comm_0m + lm) <= tol, "[L0,L-] must equal -L-");
        }
      }
    }
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"oracle", "appendix", "norm", "lowering", "gram", "sector", "osc", "rotor"};
}

std::vector<SuiteResult> run_suites(const std::string& name, int max_n) {
  if (max_n < 1 || max_n > kDefaultQuonCap)
    throw CapExceeded("verify: max-n must lie in [1, " + std::to_string(kDefaultQuonCap) + "]");
  const std::vector<double> qs{-0.9, -0.5, 0.0, 0.5, 0.9, 0.99};
  const std::vector<double> rotor_qs{0.5, 0.9, 0.99478, 1.0};
  std::vector<SuiteResult> out;
  auto want = [&](const std::string& s) { return name == "all" || name == s; };
  if (want("oracle")) out.push_back(oracle_equivalence(std::min(max_n, 6)));
  if (want("appendix")) out.push_back(appendix_induction(std::min(max_n, 6)));
  if (want("norm")) out.push_back(symmetric_norms(std::min(max_n, 6), qs));
  if (want("lowering")) out.push_back(lowering_rule(std::min(max_n, 5), qs));
  if (want("gram")) out.push_back(gram_polynomials(max_n));
  if (want("sector")) out.push_back(sector_structure(std::min(max_n, 6), {0.3, 0.7, 1.0}));
  if (want("osc")) out.push_back(eq15_oracle(std::min(max_n, 4), {0.5, 0.9, 0.99}));
  if (want("rotor")) out.push_back(rotor_algebra(max_n, rotor_qs));
  if (out.empty()) throw std::invalid_argument("verify: unknown suite '" + name + "'");
  return out;
}

}  // namespace quon::verify
