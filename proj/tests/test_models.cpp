#include <doctest.h>

#include <cmath>

#include "quon/models.hpp"

using namespace quon;

namespace {

// Fully independent evaluation of a rotor operator sandwich through the
// rewrite kernel: operators are concatenated MixedWords, states are the
// closed-form symmetric vectors.
using OpSum = std::vector<std::pair<double, MixedWord>>;

OpSum lp() { return {{1.0, {{kRotorPlus, OpKind::Create}, {kRotorMinus, OpKind::Annihilate}}}}; }
OpSum lm() { return {{1.0, {{kRotorMinus, OpKind::Create}, {kRotorPlus, OpKind::Annihilate}}}}; }
OpSum l0() {
  return {{0.5, {{kRotorPlus, OpKind::Create}, {kRotorPlus, OpKind::Annihilate}}},
          {-0.5, {{kRotorMinus, OpKind::Create}, {kRotorMinus, OpKind::Annihilate}}}};
}

OpSum product(const OpSum& a, const OpSum& b) {
  OpSum out;
  for (const auto& [ca, wa] : a)
    for (const auto& [cb, wb] : b) {
      MixedWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.emplace_back(ca * cb, w);
    }
  return out;
}

OpSum minus(OpSum a, const OpSum& b) {
  for (const auto& [c, w] : b) a.emplace_back(-c, w);
  return a;
}

OpSum scaled(OpSum a, double s) {
  for (auto& [c, w] : a) c *= s;
  return a;
}

OpSum plus(OpSum a, const OpSum& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

double full_space_element(const OpSum& op, const OccupancyVector& bra,
                          const OccupancyVector& ket, DeformationParameter q) {
  const auto bvec = symmetric_state(bra, q);
  const auto kvec = symmetric_state(ket, q);
  double acc = 0.0;
  for (const auto& [coeff, opword] : op)
    for (const auto& [wb, cb] : bvec.terms())
      for (const auto& [wk, ck] : kvec.terms()) {
        MixedWord w = annihilators_adjoint(wb);
        w.insert(w.end(), opword.begin(), opword.end());
        for (const FockOp& c : creators(wk)) w.push_back(c);
        acc += coeff * cb * ck * vev_rewrite(w, q);
      }
  return acc;
}

}  // namespace

TEST_SUITE("models") {
  TEST_CASE("oscillator energy formula") {
    CHECK(oscillator_energy(0, {1.0, 0.3}) == doctest::Approx(1.5));
    CHECK(oscillator_energy(0, {1.0, -0.9}) == doctest::Approx(1.5));
    CHECK(oscillator_energy(2, {1.0, 1.0}) == doctest::Approx(3.5));
    CHECK(oscillator_energy(2, {1.0, 0.98}) == doctest::Approx(3.4602).epsilon(1e-12));
    CHECK(oscillator_energy(3, {2.0, 1.0}) == doctest::Approx(9.0));  // ħω = 2
  }

  TEST_CASE("oscillator degeneracy") {
    CHECK(oscillator_degeneracy(0) == 1);
    CHECK(oscillator_degeneracy(1) == 3);
    CHECK(oscillator_degeneracy(3) == 10);
    // brute-force occupancy count
    for (int n = 0; n <= 8; ++n) {
      int count = 0;
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) ++count;
      CHECK(oscillator_degeneracy(n) == count);
    }
  }

  TEST_CASE("full solve: one quantum") {
    for (double q : {0.2, 0.9}) {
      const auto r = oscillator_full_solve(1, {1.0, q});
      REQUIRE(r.levels.size() == 1);
      CHECK(r.levels[0].energy == doctest::Approx(0.5 * ((1 + q) + 3)));
      CHECK(r.levels[0].sector.kind == SectorKind::Symmetric);
      CHECK(r.levels[0].multiplicity == 3);
    }
  }

  TEST_CASE("full solve matches the closed form in the symmetric sector") {
    const auto r = oscillator_full_solve(2, {1.0, 0.9});
    const double expect = oscillator_energy(2, {1.0, 0.9});
    bool found = false;
    for (const auto& lvl : r.levels) {
      if (lvl.sector.kind != SectorKind::Symmetric) continue;
      found = true;
      CHECK(lvl.energy == doctest::Approx(expect).epsilon(1e-10));
      CHECK(lvl.multiplicity == 6);
    }
    CHECK(found);
    CHECK(r.gram_condition >= 1.0);
  }

  TEST_CASE("full solve at q = 0: all quon numbers share one symmetric energy") {
    for (int n : {1, 2, 3}) {
      const auto r = oscillator_full_solve(n, {1.0, 0.0});
      bool found = false;
      for (const auto& lvl : r.levels)
        if (lvl.sector.kind == SectorKind::Symmetric) {
          found = true;
          CHECK(lvl.energy == doctest::Approx(2.0));  // [N] = 1 at q = 0
        }
      CHECK(found);
    }
  }

  TEST_CASE("full solve collapses at the bosonic endpoint") {
    const auto r = oscillator_full_solve(2, {1.0, 1.0});
    REQUIRE(r.levels.size() == 1);
    CHECK(r.levels[0].energy == doctest::Approx(3.5));
    CHECK(r.levels[0].multiplicity == 6);
  }

  TEST_CASE("full solve guards") {
    CHECK_THROWS_AS((void)oscillator_full_solve(7, {1.0, 0.5}), CapExceeded);
    CHECK_THROWS_AS((void)oscillator_full_solve(0, {1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS((void)oscillator_full_solve(2, {1.0, 1.0 - 1e-7}), std::domain_error);
  }

  TEST_CASE("sector filter") {
    const auto r = oscillator_full_solve(2, {1.0, 0.5}, SectorKind::Symmetric);
    REQUIRE(r.levels.size() == 1);
    CHECK(r.levels[0].sector.kind == SectorKind::Symmetric);
  }

  TEST_CASE("monotone compression of the oscillator spectrum") {
    for (int n = 2; n <= 10; ++n) {
      const double e98 = oscillator_energy(n, {1.0, 0.98});
      const double e99 = oscillator_energy(n, {1.0, 0.99});
      const double e1 = oscillator_energy(n, {1.0, 1.0});
      CHECK(e98 < e99);
      CHECK(e99 < e1);
    }
    // strictly increasing in q on (0, 1] for fixed N >= 2
    for (int n : {2, 5}) {
      double prev = oscillator_energy(n, {1.0, 0.05});
      for (double q = 0.1; q <= 1.0; q += 0.05) {
        const double e = oscillator_energy(n, {1.0, q});
        CHECK(e > prev);
        prev = e;
      }
    }
    // non-decreasing level order within one spectrum
    for (double q : {0.3, 1.0}) {
      const auto osc = oscillator_spectrum(8, {1.0, q});
      for (std::size_t i = 1; i < osc.size(); ++i) CHECK(osc[i].energy >= osc[i - 1].energy);
      const auto rot = rotor_spectrum(8, {1.0, q});
      for (std::size_t i = 1; i < rot.size(); ++i) CHECK(rot[i].energy >= rot[i - 1].energy);
    }
  }

  TEST_CASE("rotor matrix elements against the rewrite kernel") {
    const OpSum comm_pm = minus(product(lp(), lm()), product(lm(), lp()));
    const OpSum comm_0p = minus(product(l0(), lp()), product(lp(), l0()));
    const OpSum comm_0m = minus(product(l0(), lm()), product(lm(), l0()));
    const OpSum l2 = plus(product(l0(), l0()),
                          plus(scaled(product(lp(), lm()), 0.5), scaled(product(lm(), lp()), 0.5)));
    const std::vector<std::pair<RotorOp, OpSum>> ops{
        {RotorOp::LPlus, lp()},         {RotorOp::LMinus, lm()},
        {RotorOp::LZero, l0()},         {RotorOp::CommPlusMinus, comm_pm},
        {RotorOp::CommZeroPlus, comm_0p}, {RotorOp::CommZeroMinus, comm_0m},
        {RotorOp::LSquared, l2}};
    for (double q : {-0.4, 0.6, 1.0}) {
      for (int n = 1; n <= 4; ++n) {
        for (int kb = 0; kb <= n; ++kb) {
          const OccupancyVector bra{{kRotorPlus, kb}, {kRotorMinus, n - kb}};
          for (int kk = 0; kk <= n; ++kk) {
            const OccupancyVector ket{{kRotorPlus, kk}, {kRotorMinus, n - kk}};
            for (const auto& [op, sum] : ops) {
              const double chained = rotor_matrix_element(op, bra, ket, q);
              const double direct = full_space_element(sum, bra, ket, q);
              CHECK(chained == doctest::Approx(direct).epsilon(1e-10));
            }
          }
        }
      }
    }
  }

  TEST_CASE("rotor matrix element closed forms") {
    const double q = 0.77;
    for (int n = 1; n <= 6; ++n) {
      const double bn = q_bracket(n, q);
      for (int k = 0; k <= n; ++k) {
        const OccupancyVector occ{{kRotorPlus, k}, {kRotorMinus, n - k}};
        CHECK(2.0 * rotor_matrix_element(RotorOp::LZero, occ, occ, q) ==
              doctest::Approx(bn / n * (2 * k - n)).epsilon(1e-12));
        CHECK(rotor_matrix_element(RotorOp::CommPlusMinus, occ, occ, q) ==
              doctest::Approx(bn / n * (2 * k - n)).epsilon(1e-12));
        CHECK(rotor_matrix_element(RotorOp::LSquared, occ, occ, q) ==
              doctest::Approx(0.5 * bn * (0.5 * bn + 1.0)).epsilon(1e-12));
      }
    }
    // m = 0 states carry no L0
    const OccupancyVector balanced{{kRotorPlus, 2}, {kRotorMinus, 2}};
    CHECK(rotor_matrix_element(RotorOp::LZero, balanced, balanced, q) == doctest::Approx(0.0));
    CHECK_THROWS_AS(
        (void)rotor_matrix_element(RotorOp::LZero, OccupancyVector{{2, 1}},
                                   OccupancyVector{{2, 1}}, 0.5),
        std::invalid_argument);
  }

  TEST_CASE("rotor energy") {
    CHECK(rotor_energy(0, {1.0, 0.5}) == 0.0);
    CHECK(rotor_energy(2, {1.0, 1.0}) == doctest::Approx(6.0));
    CHECK(rotor_energy(2, {3.0, 1.0}) == doctest::Approx(18.0));
    // high-precision reference value at the fitted deformation
    CHECK(rotor_energy(2, {1.0, 0.99478}) ==
          doctest::Approx(5.9222156623581847).epsilon(1e-14));
    CHECK_THROWS_AS((void)rotor_energy(-1, {1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS((void)rotor_energy(2, {-1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS((void)oscillator_energy(2, {0.0, 0.5}), std::invalid_argument);
  }

  TEST_CASE("rigid limit and stretching") {
    for (int l = 0; l <= 12; ++l)
      CHECK(rotor_energy(l, {1.0, 1.0}) == static_cast<double>(l * (l + 1)));
    double prev = 1e300;
    for (int l = 2; l <= 24; l += 2) {
      const double ratio = rotor_energy(l, {1.0, 0.99478}) / (l * (l + 1.0));
      CHECK(ratio < prev);
      prev = ratio;
    }
  }

  TEST_CASE("spectrum helpers") {
    const auto osc = oscillator_spectrum(3, {1.0, 1.0});
    REQUIRE(osc.size() == 4);
    CHECK(osc[3].energy == doctest::Approx(4.5));
    CHECK(osc[3].quantum_numbers.at("N") == 3);
    CHECK(osc[3].degeneracy == 10);
    const auto rot = rotor_spectrum(4, {1.0, 1.0});
    CHECK(rot[4].energy == doctest::Approx(20.0));
  }
}
