#include <doctest.h>

#include <cmath>

#include "quon/symsector.hpp"

using namespace quon;

namespace {

const QPoly kSym3{1, 2, 2, 1};    // 1 + 2q + 2q² + q³
const QPoly kAsym3{1, -2, 2, -1};
const QPoly kMix3a{1, 1, -1, -1};
const QPoly kMix3b{1, -1, -1, 1};

}  // namespace

TEST_SUITE("symsector") {
  TEST_CASE("word enumeration") {
    CHECK(enumerate_permutation_words(OccupancyVector{{1, 1}, {2, 1}}) ==
          std::vector<CreationWord>{{1, 2}, {2, 1}});
    CHECK(enumerate_permutation_words(OccupancyVector{{1, 2}}) ==
          std::vector<CreationWord>{{1, 1}});
    CHECK(enumerate_permutation_words(OccupancyVector{{1, 1}, {2, 1}, {3, 1}}).size() == 6);
    CHECK(enumerate_permutation_words(OccupancyVector{{0, 3}, {1, 2}}).size() == 10);
    CHECK_THROWS_AS((void)enumerate_permutation_words(OccupancyVector{{0, 9}}), CapExceeded);
    CHECK_THROWS_AS((void)enumerate_permutation_words(OccupancyVector{}), std::invalid_argument);
  }

  TEST_CASE("gram matrix examples") {
    const auto two = enumerate_permutation_words(OccupancyVector{{1, 1}, {2, 1}});
    const auto g2 = gram_matrix(two, 0.37);
    CHECK(g2(0, 0) == doctest::Approx(1.0));
    CHECK(g2(0, 1) == doctest::Approx(0.37));
    CHECK(g2(1, 0) == doctest::Approx(0.37));
    CHECK(g2(1, 1) == doctest::Approx(1.0));

    const auto rep = enumerate_permutation_words(OccupancyVector{{1, 2}});
    CHECK(gram_matrix(rep, 0.37)(0, 0) == doctest::Approx(1.37));

    const auto six = enumerate_permutation_words(OccupancyVector{{1, 1}, {2, 1}, {3, 1}});
    const auto g0 = gram_matrix(six, 0.0);
    CHECK((g0 - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
  }

  TEST_CASE("two-mode classification") {
    const auto words = enumerate_permutation_words(OccupancyVector{{1, 1}, {2, 1}});
    const auto spec = classify_sectors(gram_matrix(words, 0.5), permutation_action(words));
    REQUIRE(spec.clusters.size() == 2);
    CHECK(spec.clusters[0].eigenvalue == doctest::Approx(1.5));
    CHECK(spec.clusters[0].label.kind == SectorKind::Symmetric);
    CHECK(spec.clusters[1].eigenvalue == doctest::Approx(0.5));
    CHECK(spec.clusters[1].label.kind == SectorKind::Antisymmetric);
  }

  TEST_CASE("three distinct modes: the four sectors") {
    const OccupancyVector occ{{1, 1}, {2, 1}, {3, 1}};
    const auto words = enumerate_permutation_words(occ);
    const double q = 0.3;
    const auto spec = classify_sectors(gram_matrix(words, q), permutation_action(words));
    REQUIRE(spec.clusters.size() == 4);
    CHECK(spec.clusters[0].eigenvalue == doctest::Approx(kSym3.eval(q)));
    CHECK(spec.clusters[0].multiplicity == 1);
    CHECK(spec.clusters[0].label.kind == SectorKind::Symmetric);
    // descending order at q = 0.3: sym, mix_a (x2), mix_b (x2), asym
    CHECK(spec.clusters[1].eigenvalue == doctest::Approx(kMix3a.eval(q)));
    CHECK(spec.clusters[1].multiplicity == 2);
    CHECK(spec.clusters[1].label.kind == SectorKind::Mixed);
    CHECK(spec.clusters[1].label.ordinal == 1);
    CHECK(spec.clusters[2].eigenvalue == doctest::Approx(kMix3b.eval(q)));
    CHECK(spec.clusters[2].multiplicity == 2);
    CHECK(spec.clusters[2].label.ordinal == 2);
    CHECK(spec.clusters[3].eigenvalue == doctest::Approx(kAsym3.eval(q)));
    CHECK(spec.clusters[3].label.kind == SectorKind::Antisymmetric);
  }

  TEST_CASE("free limit: identity Gram collapses to one cluster") {
    const auto words = enumerate_permutation_words(OccupancyVector{{0, 1}, {1, 1}, {2, 1}});
    const auto spec = classify_sectors(gram_matrix(words, 0.0), permutation_action(words));
    REQUIRE(spec.clusters.size() == 1);
    CHECK(spec.clusters[0].eigenvalue == doctest::Approx(1.0));
    CHECK(spec.clusters[0].multiplicity == 6);
    CHECK(spec.clusters[0].label.kind == SectorKind::Symmetric);
  }

  TEST_CASE("bosonic endpoint kills non-symmetric sectors") {
    const auto words = enumerate_permutation_words(OccupancyVector{{1, 1}, {2, 1}});
    const auto spec = classify_sectors(gram_matrix(words, 1.0), permutation_action(words));
    REQUIRE(spec.clusters.size() == 2);
    CHECK(spec.clusters[0].eigenvalue == doctest::Approx(2.0));
    CHECK_FALSE(spec.clusters[0].null_state);
    CHECK(spec.clusters[1].label.kind == SectorKind::Antisymmetric);
    CHECK(spec.clusters[1].null_state);

    const auto six = enumerate_permutation_words(OccupancyVector{{1, 1}, {2, 1}, {3, 1}});
    const auto s6 = classify_sectors(gram_matrix(six, 1.0), permutation_action(six));
    CHECK(s6.clusters.front().eigenvalue == doctest::Approx(6.0));
    int null_mult = 0;
    for (const auto& c : s6.clusters)
      if (c.null_state) null_mult += c.multiplicity;
    CHECK(null_mult == 5);
  }

  TEST_CASE("exact characteristic polynomial, small matrices") {
    // [[1, q], [q, 1]] -> λ² - 2λ + (1 - q²)
    std::vector<std::vector<QPoly>> m{{QPoly::one(), QPoly{0, 1}},
                                      {QPoly{0, 1}, QPoly::one()}};
    const auto c = charpoly_exact(m);
    REQUIRE(c.size() == 3);
    CHECK(c[2] == QPoly::one());
    CHECK(c[1] == QPoly{-2});
    CHECK(c[0] == QPoly{1, 0, -1});
  }

  TEST_CASE("exact gram structure recovers the closed-form polynomials") {
    const auto s2 = exact_gram_structure(OccupancyVector{{0, 1}, {1, 1}});
    REQUIRE(s2.clusters.size() == 2);
    CHECK(s2.unresolved_dimension == 0);

    const auto s3 = exact_gram_structure(OccupancyVector{{0, 1}, {1, 1}, {2, 1}});
    CHECK(s3.unresolved_dimension == 0);
    int found = 0;
    for (const auto& c : s3.clusters) {
      if (c.poly == kSym3) {
        CHECK(c.multiplicity == 1);
        CHECK(c.symmetric);
        ++found;
      } else if (c.poly == kAsym3) {
        CHECK(c.multiplicity == 1);
        CHECK(c.antisymmetric);
        ++found;
      } else if (c.poly == kMix3a || c.poly == kMix3b) {
        CHECK(c.multiplicity == 2);
        ++found;
      }
    }
    CHECK(found == 4);
  }

  TEST_CASE("repeated-mode exact structure at N = 3") {
    const auto s = exact_gram_structure(OccupancyVector{{0, 2}, {1, 1}});
    CHECK(s.unresolved_dimension == 0);
    REQUIRE(s.clusters.size() == 3);
    for (const auto& c : s.clusters) CHECK(c.multiplicity == 1);
    // eigenvalues [3]!, 1+q-q²-q³, 1-q-q²+q³ (same polynomials as the
    // distinct-mode mixed sectors, with q-independent normalization absorbed)
    int hits = 0;
    for (const auto& c : s.clusters)
      if (c.poly == kSym3 || c.poly == kMix3a || c.poly == kMix3b) ++hits;
    CHECK(hits == 3);
  }

  TEST_CASE("exact refinement splits the accidental q = 0.5 degeneracy") {
    // at q = 0.5 the antisymmetric eigenvalue collides with one mixed pair:
    // float clustering sees three clusters, the exact route keeps all four
    const OccupancyVector occ{{1, 1}, {2, 1}, {3, 1}};
    const auto coarse = classify_occupancy(occ, 0.5, false);
    CHECK(coarse.clusters.size() == 3);
    const auto fine = classify_occupancy(occ, 0.5, true);
    REQUIRE(fine.exact_clusters.size() == 4);
    CHECK(fine.exact_clusters[0].exact_poly == kSym3);
    CHECK(fine.exact_clusters[0].label.kind == SectorKind::Symmetric);
    int asym = 0, mixed = 0;
    for (const auto& c : fine.exact_clusters) {
      if (c.label.kind == SectorKind::Antisymmetric) ++asym;
      if (c.label.kind == SectorKind::Mixed) ++mixed;
    }
    CHECK(asym == 1);
    CHECK(mixed == 2);
  }

  TEST_CASE("four-quon multiplicity profile is exact") {
    const OccupancyVector occ{{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    const auto profile = gram_multiplicity_profile(occ, BigRat(2, 5));
    const std::map<int, int> expect{{1, 2}, {2, 2}, {3, 6}};
    CHECK(profile == expect);
  }

  TEST_CASE("symmetric state closed form") {
    const auto one = symmetric_state(OccupancyVector{{1, 1}}, 0.7);
    REQUIRE(one.size() == 1);
    CHECK(one.terms().at({1}) == doctest::Approx(1.0));

    const double q = 0.6;
    const auto pair = symmetric_state(OccupancyVector{{1, 1}, {2, 1}}, q);
    CHECK(pair.terms().at({1, 2}) == doctest::Approx(1.0 / std::sqrt(2.0 * (1.0 + q))));
    CHECK(pair.terms().at({2, 1}) == doctest::Approx(1.0 / std::sqrt(2.0 * (1.0 + q))));

    const auto triple = symmetric_state(OccupancyVector{{1, 1}, {2, 1}, {3, 1}}, q);
    REQUIRE(triple.size() == 6);
    const double expect = 1.0 / std::sqrt(6.0 * kSym3.eval(q));
    for (const auto& [w, c] : triple.terms()) CHECK(c == doctest::Approx(expect));

    CHECK(inner_product(triple, triple, q) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)symmetric_state(OccupancyVector{{1, 2}}, -1.0), std::domain_error);
    CHECK_THROWS_AS((void)symmetric_state(OccupancyVector{{1, 1}, {2, 1}}, -1.0),
                    std::domain_error);
  }

  TEST_CASE("lowering and raising rules") {
    const auto l1 = lower_symmetric(OccupancyVector{{1, 1}}, 1, 0.42);
    CHECK(l1.coefficient == doctest::Approx(1.0));
    CHECK(l1.occ.total() == 0);

    const double q = 0.42;
    const auto l2 = lower_symmetric(OccupancyVector{{1, 2}}, 1, q);
    CHECK(l2.coefficient == doctest::Approx(std::sqrt(1.0 + q)));
    CHECK(l2.occ == OccupancyVector{{1, 1}});

    const auto l3 = lower_symmetric(OccupancyVector{{1, 5}}, 1, 1.0);
    CHECK(l3.coefficient == doctest::Approx(std::sqrt(5.0)));

    const auto l0 = lower_symmetric(OccupancyVector{{1, 1}}, 2, q);
    CHECK(l0.coefficient == 0.0);
    CHECK(l0.occ == OccupancyVector{{1, 1}});

    CHECK(raise_symmetric_matrix_element(OccupancyVector{}, 1, q) == doctest::Approx(1.0));
    CHECK(raise_symmetric_matrix_element(OccupancyVector{{1, 1}}, 1, q) ==
          doctest::Approx(std::sqrt(1.0 + q)));
    CHECK(raise_symmetric_matrix_element(OccupancyVector{{1, 3}}, 1, 1.0) ==
          doctest::Approx(2.0));
  }

  TEST_CASE("symmetrized word collapses to distinct orderings") {
    const auto s = symmetrized_word(OccupancyVector{{0, 2}, {1, 1}});
    REQUIRE(s.size() == 3);
    for (const auto& [w, c] : s.terms()) CHECK(c == QPoly::one());
  }
}
