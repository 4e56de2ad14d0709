#include <doctest.h>

#include <cmath>
#include <random>

#include "quon/qnum.hpp"

using namespace quon;

TEST_SUITE("qpoly") {
  TEST_CASE("ring operations") {
    const QPoly a{1, 1};   // 1 + q
    const QPoly b{1, -1};  // 1 - q
    CHECK((a * b) == QPoly{1, 0, -1});
    CHECK(QPoly{1, 2, 2, 1}.eval(1.0) == doctest::Approx(6.0));
    CHECK((a + QPoly::zero()) == a);
    CHECK((a - a).is_zero());
    CHECK(QPoly::zero().degree() == -1);
    CHECK(a.degree() == 1);
  }

  TEST_CASE("normalization strips trailing zeros") {
    QPoly p{0, 1};
    p -= QPoly{0, 1};
    CHECK(p.is_zero());
    CHECK(QPoly{1, 1, 0, 0} == QPoly{1, 1});
  }

  TEST_CASE("rendering") {
    CHECK(QPoly{1, 2, 2, 1}.to_string() == "1 + 2q + 2q^2 + q^3");
    CHECK(QPoly{1, -1, -1, 1}.to_string() == "1 - q - q^2 + q^3");
    CHECK(QPoly{0, 1}.to_string() == "q");
    CHECK(QPoly::zero().to_string() == "0");
    CHECK(QPoly{-3, 0, 4}.to_string() == "-3 + 4q^2");
  }

  TEST_CASE("exact division") {
    CHECK(QPoly{2, 4, 6}.divided_exact(2) == QPoly{1, 2, 3});
    const QPoly odd{1, 2};
    CHECK_THROWS_AS((void)odd.divided_exact(2), std::domain_error);
  }

  TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 6);
    auto random_poly = [&] {
      std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& x : c) x = coeff(rng);
      return QPoly(std::move(c));
    };
    for (int i = 0; i < 200; ++i) {
      const QPoly a = random_poly(), b = random_poly(), c = random_poly();
      CHECK(((a * b) * c) == (a * (b * c)));
      CHECK((a * (b + c)) == (a * b + a * c));
      CHECK((a + b) == (b + a));
      CHECK((a * b) == (b * a));
    }
  }
}

TEST_SUITE("qnum") {
  TEST_CASE("q_bracket values") {
    CHECK(q_bracket(1, -0.3) == doctest::Approx(1.0));
    CHECK(q_bracket(3, 1.0) == 3.0);  // geometric-sum form is exact at q = 1
    CHECK(q_bracket(2, 0.5) == doctest::Approx(1.5));
    CHECK(q_bracket(0, 0.7) == 0.0);
    CHECK_THROWS_AS((void)q_bracket(-1, 0.5), std::invalid_argument);
  }

  TEST_CASE("q_bracket_poly values") {
    CHECK(q_bracket_poly(0).is_zero());
    CHECK(q_bracket_poly(2) == QPoly{1, 1});
    CHECK(q_bracket_poly(4) == QPoly{1, 1, 1, 1});
  }

  TEST_CASE("q_factorial values") {
    CHECK(q_factorial(0, 0.123) == 1.0);
    CHECK(q_factorial(3, 1.0) == 6.0);
    CHECK(q_factorial_poly(3) == QPoly{1, 2, 2, 1});
    CHECK(q_factorial_poly(0) == QPoly::one());
  }

  TEST_CASE("bracket recurrence [N] = 1 + q[N-1]") {
    for (double q : {-1.0, -0.7, -0.2, 0.0, 0.4, 0.9, 1.0}) {
      for (int n = 1; n <= 30; ++n) {
        CHECK(q_bracket(n, q) ==
              doctest::Approx(1.0 + q * q_bracket(n - 1, q)).epsilon(1e-14));
      }
    }
  }

  TEST_CASE("polynomial twin agrees with floating bracket") {
    for (double q : {-1.0, -0.99, -0.5, 0.0, 0.3, 0.77, 0.999, 1.0}) {
      for (int n = 0; n <= 30; ++n) {
        const double ref = q_bracket(n, q);
        const double via_poly = q_bracket_poly(n).eval(q);
        CHECK(via_poly == doctest::Approx(ref).epsilon(1e-14));
      }
    }
  }

  TEST_CASE("factorial at q = 1 is the ordinary factorial, exactly") {
    double fact = 1.0;
    for (int n = 1; n <= 12; ++n) {
      fact *= n;
      CHECK(q_factorial(n, 1.0) == fact);
    }
  }

  TEST_CASE("deformation parameter is range-checked") {
    CHECK_THROWS_AS(DeformationParameter(1.5), std::invalid_argument);
    CHECK_THROWS_AS(DeformationParameter(-1.0001), std::invalid_argument);
    CHECK(DeformationParameter(-1.0).value() == -1.0);
    CHECK(DeformationParameter(1.0).value() == 1.0);
  }
}
