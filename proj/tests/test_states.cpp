#include <doctest.h>

#include <cmath>

#include "bineg/channels.hpp"
#include "bineg/states.hpp"

using namespace bineg;

TEST_CASE("Werner") {
  CHECK(werner_measures(0.7).negativity == doctest::Approx(0.55).epsilon(1e-14));
  const auto m = measure_triple(werner(0.7));
  CHECK(m.concurrence == doctest::Approx(0.55).epsilon(1e-12));
  CHECK(m.negativity == doctest::Approx(0.55).epsilon(1e-12));
  CHECK(m.binegativity == doctest::Approx(0.55).epsilon(1e-12));

  // Separable up to p = 1/3.
  CHECK(measure_triple(werner(1.0 / 3.0)).negativity == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(werner_measures(0.2).concurrence == 0.0);
  CHECK(measure_triple(werner(0.0)).negativity == doctest::Approx(0.0));

  for (double p : linspace(0.0, 1.0, 51))
    CHECK(max_abs_diff(measure_triple(werner(p)), werner_measures(p)) < 1e-10);

  CHECK_THROWS_AS(werner(1.1), ValidationError);
  CHECK_THROWS_AS(werner(-0.1), ValidationError);
}

TEST_CASE("Bell-diagonal") {
  SUBCASE("spot values") {
    CHECK(bell_diagonal_measures({-0.6, -0.6, -0.6}).negativity == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(bell_diagonal_measures({-0.8, -0.5, -0.5}).negativity == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(max_abs_diff(measure_triple(bell_diagonal({-0.8, -0.5, -0.5})), bell_diagonal_measures({-0.8, -0.5, -0.5})) <
          1e-10);
  }
  SUBCASE("eigenvalues sum to one") {
    const auto l = bell_diagonal_eigenvalues({0.1, -0.3, 0.2});
    CHECK(l[0] + l[1] + l[2] + l[3] == doctest::Approx(1.0));
  }
  SUBCASE("grid") {
    for (double s : linspace(-1.0, 1.0, 51)) {
      for (BellDiagonalParams c : {BellDiagonalParams{s, s, s}, BellDiagonalParams{s, -s, s},
                                   BellDiagonalParams{s, 0.0, 0.0}}) {
        bool valid = true;
        for (double l : bell_diagonal_eigenvalues(c)) valid = valid && l >= 0.0;
        if (!valid) continue;
        CHECK(max_abs_diff(measure_triple(bell_diagonal(c)), bell_diagonal_measures(c)) < 1e-10);
      }
    }
  }
  SUBCASE("outside the tetrahedron") { CHECK_THROWS_AS(bell_diagonal({1.0, 1.0, 1.0}), ValidationError); }
}

TEST_CASE("MEM") {
  CHECK(mem_g(0.8) == doctest::Approx(0.4));
  CHECK(mem_g(0.5) == doctest::Approx(1.0 / 3.0));
  CHECK(mem_measures(0.5).negativity == doctest::Approx(0.267592).epsilon(1e-6));
  CHECK(mem_measures(0.5).negativity == doctest::Approx(0.26759187924399813).epsilon(1e-12));
  CHECK(mem_measures(0.8).binegativity == doctest::Approx(0.615296312547233).epsilon(1e-12));

  // Both branches meet at C = 2/3.
  const double edge = 2.0 / 3.0;
  CHECK(max_abs_diff(mem_measures(edge - 1e-12), mem_measures(edge + 1e-12)) < 1e-9);
  CHECK(max_abs_diff(measure_triple(mem(edge)), mem_measures(edge)) < 1e-10);

  for (double c : linspace(0.0, 1.0, 51)) {
    CHECK(max_abs_diff(measure_triple(mem(c)), mem_measures(c)) < 1e-10);
    CHECK(mem_measures(c).concurrence == doctest::Approx(c));
  }
  CHECK_THROWS_AS(mem(1.5), ValidationError);
}

TEST_CASE("generalized MEM") {
  SUBCASE("reproduces MEM") {
    for (double c : linspace(0.0, 1.0, 26)) {
      const double g = mem_g(c);
      const GMemParams q{g - c / 2.0, g - c / 2.0, 1.0 - 2.0 * g, 0.0, c};
      CHECK(max_abs_diff(gmem(q).matrix(), mem(c).matrix()) < 1e-15);
      CHECK(max_abs_diff(gmem_measures(q), mem_measures(c)) < 1e-10);
    }
  }
  SUBCASE("grid") {
    for (double gamma : linspace(0.0, 1.0, 51)) {
      const double rest = 1.0 - gamma;
      for (const GMemParams& q : {GMemParams{0.1 * rest, 0.2 * rest, 0.3 * rest, 0.4 * rest, gamma},
                                  GMemParams{0.5 * rest, 0.0, 0.5 * rest, 0.0, gamma},
                                  GMemParams{0.0, 0.0, 0.5 * rest, 0.5 * rest, gamma}})
        CHECK(max_abs_diff(measure_triple(gmem(q)), gmem_measures(q)) < 1e-10);
    }
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(gmem({0.5, 0.5, 0.5, 0.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(gmem({-0.1, 0.5, 0.3, 0.3, 0.0}), ValidationError);
  }
}

TEST_CASE("EW family") {
  CHECK(ew_measures({0.8, 0.4}).negativity == doctest::Approx(0.48656968895434777).epsilon(1e-12));
  CHECK(measure_triple(ew({0.8, 0.4})).negativity == doctest::Approx(0.48656968895434777).epsilon(1e-12));
  CHECK(ew_measures({0.8, 0.4}).negativity == doctest::Approx(0.486567).epsilon(1e-5));
  CHECK(measure_triple(ew({1.0, 0.4})).concurrence == doctest::Approx(0.7332121111929343).epsilon(1e-12));

  for (double p : linspace(0.0, 1.0, 51))
    for (Complex a : {Complex(0.4), Complex(0.3, 0.2), Complex(0.0, 0.9), Complex(1.0)})
      CHECK(max_abs_diff(measure_triple(ew({p, a})), ew_measures({p, a})) < 1e-10);

  CHECK(EwParams{0.5, 0.6}.beta().real() == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(ew({0.5, 1.2}), ValidationError);
  CHECK_THROWS_AS(ew({1.5, 0.4}), ValidationError);
}
