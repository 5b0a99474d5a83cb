#include <doctest.h>

#include <cmath>

#include "bineg/measures.hpp"
#include "bineg/sampling.hpp"
#include "bineg/states.hpp"
#include "bineg/twirl.hpp"

using namespace bineg;

namespace {

DensityMatrix4 basis_state(std::size_t k) {
  Vec4 v{};
  v[k] = 1.0;
  return DensityMatrix4::pure(v);
}

DensityMatrix4 local_rotate(const DensityMatrix4& rho, const Mat2& u, const Mat2& v) {
  const Mat4 w = kron(u, v);
  return DensityMatrix4::from_matrix((w * rho.matrix() * w.adjoint()).hermitian_part());
}

}  // namespace

TEST_CASE("DensityMatrix4 validation") {
  CHECK_NOTHROW(DensityMatrix4::maximally_mixed());
  CHECK(DensityMatrix4::maximally_mixed().purity() == doctest::Approx(0.25));

  SUBCASE("non-Hermitian") {
    Mat4 m = Mat4::diagonal({0.25, 0.25, 0.25, 0.25});
    m(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix4::from_matrix(m), ValidationError);
    CHECK(DensityMatrix4::validation_error(m).has_value());
  }
  SUBCASE("wrong trace") {
    CHECK_THROWS_AS(DensityMatrix4::from_matrix(Mat4::identity()), ValidationError);
  }
  SUBCASE("not positive") {
    CHECK_THROWS_AS(DensityMatrix4::from_matrix(Mat4::diagonal({1.5, -0.5, 0.0, 0.0})), ValidationError);
  }
  SUBCASE("non-finite") {
    Mat4 m = Mat4::diagonal({1.0, 0.0, 0.0, 0.0});
    m(2, 2) = std::nan("");
    CHECK_THROWS_AS(DensityMatrix4::from_matrix(m), ValidationError);
  }
  SUBCASE("pure() normalizes") {
    const auto rho = DensityMatrix4::pure(Vec4{2.0, 0.0, 0.0, 0.0});
    CHECK(rho(0, 0) == Complex(1.0));
    CHECK(rho.purity() == doctest::Approx(1.0));
  }
  SUBCASE("zero vector rejected") { CHECK_THROWS_AS(DensityMatrix4::pure(Vec4{}), ValidationError); }
}

TEST_CASE("product and maximally mixed states are PPT") {
  for (std::size_t k = 0; k < 4; ++k) {
    const auto t = measure_triple(basis_state(k));
    CHECK(t.concurrence == doctest::Approx(0.0));
    CHECK(t.negativity == doctest::Approx(0.0));
    CHECK(t.binegativity == doctest::Approx(0.0));
    CHECK(negative_eigenvalue_count(basis_state(k)) == 0);
    CHECK(binegativity_closed(basis_state(k)) == 0.0);
    CHECK_THROWS_AS(negative_eigvec_state(basis_state(k)), NoNegativeEigenvalue);
  }
  const auto t = measure_triple(DensityMatrix4::maximally_mixed());
  CHECK(t.concurrence == 0.0);
  CHECK(t.negativity == doctest::Approx(0.0));
}

TEST_CASE("singlet is maximally entangled") {
  const auto rho = DensityMatrix4::pure(singlet_vector());
  const auto t = measure_triple(rho);
  CHECK(t.concurrence == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t.negativity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t.binegativity == doctest::Approx(1.0).epsilon(1e-12));
  const auto psi = negative_eigvec_state(rho);
  CHECK(psi.negative_eigenvalue_magnitude == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(negativity(psi.state) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("MEM frozen values") {
  // Independent numpy pipeline.
  SUBCASE("C = 0.8") {
    const auto rho = mem(0.8);
    CHECK(negativity(rho) == doctest::Approx(0.6246211251235323).epsilon(1e-12));
    CHECK(binegativity_spectral(rho) == doctest::Approx(0.615296312547233).epsilon(1e-12));
    CHECK(binegativity_closed(rho) == doctest::Approx(0.615296312547233).epsilon(1e-12));
    CHECK(concurrence(rho) == doctest::Approx(0.8).epsilon(1e-12));
  }
  SUBCASE("C = 0.5") {
    const auto rho = mem(0.5);
    CHECK(negativity(rho) == doctest::Approx(0.26759187924399813).epsilon(1e-12));
    CHECK(binegativity_spectral(rho) == doctest::Approx(0.2451208905656917).epsilon(1e-12));
  }
}

TEST_CASE("closed-form N2 identity, ordering and single negative eigenvalue on Ginibre states") {
  Rng rng(123);
  for (int t = 0; t < 2000; ++t) {
    const auto rho = random_state_ginibre(rng);
    const auto m = measure_triple(rho);
    CHECK(std::abs(m.binegativity - binegativity_closed(rho)) < 1e-9);
    CHECK(m.binegativity <= m.negativity + 1e-9);
    CHECK(m.negativity <= m.concurrence + 1e-9);
    CHECK(negative_eigenvalue_count(rho) <= 1);
    CHECK((m.negativity < 1e-9) == (m.concurrence < 1e-9));
  }
}

TEST_CASE("pure states: C = N = N2") {
  Rng rng(321);
  for (int t = 0; t < 1000; ++t) {
    const auto m = measure_triple(random_pure_state(rng));
    CHECK(std::abs(m.binegativity - m.negativity) < 1e-9);
    CHECK(std::abs(m.negativity - m.concurrence) < 1e-9);
  }
  // Schmidt form cos θ|00⟩ + sin θ|11⟩ has C = sin 2θ.
  for (double th : {0.1, 0.4, 0.7}) {
    const auto rho = DensityMatrix4::pure(Vec4{std::cos(th), 0.0, 0.0, std::sin(th)});
    CHECK(concurrence(rho) == doctest::Approx(std::sin(2.0 * th)).epsilon(1e-12));
  }
}

TEST_CASE("local-unitary invariance") {
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    const auto rho = random_state_ginibre(rng);
    const auto rotated = local_rotate(rho, haar_unitary_2(rng), haar_unitary_2(rng));
    CHECK(max_abs_diff(measure_triple(rho), measure_triple(rotated)) < 1e-10);
  }
}

TEST_CASE("negativity cross-check with trace norm") {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto rho = random_state_ginibre(rng);
    CHECK(std::abs(negativity(rho) - (trace_norm(partial_transpose(rho.matrix())) - 1.0)) < 1e-10);
  }
}

TEST_CASE("X-states") {
  SUBCASE("maximally mixed X-state") {
    XState x;
    x.a = x.b = x.d = 0.25;
    x.c = 0.25;
    const auto m = xstate_measures(x);
    CHECK(m.concurrence == doctest::Approx(0.0));
    CHECK(m.negativity == doctest::Approx(0.0));
    CHECK(m.binegativity == doctest::Approx(0.0));
  }
  SUBCASE("branches") {
    XState outer;
    outer.a = outer.d = 0.5;
    outer.e = 0.4;
    CHECK(xstate_branch(outer) == XStateBranch::OuterCoherence);
    XState inner;
    inner.a = 0.1;
    inner.d = 0.1;
    inner.b = 0.4;
    inner.c = 0.35;
    CHECK(xstate_branch(inner) == XStateBranch::InnerCoherence);
    XState sep;
    sep.a = sep.b = sep.d = 0.25;
    CHECK(xstate_branch(sep) == XStateBranch::Separable);
  }
  SUBCASE("invalid X-state rejected") {
    XState x;
    x.a = x.d = 0.5;
    x.e = 0.9;
    CHECK_THROWS_AS(xstate_measures(x), ValidationError);
  }
  SUBCASE("random X-states agree with the spectral pipeline") {
    Rng rng(4);
    int inner = 0, outer = 0;
    for (int t = 0; t < 2000; ++t) {
      const XState x = random_xstate(rng);
      const auto b = xstate_branch(x);
      inner += b == XStateBranch::InnerCoherence;
      outer += b == XStateBranch::OuterCoherence;
      CHECK(max_abs_diff(xstate_measures(x), measure_triple(DensityMatrix4::from_matrix(x.matrix()))) < 1e-10);
    }
    CHECK(inner > 50);
    CHECK(outer > 50);
  }
}
