#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qudit/gellmann.hpp"
#include "qudit/representations.hpp"

using namespace qudit;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

ComplexMatrix diag(std::initializer_list<double> v) {
  return vec(v).cast<std::complex<double>>().asDiagonal();
}

}  // namespace

TEST_CASE("ProbabilityVector validation") {
  CHECK_NOTHROW(ProbabilityVector(vec({0.5, 0.3, 0.2})));
  CHECK_THROWS_AS(ProbabilityVector(vec({1.2, -0.2, 0.0})), PositivityError);
  CHECK_THROWS_AS(ProbabilityVector(vec({0.5, 0.4, 0.0})), DomainError);
  CHECK_THROWS_AS(ProbabilityVector(vec({1.0})), InvalidDimension);
  try {
    ProbabilityVector(vec({0.5, 0.7, -0.2}));
    FAIL("expected a positivity error");
  } catch (const PositivityError& e) {
    CHECK(e.component() == 2);
    CHECK(e.value() == doctest::Approx(-0.2));
  }
}

TEST_CASE("p to lambda examples") {
  const double s3 = std::sqrt(3.0);
  const auto l1 = p_to_lambda(ProbabilityVector(vec({1, 0, 0})));
  CHECK(std::abs(l1[0] - 1.0) < 1e-15);
  CHECK(std::abs(l1[1] - 1 / s3) < 1e-15);
  CHECK(l1.generator_index(0) == 7);
  CHECK(l1.generator_index(1) == 8);

  CHECK(p_to_lambda(ProbabilityVector::uniform(3)).norm() < 1e-15);

  const auto l4 = p_to_lambda(ProbabilityVector(vec({0, 0, 0, 1})));
  CHECK((l4.values() - vec({0, 0, -std::sqrt(1.5)})).norm() < 1e-15);
  CHECK(l4.generator_index(2) == 15);
}

TEST_CASE("lambda to p examples") {
  const double s3 = std::sqrt(3.0);
  CHECK((lambda_to_p(BlochDiagonal(vec({1, 1 / s3}))).values() - vec({1, 0, 0})).norm() < 1e-15);
  CHECK((lambda_to_p(BlochDiagonal(vec({0, -2 / s3}))).values() - vec({0, 0, 1})).norm() < 1e-15);
  CHECK((lambda_to_p(BlochDiagonal(vec({0, 0, 0}))).values() - Vector::Constant(4, 0.25)).norm() <
        1e-15);
}

TEST_CASE("lambda outside the simplex image names the offending component") {
  try {
    lambda_to_p(BlochDiagonal(vec({2.0, 0.0})));
    FAIL("expected a positivity error");
  } catch (const PositivityError& e) {
    // p = (1/3 + 1, 1/3 - 1, 1/3)
    CHECK(e.component() == 0);
    CHECK(e.value() == doctest::Approx(4.0 / 3));
  }
  // the raw map still returns the continuation
  CHECK((lambda_to_p(vec({2.0, 0.0})) - vec({4.0 / 3, -2.0 / 3, 1.0 / 3})).norm() < 1e-15);
}

TEST_CASE("transform matrices equal the reference literals") {
  CHECK((transform_matrix(3) - oracle::literal_m3()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((inverse_transform_matrix(3) - oracle::literal_m3_inverse()).cwiseAbs().maxCoeff() <
        1e-15);
  CHECK((transform_matrix(4) - oracle::literal_m4()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((inverse_transform_matrix(4) - oracle::literal_m4_inverse()).cwiseAbs().maxCoeff() <
        1e-15);
  for (int n : {3, 4}) {
    const Matrix id = transform_matrix(n) * inverse_transform_matrix(n);
    CHECK((id - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-14);
  }
  const Matrix literal3 = oracle::literal_m3() * oracle::literal_m3_inverse();
  const Matrix literal4 = oracle::literal_m4() * oracle::literal_m4_inverse();
  CHECK((literal3 - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((literal4 - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("lambda_to_p agrees with the generator-diagonal formula") {
  // p_s = 1/n + (1/2) sum_l (Lambda_{k_l})_ss lambda_{k_l}
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 6; ++n) {
    const auto g = build_generators(n);
    const Vector p = oracle::random_simplex_point(n, rng);
    const Vector lambda = p_to_lambda(p);
    Vector q = Vector::Constant(n, 1.0 / n);
    for (int l = 0; l < n - 1; ++l) {
      q += 0.5 * lambda[l] * g.diagonal[static_cast<std::size_t>(l)].diagonal().real();
    }
    CHECK((q - p).norm() < 1e-14);
    CHECK(lambda.norm() <= bloch_bound(n) + 1e-12);
  }
}

TEST_CASE("invariants examples") {
  CHECK((invariants(ProbabilityVector(vec({1, 0, 0}))).values() - vec({1, 1})).norm() < 1e-15);
  CHECK((invariants(ProbabilityVector(vec({0.5, 0.5, 0}))).values() - vec({0.5, 0.25})).norm() <
        1e-15);
  const auto t = invariants(ProbabilityVector::uniform(4));
  CHECK((t.values() - vec({0.25, 1.0 / 16, 1.0 / 64})).norm() < 1e-15);
  CHECK(t.t(4) == doctest::Approx(1.0 / 64));
}

TEST_CASE("invariant bounds hold on random states") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < 200; ++k) {
      const auto t = invariants(ProbabilityVector(oracle::random_simplex_point(n, rng)));
      for (int ell = 2; ell <= n; ++ell) {
        CHECK(t.t(ell) >= std::pow(1.0 / n, ell - 1) - 1e-12);
        CHECK(t.t(ell) <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("t-space vertices") {
  const auto v3 = t_vertices(3);
  REQUIRE(v3.size() == 3);
  CHECK((v3[1].values() - vec({0.5, 0.25})).norm() < 1e-15);
  const auto v4 = t_vertices(4);
  CHECK((v4[3].values() - vec({0.25, 1.0 / 16, 1.0 / 64})).norm() < 1e-15);
  for (int n = 2; n <= 7; ++n) {
    CHECK((t_vertices(n)[0].values() - Vector::Ones(n - 1)).norm() == 0.0);
  }
  CHECK_THROWS_AS(t_vertices(1), InvalidDimension);
}

TEST_CASE("polar parametrisation examples") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<double> angles(static_cast<std::size_t>(n - 2), 0.3);
    const auto pt = polar_to_p(n, 0.0, angles);
    CHECK((pt.p - Vector::Constant(n, 1.0 / n)).norm() < 1e-15);
    CHECK(pt.physical);
  }
  const std::array<double, 1> a3{std::numbers::pi / 6};
  const auto vertex = polar_to_p(3, 2 / std::sqrt(3.0), a3);
  CHECK((vertex.p - vec({1, 0, 0})).norm() < 1e-15);

  const std::array<double, 2> a4{0.7, std::numbers::pi};
  const auto v4 = polar_to_p(4, std::sqrt(1.5), a4);
  CHECK((v4.p - vec({0, 0, 0, 1})).norm() < 1e-15);

  // least-squares expansion of p4 - pe on the frame recovers the same direction
  const auto frame = simplex_frame(4);
  const Vector coeffs = frame.basis().colPivHouseholderQr().solve(vec({0, 0, 0, 1}) - frame.center);
  CHECK((coeffs - vec({0, 0, -std::sqrt(0.75)})).norm() < 1e-15);

  const std::array<double, 1> far{0.0};
  CHECK_FALSE(polar_to_p(3, 2.0, far).physical);
  CHECK_THROWS_AS(polar_to_p(3, -0.1, far), DomainError);
  CHECK_THROWS_AS(polar_to_p(4, 0.1, far), DimensionMismatch);
}

TEST_CASE("hyperspherical convention is the alternate ququart ordering") {
  const std::array<double, 2> canonical{0.4, 1.1};   // (phi, theta)
  const auto c = polar_direction(4, canonical, AngleConvention::Canonical);
  CHECK(std::abs(c.norm() - 1.0) < 1e-15);
  CHECK(std::abs(c[2] - std::cos(1.1)) < 1e-15);
  const std::array<double, 2> hyper{0.4, 1.1};
  const auto h = polar_direction(4, hyper, AngleConvention::Hyperspherical);
  CHECK(std::abs(h[0] - std::cos(0.4)) < 1e-15);
  CHECK(std::abs(h[2] - std::sin(0.4) * std::sin(1.1)) < 1e-15);
  for (int n = 2; n <= 6; ++n) {
    std::vector<double> angles(static_cast<std::size_t>(n - 2), 0.9);
    CHECK(std::abs(polar_direction(n, angles, AngleConvention::Hyperspherical).norm() - 1.0) <
          1e-15);
  }
}

TEST_CASE("ququart purity along the polar parametrisation") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 500; ++k) {
    const double r = 1.3 * u(rng);
    const std::array<double, 2> a{2 * std::numbers::pi * u(rng), std::numbers::pi * u(rng)};
    const auto pt = polar_to_p(4, r, a);
    CHECK(std::abs(invariants(pt.p)[0] - (1 + 2 * r * r) / 4) < 1e-12);
  }
}

TEST_CASE("positivity check examples") {
  const auto a = positivity_check(diag({0.5, 0.3, 0.2}));
  CHECK(a.positive);
  CHECK(std::abs(a.coefficients[0] - 1.0) < 1e-15);

  const auto pure = positivity_check(diag({1, 0, 0}));
  CHECK(pure.positive);
  CHECK(std::abs(pure.coefficients[1]) < 1e-15);
  CHECK(std::abs(pure.coefficients[2]) < 1e-15);

  const auto g = build_generators(3);
  const ComplexMatrix rho = ComplexMatrix::Identity(3, 3) / 3.0 + 2.0 * g.at(7) / 2.0;
  const auto ev = oracle::hermitian_eigenvalues(rho);
  CHECK(ev.minCoeff() < 0.0);
  CHECK_FALSE(positivity_check(rho).positive);
}

TEST_CASE("positivity check rejects malformed input") {
  CHECK_THROWS_AS(positivity_check(ComplexMatrix::Zero(2, 3)), ShapeError);
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 1) = 1.0;
  CHECK_THROWS_AS(positivity_check(h), ShapeError);
}

TEST_CASE("elementary symmetric polynomials from power sums") {
  // roots 1, 2, 3: e = (6, 11, 6)
  const std::array<double, 3> s{6, 14, 36};
  const auto e = elementary_from_power_sums(s);
  CHECK(e[0] == doctest::Approx(6));
  CHECK(e[1] == doctest::Approx(11));
  CHECK(e[2] == doctest::Approx(6));
}

TEST_CASE("orbit classification examples") {
  const auto a = orbit_classification(ProbabilityVector(vec({0.5, 0.3, 0.2})), 1e-9);
  CHECK(a.multiplicities == std::vector<int>{1, 1, 1});
  CHECK(a.orbit_dimension == 6);
  const auto b = orbit_classification(ProbabilityVector(vec({0.4, 0.4, 0.2})));
  CHECK(b.multiplicities == std::vector<int>{2, 1});
  CHECK(b.orbit_dimension == 4);
  const auto c = orbit_classification(ProbabilityVector::uniform(4));
  CHECK(c.multiplicities == std::vector<int>{4});
  CHECK(c.orbit_dimension == 0);
  CHECK_THROWS_AS(orbit_classification(ProbabilityVector::uniform(3), 0.0), DomainError);
}

TEST_CASE("flag manifold dimensions over every degeneracy pattern") {
  auto dims = [](int n) {
    std::set<int> out;
    for (const auto& m : degeneracy_patterns(n)) out.insert(flag_manifold_dimension(m));
    return out;
  };
  CHECK(dims(3) == std::set<int>{0, 4, 6});
  CHECK(dims(4) == std::set<int>{0, 6, 8, 10, 12});
  const auto patterns = degeneracy_patterns(4);
  CHECK(patterns.size() == 5);
  CHECK(patterns.front() == std::vector<int>{4});
  CHECK(patterns.back() == std::vector<int>{1, 1, 1, 1});
}
