#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qudit/polynomial.hpp"

using namespace qudit::poly;

namespace {

// Each oracle root must be matched by one of ours (and vice versa, counting
// clusters), to within tol relative to the root scale.
void check_same_roots(const std::vector<double>& ours, const std::vector<double>& ref,
                      double tol) {
  auto covered = [&](const std::vector<double>& a, const std::vector<double>& b) {
    for (double x : a) {
      double best = INFINITY;
      for (double y : b) best = std::min(best, std::abs(x - y));
      if (!(best <= tol * std::max(1.0, std::abs(x)))) return false;
    }
    return true;
  };
  CHECK(covered(ours, ref));
  CHECK(covered(ref, ours));
}

}  // namespace

TEST_CASE("Horner evaluation") {
  const std::array<double, 4> c{2, -3, 0, 5};
  CHECK(evaluate(c, 2.0) == doctest::Approx(2 * 8 - 3 * 4 + 5));
}

TEST_CASE("quadratic and cubic closed forms on known roots") {
  const auto q = real_roots_quadratic(1, -3, 2);
  REQUIRE(q.size() == 2);
  CHECK(q[0] == doctest::Approx(1));
  CHECK(q[1] == doctest::Approx(2));
  CHECK(real_roots_quadratic(1, 0, 1).empty());

  const auto c = real_roots_cubic(1, -6, 11, -6);
  REQUIRE(c.size() == 3);
  CHECK(std::abs(c[0] - 1) < 1e-14);
  CHECK(std::abs(c[1] - 2) < 1e-14);
  CHECK(std::abs(c[2] - 3) < 1e-14);

  const auto one = real_roots_cubic(1, 0, 1, -2);  // x^3 + x - 2 = (x-1)(x^2+x+2)
  REQUIRE(one.size() == 1);
  CHECK(std::abs(one[0] - 1) < 1e-14);
}

TEST_CASE("quartic closed form on known roots") {
  // (x-1)(x+2)(x-3)(x+0.5)
  const auto r = real_roots_quartic(1, -1.5, -6, 3.5, 3);
  REQUIRE(r.size() == 4);
  CHECK(std::abs(r[0] + 2) < 1e-12);
  CHECK(std::abs(r[1] + 0.5) < 1e-12);
  CHECK(std::abs(r[2] - 1) < 1e-12);
  CHECK(std::abs(r[3] - 3) < 1e-12);
  // biquadratic x^4 - 5x^2 + 4
  const auto b = real_roots_quartic(1, 0, -5, 0, 4);
  REQUIRE(b.size() == 4);
  CHECK(std::abs(b[0] + 2) < 1e-13);
  CHECK(std::abs(b[3] - 2) < 1e-13);
  CHECK(real_roots_quartic(1, 0, 1, 0, 1).empty());
}

TEST_CASE("smallest non-negative root") {
  const std::array<double, 4> c{1, -6, 11, -6};
  CHECK(*smallest_nonnegative_root(c) == doctest::Approx(1));
  const std::array<double, 3> none{1, 2, 1};  // root -1 only
  CHECK_FALSE(smallest_nonnegative_root(none).has_value());
  const std::array<double, 4> zero{1, 1, 1, 0};
  CHECK(*smallest_nonnegative_root(zero) == 0.0);
  const std::array<double, 4> degrade{0, 1, 0, -4};  // leading zero: x^2 - 4
  CHECK(*smallest_nonnegative_root(degrade) == doctest::Approx(2));
}

TEST_CASE("random cubics agree with the companion-matrix oracle") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    const double a = g(rng), b = g(rng), c = g(rng), d = g(rng);
    const auto ours = real_roots_cubic(a, b, c, d);
    const auto ref = oracle::real_roots({a, b, c, d});
    if (ours.size() != ref.size()) {
      // near-double roots may be classified differently; each root still
      // has to be a root
      for (double x : ours) {
        const std::array<double, 4> coeffs{a, b, c, d};
        CHECK(std::abs(evaluate(coeffs, x)) < 1e-8 * std::max(1.0, std::abs(x * x * x)));
      }
      continue;
    }
    check_same_roots(ours, ref, 1e-9);
  }
}

TEST_CASE("random quartics agree with the companion-matrix oracle") {
  std::mt19937_64 rng(22);
  std::normal_distribution<double> g(0.0, 1.0);
  int compared = 0;
  for (int k = 0; k < 2000; ++k) {
    const double a = g(rng), b = g(rng), c = g(rng), d = g(rng), e = g(rng);
    const auto ours = real_roots_quartic(a, b, c, d, e);
    const auto ref = oracle::real_roots({a, b, c, d, e});
    if (ours.size() != ref.size()) continue;
    ++compared;
    check_same_roots(ours, ref, 1e-8);
  }
  CHECK(compared > 1900);
}

TEST_CASE("random quartics with prescribed real roots") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 500; ++k) {
    std::array<double, 4> r{u(rng), u(rng), u(rng), u(rng)};
    std::sort(r.begin(), r.end());
    // expand (x - r0)(x - r1)(x - r2)(x - r3)
    const double e1 = r[0] + r[1] + r[2] + r[3];
    const double e2 = r[0] * r[1] + r[0] * r[2] + r[0] * r[3] + r[1] * r[2] + r[1] * r[3] +
                      r[2] * r[3];
    const double e3 = r[0] * r[1] * r[2] + r[0] * r[1] * r[3] + r[0] * r[2] * r[3] +
                      r[1] * r[2] * r[3];
    const double e4 = r[0] * r[1] * r[2] * r[3];
    const auto ours = real_roots_quartic(1, -e1, e2, -e3, e4);
    // well-separated roots must all be found
    bool separated = true;
    for (int i = 0; i < 3; ++i) separated = separated && r[i + 1] - r[i] > 0.05;
    if (!separated) continue;
    REQUIRE(ours.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(ours[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(i)]) < 1e-9);
  }
}
