#include "qudit/representations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "qudit/gellmann.hpp"

namespace qudit {

Matrix transform_matrix(int n) {
  const auto frame = simplex_frame(n);
  Matrix m(n, n);
  for (int l = 0; l < n - 1; ++l) {
    m.col(l) = frame.axes[static_cast<std::size_t>(l)] / std::numbers::sqrt2;
  }
  m.col(n - 1).setConstant(1.0 / n);
  return m;
}

Matrix inverse_transform_matrix(int n) {
  const auto frame = simplex_frame(n);
  Matrix inv(n, n);
  for (int l = 0; l < n - 1; ++l) {
    inv.row(l) = std::numbers::sqrt2 * frame.axes[static_cast<std::size_t>(l)].transpose();
  }
  inv.row(n - 1).setOnes();
  return inv;
}

Vector p_to_lambda(const Vector& p) {
  const int n = static_cast<int>(p.size());
  require_dimension(n);
  const Vector augmented = inverse_transform_matrix(n) * p;
  return augmented.head(n - 1);
}

BlochDiagonal p_to_lambda(const ProbabilityVector& p) {
  return BlochDiagonal(p_to_lambda(p.values()));
}

Vector lambda_to_p(const Vector& lambda) {
  const int n = static_cast<int>(lambda.size()) + 1;
  require_dimension(n);
  Vector augmented(n);
  augmented.head(n - 1) = lambda;
  augmented[n - 1] = 1.0;
  return transform_matrix(n) * augmented;
}

ProbabilityVector lambda_to_p(const BlochDiagonal& lambda, const Tolerances& tol) {
  Vector p = lambda_to_p(lambda.values());
  for (Eigen::Index s = 0; s < p.size(); ++s) {
    if (!(p[s] >= -tol.simplex && p[s] <= 1.0 + tol.simplex)) {
      throw PositivityError(static_cast<std::size_t>(s), p[s]);
    }
  }
  return ProbabilityVector(std::move(p), tol);
}

Vector invariants(const Vector& p) {
  const auto n = p.size();
  Vector t(n - 1);
  Vector power = p.cwiseProduct(p);
  for (Eigen::Index ell = 2; ell <= n; ++ell) {
    t[ell - 2] = power.sum();
    power = power.cwiseProduct(p);
  }
  return t;
}

InvariantVector invariants(const ProbabilityVector& p) {
  return InvariantVector(invariants(p.values()));
}

std::vector<InvariantVector> t_vertices(int n) {
  require_dimension(n);
  std::vector<InvariantVector> vertices;
  vertices.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    Vector t(n - 1);
    double value = 1.0;
    for (int ell = 2; ell <= n; ++ell) {
      value /= k;
      t[ell - 2] = value;
    }
    vertices.emplace_back(std::move(t));
  }
  return vertices;
}

Vector polar_direction(int n, std::span<const double> angles,
                       AngleConvention convention) {
  require_dimension(n);
  const auto expected = static_cast<std::size_t>(n - 2);
  if (angles.size() != expected) {
    throw DimensionMismatch("n = " + std::to_string(n) + " needs " +
                            std::to_string(expected) + " angles, got " +
                            std::to_string(angles.size()));
  }
  Vector c(n - 1);
  if (n == 4 && convention == AngleConvention::Canonical) {
    const double phi = angles[0];
    const double theta = angles[1];
    c << std::cos(phi) * std::sin(theta), std::sin(phi) * std::sin(theta),
        std::cos(theta);
    return c;
  }
  double sines = 1.0;
  for (int l = 0; l < n - 2; ++l) {
    c[l] = sines * std::cos(angles[static_cast<std::size_t>(l)]);
    sines *= std::sin(angles[static_cast<std::size_t>(l)]);
  }
  c[n - 2] = sines;
  return c;
}

bool on_simplex(const Vector& p, const Tolerances& tol) {
  if (!p.allFinite()) return false;
  if (std::abs(p.sum() - 1.0) > tol.simplex) return false;
  return (p.array() >= -tol.simplex).all();
}

PolarPoint polar_to_p(int n, double r, std::span<const double> angles,
                      AngleConvention convention, const Tolerances& tol) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("polar radius must be finite and >= 0");
  }
  const auto frame = simplex_frame(n);
  const Vector c = polar_direction(n, angles, convention);
  PolarPoint out;
  out.p = frame.point((r / std::numbers::sqrt2) * c);
  out.physical = on_simplex(out.p, tol);
  return out;
}

std::vector<double> elementary_from_power_sums(std::span<const double> power_sums) {
  // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} s_i, e_0 = 1.
  const std::size_t n = power_sums.size();
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double acc = 0.0;
    double sign = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
      acc += sign * e[k - i] * power_sums[i - 1];
      sign = -sign;
    }
    e[k] = acc / static_cast<double>(k);
  }
  return {e.begin() + 1, e.end()};
}

PositivityResult positivity_check(const ComplexMatrix& h, const Tolerances& tol) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw ShapeError("expected a non-empty square matrix");
  }
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > tol.hermitian) {
    throw ShapeError("matrix is not Hermitian");
  }
  const auto n = h.rows();
  std::vector<double> power_sums;
  power_sums.reserve(static_cast<std::size_t>(n));
  ComplexMatrix power = h;
  for (Eigen::Index k = 1; k <= n; ++k) {
    power_sums.push_back(power.trace().real());
    if (k < n) power = (power * h).eval();
  }
  PositivityResult out;
  out.coefficients = elementary_from_power_sums(power_sums);
  out.positive = std::all_of(out.coefficients.begin(), out.coefficients.end(),
                             [&](double a) { return a >= -tol.positivity; });
  return out;
}

int flag_manifold_dimension(std::span<const int> multiplicities) {
  int n = 0;
  int stabilizer = 0;
  for (int m : multiplicities) {
    n += m;
    stabilizer += m * m;
  }
  return n * n - stabilizer;
}

DegeneracyPattern orbit_classification(const ProbabilityVector& p, double tol) {
  if (!(tol > 0.0)) throw DomainError("degeneracy tolerance must be > 0");
  std::vector<double> values(p.values().begin(), p.values().end());
  std::sort(values.begin(), values.end(), std::greater<>());
  const double threshold = tol * std::max(values.front(), 0.0);

  DegeneracyPattern out;
  int run = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1] - values[i] <= threshold) {
      ++run;
    } else {
      out.multiplicities.push_back(run);
      run = 1;
    }
  }
  out.multiplicities.push_back(run);
  out.orbit_dimension = flag_manifold_dimension(out.multiplicities);
  return out;
}

std::vector<std::vector<int>> degeneracy_patterns(int n) {
  require_dimension(n);
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  std::function<void(int, int)> extend = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.push_back(parts);
      return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      parts.push_back(part);
      extend(remaining - part, part);
      parts.pop_back();
    }
  };
  extend(n, n);
  return out;
}

}  // namespace qudit
