#pragma once

// Independent reference computations used only by the tests.

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qudit/types.hpp"

namespace oracle {

using qudit::ComplexMatrix;
using qudit::Matrix;
using qudit::Vector;

inline Vector hermitian_eigenvalues(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

// Real roots with |imag| below tol; coefficients highest degree first.
inline std::vector<double> real_roots(std::vector<double> coeffs, double tol = 1e-7) {
  std::reverse(coeffs.begin(), coeffs.end());
  Eigen::VectorXd c = Eigen::Map<Eigen::VectorXd>(coeffs.data(), coeffs.size());
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(c);
  std::vector<double> roots;
  for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
    const auto z = solver.roots()[i];
    if (std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z))) roots.push_back(z.real());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Literal transform matrices for the qutrit and ququart.
inline Matrix literal_m3() {
  const double s3 = std::sqrt(3.0);
  Matrix m(3, 3);
  m << 1, 1 / s3, 2.0 / 3, -1, 1 / s3, 2.0 / 3, 0, -2 / s3, 2.0 / 3;
  return m / 2.0;
}

inline Matrix literal_m3_inverse() {
  const double s3 = std::sqrt(3.0);
  Matrix m(3, 3);
  m << 1, -1, 0, 1 / s3, 1 / s3, -2 / s3, 1, 1, 1;
  return m;
}

inline Matrix literal_m4() {
  const double s3 = std::sqrt(3.0);
  const double s6 = std::sqrt(6.0);
  Matrix m(4, 4);
  m << 1, 1 / s3, 1 / s6, 0.5, -1, 1 / s3, 1 / s6, 0.5, 0, -2 / s3, 1 / s6, 0.5, 0, 0,
      -std::sqrt(1.5), 0.5;
  return m / 2.0;
}

inline Matrix literal_m4_inverse() {
  const double s3 = std::sqrt(3.0);
  const double s6 = std::sqrt(6.0);
  Matrix m(4, 4);
  m << 1, -1, 0, 0, 1 / s3, 1 / s3, -2 / s3, 0, 1 / s6, 1 / s6, 1 / s6, -std::sqrt(1.5), 1,
      1, 1, 1;
  return m;
}

// Uniform point on the probability simplex.
inline Vector random_simplex_point(int n, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  Vector p(n);
  for (int i = 0; i < n; ++i) p[i] = e(rng);
  return p / p.sum();
}

inline ComplexMatrix random_hermitian(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
  return (a + a.adjoint()) / 2.0;
}

// Power sums straight from the definition.
inline double power_sum(const Vector& p, int ell) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < p.size(); ++j) s += std::pow(p[j], ell);
  return s;
}

// Boltzmann weights without any shift, in long double.
inline std::vector<double> boltzmann(const std::vector<double>& h, double beta) {
  long double z = 0.0L;
  for (double e : h) z += std::exp(-static_cast<long double>(beta) * e);
  std::vector<double> p;
  for (double e : h) p.push_back(static_cast<double>(std::exp(-static_cast<long double>(beta) * e) / z));
  return p;
}

}  // namespace oracle
