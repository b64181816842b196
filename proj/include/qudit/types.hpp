#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>

#include "qudit/config.hpp"
#include "qudit/errors.hpp"

namespace qudit {

template <typename Scalar>
struct Types {
  using Real = Scalar;
  using Complex = std::complex<Scalar>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
  using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
};

using Vector = Types<double>::Vector;
using Matrix = Types<double>::Matrix;
using ComplexMatrix = Types<double>::ComplexMatrix;

inline void require_dimension(int n) {
  if (n < 2) {
    throw InvalidDimension("dimension must be >= 2, got " + std::to_string(n));
  }
}

/// Diagonal of a density matrix: a point on the (n-1)-simplex.
///
/// Construction checks p_j in [0,1] and sum(p) == 1 to within
/// Tolerances::simplex and throws PositivityError / DomainError otherwise.
/// Points that may leave the simplex (continuations of loci) are carried as
/// plain Vector values instead.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(Vector p, const Tolerances& tol = kTolerances)
      : p_(std::move(p)) {
    require_dimension(static_cast<int>(p_.size()));
    for (Eigen::Index j = 0; j < p_.size(); ++j) {
      if (!std::isfinite(p_[j]) || p_[j] < -tol.simplex ||
          p_[j] > 1.0 + tol.simplex) {
        throw PositivityError(static_cast<std::size_t>(j), p_[j]);
      }
    }
    const double total = p_.sum();
    if (std::abs(total - 1.0) > tol.simplex) {
      throw DomainError("probabilities sum to " + std::to_string(total));
    }
  }

  static ProbabilityVector uniform(int n) {
    require_dimension(n);
    return ProbabilityVector(Vector::Constant(n, 1.0 / n));
  }

  int n() const { return static_cast<int>(p_.size()); }
  double operator[](Eigen::Index j) const { return p_[j]; }
  const Vector& values() const { return p_; }

 private:
  Vector p_;
};

/// The n-1 coefficients of the diagonal generators Lambda_{k_l},
/// l = 1..n-1, with k_l = n^2 - n + l.
class BlochDiagonal {
 public:
  explicit BlochDiagonal(Vector lambda) : lambda_(std::move(lambda)) {
    if (lambda_.size() < 1) {
      throw InvalidDimension("a diagonal Bloch vector needs n-1 >= 1 entries");
    }
  }

  int n() const { return static_cast<int>(lambda_.size()) + 1; }
  double operator[](Eigen::Index l) const { return lambda_[l]; }
  const Vector& values() const { return lambda_; }
  double norm() const { return lambda_.norm(); }

  // Generator index k_l for zero-based slot l.
  int generator_index(int l) const { return n() * n() - n() + l + 1; }

 private:
  Vector lambda_;
};

/// Trace-power invariants (t_2, ..., t_n).
class InvariantVector {
 public:
  explicit InvariantVector(Vector t) : t_(std::move(t)) {
    if (t_.size() < 1) {
      throw InvalidDimension("an invariant vector needs n-1 >= 1 entries");
    }
  }

  int n() const { return static_cast<int>(t_.size()) + 1; }
  // t_ell for ell = 2..n.
  double t(int ell) const { return t_[ell - 2]; }
  double operator[](Eigen::Index i) const { return t_[i]; }
  const Vector& values() const { return t_; }

 private:
  Vector t_;
};

}  // namespace qudit
