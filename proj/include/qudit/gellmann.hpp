#pragma once

// Generalized Gell-Mann generators of su(n) and the orthonormal frame they
// induce on the probability simplex.
//
// Ordering follows the usual convention: the n(n-1)/2 symmetric matrices
// |j><k| + |k><j| (j < k), then the n(n-1)/2 antisymmetric ones
// -i|j><k| + i|k><j|, then the n-1 diagonal matrices F_l. With 1-based
// indices the diagonal generator F_l therefore sits at k_l = n^2 - n + l
// (lambda_7, lambda_8 for a qutrit; lambda_13..lambda_15 for a ququart).

#include <cmath>
#include <cstddef>
#include <vector>

#include "qudit/types.hpp"

namespace qudit {

template <typename Scalar = double>
struct GeneratorSet {
  using ComplexMatrix = typename Types<Scalar>::ComplexMatrix;

  int n = 0;
  std::vector<ComplexMatrix> symmetric;
  std::vector<ComplexMatrix> antisymmetric;
  std::vector<ComplexMatrix> diagonal;

  std::size_t size() const {
    return symmetric.size() + antisymmetric.size() + diagonal.size();
  }

  // Generator Lambda_k for 1-based k in [1, n^2 - 1].
  const ComplexMatrix& at(std::size_t k) const {
    if (k < 1 || k > size()) {
      throw DomainError("generator index " + std::to_string(k) +
                        " outside [1, n^2-1]");
    }
    const std::size_t i = k - 1;
    if (i < symmetric.size()) return symmetric[i];
    if (i < symmetric.size() + antisymmetric.size()) {
      return antisymmetric[i - symmetric.size()];
    }
    return diagonal[i - symmetric.size() - antisymmetric.size()];
  }

  // k_l for the l-th diagonal generator, l = 1..n-1.
  int diagonal_index(int l) const { return n * n - n + l; }
};

/// Diagonal entries of F_l: sqrt(2/(l(l+1))) * {1 for r <= l, -l for
/// r = l+1, 0 beyond}, with r 1-based.
template <typename Scalar = double>
typename Types<Scalar>::Vector diagonal_generator_entries(int n, int l) {
  require_dimension(n);
  if (l < 1 || l > n - 1) {
    throw DomainError("diagonal generator index must lie in [1, n-1]");
  }
  using std::sqrt;
  const Scalar scale = sqrt(Scalar(2) / Scalar(l * (l + 1)));
  typename Types<Scalar>::Vector d = Types<Scalar>::Vector::Zero(n);
  for (int r = 0; r < l; ++r) d[r] = scale;
  d[l] = -Scalar(l) * scale;
  return d;
}

template <typename Scalar = double>
GeneratorSet<Scalar> build_generators(int n) {
  require_dimension(n);
  using ComplexMatrix = typename Types<Scalar>::ComplexMatrix;
  using Complex = typename Types<Scalar>::Complex;

  GeneratorSet<Scalar> set;
  set.n = n;
  const auto pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  set.symmetric.reserve(pairs);
  set.antisymmetric.reserve(pairs);
  set.diagonal.reserve(static_cast<std::size_t>(n - 1));

  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix s = ComplexMatrix::Zero(n, n);
      s(j, k) = Complex(1, 0);
      s(k, j) = Complex(1, 0);
      set.symmetric.push_back(std::move(s));

      // -i|j><k| + i|k><j|, so n = 2 reproduces sigma_y.
      ComplexMatrix a = ComplexMatrix::Zero(n, n);
      a(j, k) = Complex(0, -1);
      a(k, j) = Complex(0, 1);
      set.antisymmetric.push_back(std::move(a));
    }
  }
  for (int l = 1; l < n; ++l) {
    set.diagonal.push_back(
        diagonal_generator_entries<Scalar>(n, l).template cast<Complex>().asDiagonal());
  }
  return set;
}

/// Most-mixed point p_e = (1/n, ..., 1/n) and the orthonormal axes
/// e_l = Diag(F_l) / sqrt(2) spanning the hyperplane sum(p) = 1.
template <typename Scalar = double>
struct SimplexFrame {
  using Vector = typename Types<Scalar>::Vector;
  using Matrix = typename Types<Scalar>::Matrix;

  int n = 0;
  Vector center;
  std::vector<Vector> axes;

  // n x (n-1) matrix whose columns are the axes.
  Matrix basis() const {
    Matrix b(n, n - 1);
    for (int l = 0; l < n - 1; ++l) b.col(l) = axes[static_cast<std::size_t>(l)];
    return b;
  }

  // p_e + sum_l coefficients[l] * e_{l+1}.
  Vector point(const Vector& coefficients) const {
    if (coefficients.size() != n - 1) {
      throw DimensionMismatch("frame expansion needs n-1 coefficients");
    }
    return center + basis() * coefficients;
  }
};

template <typename Scalar = double>
SimplexFrame<Scalar> simplex_frame(int n) {
  require_dimension(n);
  using std::sqrt;
  SimplexFrame<Scalar> frame;
  frame.n = n;
  frame.center = Types<Scalar>::Vector::Constant(n, Scalar(1) / Scalar(n));
  frame.axes.reserve(static_cast<std::size_t>(n - 1));
  for (int l = 1; l < n; ++l) {
    frame.axes.push_back(diagonal_generator_entries<Scalar>(n, l) / sqrt(Scalar(2)));
  }
  return frame;
}

/// Largest Bloch-vector length sqrt(2(n-1)/n), attained by pure states.
template <typename Scalar = double>
Scalar bloch_bound(int n) {
  require_dimension(n);
  using std::sqrt;
  return sqrt(Scalar(2) * Scalar(n - 1) / Scalar(n));
}

}  // namespace qudit
