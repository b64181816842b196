#pragma once

// Cyclic Jacobi eigensolver for small dense Hermitian matrices.
//
// Sweeps visit pivots (p, q), p < q, in row-major order, so the sequence of
// floating-point operations (and the result) is fixed for a given input.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "qudit/types.hpp"

namespace qudit {

template <typename Scalar = double>
struct HermitianEigen {
  typename Types<Scalar>::Vector eigenvalues;          // ascending
  typename Types<Scalar>::ComplexMatrix eigenvectors;  // columns
  int sweeps = 0;
};

template <typename Scalar = double>
void require_hermitian(const typename Types<Scalar>::ComplexMatrix& h,
                       Scalar tolerance) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw ShapeError("expected a non-empty square matrix");
  }
  const Scalar asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= tolerance)) {
    throw ShapeError("matrix is not Hermitian (max |H - H^dagger| = " +
                     std::to_string(static_cast<double>(asym)) + ")");
  }
}

template <typename Scalar = double>
HermitianEigen<Scalar> jacobi_eigen(typename Types<Scalar>::ComplexMatrix a,
                                    int max_sweeps = 64) {
  using ComplexMatrix = typename Types<Scalar>::ComplexMatrix;
  using Complex = typename Types<Scalar>::Complex;
  using std::abs;
  using std::sqrt;

  require_hermitian<Scalar>(a, Scalar(kTolerances.hermitian) *
                                   std::max(Scalar(1), a.cwiseAbs().maxCoeff()));
  const Eigen::Index n = a.rows();
  a = (a + a.adjoint()).eval() / Scalar(2);
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar scale = std::max(Scalar(1), a.cwiseAbs().maxCoeff());
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    Scalar off = 0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (sqrt(off) <= eps * scale) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar r = abs(a(p, q));
        if (r <= eps * eps * scale) continue;
        // Phase gauge makes the (p,q) entry real, then a real rotation
        // annihilates it: G = diag(1, e^{-i phi}) * [[c, s], [-s, c]].
        const Complex phase = a(p, q) / r;
        const Scalar app = a(p, p).real();
        const Scalar aqq = a(q, q).real();
        const Scalar tau = (aqq - app) / (Scalar(2) * r);
        const Scalar t = (tau >= 0 ? Scalar(1) : Scalar(-1)) /
                         (abs(tau) + sqrt(Scalar(1) + tau * tau));
        const Scalar c = Scalar(1) / sqrt(Scalar(1) + t * t);
        const Scalar s = t * c;
        const Complex gpp(c, 0);
        const Complex gpq(s, 0);
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = Complex(0);
        a(q, p) = Complex(0);
        a(p, p) = Complex(a(p, p).real(), 0);
        a(q, q) = Complex(a(q, q).real(), 0);

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEigen<Scalar> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    out.eigenvalues[i] = a(src, src).real();
    out.eigenvectors.col(i) = v.col(src);
  }
  out.sweeps = sweep;
  return out;
}

template <typename Scalar = double>
typename Types<Scalar>::Vector jacobi_eigenvalues(
    const typename Types<Scalar>::ComplexMatrix& a) {
  return jacobi_eigen<Scalar>(a).eigenvalues;
}

}  // namespace qudit
