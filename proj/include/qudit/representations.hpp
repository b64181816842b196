#pragma once

// The three coordinate systems for diagonal qudit states and the maps
// between them:
//
//   p-space       probability vector on the simplex
//   lambda-space  coefficients of the diagonal Gell-Mann generators
//   t-space       trace-power invariants t_ell = sum_j p_j^ell, ell = 2..n
//
// p <-> lambda is affine and invertible (p = M Lambda with Lambda = (lambda, 1));
// p -> t forgets the ordering of the eigenvalues.

#include <span>
#include <vector>

#include "qudit/config.hpp"
#include "qudit/types.hpp"

namespace qudit {

/// M with p = M (lambda_{k_1}, ..., lambda_{k_{n-1}}, 1)^T.
Matrix transform_matrix(int n);
/// M^{-1}: rows sqrt(2) e_l^T followed by the all-ones row.
Matrix inverse_transform_matrix(int n);

BlochDiagonal p_to_lambda(const ProbabilityVector& p);
/// Raw affine image, for points that may lie off the simplex.
Vector p_to_lambda(const Vector& p);

/// Throws PositivityError naming the first component outside
/// [-tol.simplex, 1 + tol.simplex].
ProbabilityVector lambda_to_p(const BlochDiagonal& lambda,
                              const Tolerances& tol = kTolerances);
Vector lambda_to_p(const Vector& lambda);

InvariantVector invariants(const ProbabilityVector& p);
/// Power sums t_2..t_n of an arbitrary real vector.
Vector invariants(const Vector& p);

/// t_k = (1/k, 1/k^2, ..., 1/k^{n-1}) for k = 1..n (index k-1).
std::vector<InvariantVector> t_vertices(int n);

enum class AngleConvention {
  // Default ququart ordering (phi, theta):
  //   cos(phi) sin(theta) e1 + sin(phi) sin(theta) e2 + cos(theta) e3.
  // Identical to Hyperspherical for every n other than 4.
  Canonical,
  // Hyperspherical (theta_1, ..., theta_{n-2}):
  //   cos(t1) e1 + sin(t1) cos(t2) e2 + ... + sin(t1)...sin(t_{n-2}) e_{n-1}.
  Hyperspherical,
};

/// Unit direction coefficients c_l (sum c_l^2 = 1) in the simplex frame.
Vector polar_direction(int n, std::span<const double> angles,
                       AngleConvention convention = AngleConvention::Canonical);

struct PolarPoint {
  Vector p;
  bool physical = false;  // every p_j >= -tol.simplex
};

/// p_e + (r / sqrt(2)) * sum_l c_l(angles) e_l. Points off the simplex are
/// returned with physical = false rather than rejected.
PolarPoint polar_to_p(int n, double r, std::span<const double> angles,
                      AngleConvention convention = AngleConvention::Canonical,
                      const Tolerances& tol = kTolerances);

bool on_simplex(const Vector& p, const Tolerances& tol = kTolerances);

struct PositivityResult {
  bool positive = false;
  // a_1..a_n of det(x I - rho) = x^n - a_1 x^{n-1} + a_2 x^{n-2} - ...
  std::vector<double> coefficients;
};

/// Non-negativity of a Hermitian matrix through the signs of its
/// characteristic coefficients, obtained from trace powers by Newton's
/// identities.
PositivityResult positivity_check(const ComplexMatrix& h,
                                  const Tolerances& tol = kTolerances);

/// Elementary symmetric polynomials e_1..e_n from power sums s_1..s_n.
std::vector<double> elementary_from_power_sums(std::span<const double> power_sums);

struct DegeneracyPattern {
  std::vector<int> multiplicities;  // grouped in descending eigenvalue order
  int orbit_dimension = 0;          // n^2 - sum m_i^2
};

/// Groups probabilities equal to within tol * max(p) and reports the
/// dimension of the unitary orbit U(n) / (U(m_1) x ... x U(m_l)).
DegeneracyPattern orbit_classification(const ProbabilityVector& p,
                                       double tol = kTolerances.degeneracy);

int flag_manifold_dimension(std::span<const int> multiplicities);

/// Every degeneracy pattern of n levels (integer partitions, parts descending).
std::vector<std::vector<int>> degeneracy_patterns(int n);

}  // namespace qudit
