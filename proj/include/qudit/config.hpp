#pragma once

namespace qudit {

// Every numerical threshold the library applies lives here.
struct Tolerances {
  // Slack on p_j in [0,1] and on sum(p) == 1.
  double simplex = 1e-12;
  // Eigenvalues (or energies) within this fraction of the largest magnitude
  // are treated as one degenerate level.
  double degeneracy = 1e-9;
  // Characteristic coefficients a_k >= -positivity count as non-negative.
  double positivity = 1e-10;
  // Largest |H - H^dagger| entry accepted as Hermitian.
  double hermitian = 1e-10;
  // Level pairs closer than this (times the energy scale) are a crossing.
  double separatrix = 1e-9;
};

inline constexpr Tolerances kTolerances{};

}  // namespace qudit
