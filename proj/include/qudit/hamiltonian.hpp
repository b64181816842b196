#pragma once

// Spin-J angular momentum matrices, the linear Hamiltonian omega n.J and the
// Lipkin-Meshkov-Glick (LMG) model H = 2 omega (Jz + g_x Jx^2 + g_y Jy^2).
//
// The LMG closed forms for J = 1 and J = 3/2 follow the E_1..E_n labelling of
// the level formulas (not ascending order), so that thermal probabilities
// p_i = exp(-beta E_i) / Z keep a fixed vertex assignment across the
// coupling plane.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "qudit/config.hpp"
#include "qudit/representations.hpp"
#include "qudit/thermal.hpp"
#include "qudit/types.hpp"

namespace qudit {

/// 2J for J in {1/2, 1, 3/2, ...}; throws InvalidDimension otherwise.
int twice_spin(double j);

struct AngularMomentum {
  double j = 0.0;
  ComplexMatrix jx;
  ComplexMatrix jy;
  ComplexMatrix jz;

  int dim() const { return static_cast<int>(jz.rows()); }
};

/// Standard basis |J, M>, M = J down to -J.
AngularMomentum angular_momentum(double j);

/// omega * n.J with n = (sin t cos p, sin t sin p, cos t).
ComplexMatrix linear_hamiltonian(double j, double omega, double theta, double phi);

/// {omega M : M = -J..J}, ascending; label k-1 for p_k with M = k - J - 1.
Spectrum linear_spectrum(double j, double omega);

struct LMGParams {
  double omega = 1.0;
  double gx = 0.0;
  double gy = 0.0;

  double g_plus() const { return gx + gy; }
  double g_minus() const { return gx - gy; }

  static LMGParams from_pm(double omega, double g_minus, double g_plus) {
    return {omega, (g_plus + g_minus) / 2.0, (g_plus - g_minus) / 2.0};
  }
};

ComplexMatrix lmg_hamiltonian(double j, const LMGParams& params);

/// Closed-form levels E_1..E_n in formula order; J must be 1 or 3/2.
std::vector<double> lmg_levels(double j, const LMGParams& params);

enum class SpectrumMethod { Auto, Analytic, Numeric };

/// Auto uses the closed forms for J in {1, 3/2} and Jacobi diagonalization
/// otherwise. Analytic spectra carry formula labels; numeric ones are
/// labelled by ascending position.
Spectrum lmg_spectrum(double j, const LMGParams& params,
                      SpectrumMethod method = SpectrumMethod::Auto);

enum class Branch { Ground, Excited };

/// g_+ on the level crossing: J = 1: -/+ sqrt(4 + g_-^2) (E_1 = E_2 / E_1 = E_3);
/// J = 3/2: -/+ sqrt(1 + g_-^2) (E_1 = E_2 / E_3 = E_4).
double separatrix(double j, Branch branch, double g_minus);

/// The level pair (1-based formula labels) that crosses on a separatrix.
std::pair<int, int> separatrix_levels(double j, Branch branch);

enum class Region { I, II, III };

const char* to_string(Region r);

struct PhaseRegion {
  // Empty exactly on a separatrix.
  std::optional<Region> region;
  // 1-based formula labels, ascending energy (ties keep label order).
  std::vector<int> energy_order;
  // 1-based labels, descending thermal probability; equals energy_order.
  std::vector<int> probability_order;
  // Label pairs whose energies coincide within tolerance.
  std::vector<std::pair<int, int>> degenerate_pairs;

  bool boundary() const { return !region.has_value() || !degenerate_pairs.empty(); }
};

/// Region I lies below the ground separatrix, II between the two, III above
/// the excited one.
PhaseRegion classify_region(double j, const LMGParams& params,
                            const Tolerances& tol = kTolerances);

struct PhaseSample {
  LMGParams params;
  std::vector<double> levels;  // E_1..E_n, formula order
  ProbabilityVector p;         // p_i = exp(-beta E_i) / Z, formula order
  BlochDiagonal lambda;
  InvariantVector t;
  PhaseRegion region;
};

/// Rectangular (g_-, g_+) grid, g_- varying slowest.
std::vector<LMGParams> pm_grid(double omega, std::span<const double> g_minus,
                               std::span<const double> g_plus);
/// Rectangular (g_x, g_y) grid, g_x varying slowest.
std::vector<LMGParams> xy_grid(double omega, std::span<const double> gx,
                               std::span<const double> gy);

/// Thermal state of every grid point at inverse temperature beta (which may
/// be +infinity), in grid order. Evaluated concurrently.
std::vector<PhaseSample> phase_sweep(double j, std::span<const LMGParams> grid,
                                     double beta);

}  // namespace qudit
