#pragma once

// Gibbs (maximum-entropy) states of a finite spectrum, their thermodynamic
// functions, the beta -> 0 / beta -> infinity endpoints and beta-indexed
// trajectories expressed in p-, lambda- and t-space at once.
//
// Units: hbar = k_B = 1; beta carries inverse energy units.

#include <span>
#include <string>
#include <vector>

#include "qudit/config.hpp"
#include "qudit/representations.hpp"
#include "qudit/types.hpp"

namespace qudit {

/// Energy levels h_1 <= h_2 <= ... <= h_n.
///
/// labels()[i] is the index of level i in the caller's original labelling
/// (for LMG spectra, the E_1..E_n numbering of the closed forms, zero-based).
/// Equal energies keep their original relative order.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> ascending_energies,
                    std::vector<int> labels = {},
                    std::vector<std::string> names = {});

  // Stable-sorts arbitrary levels and records where each came from.
  static Spectrum from_levels(std::span<const double> levels,
                              std::vector<std::string> names = {});

  int n() const { return static_cast<int>(energies_.size()); }
  const std::vector<double>& energies() const { return energies_; }
  const std::vector<int>& labels() const { return labels_; }
  // Names in original-label order; may be empty.
  const std::vector<std::string>& names() const { return names_; }
  double ground_energy() const { return energies_.front(); }

  // Scatter values indexed by ascending energy back to original label order.
  Vector to_label_order(const Vector& ascending_values) const;

 private:
  std::vector<double> energies_;
  std::vector<int> labels_;
  std::vector<std::string> names_;
};

struct ThermalState {
  double beta;
  ProbabilityVector p;      // ascending-energy order
  double energy_shift;      // h_1; weights are exp(-beta (h_j - h_1))
  double partition_function;  // sum_j exp(-beta (h_j - h_1))
  double internal_energy;   // U = sum p_j h_j
  double entropy;           // S = -sum p_j ln p_j
  double free_energy;       // F = -T ln Z; -infinity at beta = 0

  // Z in the unshifted gauge, sum_j exp(-beta h_j).
  double unshifted_partition_function() const;
  double temperature() const;
};

ThermalState gibbs_state(const Spectrum& spectrum, double beta);

enum class Endpoint { ZeroTemperature, InfiniteTemperature };

/// Number of levels within tol * max(1, max|h|) of the ground energy.
int ground_degeneracy(const Spectrum& spectrum, double tol = kTolerances.degeneracy);

/// beta -> infinity: 1/k on the k-fold ground multiplet; beta -> 0: uniform.
ProbabilityVector endpoint_state(const Spectrum& spectrum, Endpoint which,
                                 double tol = kTolerances.degeneracy);

struct ThermalSample {
  double beta;  // may be +infinity for the zero-temperature endpoint
  ProbabilityVector p;
  BlochDiagonal lambda;
  InvariantVector t;
};

struct ThermalTrajectory {
  Spectrum spectrum;
  std::vector<ThermalSample> samples;
};

/// Samples each beta of an ascending, non-negative grid. A trailing
/// +infinity maps to the zero-temperature endpoint. Grid points are
/// evaluated concurrently; samples keep grid order.
ThermalTrajectory trajectory(const Spectrum& spectrum, std::span<const double> beta_grid);

std::vector<double> log_grid(double lo, double hi, int count);
std::vector<double> lin_grid(double lo, double hi, int count);
/// beta = 0 followed by 200 log-spaced points in [1e-3, 1e3].
std::vector<double> default_beta_grid();

}  // namespace qudit
