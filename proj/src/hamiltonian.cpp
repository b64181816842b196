#include "qudit/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "qudit/jacobi.hpp"
#include "qudit/parallel.hpp"

namespace qudit {
namespace {

using Complex = std::complex<double>;

bool is_spin(double j, int twice) { return twice_spin(j) == twice; }

void require_analytic_spin(double j) {
  const int twice = twice_spin(j);
  if (twice != 2 && twice != 3) {
    throw DomainError("closed forms exist only for J = 1 and J = 3/2, got J = " +
                      std::to_string(j));
  }
}

void require_params(const LMGParams& params) {
  if (!(params.omega > 0.0) || !std::isfinite(params.omega)) {
    throw DomainError("omega must be finite and > 0");
  }
  if (!std::isfinite(params.gx) || !std::isfinite(params.gy)) {
    throw DomainError("LMG couplings must be finite");
  }
}

std::vector<std::string> level_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back("E" + std::to_string(i));
  return names;
}

}  // namespace

int twice_spin(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (!std::isfinite(j) || rounded < 1.0 || std::abs(twice - rounded) > 1e-12) {
    throw InvalidDimension("2J must be a positive integer, got J = " + std::to_string(j));
  }
  return static_cast<int>(rounded);
}

AngularMomentum angular_momentum(double j) {
  const int dim = twice_spin(j) + 1;
  const double jj = twice_spin(j) / 2.0;
  ComplexMatrix raise = ComplexMatrix::Zero(dim, dim);
  for (int i = 1; i < dim; ++i) {
    const double m = jj - i;  // basis index i carries M = J - i
    raise(i - 1, i) = std::sqrt(jj * (jj + 1.0) - m * (m + 1.0));
  }
  const ComplexMatrix lower = raise.adjoint();

  AngularMomentum out;
  out.j = jj;
  out.jx = (raise + lower) / 2.0;
  out.jy = (raise - lower) / Complex(0.0, 2.0);
  out.jz = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) out.jz(i, i) = jj - i;
  return out;
}

ComplexMatrix linear_hamiltonian(double j, double omega, double theta, double phi) {
  const auto am = angular_momentum(j);
  return omega * (std::sin(theta) * std::cos(phi) * am.jx +
                  std::sin(theta) * std::sin(phi) * am.jy + std::cos(theta) * am.jz);
}

Spectrum linear_spectrum(double j, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be > 0");
  const int twice = twice_spin(j);
  std::vector<double> energies;
  std::vector<std::string> names;
  for (int k = 0; k <= twice; ++k) {
    const double m = -twice / 2.0 + k;
    energies.push_back(omega * m);
    const int twice_m = 2 * k - twice;
    names.push_back("M=" + (twice % 2 == 0 ? std::to_string(twice_m / 2)
                                           : std::to_string(twice_m) + "/2"));
  }
  return Spectrum(std::move(energies), {}, std::move(names));
}

ComplexMatrix lmg_hamiltonian(double j, const LMGParams& params) {
  require_params(params);
  const auto am = angular_momentum(j);
  return 2.0 * params.omega *
         (am.jz + params.gx * am.jx * am.jx + params.gy * am.jy * am.jy);
}

std::vector<double> lmg_levels(double j, const LMGParams& params) {
  require_analytic_spin(j);
  require_params(params);
  const double w = params.omega;
  const double gp = params.g_plus();
  const double gm = params.g_minus();
  if (is_spin(j, 2)) {
    const double root = std::sqrt(4.0 + gm * gm);
    return {2.0 * w * gp, w * (gp - root), w * (gp + root)};
  }
  const double a = std::sqrt(3.0 * gm * gm + (gp - 2.0) * (gp - 2.0));
  const double b = std::sqrt(3.0 * gm * gm + (gp + 2.0) * (gp + 2.0));
  const double half = w / 2.0;
  return {half * (5.0 * gp + 2.0 - 2.0 * a), half * (5.0 * gp - 2.0 - 2.0 * b),
          half * (5.0 * gp - 2.0 + 2.0 * b), half * (5.0 * gp + 2.0 + 2.0 * a)};
}

Spectrum lmg_spectrum(double j, const LMGParams& params, SpectrumMethod method) {
  const int twice = twice_spin(j);
  const bool analytic_available = twice == 2 || twice == 3;
  if (method == SpectrumMethod::Auto) {
    method = analytic_available ? SpectrumMethod::Analytic : SpectrumMethod::Numeric;
  }
  if (method == SpectrumMethod::Analytic) {
    const auto levels = lmg_levels(j, params);
    return Spectrum::from_levels(levels, level_names(static_cast<int>(levels.size())));
  }
  const Vector ev = jacobi_eigenvalues<double>(lmg_hamiltonian(j, params));
  return Spectrum(std::vector<double>(ev.begin(), ev.end()));
}

double separatrix(double j, Branch branch, double g_minus) {
  require_analytic_spin(j);
  const double c = is_spin(j, 2) ? 4.0 : 1.0;
  const double root = std::sqrt(c + g_minus * g_minus);
  return branch == Branch::Ground ? -root : root;
}

std::pair<int, int> separatrix_levels(double j, Branch branch) {
  require_analytic_spin(j);
  if (branch == Branch::Ground) return {1, 2};
  return is_spin(j, 2) ? std::pair{1, 3} : std::pair{3, 4};
}

const char* to_string(Region r) {
  switch (r) {
    case Region::I:
      return "I";
    case Region::II:
      return "II";
    case Region::III:
      return "III";
  }
  return "?";
}

PhaseRegion classify_region(double j, const LMGParams& params, const Tolerances& tol) {
  const auto levels = lmg_levels(j, params);
  const int n = static_cast<int>(levels.size());
  double scale = 1.0;
  for (double e : levels) scale = std::max(scale, std::abs(e));
  const double threshold = tol.separatrix * scale;
  auto level = [&](int label) { return levels[static_cast<std::size_t>(label - 1)]; };

  PhaseRegion out;
  out.energy_order.resize(static_cast<std::size_t>(n));
  std::iota(out.energy_order.begin(), out.energy_order.end(), 1);
  std::stable_sort(out.energy_order.begin(), out.energy_order.end(),
                   [&](int a, int b) { return level(a) < level(b); });
  out.probability_order = out.energy_order;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (std::abs(level(a) - level(b)) <= threshold) out.degenerate_pairs.emplace_back(a, b);
    }
  }

  const auto [g1, g2] = separatrix_levels(j, Branch::Ground);
  const auto [x1, x2] = separatrix_levels(j, Branch::Excited);
  const double ground_gap = level(g2) - level(g1);   // > 0 below the ground separatrix
  const double excited_gap = level(x1) - level(x2);  // > 0 above the excited separatrix
  if (std::abs(ground_gap) <= threshold || std::abs(excited_gap) <= threshold) {
    out.region.reset();
  } else if (ground_gap > 0.0) {
    out.region = Region::I;
  } else if (excited_gap > 0.0) {
    out.region = Region::III;
  } else {
    out.region = Region::II;
  }
  return out;
}

std::vector<LMGParams> pm_grid(double omega, std::span<const double> g_minus,
                               std::span<const double> g_plus) {
  std::vector<LMGParams> grid;
  grid.reserve(g_minus.size() * g_plus.size());
  for (double gm : g_minus)
    for (double gp : g_plus) grid.push_back(LMGParams::from_pm(omega, gm, gp));
  return grid;
}

std::vector<LMGParams> xy_grid(double omega, std::span<const double> gx,
                               std::span<const double> gy) {
  std::vector<LMGParams> grid;
  grid.reserve(gx.size() * gy.size());
  for (double x : gx)
    for (double y : gy) grid.push_back(LMGParams{omega, x, y});
  return grid;
}

std::vector<PhaseSample> phase_sweep(double j, std::span<const LMGParams> grid,
                                     double beta) {
  require_analytic_spin(j);
  if (grid.empty()) throw DomainError("phase sweep grid is empty");
  if (std::isnan(beta) || beta < 0.0) throw DomainError("beta must be >= 0");

  std::vector<std::optional<PhaseSample>> slots(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const LMGParams& params = grid[i];
    auto levels = lmg_levels(j, params);
    const Spectrum spectrum = Spectrum::from_levels(levels);
    const ProbabilityVector sorted =
        std::isinf(beta) ? endpoint_state(spectrum, Endpoint::ZeroTemperature)
                         : gibbs_state(spectrum, beta).p;
    ProbabilityVector p(spectrum.to_label_order(sorted.values()));
    BlochDiagonal lambda = p_to_lambda(p);
    InvariantVector t = invariants(p);
    slots[i].emplace(PhaseSample{params, std::move(levels), std::move(p), std::move(lambda),
                                 std::move(t), classify_region(j, params)});
  });

  std::vector<PhaseSample> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace qudit
