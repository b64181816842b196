#include "qudit/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "qudit/parallel.hpp"

namespace qudit {

Spectrum::Spectrum(std::vector<double> ascending_energies, std::vector<int> labels,
                   std::vector<std::string> names)
    : energies_(std::move(ascending_energies)),
      labels_(std::move(labels)),
      names_(std::move(names)) {
  if (energies_.size() < 2) {
    throw InvalidDimension("a spectrum needs at least two levels");
  }
  for (double e : energies_) {
    if (!std::isfinite(e)) throw DomainError("spectrum contains a non-finite energy");
  }
  if (!std::is_sorted(energies_.begin(), energies_.end())) {
    throw DomainError("spectrum energies must be ascending");
  }
  if (labels_.empty()) {
    labels_.resize(energies_.size());
    std::iota(labels_.begin(), labels_.end(), 0);
  }
  if (labels_.size() != energies_.size()) {
    throw DimensionMismatch("one label per level required");
  }
  std::vector<int> check = labels_;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != static_cast<int>(i)) {
      throw DomainError("labels must be a permutation of 0..n-1");
    }
  }
  if (!names_.empty() && names_.size() != energies_.size()) {
    throw DimensionMismatch("one name per level required");
  }
}

Spectrum Spectrum::from_levels(std::span<const double> levels,
                               std::vector<std::string> names) {
  std::vector<int> order(levels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return levels[static_cast<std::size_t>(a)] < levels[static_cast<std::size_t>(b)];
  });
  std::vector<double> sorted;
  sorted.reserve(levels.size());
  for (int i : order) sorted.push_back(levels[static_cast<std::size_t>(i)]);
  return Spectrum(std::move(sorted), std::move(order), std::move(names));
}

Vector Spectrum::to_label_order(const Vector& ascending_values) const {
  if (ascending_values.size() != n()) {
    throw DimensionMismatch("value count differs from level count");
  }
  Vector out(n());
  for (int i = 0; i < n(); ++i) {
    out[labels_[static_cast<std::size_t>(i)]] = ascending_values[i];
  }
  return out;
}

double ThermalState::unshifted_partition_function() const {
  return partition_function * std::exp(-beta * energy_shift);
}

double ThermalState::temperature() const {
  return beta > 0.0 ? 1.0 / beta : std::numeric_limits<double>::infinity();
}

ThermalState gibbs_state(const Spectrum& spectrum, double beta) {
  if (!std::isfinite(beta)) {
    throw DomainError("beta must be finite; use endpoint_state for beta -> infinity");
  }
  if (beta < 0.0) throw DomainError("beta must be >= 0");

  const auto& h = spectrum.energies();
  const double shift = h.front();
  const int n = spectrum.n();
  Vector weights(n);
  for (int j = 0; j < n; ++j) {
    weights[j] = std::exp(-beta * (h[static_cast<std::size_t>(j)] - shift));
  }
  const double z = weights.sum();
  Vector p = weights / z;

  double u = 0.0;
  double s = 0.0;
  for (int j = 0; j < n; ++j) {
    u += p[j] * h[static_cast<std::size_t>(j)];
    if (p[j] > 0.0) s -= p[j] * std::log(p[j]);
  }
  const double f = beta > 0.0 ? shift - std::log(z) / beta
                              : -std::numeric_limits<double>::infinity();
  return ThermalState{beta, ProbabilityVector(std::move(p)), shift, z, u, s, f};
}

int ground_degeneracy(const Spectrum& spectrum, double tol) {
  if (!(tol > 0.0)) throw DomainError("degeneracy tolerance must be > 0");
  const auto& h = spectrum.energies();
  double scale = 1.0;
  for (double e : h) scale = std::max(scale, std::abs(e));
  const double threshold = tol * scale;
  int k = 0;
  for (double e : h) {
    if (e - h.front() <= threshold) ++k;
  }
  return k;
}

ProbabilityVector endpoint_state(const Spectrum& spectrum, Endpoint which, double tol) {
  const int n = spectrum.n();
  if (which == Endpoint::InfiniteTemperature) return ProbabilityVector::uniform(n);
  const int k = ground_degeneracy(spectrum, tol);
  Vector p = Vector::Zero(n);
  p.head(k).setConstant(1.0 / k);
  return ProbabilityVector(std::move(p));
}

ThermalTrajectory trajectory(const Spectrum& spectrum, std::span<const double> beta_grid) {
  for (std::size_t i = 0; i < beta_grid.size(); ++i) {
    const double b = beta_grid[i];
    if (std::isnan(b) || b < 0.0) throw DomainError("beta grid values must be >= 0");
    if (i > 0 && b < beta_grid[i - 1]) throw DomainError("beta grid must be ascending");
  }

  std::vector<std::optional<ThermalSample>> slots(beta_grid.size());
  parallel_for(beta_grid.size(), [&](std::size_t i) {
    const double b = beta_grid[i];
    ProbabilityVector p = std::isinf(b)
                              ? endpoint_state(spectrum, Endpoint::ZeroTemperature)
                              : gibbs_state(spectrum, b).p;
    BlochDiagonal lambda = p_to_lambda(p);
    InvariantVector t = invariants(p);
    slots[i].emplace(ThermalSample{b, std::move(p), std::move(lambda), std::move(t)});
  });

  ThermalTrajectory out{spectrum, {}};
  out.samples.reserve(slots.size());
  for (auto& s : slots) out.samples.push_back(std::move(*s));
  return out;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi >= lo) || count < 1) {
    throw DomainError("log grid needs 0 < lo <= hi and count >= 1");
  }
  if (count == 1) return {lo};
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < count; ++i) {
    grid[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (count - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> lin_grid(double lo, double hi, int count) {
  if (!(hi >= lo) || count < 1 || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("linear grid needs lo <= hi and count >= 1");
  }
  if (count == 1) return {lo};
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  }
  grid.back() = hi;
  return grid;
}

std::vector<double> default_beta_grid() {
  std::vector<double> grid{0.0};
  const auto tail = log_grid(1e-3, 1e3, 200);
  grid.insert(grid.end(), tail.begin(), tail.end());
  return grid;
}

}  // namespace qudit
