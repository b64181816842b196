#include "qudit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qudit::poly {
namespace {

double derivative(std::span<const double> coefficients, double x) {
  const auto degree = static_cast<int>(coefficients.size()) - 1;
  double d = 0.0;
  for (int i = 0; i < degree; ++i) {
    d = d * x + coefficients[static_cast<std::size_t>(i)] * (degree - i);
  }
  return d;
}

// Two Newton steps, each kept only if it does not increase |f|.
double polish(std::span<const double> coefficients, double x) {
  for (int step = 0; step < 2; ++step) {
    const double f = evaluate(coefficients, x);
    const double df = derivative(coefficients, x);
    if (f == 0.0 || df == 0.0 || !std::isfinite(df)) break;
    const double next = x - f / df;
    if (!std::isfinite(next) ||
        std::abs(evaluate(coefficients, next)) > std::abs(f)) {
      break;
    }
    x = next;
  }
  return x;
}

std::vector<double> finish(std::span<const double> coefficients,
                           std::vector<double> roots) {
  for (double& r : roots) r = polish(coefficients, r);
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Real roots of the monic depressed cubic t^3 + p t + q.
std::vector<double> depressed_cubic(double p, double q) {
  if (p == 0.0) return {std::cbrt(-q)};
  const double disc = q * q / 4.0 + p * p * p / 27.0;
  if (disc < 0.0) {
    // Three distinct real roots (p < 0 here).
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    constexpr double third = 2.0 * std::numbers::pi / 3.0;
    return {m * std::cos(phi), m * std::cos(phi - third),
            m * std::cos(phi - 2.0 * third)};
  }
  // One real root (or a repeated pair when disc == 0); cancellation-free
  // Cardano form.
  const double root_disc = std::sqrt(disc);
  const double u = std::cbrt(-q / 2.0 - std::copysign(root_disc, q));
  if (u == 0.0) return {0.0};
  const double t = u - p / (3.0 * u);
  if (disc == 0.0) return {t, -t / 2.0};
  return {t};
}

}  // namespace

double evaluate(std::span<const double> coefficients, double x) {
  double value = 0.0;
  for (double c : coefficients) value = value * x + c;
  return value;
}

std::vector<double> real_roots_quadratic(double a, double b, double c) {
  const std::array<double, 3> coeffs{a, b, c};
  if (a == 0.0) {
    if (b == 0.0) return {};
    return {-c / b};
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return {};
  if (disc == 0.0) return {-b / (2.0 * a)};
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  std::vector<double> roots{q / a};
  if (q != 0.0) roots.push_back(c / q);
  else roots.push_back(0.0);
  return finish(coeffs, std::move(roots));
}

std::vector<double> real_roots_cubic(double a, double b, double c, double d) {
  if (a == 0.0) return real_roots_quadratic(b, c, d);
  const std::array<double, 4> coeffs{a, b, c, d};
  if (d == 0.0) {
    auto roots = real_roots_quadratic(a, b, c);
    roots.push_back(0.0);
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  const double bn = b / a;
  const double cn = c / a;
  const double dn = d / a;
  const double p = cn - bn * bn / 3.0;
  const double q = 2.0 * bn * bn * bn / 27.0 - bn * cn / 3.0 + dn;
  auto roots = depressed_cubic(p, q);
  for (double& r : roots) r -= bn / 3.0;
  return finish(coeffs, std::move(roots));
}

std::vector<double> real_roots_quartic(double a, double b, double c, double d,
                                       double e) {
  if (a == 0.0) return real_roots_cubic(b, c, d, e);
  const std::array<double, 5> coeffs{a, b, c, d, e};
  if (e == 0.0) {
    auto roots = real_roots_cubic(a, b, c, d);
    roots.push_back(0.0);
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  const double bn = b / a;
  const double cn = c / a;
  const double dn = d / a;
  const double en = e / a;
  // y^4 + p y^2 + q y + r with x = y - bn/4.
  const double shift = bn / 4.0;
  const double p = cn - 6.0 * shift * shift;
  const double q = dn - 2.0 * cn * shift + 8.0 * shift * shift * shift;
  const double r = en - dn * shift + cn * shift * shift -
                   3.0 * shift * shift * shift * shift;

  std::vector<double> ys;
  const double q_scale = std::max({1.0, std::abs(p), std::abs(r)});
  if (std::abs(q) <= 1e-14 * q_scale) {
    // Biquadratic in z = y^2.
    for (double z : real_roots_quadratic(1.0, p, r)) {
      if (z > 0.0) {
        ys.push_back(std::sqrt(z));
        ys.push_back(-std::sqrt(z));
      } else if (z == 0.0) {
        ys.push_back(0.0);
      }
    }
  } else {
    // Ferrari: pick m > 0 with 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2 = 0 so the
    // quartic splits into two real quadratics.
    const auto resolvent =
        real_roots_cubic(8.0, 8.0 * p, 2.0 * p * p - 8.0 * r, -q * q);
    const double m = resolvent.empty() ? 0.0 : resolvent.back();
    if (m > 0.0) {
      const double s = std::sqrt(2.0 * m);
      const double k = q / (2.0 * s);
      for (double y : real_roots_quadratic(1.0, -s, p / 2.0 + m + k)) ys.push_back(y);
      for (double y : real_roots_quadratic(1.0, s, p / 2.0 + m - k)) ys.push_back(y);
    }
  }
  for (double& y : ys) y -= shift;
  return finish(coeffs, std::move(ys));
}

std::optional<double> smallest_nonnegative_root(std::span<const double> coefficients) {
  std::size_t lead = 0;
  while (lead < coefficients.size() && coefficients[lead] == 0.0) ++lead;
  const auto c = coefficients.subspan(lead);
  if (c.size() < 2) return std::nullopt;
  if (c.back() == 0.0) return 0.0;

  std::vector<double> roots;
  switch (c.size() - 1) {
    case 1:
      roots = {-c[1] / c[0]};
      break;
    case 2:
      roots = real_roots_quadratic(c[0], c[1], c[2]);
      break;
    case 3:
      roots = real_roots_cubic(c[0], c[1], c[2], c[3]);
      break;
    case 4:
      roots = real_roots_quartic(c[0], c[1], c[2], c[3], c[4]);
      break;
    default:
      return std::nullopt;
  }
  std::optional<double> best;
  for (double r : roots) {
    if (r >= 0.0 && std::isfinite(r) && (!best || r < *best)) best = r;
  }
  return best;
}

}  // namespace qudit::poly
