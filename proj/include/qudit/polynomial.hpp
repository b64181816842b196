#pragma once

// Real roots of low-degree polynomials from closed forms, each root polished
// by two Newton steps. Coefficients are given highest degree first.

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace qudit::poly {

// Horner evaluation; coefficients highest degree first.
double evaluate(std::span<const double> coefficients, double x);

// Real roots sorted ascending; a multiple root may appear more than once.
std::vector<double> real_roots_quadratic(double a, double b, double c);
std::vector<double> real_roots_cubic(double a, double b, double c, double d);
std::vector<double> real_roots_quartic(double a, double b, double c, double d,
                                       double e);

// Smallest root r >= 0 of the polynomial, if any real non-negative root
// exists. Leading zero coefficients reduce the degree.
std::optional<double> smallest_nonnegative_root(std::span<const double> coefficients);

}  // namespace qudit::poly
