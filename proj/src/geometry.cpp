#include "qudit/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "qudit/gellmann.hpp"
#include "qudit/parallel.hpp"
#include "qudit/polynomial.hpp"
#include "qudit/representations.hpp"

namespace qudit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Slack on the admissible radius bound, so that exact vertices stay admissible.
constexpr double kRadiusSlack = 1e-12;

void require_samples(int samples, const char* what) {
  if (samples < 2) {
    throw DomainError(std::string(what) + " needs at least 2 samples, got " +
                      std::to_string(samples));
  }
}

void require_range(double value, double lo, double hi, const char* name) {
  if (!std::isfinite(value) || value < lo || value > hi) {
    throw DomainError(std::string(name) + " = " + std::to_string(value) +
                      " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

Vector vertex(int n, int j) {
  Vector v = Vector::Zero(n);
  v[j] = 1.0;
  return v;
}

ParamCurve segment(int n, const Vector& from, const Vector& to, int samples,
                   std::string label) {
  ParamCurve c;
  c.space = Space::P;
  c.label = std::move(label);
  c.parameter = lin_grid(0.0, 1.0, samples);
  c.points.resize(samples, n);
  c.physical.resize(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double x = c.parameter[static_cast<std::size_t>(i)];
    c.points.row(i) = (from + (to - from) * x).transpose();
    c.physical[static_cast<std::size_t>(i)] = on_simplex(c.points.row(i).transpose());
  }
  return c;
}

std::vector<double> periodic_grid(int samples) {
  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    grid[static_cast<std::size_t>(i)] = 2.0 * kPi * i / samples;
  }
  return grid;
}

std::string fraction_label(const std::string& prefix, double value) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", value);
  return prefix + "=" + buf.data();
}

template <typename Map>
Matrix map_rows(const Matrix& points, Map&& map) {
  if (points.rows() == 0) return Matrix(0, 0);
  const Vector first = map(Vector(points.row(0).transpose()));
  Matrix out(points.rows(), first.size());
  out.row(0) = first.transpose();
  for (Eigen::Index i = 1; i < points.rows(); ++i) {
    out.row(i) = map(Vector(points.row(i).transpose())).transpose();
  }
  return out;
}

void require_p_space(Space s) {
  if (s != Space::P) throw DomainError("expected a p-space locus");
}

}  // namespace

const char* to_string(Space s) {
  switch (s) {
    case Space::P:
      return "p";
    case Space::Lambda:
      return "lambda";
    case Space::T:
      return "t";
  }
  return "?";
}

std::vector<ParamCurve> simplex_edges(int n, int samples) {
  if (n < 3) throw InvalidDimension("simplex edges need n >= 3, got " + std::to_string(n));
  require_samples(samples, "an edge");
  std::vector<ParamCurve> edges;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      edges.push_back(segment(n, vertex(n, j), vertex(n, k), samples,
                              "edge " + std::to_string(j + 1) + std::to_string(k + 1)));
    }
  }
  return edges;
}

std::vector<ParamCurve> simplex_medians(int samples) {
  require_samples(samples, "a median");
  std::vector<ParamCurve> medians;
  for (int j = 0; j < 3; ++j) {
    const int k = (j + 1) % 3;
    const int l = (j + 2) % 3;
    const Vector mid = (vertex(3, k) + vertex(3, l)) / 2.0;
    medians.push_back(segment(3, vertex(3, j), mid, samples,
                              "median " + std::to_string(j + 1) +
                                  std::to_string(std::min(k, l) + 1) +
                                  std::to_string(std::max(k, l) + 1)));
  }
  return medians;
}

std::vector<SurfaceMesh> equal_pair_planes(int u_samples, int v_samples) {
  require_samples(u_samples, "a plane");
  require_samples(v_samples, "a plane");
  std::vector<SurfaceMesh> planes;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      std::vector<int> others;
      for (int c = 0; c < 4; ++c) {
        if (c != a && c != b) others.push_back(c);
      }
      const Vector mid = (vertex(4, a) + vertex(4, b)) / 2.0;
      const Vector vc = vertex(4, others[0]);
      const Vector vd = vertex(4, others[1]);

      SurfaceMesh mesh;
      mesh.label = "p" + std::to_string(a + 1) + "=p" + std::to_string(b + 1);
      mesh.u = lin_grid(0.0, 1.0, u_samples);
      mesh.v = lin_grid(0.0, 1.0, v_samples);
      mesh.points.resize(static_cast<Eigen::Index>(u_samples) * v_samples, 4);
      mesh.physical.resize(static_cast<std::size_t>(mesh.points.rows()));
      Eigen::Index row = 0;
      for (double u : mesh.u) {
        for (double v : mesh.v) {
          const Vector p = mid + u * ((1.0 - v) * vc + v * vd - mid);
          mesh.points.row(row) = p.transpose();
          mesh.physical[static_cast<std::size_t>(row)] = on_simplex(p);
          ++row;
        }
      }
      planes.push_back(std::move(mesh));
    }
  }
  return planes;
}

ParamCurve constant_t2_circle(double t2, int samples) {
  require_range(t2, 1.0 / 3.0, 1.0, "t2");
  require_samples(samples, "a circle");
  const auto frame = simplex_frame(3);
  const double radius = std::sqrt(std::max(0.0, (3.0 * t2 - 1.0) / 3.0));

  ParamCurve c;
  c.label = fraction_label("t2", t2);
  c.parameter = lin_grid(0.0, 2.0 * kPi, samples);
  c.points.resize(samples, 3);
  c.physical.resize(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double a = c.parameter[static_cast<std::size_t>(i)];
    Vector coeffs(2);
    coeffs << radius * std::cos(a), radius * std::sin(a);
    const Vector p = frame.point(coeffs);
    c.points.row(i) = p.transpose();
    c.physical[static_cast<std::size_t>(i)] = on_simplex(p);
  }
  return c;
}

SurfaceMesh constant_t2_sphere(double t2, int theta_samples, int phi_samples) {
  require_range(t2, 0.25, 1.0, "t2");
  require_samples(theta_samples, "a sphere");
  require_samples(phi_samples, "a sphere");
  const double r = std::sqrt(std::max(0.0, (4.0 * t2 - 1.0) / 2.0));

  SurfaceMesh mesh;
  mesh.label = fraction_label("t2", t2);
  mesh.u = lin_grid(0.0, kPi, theta_samples);
  mesh.v = periodic_grid(phi_samples);
  const auto nodes = static_cast<Eigen::Index>(theta_samples) * phi_samples;
  mesh.points.resize(nodes, 4);
  mesh.radius.assign(static_cast<std::size_t>(nodes), r);
  mesh.physical.resize(static_cast<std::size_t>(nodes));
  Eigen::Index row = 0;
  for (double theta : mesh.u) {
    for (double phi : mesh.v) {
      const std::array<double, 2> angles{phi, theta};
      const auto point = polar_to_p(4, r, angles);
      mesh.points.row(row) = point.p.transpose();
      mesh.physical[static_cast<std::size_t>(row)] = point.physical;
      ++row;
    }
  }
  return mesh;
}

std::variant<ParamCurve, SurfaceMesh> constant_t2_locus(int n, double t2, int samples,
                                                        int theta_samples,
                                                        int phi_samples) {
  if (n == 3) return constant_t2_circle(t2, samples);
  if (n == 4) return constant_t2_sphere(t2, theta_samples, phi_samples);
  throw InvalidDimension("constant-t2 loci exist for n = 3 or 4, got " + std::to_string(n));
}

std::optional<double> qutrit_t3_radius(double t3, double alpha) {
  const std::array<double, 4> cubic{std::cos(3.0 * alpha) / std::sqrt(6.0), 1.0, 0.0,
                                    1.0 / 9.0 - t3};
  return poly::smallest_nonnegative_root(cubic);
}

ParamCurve constant_t3_locus_qutrit(double t3, int alpha_samples) {
  require_range(t3, 1.0 / 9.0, 1.0, "t3");
  require_samples(alpha_samples, "a t3 locus");
  const auto frame = simplex_frame(3);
  const double bound = std::sqrt(2.0 / 3.0);

  ParamCurve c;
  c.label = fraction_label("t3", t3);
  c.parameter = lin_grid(0.0, 2.0 * kPi, alpha_samples);
  c.points.resize(alpha_samples, 3);
  std::vector<char> physical(static_cast<std::size_t>(alpha_samples), 0);
  parallel_for(static_cast<std::size_t>(alpha_samples), [&](std::size_t i) {
    const double alpha = c.parameter[i];
    const auto r = qutrit_t3_radius(t3, alpha);
    const auto row = static_cast<Eigen::Index>(i);
    if (!r) {
      c.points.row(row).setConstant(kNaN);
      return;
    }
    const double gamma = alpha + kPi / 6.0;
    Vector coeffs(2);
    coeffs << *r * std::cos(gamma), *r * std::sin(gamma);
    const Vector p = frame.point(coeffs);
    c.points.row(row) = p.transpose();
    physical[i] = *r <= bound + kRadiusSlack && on_simplex(p);
  });
  c.physical.assign(physical.begin(), physical.end());
  return c;
}

double ququart_a3(double theta, double phi) {
  const double s = std::sin(theta);
  return -std::sqrt(6.0) * (3.0 * std::cos(theta) + 5.0 * std::cos(3.0 * theta)) +
         8.0 * std::sqrt(3.0) * s * s * s * std::sin(3.0 * phi);
}

double ququart_b4(double theta, double phi) {
  const double s = std::sin(theta);
  return 45.0 + 4.0 * std::cos(2.0 * theta) + 7.0 * std::cos(4.0 * theta) +
         32.0 * std::sqrt(2.0) * std::cos(theta) * s * s * s * std::sin(3.0 * phi);
}

std::optional<double> ququart_surface_radius(Invariant which, double value, double theta,
                                             double phi) {
  const double a3 = ququart_a3(theta, phi);
  if (which == Invariant::T3) {
    require_range(value, 1.0 / 16.0, 1.0, "t3");
    const std::array<double, 4> cubic{a3 / 96.0, 3.0 / 8.0, 0.0, 1.0 / 16.0 - value};
    return poly::smallest_nonnegative_root(cubic);
  }
  require_range(value, 1.0 / 64.0, 1.0, "t4");
  const double b4 = ququart_b4(theta, phi);
  const std::array<double, 5> quartic{b4 / 384.0, a3 / 96.0, 3.0 / 16.0, 0.0,
                                      1.0 / 64.0 - value};
  return poly::smallest_nonnegative_root(quartic);
}

SurfaceMesh constant_invariant_surface_ququart(Invariant which, double value,
                                               int theta_samples, int phi_samples) {
  require_range(value, which == Invariant::T3 ? 1.0 / 16.0 : 1.0 / 64.0, 1.0,
                which == Invariant::T3 ? "t3" : "t4");
  require_samples(theta_samples, "a surface");
  require_samples(phi_samples, "a surface");
  const double bound = std::sqrt(1.5);

  SurfaceMesh mesh;
  mesh.label = fraction_label(which == Invariant::T3 ? "t3" : "t4", value);
  mesh.u = lin_grid(0.0, kPi, theta_samples);
  mesh.v = periodic_grid(phi_samples);
  const auto nodes = static_cast<std::size_t>(theta_samples) *
                     static_cast<std::size_t>(phi_samples);
  mesh.points.resize(static_cast<Eigen::Index>(nodes), 4);
  mesh.radius.assign(nodes, kNaN);
  // vector<bool> packs bits, so workers write flags into bytes first.
  std::vector<char> physical(nodes, 0);
  parallel_for(nodes, [&](std::size_t node) {
    const double theta = mesh.u[node / static_cast<std::size_t>(phi_samples)];
    const double phi = mesh.v[node % static_cast<std::size_t>(phi_samples)];
    const auto row = static_cast<Eigen::Index>(node);
    const auto r = ququart_surface_radius(which, value, theta, phi);
    if (!r) {
      mesh.points.row(row).setConstant(kNaN);
      return;
    }
    const std::array<double, 2> angles{phi, theta};
    const auto point = polar_to_p(4, *r, angles);
    mesh.radius[node] = *r;
    mesh.points.row(row) = point.p.transpose();
    physical[node] = *r <= bound + kRadiusSlack && point.physical;
  });
  mesh.physical.assign(physical.begin(), physical.end());
  return mesh;
}

double boundary_upper(double t2) {
  const double s = std::max(0.0, 3.0 * t2 - 1.0);
  return t2 - 2.0 / 9.0 + s * std::sqrt(s) / (9.0 * std::numbers::sqrt2);
}

double boundary_lower(double t2) {
  const double s = std::max(0.0, 3.0 * t2 - 1.0);
  return t2 - 2.0 / 9.0 - s * std::sqrt(s) / (9.0 * std::numbers::sqrt2);
}

double boundary_zero_eigenvalue(double t2) { return (3.0 * t2 - 1.0) / 2.0; }

TBoundary t_space_boundary_qutrit(int t2_samples) {
  require_samples(t2_samples, "a boundary curve");
  // lower - zero_eigenvalue falls monotonically from 1/9 at t2 = 1/3.
  double lo = 1.0 / 3.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (boundary_lower(mid) - boundary_zero_eigenvalue(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double junction = 0.5 * (lo + hi);

  auto make = [&](double from, double to, double (*f)(double), const char* label) {
    ParamCurve c;
    c.space = Space::T;
    c.label = label;
    c.parameter = lin_grid(from, to, t2_samples);
    c.points.resize(t2_samples, 2);
    c.physical.assign(static_cast<std::size_t>(t2_samples), true);
    for (int i = 0; i < t2_samples; ++i) {
      const double t2 = c.parameter[static_cast<std::size_t>(i)];
      c.points(i, 0) = t2;
      c.points(i, 1) = f(t2);
    }
    return c;
  };

  TBoundary out;
  out.junction = junction;
  out.upper = make(1.0 / 3.0, 1.0, boundary_upper, "upper");
  out.lower = make(1.0 / 3.0, junction, boundary_lower, "lower");
  out.zero_eigenvalue = make(junction, 1.0, boundary_zero_eigenvalue, "zero-eigenvalue");
  return out;
}

SegmentImages lambda_segment_images(int samples) {
  require_samples(samples, "a segment image");
  const Vector pe = Vector::Constant(3, 1.0 / 3.0);
  const Vector v1 = vertex(3, 0);
  const Vector v2 = vertex(3, 1);
  const Vector m12 = (v1 + v2) / 2.0;

  struct Family {
    const char* label;
    Vector lambda_from;
    Vector lambda_to;
    double x_lo;
    double x_hi;
    double (*t2)(double);
    double (*t3)(double);
    const char* t2_form;
    const char* t3_form;
    const char* t3_printed;  // non-null when the printed form differs
  };
  // lambda^ep_1 = lambda_1 x, lambda^em_12 = (lambda_1 + lambda_2) x / 2,
  // lambda^mp_21 = lambda_2 + (lambda_1 - lambda_2) x.
  const Vector l0 = p_to_lambda(pe);
  const std::array<Family, 3> families{{
      {"t1^ep", l0, p_to_lambda(v1), 0.0, 1.0,
       [](double x) { return (3.0 + 6.0 * x * x) / 9.0; },
       [](double x) { return (1.0 + 6.0 * x * x + 2.0 * x * x * x) / 9.0; },
       "(3+6x^2)/9", "(1+6x^2+2x^3)/9", nullptr},
      {"t12^em", l0, p_to_lambda(m12), 0.0, 1.0,
       [](double x) { return (1.0 + x * x / 2.0) / 3.0; },
       [](double x) { return (1.0 / 3.0 + x * x / 2.0 - x * x * x / 12.0) / 3.0; },
       "(1+x^2/2)/3", "(1/3+x^2/2-x^3/12)/3", nullptr},
      {"t21^mp", p_to_lambda(v2), p_to_lambda(v1), 0.5, 1.0,
       [](double x) { return 1.0 - 2.0 * x + 2.0 * x * x; },
       [](double x) { return 1.0 - 3.0 * x + 3.0 * x * x; },
       "1-2x+2x^2", "1-3x+3x^2", "1-3x+x^2"},
  }};

  SegmentImages out;
  for (const auto& f : families) {
    ParamCurve c;
    c.space = Space::T;
    c.label = f.label;
    c.parameter = lin_grid(f.x_lo, f.x_hi, samples);
    c.points.resize(samples, 2);
    c.physical.assign(static_cast<std::size_t>(samples), true);
    double dev2 = 0.0;
    double dev3 = 0.0;
    double dev_printed = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double x = c.parameter[static_cast<std::size_t>(i)];
      const Vector lambda = f.lambda_from + (f.lambda_to - f.lambda_from) * x;
      const Vector t = invariants(lambda_to_p(lambda));
      c.points.row(i) = t.transpose();
      dev2 = std::max(dev2, std::abs(t[0] - f.t2(x)));
      dev3 = std::max(dev3, std::abs(t[1] - f.t3(x)));
      if (f.t3_printed) {
        dev_printed = std::max(dev_printed, std::abs(t[1] - (1.0 - 3.0 * x + x * x)));
      }
    }
    if (dev2 > 1e-12) out.discrepancies.push_back({f.label, 0, f.t2_form, "invariants()", dev2});
    if (dev3 > 1e-12) out.discrepancies.push_back({f.label, 1, f.t3_form, "invariants()", dev3});
    if (f.t3_printed) {
      out.discrepancies.push_back({f.label, 1, f.t3_printed, f.t3_form, dev_printed});
    }
    out.curves.push_back(std::move(c));
  }
  return out;
}

std::vector<ParamCurve> permutation_images(const ParamCurve& curve) {
  require_p_space(curve.space);
  const auto n = static_cast<int>(curve.points.cols());
  require_dimension(n);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);

  std::vector<ParamCurve> images;
  do {
    ParamCurve copy;
    copy.space = Space::P;
    copy.parameter = curve.parameter;
    copy.physical = curve.physical;
    copy.points.resize(curve.points.rows(), n);
    std::string tag;
    for (int i = 0; i < n; ++i) {
      copy.points.col(i) = curve.points.col(sigma[static_cast<std::size_t>(i)]);
      tag += std::to_string(sigma[static_cast<std::size_t>(i)] + 1);
    }
    copy.label = curve.label.empty() ? "sigma=" + tag : curve.label + " sigma=" + tag;
    images.push_back(std::move(copy));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return images;
}

ParamCurve to_lambda(const ParamCurve& curve) {
  require_p_space(curve.space);
  ParamCurve out = curve;
  out.space = Space::Lambda;
  out.points = map_rows(curve.points, [](const Vector& p) { return p_to_lambda(p); });
  return out;
}

ParamCurve to_t(const ParamCurve& curve) {
  require_p_space(curve.space);
  ParamCurve out = curve;
  out.space = Space::T;
  out.points = map_rows(curve.points, [](const Vector& p) { return invariants(p); });
  return out;
}

SurfaceMesh to_lambda(const SurfaceMesh& mesh) {
  require_p_space(mesh.space);
  SurfaceMesh out = mesh;
  out.space = Space::Lambda;
  out.points = map_rows(mesh.points, [](const Vector& p) { return p_to_lambda(p); });
  return out;
}

SurfaceMesh to_t(const SurfaceMesh& mesh) {
  require_p_space(mesh.space);
  SurfaceMesh out = mesh;
  out.space = Space::T;
  out.points = map_rows(mesh.points, [](const Vector& p) { return invariants(p); });
  return out;
}

ParamCurve trajectory_curve(const ThermalTrajectory& trajectory, std::string label) {
  ParamCurve c;
  c.label = std::move(label);
  const auto rows = static_cast<Eigen::Index>(trajectory.samples.size());
  c.points.resize(rows, trajectory.spectrum.n());
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& s = trajectory.samples[static_cast<std::size_t>(i)];
    c.points.row(i) = s.p.values().transpose();
    c.parameter.push_back(s.beta);
    c.physical.push_back(true);
  }
  return c;
}

}  // namespace qudit
