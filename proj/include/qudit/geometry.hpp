#pragma once

// Sampled loci of the qutrit and ququart state spaces: simplex edges and
// medians, constant-invariant curves and surfaces, the boundary of the
// qutrit t-space region, images of lambda-space segments and the
// permutation ("flower") copies of a p-space curve.
//
// Off-simplex continuations are kept and masked, never dropped.

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qudit/config.hpp"
#include "qudit/thermal.hpp"
#include "qudit/types.hpp"

namespace qudit {

enum class Space { P, Lambda, T };

const char* to_string(Space s);

inline constexpr int kCurveSamples = 512;
inline constexpr int kSurfaceThetaSamples = 128;
inline constexpr int kSurfacePhiSamples = 256;

struct ParamCurve {
  Space space = Space::P;
  Matrix points;                  // one row per sample
  std::vector<double> parameter;  // x, alpha, t2 or beta
  std::vector<bool> physical;
  std::string label;

  Eigen::Index size() const { return points.rows(); }
};

/// Nodes are stored row-major over (u, v): row i * v.size() + j.
/// For the ququart surfaces (u, v) = (theta, phi).
struct SurfaceMesh {
  Space space = Space::P;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> radius;  // polar radius per node; empty for flat cuts
  Matrix points;
  std::vector<bool> physical;
  std::string label;

  Eigen::Index size() const { return points.rows(); }
};

/// p_jk(x) = v_j + (v_k - v_j) x, one curve per pair j < k.
std::vector<ParamCurve> simplex_edges(int n, int samples = kCurveSamples);

/// Qutrit medians p_jkl(x) = v_j + ((v_k + v_l)/2 - v_j) x, j = 1, 2, 3.
std::vector<ParamCurve> simplex_medians(int samples = kCurveSamples);

/// Ququart cut planes p_a = p_b: triangles spanned by the other two vertices
/// and the midpoint of v_a v_b, sampled on a (u, v) in [0,1]^2 grid.
std::vector<SurfaceMesh> equal_pair_planes(int u_samples = 64, int v_samples = 64);

/// Circle p_e + R (cos a e1 + sin a e2), R = sqrt((3 t2 - 1) / 3), a in [0, 2 pi].
ParamCurve constant_t2_circle(double t2, int samples = kCurveSamples);

/// Sphere of polar radius r = sqrt((4 t2 - 1) / 2) in the ququart
/// parametrization, over theta in [0, pi] and phi in [0, 2 pi).
SurfaceMesh constant_t2_sphere(double t2, int theta_samples = kSurfaceThetaSamples,
                               int phi_samples = kSurfacePhiSamples);

/// Circle for n = 3, sphere for n = 4.
std::variant<ParamCurve, SurfaceMesh> constant_t2_locus(
    int n, double t2, int samples = kCurveSamples,
    int theta_samples = kSurfaceThetaSamples, int phi_samples = kSurfacePhiSamples);

/// Smallest root r >= 0 of 1/9 + r^2 + cos(3 alpha) r^3 / sqrt(6) = t3.
std::optional<double> qutrit_t3_radius(double t3, double alpha);

/// p_e + r(t3, alpha) (cos(alpha + pi/6) e1 + sin(alpha + pi/6) e2).
/// Nodes whose root exceeds sqrt(2/3) or leaves the simplex are masked.
ParamCurve constant_t3_locus_qutrit(double t3, int alpha_samples = kCurveSamples);

enum class Invariant { T3, T4 };

/// Angular coefficients of the ququart invariants in the (phi, theta) polar
/// parametrization.
double ququart_a3(double theta, double phi);
double ququart_b4(double theta, double phi);

/// Smallest root r >= 0 of the ququart t3 cubic or t4 quartic.
std::optional<double> ququart_surface_radius(Invariant which, double value, double theta,
                                             double phi);

/// Nodes without a non-negative root carry NaN coordinates; nodes whose root
/// exceeds sqrt(3/2) or that leave the simplex are masked.
SurfaceMesh constant_invariant_surface_ququart(Invariant which, double value,
                                               int theta_samples = kSurfaceThetaSamples,
                                               int phi_samples = kSurfacePhiSamples);

struct TBoundary {
  ParamCurve upper;           // t3 = t2 - 2/9 + (3 t2 - 1)^{3/2} / (9 sqrt 2)
  ParamCurve lower;           // same with the minus sign, up to the zero curve
  ParamCurve zero_eigenvalue; // t3 = (3 t2 - 1) / 2, from the lower curve to t2 = 1
  double junction = 0.0;      // t2 where lower and zero_eigenvalue meet
};

double boundary_upper(double t2);
double boundary_lower(double t2);
double boundary_zero_eigenvalue(double t2);

/// Closed qutrit t-space region boundary; the lower / zero junction is
/// located by bisection.
TBoundary t_space_boundary_qutrit(int t2_samples = kCurveSamples);

struct Discrepancy {
  std::string curve;
  int component = 0;  // 0 -> t2, 1 -> t3
  std::string printed;
  std::string oracle;
  double max_deviation = 0.0;
};

struct SegmentImages {
  std::vector<ParamCurve> curves;  // t-space, computed through invariants()
  std::vector<Discrepancy> discrepancies;
};

/// t-space images of the lambda-space segments e->p (vertex 1), e->m
/// (midpoint 12) and m->p (midpoint 21 to vertex 1). Each is compared with
/// its closed form; deviations above 1e-12 are reported.
SegmentImages lambda_segment_images(int samples = kCurveSamples);

/// All n! coordinate permutations q_i = p_{sigma(i)} in lexicographic order
/// of sigma; the first copy is the input.
std::vector<ParamCurve> permutation_images(const ParamCurve& curve);

/// Row-wise maps of a p-space curve or mesh. Masks and parameters carry over.
ParamCurve to_lambda(const ParamCurve& curve);
ParamCurve to_t(const ParamCurve& curve);
SurfaceMesh to_lambda(const SurfaceMesh& mesh);
SurfaceMesh to_t(const SurfaceMesh& mesh);

/// p-space curve of a thermal trajectory, parameterised by beta.
ParamCurve trajectory_curve(const ThermalTrajectory& trajectory, std::string label = {});

}  // namespace qudit
