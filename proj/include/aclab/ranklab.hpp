#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace aclab {

/// Point on the 6-torus, coordinates canonicalized to [0, 1).
struct TorusPoint {
  std::array<double, 6> x{};
  static TorusPoint wrap(const std::array<double, 6>& raw);
};

using Skew6 = std::array<std::array<double, 6>, 6>;
using Covector6 = std::array<double, 6>;

/// Smooth radial cutoff r(x5, x6) = phi((x5^2 + x6^2) / rho^2) built from
/// exp(-1/t) pieces: identically 1 for fiber radius <= rho/2, identically 0
/// for radius >= rho, with closed-form first partials.
struct BumpProfile {
  double rho = 0.25;

  double value(double x5, double x6) const;
  /// {r, dr/dx5, dr/dx6}
  std::array<double, 3> value_and_gradient(double x5, double x6) const;

  // The profile in the scaled variable s = (radius/rho)^2.
  static double phi(double s);
  static double phi_prime(double s);
};

/// sigma = cos(2 pi x3) dx1 + sin(2 pi x3) dx2 on the base torus, and its
/// differential dsigma = 2 pi (sin(2 pi x3) dx1^dx3 - cos(2 pi x3) dx2^dx3).
struct SigmaValue {
  Covector6 sigma{};
  Skew6 dsigma{};
};
SigmaValue sigma_at(const TorusPoint& p);

/// Coefficient matrix of omega = tau + dr^sigma + r dsigma at p, where
/// tau = r dx5^dx6. Exactly zero outside the support disk.
Skew6 omega_at(const BumpProfile& bump, const TorusPoint& p);

/// Pointwise evaluator abstraction used by the scanning kernels.
using SampledForm = std::function<Skew6(const TorusPoint&)>;
SampledForm sampled_omega(const BumpProfile& bump);

struct RankSample {
  TorusPoint point;
  int rank = 0;
  double smallest_retained_sv = 0.0;
  double largest_sv = 0.0;
  std::array<double, 6> singular_values{};
};

struct RankScanResult {
  std::map<int, long> histogram;
  std::vector<RankSample> samples;          // in generation order
  std::vector<RankSample> rank_violations;  // ranks outside {0, 4}
  bool dichotomy_holds() const { return rank_violations.empty(); }
};

/// Deterministic seeded uniform sample points (identical for both kernels).
std::vector<TorusPoint> sample_points(std::uint64_t seed, int n_samples);

/// Numeric rank of form(p) for every point: count of singular values above
/// tol * largest. The parallel kernel fans point evaluations out with OpenMP;
/// the serial kernel is the reference. Both produce identical results.
RankScanResult rank_scan(const SampledForm& form, const std::vector<TorusPoint>& points,
                         double tol);
RankScanResult rank_scan_serial(const SampledForm& form, const std::vector<TorusPoint>& points,
                                double tol);
RankScanResult rank_scan(const BumpProfile& bump, int n_samples, double tol, std::uint64_t seed);

/// Pointwise wedge identities: || omega^2 - 2 r (tau + dr^sigma)^dsigma ||_inf,
/// || omega^3 ||_inf and || dsigma^dsigma ||_inf at each point.
struct IdentityReport {
  double max_square_residual = 0.0;
  double max_cube_residual = 0.0;
  double max_dsigma_sq_residual = 0.0;
  double square_tolerance = 1e-9;
  double cube_tolerance = 1e-10;
  double dsigma_sq_tolerance = 1e-12;
  struct Breach {
    TorusPoint point;
    std::string which;
    double residual;
  };
  std::vector<Breach> breaches;
  bool ok() const { return breaches.empty(); }
};
IdentityReport identity_check(const BumpProfile& bump, const std::vector<TorusPoint>& points);

/// Central-difference check that d(omega) = 0: max |(d omega)_{ijk}| over all
/// 3-index coefficients and points, at step h. Second-order accurate, so the
/// residual scales like C h^2; outside the support the stencil sees only
/// zeros and the residual is exactly 0.
struct ClosednessReport {
  double step = 0.0;
  double max_residual = 0.0;
  double estimated_constant = 0.0;  // max_residual / step^2
  std::vector<double> per_point_residual;
};
ClosednessReport closedness_check(const BumpProfile& bump, const std::vector<TorusPoint>& points,
                                  double h);

/// Fiber integral of the dx5^dx6 component over the fiber square by midpoint
/// quadrature on an n x n grid; equals the integral of r.
double fiber_integral(const BumpProfile& bump, int grid = 600);

/// Why no anti-invariant almost complex structure exists for these forms on a
/// connected torus; fixed explanatory text for the reports.
std::string no_anti_invariant_note();

}  // namespace aclab
