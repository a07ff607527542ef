#include "aclab/ranklab.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace aclab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_unit(double v) {
  double w = v - std::floor(v);
  if (w >= 1.0) w = 0.0;  // guards against floor rounding at the seam
  return w;
}

// Nearest representative of a fiber coordinate in [-1/2, 1/2).
double centered(double v) { return v - std::round(v); }

double cutoff_piece(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
double cutoff_piece_prime(double t) { return t > 0.0 ? std::exp(-1.0 / t) / (t * t) : 0.0; }

}  // namespace

TorusPoint TorusPoint::wrap(const std::array<double, 6>& raw) {
  TorusPoint p;
  for (int i = 0; i < 6; ++i) p.x[static_cast<std::size_t>(i)] = wrap_unit(raw[static_cast<std::size_t>(i)]);
  return p;
}

double BumpProfile::phi(double s) {
  const double a = cutoff_piece(1.0 - s);
  const double b = cutoff_piece(s - 0.25);
  const double denom = a + b;
  return denom == 0.0 ? 0.0 : a / denom;
}

double BumpProfile::phi_prime(double s) {
  const double a = cutoff_piece(1.0 - s);
  const double b = cutoff_piece(s - 0.25);
  const double denom = a + b;
  if (denom == 0.0) return 0.0;
  const double ap = -cutoff_piece_prime(1.0 - s);
  const double bp = cutoff_piece_prime(s - 0.25);
  return (ap * b - a * bp) / (denom * denom);
}

double BumpProfile::value(double x5, double x6) const {
  const double u = centered(x5), v = centered(x6);
  return phi((u * u + v * v) / (rho * rho));
}

std::array<double, 3> BumpProfile::value_and_gradient(double x5, double x6) const {
  const double u = centered(x5), v = centered(x6);
  const double s = (u * u + v * v) / (rho * rho);
  const double r = phi(s);
  const double p = phi_prime(s);
  return {r, p * 2.0 * u / (rho * rho), p * 2.0 * v / (rho * rho)};
}

SigmaValue sigma_at(const TorusPoint& p) {
  SigmaValue out;
  const double c = std::cos(kTwoPi * p.x[2]);
  const double s = std::sin(kTwoPi * p.x[2]);
  out.sigma[0] = c;
  out.sigma[1] = s;
  auto put = [&](int i, int j, double v) {
    out.dsigma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    out.dsigma[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -v;
  };
  put(0, 2, kTwoPi * s);   // 2 pi sin(2 pi x3) dx1^dx3
  put(1, 2, -kTwoPi * c);  // -2 pi cos(2 pi x3) dx2^dx3
  return out;
}

Skew6 omega_at(const BumpProfile& bump, const TorusPoint& p) {
  Skew6 m{};
  const auto [r, r5, r6] = bump.value_and_gradient(p.x[4], p.x[5]);
  if (r == 0.0 && r5 == 0.0 && r6 == 0.0) return m;
  const SigmaValue sv = sigma_at(p);
  auto put = [&](int i, int j, double v) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += v;
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -= v;
  };
  put(4, 5, r);  // tau
  for (int j = 0; j < 2; ++j) {
    // dr ^ sigma, with dr supported on dx5, dx6
    put(4, j, r5 * sv.sigma[static_cast<std::size_t>(j)]);
    put(5, j, r6 * sv.sigma[static_cast<std::size_t>(j)]);
  }
  put(0, 2, r * sv.dsigma[0][2]);
  put(1, 2, r * sv.dsigma[1][2]);
  return m;
}

SampledForm sampled_omega(const BumpProfile& bump) {
  return [bump](const TorusPoint& p) { return omega_at(bump, p); };
}

std::vector<TorusPoint> sample_points(std::uint64_t seed, int n_samples) {
  std::mt19937_64 rng(seed);
  std::vector<TorusPoint> pts;
  pts.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    TorusPoint p;
    for (int c = 0; c < 6; ++c)
      p.x[static_cast<std::size_t>(c)] =
          static_cast<double>(rng() >> 11) * 0x1.0p-53;  // uniform in [0,1)
    pts.push_back(p);
  }
  return pts;
}

namespace {

RankSample rank_at(const SampledForm& form, const TorusPoint& p, double tol) {
  const Skew6 m = form(p);
  Eigen::Matrix<double, 6, 6> em;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) em(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  Eigen::JacobiSVD<Eigen::Matrix<double, 6, 6>> svd(em);
  const auto& sv = svd.singularValues();
  RankSample out;
  out.point = p;
  out.largest_sv = sv(0);
  for (int k = 0; k < 6; ++k) out.singular_values[static_cast<std::size_t>(k)] = sv(k);
  if (sv(0) > 0.0) {
    for (int k = 0; k < 6; ++k) {
      if (sv(k) > tol * sv(0)) {
        out.rank = k + 1;
        out.smallest_retained_sv = sv(k);
      }
    }
  }
  return out;
}

RankScanResult collect(std::vector<RankSample> samples) {
  RankScanResult out;
  for (auto& s : samples) {
    ++out.histogram[s.rank];
    if (s.rank != 0 && s.rank != 4) out.rank_violations.push_back(s);
  }
  out.samples = std::move(samples);
  return out;
}

}  // namespace

RankScanResult rank_scan_serial(const SampledForm& form, const std::vector<TorusPoint>& points,
                                double tol) {
  std::vector<RankSample> samples(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) samples[i] = rank_at(form, points[i], tol);
  return collect(std::move(samples));
}

RankScanResult rank_scan(const SampledForm& form, const std::vector<TorusPoint>& points,
                         double tol) {
  std::vector<RankSample> samples(points.size());
  const std::int64_t n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    samples[static_cast<std::size_t>(i)] = rank_at(form, points[static_cast<std::size_t>(i)], tol);
  return collect(std::move(samples));
}

RankScanResult rank_scan(const BumpProfile& bump, int n_samples, double tol, std::uint64_t seed) {
  return rank_scan(sampled_omega(bump), sample_points(seed, n_samples), tol);
}

// ---- float-coefficient exterior algebra on bitmask indices ----

namespace {

struct NumForm {
  std::map<unsigned, double> terms;  // bitmask over 6 coordinates -> coefficient

  void add(unsigned mask, double c) {
    if (c == 0.0) return;
    auto [it, inserted] = terms.emplace(mask, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0.0) terms.erase(it);
    }
  }
};

int wedge_mask_sign(unsigned a, unsigned b) {
  if ((a & b) != 0) return 0;
  int crossings = 0;
  for (int bit = 0; bit < 6; ++bit) {
    if ((b >> bit) & 1u) crossings += __builtin_popcount(a >> (bit + 1));
  }
  return (crossings % 2 == 0) ? 1 : -1;
}

NumForm num_wedge(const NumForm& a, const NumForm& b) {
  NumForm out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      const int sign = wedge_mask_sign(ma, mb);
      if (sign) out.add(ma | mb, sign * ca * cb);
    }
  return out;
}

NumForm num_scale(NumForm a, double c) {
  for (auto& [m, v] : a.terms) v *= c;
  return a;
}

NumForm num_sub(const NumForm& a, const NumForm& b) {
  NumForm out = a;
  for (const auto& [m, v] : b.terms) out.add(m, -v);
  return out;
}

double num_inf_norm(const NumForm& a) {
  double m = 0.0;
  for (const auto& [mask, v] : a.terms) m = std::max(m, std::abs(v));
  return m;
}

NumForm from_skew(const Skew6& m) {
  NumForm out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      out.add((1u << i) | (1u << j), m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return out;
}

NumForm from_covector(const Covector6& c) {
  NumForm out;
  for (int i = 0; i < 6; ++i) out.add(1u << i, c[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

IdentityReport identity_check(const BumpProfile& bump, const std::vector<TorusPoint>& points) {
  IdentityReport rep;
  for (const auto& p : points) {
    const auto [r, r5, r6] = bump.value_and_gradient(p.x[4], p.x[5]);
    const SigmaValue sv = sigma_at(p);

    NumForm tau;
    tau.add((1u << 4) | (1u << 5), r);
    NumForm dr;
    dr.add(1u << 4, r5);
    dr.add(1u << 5, r6);
    NumForm sigma = from_covector(sv.sigma);
    NumForm dsigma = from_skew(sv.dsigma);
    NumForm dr_sigma = num_wedge(dr, sigma);

    NumForm omega = tau;
    for (const auto& [m, v] : dr_sigma.terms) omega.add(m, v);
    for (const auto& [m, v] : num_scale(dsigma, r).terms) omega.add(m, v);

    NumForm omega_sq = num_wedge(omega, omega);
    NumForm lhs_base = tau;
    for (const auto& [m, v] : dr_sigma.terms) lhs_base.add(m, v);
    NumForm rhs = num_scale(num_wedge(lhs_base, dsigma), 2.0 * r);
    const double square_res = num_inf_norm(num_sub(omega_sq, rhs));

    const double cube_res = num_inf_norm(num_wedge(omega_sq, omega));
    const double dsig_res = num_inf_norm(num_wedge(dsigma, dsigma));

    rep.max_square_residual = std::max(rep.max_square_residual, square_res);
    rep.max_cube_residual = std::max(rep.max_cube_residual, cube_res);
    rep.max_dsigma_sq_residual = std::max(rep.max_dsigma_sq_residual, dsig_res);
    if (square_res > rep.square_tolerance)
      rep.breaches.push_back({p, "omega^2 identity", square_res});
    if (cube_res > rep.cube_tolerance) rep.breaches.push_back({p, "omega^3 = 0", cube_res});
    if (dsig_res > rep.dsigma_sq_tolerance)
      rep.breaches.push_back({p, "dsigma^dsigma = 0", dsig_res});
  }
  return rep;
}

ClosednessReport closedness_check(const BumpProfile& bump, const std::vector<TorusPoint>& points,
                                  double h) {
  ClosednessReport rep;
  rep.step = h;
  rep.per_point_residual.reserve(points.size());
  for (const auto& p : points) {
    double worst = 0.0;
    // (d omega)_{abc} = d_a w_bc - d_b w_ac + d_c w_ab, central differences.
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c) {
          auto partial = [&](int dir, int i, int j) {
            TorusPoint q = p;
            q.x[static_cast<std::size_t>(dir)] += h;
            const double up = omega_at(bump, q)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            q.x[static_cast<std::size_t>(dir)] -= 2.0 * h;
            const double dn = omega_at(bump, q)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            return (up - dn) / (2.0 * h);
          };
          const double res = partial(a, b, c) - partial(b, a, c) + partial(c, a, b);
          worst = std::max(worst, std::abs(res));
        }
    rep.per_point_residual.push_back(worst);
    rep.max_residual = std::max(rep.max_residual, worst);
  }
  rep.estimated_constant = rep.max_residual / (h * h);
  return rep;
}

double fiber_integral(const BumpProfile& bump, int grid) {
  double total = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : total)
  for (int i = 0; i < grid; ++i) {
    const double x5 = (i + 0.5) / grid - 0.5;
    double rowsum = 0.0;
    for (int j = 0; j < grid; ++j) {
      const double x6 = (j + 0.5) / grid - 0.5;
      rowsum += bump.value(x5, x6);
    }
    total += rowsum;
  }
  return total / (static_cast<double>(grid) * grid);
}

std::string no_anti_invariant_note() {
  return "Note: no almost complex structure J on the connected 6-torus makes these\n"
         "compactly supported forms J-anti-invariant, despite the pointwise rank\n"
         "dichotomy. A closed anti-invariant form obeys a unique continuation\n"
         "principle: if it vanishes on any open set, it vanishes everywhere. The\n"
         "forms built here vanish outside a tube around a codimension-2 subtorus,\n"
         "so an anti-invariant pair would force them to vanish identically. The\n"
         "obstruction is global, not pointwise, and is not falsifiable by sampling;\n"
         "it is recorded here as documentation.\n";
}

}  // namespace aclab
