#include "mqslink/inductance.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "mqslink/constants.hpp"
#include "mqslink/elliptic.hpp"
#include "mqslink/errors.hpp"
#include "mqslink/summation.hpp"
#include "mqslink/warnings.hpp"

namespace mqs {

double self_inductance(const Loop& loop, double internal_factor_y) {
  loop.validate();
  const double ratio = loop.wire_radius / loop.radius;
  if (ratio >= 0.1) {
    throw validation_error("self_inductance: thin-wire assumption requires a/R < 0.1, got " +
                           std::to_string(ratio));
  }
  const double n = static_cast<double>(loop.turns);
  return kMu0 * n * n * loop.radius *
         (std::log(8.0 * loop.radius / loop.wire_radius) - 2.0 + internal_factor_y / 4.0);
}

double mutual_coaxial(double r1, double r2, double distance) {
  if (!(r1 > 0.0) || !(r2 > 0.0) || distance < 0.0) {
    throw validation_error("mutual_coaxial: radii must be > 0 and distance >= 0");
  }
  const double denom = (r1 + r2) * (r1 + r2) + distance * distance;
  const double m = 4.0 * r1 * r2 / denom;
  if (m >= 1.0 - 1e-14) {
    throw numeric_error("mutual_coaxial: coincident filaments, mutual inductance diverges");
  }
  const double k = std::sqrt(m);
  const auto [big_k, big_e] = elliptic_ke(k);
  return kMu0 * std::sqrt(r1 * r2) * ((2.0 / k - k) * big_k - (2.0 / k) * big_e);
}

namespace {

struct SampledLoop {
  std::vector<Eigen::Vector3d> points;
  std::vector<Eigen::Vector3d> weighted_tangents;  // tangent * R * dtheta
};

SampledLoop sample_loop(const Loop& loop, int n) {
  SampledLoop s;
  s.points.reserve(n);
  s.weighted_tangents.reserve(n);
  const auto [u, v] = loop.plane_basis();
  const double h = 2.0 * kPi / n;
  for (int i = 0; i < n; ++i) {
    const double theta = (i + 0.5) * h;
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    s.points.push_back(loop.center + loop.radius * (c * u + sn * v));
    s.weighted_tangents.push_back(loop.radius * h * (-sn * u + c * v));
  }
  return s;
}

double neumann_sum(const CoilPair& pair, int n) {
  const SampledLoop a = sample_loop(pair.tx, n);
  const SampledLoop b = sample_loop(pair.rx, n);
  std::vector<double> row_sums(n);
  std::vector<double> row(n);
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d& p = a.points[i];
    const Eigen::Vector3d& t = a.weighted_tangents[i];
    for (int j = 0; j < n; ++j) {
      row[j] = t.dot(b.weighted_tangents[j]) / (p - b.points[j]).norm();
    }
    row_sums[i] = pairwise_sum(row);
  }
  return 1e-7 * pairwise_sum(row_sums);  // mu0 / (4 pi)
}

}  // namespace

double mutual_neumann(const CoilPair& pair, int segments, QuadratureReport* report) {
  pair.validate();
  if (segments < 64) {
    throw validation_error("mutual_neumann: segments must be >= 64, got " +
                           std::to_string(segments));
  }

  QuadratureReport r;
  r.coarse = neumann_sum(pair, segments / 4);
  r.medium = neumann_sum(pair, segments / 2);
  r.fine = neumann_sum(pair, segments);

  // Aitken acceleration of the geometric tail.
  const double d1 = r.medium - r.coarse;
  const double d2 = r.fine - r.medium;
  const double dd = d2 - d1;
  r.extrapolated = (std::abs(dd) > 1e-30) ? r.fine - d2 * d2 / dd : r.fine;

  const double scale = std::max(std::abs(r.fine), 1e-30);
  r.rel_change = std::abs(d2) / scale;
  r.converged = r.rel_change <= 0.01;

  const double turns = static_cast<double>(pair.tx.turns) * pair.rx.turns;
  if (report != nullptr) {
    *report = r;
  } else if (!r.converged) {
    warn("mutual_neumann: quadrature changed " + std::to_string(100.0 * r.rel_change) +
         "% between " + std::to_string(segments / 2) + " and " + std::to_string(segments) +
         " segments; increase segments");
  }
  return turns * r.extrapolated;
}

double mutual_inductance(const CoilPair& pair, int segments) {
  pair.validate();
  if (pair.is_coaxial()) {
    const double turns = static_cast<double>(pair.tx.turns) * pair.rx.turns;
    return turns * mutual_coaxial(pair.tx.radius, pair.rx.radius, pair.separation());
  }
  return mutual_neumann(pair, segments);
}

double coupling_coefficient(const CoilPair& pair) {
  const double l1 = self_inductance(pair.tx);
  const double l2 = self_inductance(pair.rx);
  const double k = mutual_inductance(pair) / std::sqrt(l1 * l2);
  if (std::abs(k) > 1.0 + 1e-6) {
    throw numeric_error("coupling_coefficient: |k| = " + std::to_string(std::abs(k)) +
                        " exceeds 1, mutual/self inductance inconsistency");
  }
  return k;
}

double rod_demagnetizing_factor(double length_to_diameter) {
  if (!(length_to_diameter > 0.0)) {
    throw validation_error("rod_demagnetizing_factor: aspect ratio must be > 0");
  }
  const double m = length_to_diameter;
  if (std::abs(m - 1.0) < 1e-8) return 1.0 / 3.0;
  if (m > 1.0) {
    const double e = std::sqrt(1.0 - 1.0 / (m * m));
    return (1.0 - e * e) / (e * e * e) * (std::atanh(e) - e);
  }
  const double e = std::sqrt(1.0 - m * m);
  return (1.0 - std::sqrt(1.0 - e * e) * std::asin(e) / e) / (e * e);
}

double rod_core_scaling(double mu_r, double length_to_diameter) {
  if (!(mu_r >= 1.0)) {
    throw validation_error("rod_core_scaling: mu_r must be >= 1, got " + std::to_string(mu_r));
  }
  const double d = rod_demagnetizing_factor(length_to_diameter);
  return mu_r / (1.0 + d * (mu_r - 1.0));
}

}  // namespace mqs
