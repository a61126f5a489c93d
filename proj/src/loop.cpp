#include "mqslink/loop.hpp"

#include <cmath>
#include <string>

#include "mqslink/constants.hpp"
#include "mqslink/errors.hpp"

namespace mqs {

void Loop::validate() const {
  if (!(radius > 0.0)) {
    throw validation_error("loop: radius must be > 0, got " + std::to_string(radius));
  }
  if (!(wire_radius > 0.0) || !(wire_radius < radius)) {
    throw validation_error("loop: wire_radius must be in (0, radius)");
  }
  if (turns < 1) {
    throw validation_error("loop: turns must be >= 1, got " + std::to_string(turns));
  }
  if (std::abs(axis.norm() - 1.0) > 1e-9) {
    throw validation_error("loop: axis must have unit norm (|axis| = " +
                           std::to_string(axis.norm()) + ")");
  }
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> Loop::plane_basis() const {
  const Eigen::Vector3d u = axis.unitOrthogonal();
  const Eigen::Vector3d v = axis.cross(u);
  return {u, v};
}

Eigen::Vector3d Loop::point(double theta) const {
  const auto [u, v] = plane_basis();
  return center + radius * (std::cos(theta) * u + std::sin(theta) * v);
}

Eigen::Vector3d Loop::tangent(double theta) const {
  const auto [u, v] = plane_basis();
  return -std::sin(theta) * u + std::cos(theta) * v;
}

// Distance along the tx axis; non-negative (mirror placements are identical
// by symmetry, and loop swaps in reciprocity checks must stay valid).
double CoilPair::separation() const { return std::abs((rx.center - tx.center).dot(tx.axis)); }

double CoilPair::lateral_offset() const {
  const Eigen::Vector3d d = rx.center - tx.center;
  return (d - d.dot(tx.axis) * tx.axis).norm();
}

double CoilPair::min_gap() const {
  // Exact point-to-circle distance from sample points on the tx ring to the
  // rx ring curve, minimized over a dense parameter grid; the distance field
  // is smooth so 1024 samples resolve the minimum far below wire scale.
  double best = std::numeric_limits<double>::infinity();
  constexpr int n = 1024;
  for (int i = 0; i < n; ++i) {
    const double theta = 2.0 * kPi * (i + 0.5) / n;
    const Eigen::Vector3d p = tx.point(theta) - rx.center;
    const double along = p.dot(rx.axis);
    const double in_plane = (p - along * rx.axis).norm();
    const double dr = in_plane - rx.radius;
    best = std::min(best, std::sqrt(along * along + dr * dr));
  }
  return best;
}

void CoilPair::validate() const {
  tx.validate();
  rx.validate();
  if (min_gap() <= tx.wire_radius + rx.wire_radius) {
    throw numeric_error("coil pair: loops intersect (gap " + std::to_string(min_gap()) +
                        " m does not clear the wire radii)");
  }
}

bool CoilPair::is_coaxial(double tolerance) const {
  if (std::abs(std::abs(tx.axis.dot(rx.axis)) - 1.0) > tolerance) return false;
  return lateral_offset() <= tolerance * std::max(tx.radius, rx.radius);
}

}  // namespace mqs
