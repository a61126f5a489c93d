#pragma once

#include <Eigen/Dense>

namespace mqs {

// Circular wire loop: ring radius, conductor radius, turn count, placement.
struct Loop {
  double radius = 0.05;       // m
  double wire_radius = 1e-3;  // m
  int turns = 1;
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();

  void validate() const;

  // Orthonormal in-plane directions perpendicular to the axis.
  std::pair<Eigen::Vector3d, Eigen::Vector3d> plane_basis() const;

  // Point and unit tangent at parametric angle theta.
  Eigen::Vector3d point(double theta) const;
  Eigen::Vector3d tangent(double theta) const;
};

// Transmitter/receiver pair with derived placement quantities.
struct CoilPair {
  Loop tx;
  Loop rx;

  double separation() const;      // center distance along the tx axis, m
  double lateral_offset() const;  // center distance perpendicular to it, m

  // Minimum distance between the two ring curves (wire surfaces excluded).
  double min_gap() const;

  // Checks both loops and the non-intersection gap.
  void validate() const;

  bool is_coaxial(double tolerance = 1e-9) const;
};

}  // namespace mqs
