#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "system.hpp"

namespace hk {

inline constexpr std::uint64_t kDefaultSeed = 12345;

struct DistanceOptions {
  int segments = 32;       // piecewise-constant control segments
  int multistarts = 16;    // random warm starts besides the tracking start
  double tolerance = 1e-8; // endpoint tolerance, relative to the point scale
  int substeps = 2;        // RK4 steps per segment
  int max_outer = 30;      // augmented-Lagrangian rounds
  int max_inner = 80;      // quasi-Newton iterations per round
  bool equalize = true;    // extra pass flattening per-segment speeds
  bool lower_bound = false;
  int lower_grid = 41;     // nodes per axis for the relaxation grid
  std::uint64_t seed = kDefaultSeed;
};

// Cheap settings for ball-membership tests and other bulk queries.
DistanceOptions fast_distance_options();

struct ControlPath {
  int segments = 0;
  int m = 0;
  std::vector<double> controls;  // segments x m, row-major
  double radius = 0;             // max over segments of the control 2-norm
  double endpoint_error = 0;     // Euclidean mismatch at the target
};

struct DistanceResult {
  double upper = 0;
  std::optional<double> lower;
  ControlPath path;
  bool converged = false;
};

DistanceResult cc_distance(const HomogeneousSystem& sys,
                           std::span<const double> x,
                           std::span<const double> y,
                           const DistanceOptions& opts = {});

// Integrates the witness controls from x up to curve parameter s in [0,1].
std::vector<double> path_point(const HomogeneousSystem& sys,
                               std::span<const double> x,
                               const ControlPath& path, double s);

struct MidpointResult {
  std::vector<double> z;
  double distance = 0;   // d(x,y) used for the half-distance targets
  double deviation = 0;  // max(|d(x,z)-d/2|, |d(z,y)-d/2|)
};

MidpointResult midpoint_search(const HomogeneousSystem& sys,
                               std::span<const double> x,
                               std::span<const double> y, double tolerance,
                               const DistanceOptions& opts = {});

// Approximate distance from the dynamic-programming relaxation on an
// anisotropic grid; heuristic companion bound to the optimizer's upper bound.
double relaxation_distance(const HomogeneousSystem& sys,
                           std::span<const double> x,
                           std::span<const double> y, int nodes_per_axis);

// Certified half-widths of a coordinate box containing B(x, rho).
std::vector<double> reachable_box(const HomogeneousSystem& sys,
                                  std::span<const double> x, double rho);

// Scale heuristic: homogeneous pseudo-norm of the displacement.
double displacement_scale(const HomogeneousSystem& sys,
                          std::span<const double> x,
                          std::span<const double> y);

}  // namespace hk
