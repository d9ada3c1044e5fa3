#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "system.hpp"

namespace hk {

enum class GroupKernelKind {
  kExactGaussian,   // abelian frame of coordinate fields
  kHeisenbergTheta, // step-2 lift with a one-parameter integral formula
  kMonteCarlo,      // simulated diffusion + density estimate
};

// Homogeneous Carnot group (R^N, *, D_lambda) together with a distinguished
// family of generators Z_j = X_j + R_j lifting a base system.
struct CarnotGroup {
  std::string name;
  int N = 0;  // lifted dimension
  int n = 0;  // base dimension
  int p = 0;  // added dimension
  std::vector<int> weights;  // per-coordinate, base weights first
  int Q = 0;                 // homogeneous dimension
  int step = 0;
  PolyMap law;          // (u,v) in R^{2N} -> u*v
  PolyMap inversion;    // u -> u^{-1}
  std::vector<PolyMap> generators;  // Z_1..Z_m on R^N
  GroupKernelKind kernel_kind = GroupKernelKind::kMonteCarlo;
  HomogeneousSystem lifted;  // the Z-system on R^N, for CC geometry

  std::vector<double> mul(std::span<const double> u,
                          std::span<const double> v) const;
  std::vector<double> inverse(std::span<const double> u) const;
  std::vector<double> dilate(double lambda, std::span<const double> u) const;
  // Embeds a base point as (x, 0).
  std::vector<double> embed(std::span<const double> x) const;

  int gauge_lcm() const;  // lcm of the weights
  // Smooth homogeneous gauge (sum_k |u_k|^{2M/w_k})^{1/(2M)}.
  double gauge(std::span<const double> u) const;
};

// Builds the group whose law is the BCH product expressed in the coordinates
// carried by the given generator realization. The generators must span an
// N-dimensional nilpotent Lie algebra of step <= 4 with full rank at 0.
CarnotGroup group_from_generators(const std::string& name, int base_dim,
                                  const std::vector<PolyMap>& generators,
                                  const std::vector<int>& weights);

// Catalog lookup: the identity lift for N = n, plus the built-in liftings of
// the step-2 and step-3 Grushin-type systems. Throws ConfigError when the
// system has p >= 1 and no catalog entry applies.
CarnotGroup builtin_lift(const HomogeneousSystem& sys);
bool has_builtin_lift(const HomogeneousSystem& sys);

// User-supplied group: {"N", "lifted_weights", "group_law", "generators"}.
CarnotGroup parse_group(const nlohmann::json& doc,
                        const HomogeneousSystem& base);
CarnotGroup parse_group_file(const std::string& path,
                             const HomogeneousSystem& base);

// Structural gates run on every group before use. Symbolic identities are
// checked exactly; throws PropertyError naming the first failure.
void validate_group(const CarnotGroup& g, const HomogeneousSystem& base);

}  // namespace hk
