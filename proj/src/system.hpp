#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "support.hpp"

#include <json.hpp>

namespace hk {

// Non-isotropic dilation exponents 1 = s_1 <= ... <= s_n.
struct DilationFamily {
  std::vector<int> weights;

  int dim() const { return static_cast<int>(weights.size()); }
  // Homogeneous dimension: sum of all weights.
  int homogeneous_dimension() const;
  void validate() const;

  std::vector<double> apply(double lambda, std::span<const double> x) const;
};

// A family of polynomial Hormander vector fields, 1-homogeneous with respect
// to a dilation family, with full rank at the origin.
struct HomogeneousSystem {
  std::string name;
  int n = 0;                    // space dimension
  int m = 0;                    // number of fields
  std::vector<PolyMap> fields;  // m fields on R^n
  DilationFamily dilation;
  int q = 0;  // homogeneous dimension

  std::vector<double> dilate(double lambda, std::span<const double> x) const {
    return dilation.apply(lambda, x);
  }
  // Smooth homogeneous gauge sum_k |x_k|^{1/s_k}; used only for scales.
  double pseudo_norm(std::span<const double> x) const;
  // True when no field coefficient depends on coordinate k, i.e. the whole
  // structure is translation invariant along e_k.
  bool translation_invariant_along(int k) const;
};

// Stratified basis of the Lie algebra generated by the fields.
struct LieStructure {
  std::vector<PolyMap> basis;   // ordered by stratum
  std::vector<int> degrees;     // homogeneity degree of each basis element
  std::vector<int> strata_dims; // dim of each stratum, 1-based semantics
  int N = 0;                    // dim Lie(X)
  int p = 0;                    // N - n
  int step = 0;                 // largest nonempty stratum
};

// Parsing + validation. Throws ConfigError with a precise message on any
// schema or structural violation.
HomogeneousSystem parse_system(const nlohmann::json& doc);
HomogeneousSystem parse_system_file(const std::string& path);

// Term-list representation shared between system and group files: an array of
// {"target": 1-based component, "coeff": "p/q", "monomial": [e_1..e_nvars]}.
PolyMap parse_poly_map(const nlohmann::json& spec, int nvars, int dim,
                       const std::string& what);
// One vector field (square map) from the same representation.
PolyMap parse_field(const nlohmann::json& spec, int nvars,
                    const std::string& what);
nlohmann::json field_to_json(const PolyMap& f);

// Iterated brackets of generators against the previous stratum until the
// algebra closes. max_step < 0 means "largest dilation weight".
LieStructure lie_closure(const HomogeneousSystem& sys, int max_step = -1);

// Rank of the closure basis evaluated at a point.
int hormander_rank(const HomogeneousSystem& sys, const LieStructure& lie,
                   std::span<const double> x);
int hormander_rank(const HomogeneousSystem& sys, std::span<const double> x);

// Exact rank of {fields evaluated at the rational point x}.
int rank_at_exact(const std::vector<PolyMap>& fields,
                  const std::vector<Rational>& x);

}  // namespace hk
