#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "support.hpp"

namespace hk {

// Exponent vector; one entry per variable.
using Monomial = std::vector<unsigned>;

// Multivariate polynomial with exact rational coefficients over a fixed
// number of variables. All symbolic manipulation in the library goes through
// this type; rounding happens only in eval().
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Polynomial derivative(int var) const;

  // Substitutes variable i by args[i]; all args share one variable space.
  Polynomial substitute(const std::vector<Polynomial>& args) const;

  // Rescales variable i by factors[i] (exact; used for dilation action).
  Polynomial scale_vars(const std::vector<Rational>& factors) const;

  // Appends extra (unused) trailing variables.
  Polynomial extend_vars(int new_nvars) const;

  double eval(std::span<const double> x) const;
  Rational eval_exact(const std::vector<Rational>& x) const;

  // Total degree weighted by w (the delta-degree); -1 for the zero polynomial.
  long weighted_degree(const std::vector<int>& w) const;
  bool is_weighted_homogeneous(const std::vector<int>& w, long degree) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

// A polynomial map R^nvars -> R^m, i.e. a vector of components. Doubles as a
// vector field (components = coefficients of the coordinate derivations).
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(int nvars, int dim) : comps_(dim, Polynomial(nvars)) {}
  explicit PolyMap(std::vector<Polynomial> comps) : comps_(std::move(comps)) {}

  int nvars() const { return comps_.empty() ? 0 : comps_[0].nvars(); }
  int dim() const { return static_cast<int>(comps_.size()); }
  const Polynomial& operator[](int i) const { return comps_[i]; }
  Polynomial& operator[](int i) { return comps_[i]; }
  const std::vector<Polynomial>& comps() const { return comps_; }

  std::vector<double> eval(std::span<const double> x) const;
  std::vector<Rational> eval_exact(const std::vector<Rational>& x) const;
  PolyMap compose(const std::vector<Polynomial>& args) const;
  bool is_zero() const;

  PolyMap operator+(const PolyMap& o) const;
  PolyMap operator-(const PolyMap& o) const;
  PolyMap operator*(const Rational& c) const;

 private:
  std::vector<Polynomial> comps_;
};

// Vector-field calculus ------------------------------------------------------

// Derivation of u along the field: sum_k field_k * d u / d x_k.
Polynomial apply_field(const PolyMap& field, const Polynomial& u);

// Lie bracket [a,b] = a(b) - b(a), computed exactly component-wise.
PolyMap lie_bracket(const PolyMap& a, const PolyMap& b);

// Jacobian matrix d field_i / d x_j as a dim x nvars grid of polynomials.
std::vector<std::vector<Polynomial>> jacobian(const PolyMap& field);

// Exact rational linear algebra over coefficient vectors -------------------

// Incremental row space over the (coordinate, monomial) index set. Used for
// linear-independence tests and for extracting bases of Lie algebras.
class FieldSpan {
 public:
  // Returns true when the field enlarged the span (then keeps it).
  bool insert(const PolyMap& f);
  bool contains(const PolyMap& f) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  using Key = std::pair<int, Monomial>;
  static std::map<Key, Rational> flatten(const PolyMap& f);
  // Reduces v against rows_; returns the residual.
  std::map<Key, Rational> reduce(std::map<Key, Rational> v) const;
  std::vector<std::map<Key, Rational>> rows_;  // echelon rows, leading key min
};

// Solves sum_i c_i basis[i] = target exactly; empty result if unsolvable.
std::vector<Rational> solve_in_span(const std::vector<PolyMap>& basis,
                                    const PolyMap& target, bool& ok);

}  // namespace hk
