#pragma once

#include <vector>

#include "polynomial.hpp"

namespace hk {

// Flat double-coefficient view of a polynomial for numeric hot paths. The
// rational->double conversion happens once, at compile() time.
struct CompiledPoly {
  struct Term {
    double c;
    std::vector<std::pair<int, unsigned>> powers;  // (var, exponent), e > 0
  };
  std::vector<Term> terms;

  double eval(const double* x) const {
    double s = 0;
    for (const auto& t : terms) {
      double v = t.c;
      for (const auto& [var, e] : t.powers) {
        double b = x[var];
        switch (e) {
          case 1:
            v *= b;
            break;
          case 2:
            v *= b * b;
            break;
          case 3:
            v *= b * b * b;
            break;
          default:
            for (unsigned i = 0; i < e; ++i) v *= b;
        }
      }
      s += v;
    }
    return s;
  }
};

inline CompiledPoly compile(const Polynomial& p) {
  CompiledPoly out;
  out.terms.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    CompiledPoly::Term t;
    t.c = to_double(c);
    for (int i = 0; i < p.nvars(); ++i)
      if (m[i] > 0) t.powers.emplace_back(i, m[i]);
    out.terms.push_back(std::move(t));
  }
  return out;
}

struct CompiledMap {
  std::vector<CompiledPoly> comps;

  int dim() const { return static_cast<int>(comps.size()); }
  void eval(const double* x, double* out) const {
    for (std::size_t i = 0; i < comps.size(); ++i) out[i] = comps[i].eval(x);
  }
};

inline CompiledMap compile(const PolyMap& f) {
  CompiledMap out;
  out.comps.reserve(f.dim());
  for (int i = 0; i < f.dim(); ++i) out.comps.push_back(compile(f[i]));
  return out;
}

// Field plus its Jacobian, both compiled; dim x dim entries row-major.
struct CompiledField {
  CompiledMap value;
  std::vector<CompiledPoly> jac;  // d value_i / d x_j at i*dim + j
  int dim = 0;

  void eval_jac(const double* x, double* out) const {
    for (std::size_t k = 0; k < jac.size(); ++k) out[k] = jac[k].eval(x);
  }
};

inline CompiledField compile_with_jacobian(const PolyMap& f) {
  CompiledField out;
  out.value = compile(f);
  out.dim = f.dim();
  auto j = jacobian(f);
  out.jac.reserve(f.dim() * f.dim());
  for (int i = 0; i < f.dim(); ++i)
    for (int k = 0; k < f.nvars(); ++k) out.jac.push_back(compile(j[i][k]));
  return out;
}

}  // namespace hk
