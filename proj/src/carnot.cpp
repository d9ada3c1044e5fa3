#include "carnot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace hk {

namespace {

std::vector<Polynomial> identity_args(int nvars) {
  std::vector<Polynomial> args;
  args.reserve(nvars);
  for (int i = 0; i < nvars; ++i) args.push_back(Polynomial::variable(nvars, i));
  return args;
}

// Re-indexes the variables of p into a larger space, offset by `shift`.
Polynomial shift_vars(const Polynomial& p, int shift, int new_nvars) {
  std::vector<Polynomial> args;
  args.reserve(p.nvars());
  for (int i = 0; i < p.nvars(); ++i)
    args.push_back(Polynomial::variable(new_nvars, i + shift));
  return p.substitute(args);
}

Polynomial integrate_in_t(const Polynomial& p, int tvar) {
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    mm[tvar] += 1;
    out.add_term(mm, c / Rational(mm[tvar]));
  }
  return out;
}

std::vector<std::vector<Rational>> invert_matrix(
    std::vector<std::vector<Rational>> A) {
  const std::size_t N = A.size();
  std::vector<std::vector<Rational>> inv(N, std::vector<Rational>(N, 0));
  for (std::size_t i = 0; i < N; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t p = c;
    while (p < N && A[p][c] == 0) ++p;
    if (p == N) throw NumericError("singular linear part in group chart");
    std::swap(A[p], A[c]);
    std::swap(inv[p], inv[c]);
    Rational d = A[c][c];
    for (std::size_t j = 0; j < N; ++j) {
      A[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rational f = A[r][c];
      for (std::size_t j = 0; j < N; ++j) {
        A[r][j] -= f * A[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// Lie algebra presented by exact structure constants on a stratified basis.
struct StructureConstants {
  int N = 0;
  int step = 0;
  // c[i][j] = coefficients of [W_i, W_j] in the basis.
  std::vector<std::vector<std::vector<Rational>>> c;

  std::vector<Polynomial> bracket(const std::vector<Polynomial>& A,
                                  const std::vector<Polynomial>& B) const {
    const int nv = A[0].nvars();
    std::vector<Polynomial> out(N, Polynomial(nv));
    for (int i = 0; i < N; ++i) {
      if (A[i].is_zero()) continue;
      for (int j = 0; j < N; ++j) {
        if (B[j].is_zero()) continue;
        bool any = false;
        for (int k = 0; k < N; ++k)
          if (c[i][j][k] != 0) {
            any = true;
            break;
          }
        if (!any) continue;
        Polynomial prod = A[i] * B[j];
        for (int k = 0; k < N; ++k)
          if (c[i][j][k] != 0) out[k] = out[k] + prod * c[i][j][k];
      }
    }
    return out;
  }

  // Campbell-Hausdorff product, complete through commutators of length 4
  // (exact for nilpotency step <= 4).
  std::vector<Polynomial> bch(const std::vector<Polynomial>& A,
                              const std::vector<Polynomial>& B) const {
    auto C1 = bracket(A, B);
    auto C2 = bracket(A, C1);
    auto C3 = bracket(B, C1);
    auto C4 = bracket(B, C2);
    std::vector<Polynomial> Z(N, Polynomial(A[0].nvars()));
    for (int k = 0; k < N; ++k)
      Z[k] = A[k] + B[k] + C1[k] * Rational(1, 2) + C2[k] * Rational(1, 12) -
             C3[k] * Rational(1, 12) - C4[k] * Rational(1, 24);
    return Z;
  }
};

// Exact time-1 flow of sum_i a_i W_i from the origin; the fields are graded
// triangular, so Picard iteration stabilizes after finitely many rounds.
PolyMap exponential_chart(const std::vector<PolyMap>& basis, int N, int step) {
  const int nv = N + 1;  // a_1..a_N and t
  const int tvar = N;
  std::vector<Polynomial> u(N, Polynomial(nv));
  for (int round = 0; round <= step + 2; ++round) {
    std::vector<Polynomial> next(N, Polynomial(nv));
    for (int i = 0; i < N; ++i) {
      Polynomial ai = Polynomial::variable(nv, i);
      for (int k = 0; k < N; ++k) {
        Polynomial fk = basis[i][k].substitute(u);
        if (fk.is_zero()) continue;
        next[k] = next[k] + ai * fk;
      }
    }
    for (int k = 0; k < N; ++k) next[k] = integrate_in_t(next[k], tvar);
    if (next == u) break;
    u = std::move(next);
    if (round == step + 2)
      throw NumericError("flow expansion failed to stabilize");
  }
  // Substitute t = 1.
  std::vector<Polynomial> args = identity_args(N);
  args.push_back(Polynomial::constant(N, 1));
  std::vector<Polynomial> comps;
  comps.reserve(N);
  for (int k = 0; k < N; ++k) comps.push_back(u[k].substitute(args));
  return PolyMap(std::move(comps));
}

// Inverts a graded polynomial chart psi (psi(0)=0, invertible linear part).
PolyMap invert_chart(const PolyMap& psi, const std::vector<PolyMap>& basis,
                     int N, int step) {
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, 0));
  std::vector<Rational> origin(N, 0);
  for (int j = 0; j < N; ++j) {
    auto col = basis[j].eval_exact(origin);
    for (int k = 0; k < N; ++k) M[k][j] = col[k];
  }
  auto Minv = invert_matrix(M);
  auto apply_minv = [&](const std::vector<Polynomial>& v) {
    std::vector<Polynomial> out(N, Polynomial(v[0].nvars()));
    for (int k = 0; k < N; ++k)
      for (int j = 0; j < N; ++j)
        if (Minv[k][j] != 0) out[k] = out[k] + v[j] * Minv[k][j];
    return out;
  };
  // H(a) = psi(a) - M a.
  std::vector<Polynomial> H(N, Polynomial(N));
  for (int k = 0; k < N; ++k) {
    H[k] = psi[k];
    for (int j = 0; j < N; ++j)
      if (M[k][j] != 0)
        H[k] = H[k] - Polynomial::variable(N, j) * M[k][j];
  }
  std::vector<Polynomial> phi = apply_minv(identity_args(N));
  for (int round = 0; round <= step + 2; ++round) {
    std::vector<Polynomial> rhs(N, Polynomial(N));
    for (int k = 0; k < N; ++k)
      rhs[k] = Polynomial::variable(N, k) - H[k].substitute(phi);
    auto next = apply_minv(rhs);
    if (next == phi) break;
    phi = std::move(next);
    if (round == step + 2)
      throw NumericError("chart inversion failed to stabilize");
  }
  // Exact gate: psi(phi(u)) == u.
  for (int k = 0; k < N; ++k)
    if (!(psi[k].substitute(phi) == Polynomial::variable(N, k)))
      throw NumericError("chart inversion is not exact");
  return PolyMap(phi);
}

bool left_invariance_holds(const PolyMap& law,
                           const std::vector<PolyMap>& gens, int N) {
  std::vector<Polynomial> law_args(law.comps());
  for (const auto& Z : gens) {
    for (int k = 0; k < N; ++k) {
      Polynomial lhs(2 * N);
      for (int i = 0; i < N; ++i) {
        Polynomial Zi_v = shift_vars(Z[i], N, 2 * N);
        if (Zi_v.is_zero()) continue;
        lhs = lhs + Zi_v * law[k].derivative(N + i);
      }
      Polynomial rhs = Z[k].substitute(law_args);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

PolyMap compose_law(const StructureConstants& sc, const PolyMap& psi,
                    const PolyMap& phi, int N, bool mirrored) {
  std::vector<Polynomial> A, B;
  A.reserve(N);
  B.reserve(N);
  for (int k = 0; k < N; ++k) {
    A.push_back(phi[k].extend_vars(2 * N));
    B.push_back(shift_vars(phi[k], N, 2 * N));
  }
  auto Z = mirrored ? sc.bch(B, A) : sc.bch(A, B);
  std::vector<Polynomial> comps;
  comps.reserve(N);
  for (int k = 0; k < N; ++k) comps.push_back(psi[k].substitute(Z));
  return PolyMap(std::move(comps));
}

GroupKernelKind detect_kernel_kind(const CarnotGroup& g) {
  // Constant orthonormal-like frame and abelian law: classical Gaussian.
  if (g.step == 1) {
    bool constant = true;
    for (const auto& Z : g.generators)
      for (int k = 0; k < g.N; ++k)
        for (const auto& [m, c] : Z[k].terms())
          if (std::any_of(m.begin(), m.end(), [](unsigned e) { return e > 0; }))
            constant = false;
    if (constant) return GroupKernelKind::kExactGaussian;
  }
  // Step-2 plane lift: Z1 = d/du1, Z2 = u1 d/du2 + d/du3.
  if (g.N == 3 && g.generators.size() == 2 && g.weights[0] == 1 &&
      g.weights[1] == 2 && g.weights[2] == 1) {
    Polynomial u1 = Polynomial::variable(3, 0);
    Polynomial one = Polynomial::constant(3, 1);
    const auto& Z1 = g.generators[0];
    const auto& Z2 = g.generators[1];
    if (Z1[0] == one && Z1[1].is_zero() && Z1[2].is_zero() &&
        Z2[0].is_zero() && Z2[1] == u1 && Z2[2] == one)
      return GroupKernelKind::kHeisenbergTheta;
  }
  return GroupKernelKind::kMonteCarlo;
}

HomogeneousSystem make_lifted_system(const CarnotGroup& g) {
  HomogeneousSystem lifted;
  lifted.name = g.name + ":lifted";
  lifted.n = g.N;
  lifted.m = static_cast<int>(g.generators.size());
  lifted.fields = g.generators;
  lifted.dilation.weights = g.weights;
  lifted.q = g.Q;
  return lifted;
}

int checked_step(const std::vector<int>& degrees) {
  int step = 1;
  for (int d : degrees) step = std::max(step, d);
  if (step > 4)
    throw ConfigError(
        "group construction supports nilpotency step <= 4; got step " +
        std::to_string(step));
  return step;
}

}  // namespace

std::vector<double> CarnotGroup::mul(std::span<const double> u,
                                     std::span<const double> v) const {
  std::vector<double> uv(2 * N);
  std::copy(u.begin(), u.end(), uv.begin());
  std::copy(v.begin(), v.end(), uv.begin() + N);
  return law.eval(uv);
}

std::vector<double> CarnotGroup::inverse(std::span<const double> u) const {
  return inversion.eval(u);
}

std::vector<double> CarnotGroup::dilate(double lambda,
                                        std::span<const double> u) const {
  std::vector<double> out(N);
  for (int k = 0; k < N; ++k) out[k] = std::pow(lambda, weights[k]) * u[k];
  return out;
}

std::vector<double> CarnotGroup::embed(std::span<const double> x) const {
  std::vector<double> u(N, 0.0);
  std::copy(x.begin(), x.end(), u.begin());
  return u;
}

int CarnotGroup::gauge_lcm() const {
  int M = 1;
  for (int w : weights) M = std::lcm(M, w);
  return M;
}

double CarnotGroup::gauge(std::span<const double> u) const {
  const int M = gauge_lcm();
  double s = 0;
  for (int k = 0; k < N; ++k)
    s += std::pow(std::abs(u[k]), 2.0 * M / weights[k]);
  return std::pow(s, 1.0 / (2.0 * M));
}

CarnotGroup group_from_generators(const std::string& name, int base_dim,
                                  const std::vector<PolyMap>& generators,
                                  const std::vector<int>& weights) {
  const int N = static_cast<int>(weights.size());
  HomogeneousSystem scratch;
  scratch.n = N;
  scratch.m = static_cast<int>(generators.size());
  scratch.fields = generators;
  scratch.dilation.weights = weights;
  scratch.q = std::accumulate(weights.begin(), weights.end(), 0);

  int max_w = *std::max_element(weights.begin(), weights.end());
  LieStructure lie = lie_closure(scratch, max_w);
  if (lie.N != N)
    throw ConfigError("generators span a Lie algebra of dimension " +
                      std::to_string(lie.N) + ", expected " +
                      std::to_string(N));
  std::vector<Rational> origin(N, 0);
  if (rank_at_exact(lie.basis, origin) != N)
    throw ConfigError("generator algebra is rank deficient at the origin");

  StructureConstants sc;
  sc.N = N;
  sc.step = checked_step(lie.degrees);
  sc.c.assign(N, std::vector<std::vector<Rational>>(
                     N, std::vector<Rational>(N, 0)));
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      PolyMap br = lie_bracket(lie.basis[i], lie.basis[j]);
      bool ok = true;
      auto coeffs = br.is_zero() ? std::vector<Rational>(N, 0)
                                 : solve_in_span(lie.basis, br, ok);
      if (!ok)
        throw NumericError("bracket escapes the computed basis (not closed)");
      sc.c[i][j] = coeffs;
    }
  }

  PolyMap psi = exponential_chart(lie.basis, N, sc.step);
  PolyMap phi = invert_chart(psi, lie.basis, N, sc.step);

  CarnotGroup g;
  g.name = name;
  g.N = N;
  g.n = base_dim;
  g.p = N - base_dim;
  g.weights = weights;
  g.Q = scratch.q;
  g.step = sc.step;
  g.generators = generators;
  g.law = compose_law(sc, psi, phi, N, /*mirrored=*/false);
  if (!left_invariance_holds(g.law, g.generators, N))
    g.law = compose_law(sc, psi, phi, N, /*mirrored=*/true);
  if (!left_invariance_holds(g.law, g.generators, N))
    throw NumericError("constructed group law does not leave the generators "
                       "left invariant");

  // u^{-1} = psi(-phi(u)).
  std::vector<Polynomial> neg;
  neg.reserve(N);
  for (int k = 0; k < N; ++k) neg.push_back(-phi[k]);
  std::vector<Polynomial> inv_comps;
  inv_comps.reserve(N);
  for (int k = 0; k < N; ++k) inv_comps.push_back(psi[k].substitute(neg));
  g.inversion = PolyMap(std::move(inv_comps));

  g.kernel_kind = detect_kernel_kind(g);
  g.lifted = make_lifted_system(g);
  return g;
}

namespace {

bool matches(const HomogeneousSystem& sys, const std::vector<int>& weights,
             const std::vector<PolyMap>& fields) {
  if (sys.dilation.weights != weights) return false;
  if (sys.fields.size() != fields.size()) return false;
  for (std::size_t j = 0; j < fields.size(); ++j)
    for (int k = 0; k < sys.n; ++k)
      if (!(sys.fields[j][k] == fields[j][k])) return false;
  return true;
}

std::vector<PolyMap> plane_step2_fields() {
  // X1 = d/dx1, X2 = x1 d/dx2 on R^2.
  PolyMap X1(2, 2), X2(2, 2);
  X1[0] = Polynomial::constant(2, 1);
  X2[1] = Polynomial::variable(2, 0);
  return {X1, X2};
}

std::vector<PolyMap> plane_step3_fields() {
  // X1 = d/dx1, X2 = x1^2 d/dx2 on R^2.
  PolyMap X1(2, 2), X2(2, 2);
  X1[0] = Polynomial::constant(2, 1);
  X2[1] = Polynomial::variable(2, 0) * Polynomial::variable(2, 0);
  return {X1, X2};
}

}  // namespace

bool has_builtin_lift(const HomogeneousSystem& sys) {
  LieStructure lie = lie_closure(sys);
  if (lie.p == 0) return true;
  return matches(sys, {1, 2}, plane_step2_fields()) ||
         matches(sys, {1, 3}, plane_step3_fields());
}

CarnotGroup builtin_lift(const HomogeneousSystem& sys) {
  LieStructure lie = lie_closure(sys);
  CarnotGroup g;
  if (lie.p == 0) {
    // The system is already a Carnot frame; lift to itself.
    g = group_from_generators(sys.name, sys.n, sys.fields,
                              sys.dilation.weights);
  } else if (matches(sys, {1, 2}, plane_step2_fields())) {
    // Z1 = d/du1, Z2 = u1 d/du2 + d/du3 on R^3, weights (1,2,1).
    PolyMap Z1(3, 3), Z2(3, 3);
    Z1[0] = Polynomial::constant(3, 1);
    Z2[1] = Polynomial::variable(3, 0);
    Z2[2] = Polynomial::constant(3, 1);
    g = group_from_generators(sys.name + ":step2-lift", sys.n, {Z1, Z2},
                              {1, 2, 1});
  } else if (matches(sys, {1, 3}, plane_step3_fields())) {
    // Z1 = d/du1, Z2 = u1^2 d/du2 + d/du3 + u1 d/du4, weights (1,3,1,2).
    PolyMap Z1(4, 4), Z2(4, 4);
    Z1[0] = Polynomial::constant(4, 1);
    Z2[1] = Polynomial::variable(4, 0) * Polynomial::variable(4, 0);
    Z2[2] = Polynomial::constant(4, 1);
    Z2[3] = Polynomial::variable(4, 0);
    g = group_from_generators(sys.name + ":step3-lift", sys.n, {Z1, Z2},
                              {1, 3, 1, 2});
  } else {
    throw ConfigError(
        "no built-in lifting for system '" + sys.name +
        "'; supply a group config with the lifted law and generators");
  }
  validate_group(g, sys);
  return g;
}

CarnotGroup parse_group(const nlohmann::json& doc,
                        const HomogeneousSystem& base) {
  for (const char* key : {"N", "lifted_weights", "group_law", "generators"})
    if (!doc.contains(key))
      throw ConfigError(std::string("group config missing '") + key + "'");
  CarnotGroup g;
  g.name = doc.value("name", base.name + ":user-lift");
  g.N = doc.at("N").get<int>();
  g.n = base.n;
  g.p = g.N - g.n;
  if (g.p < 0) throw ConfigError("group dimension below base dimension");
  auto tau = doc.at("lifted_weights").get<std::vector<int>>();
  if (static_cast<int>(tau.size()) != g.p)
    throw ConfigError("lifted_weights length must equal N - n");
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (tau[i] < 1) throw ConfigError("lifted weights must be positive");
    if (i > 0 && tau[i] < tau[i - 1])
      throw ConfigError("lifted weights must be non-decreasing");
  }
  g.weights = base.dilation.weights;
  g.weights.insert(g.weights.end(), tau.begin(), tau.end());
  g.Q = std::accumulate(g.weights.begin(), g.weights.end(), 0);

  g.law = parse_poly_map(doc.at("group_law"), 2 * g.N, g.N, "group_law");

  const auto& gens = doc.at("generators");
  if (!gens.is_array() || gens.size() < 2)
    throw ConfigError("group config needs at least two generators");
  for (std::size_t j = 0; j < gens.size(); ++j)
    g.generators.push_back(parse_field(
        gens[j], g.N, "group generator " + std::to_string(j + 1)));

  {
    HomogeneousSystem scratch;
    scratch.n = g.N;
    scratch.m = static_cast<int>(g.generators.size());
    scratch.fields = g.generators;
    scratch.dilation.weights = g.weights;
    scratch.q = g.Q;
    int max_w = *std::max_element(g.weights.begin(), g.weights.end());
    LieStructure lie = lie_closure(scratch, max_w);
    g.step = checked_step(lie.degrees);
  }

  // Invert the law by the graded fixed point of v = -u - H(u,v).
  {
    const int N = g.N;
    std::vector<Polynomial> H(N, Polynomial(2 * N));
    for (int k = 0; k < N; ++k)
      H[k] = g.law[k] - Polynomial::variable(2 * N, k) -
             Polynomial::variable(2 * N, N + k);
    std::vector<Polynomial> inv(N, Polynomial(N));
    for (int k = 0; k < N; ++k) inv[k] = -Polynomial::variable(N, k);
    for (int round = 0; round <= g.step + 2; ++round) {
      std::vector<Polynomial> args = identity_args(N);
      for (int k = 0; k < N; ++k) args.push_back(inv[k]);
      std::vector<Polynomial> next(N, Polynomial(N));
      for (int k = 0; k < N; ++k)
        next[k] = -Polynomial::variable(N, k) - H[k].substitute(args);
      if (next == inv) break;
      inv = std::move(next);
      if (round == g.step + 2)
        throw ConfigError("group law admits no polynomial inverse "
                          "(identity or grading is violated)");
    }
    g.inversion = PolyMap(inv);
  }

  g.kernel_kind = detect_kernel_kind(g);
  g.lifted = make_lifted_system(g);
  validate_group(g, base);
  return g;
}

CarnotGroup parse_group_file(const std::string& path,
                             const HomogeneousSystem& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open group config: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ConfigError("invalid JSON in " + path + ": " + e.what());
  }
  return parse_group(doc, base);
}

void validate_group(const CarnotGroup& g, const HomogeneousSystem& base) {
  const int N = g.N;
  auto fail = [&](const std::string& what) {
    throw PropertyError("group '" + g.name + "': " + what);
  };

  // Identity and inverse, exactly.
  {
    std::vector<Polynomial> u_zero = identity_args(N);
    for (int k = 0; k < N; ++k) u_zero.push_back(Polynomial(N));
    std::vector<Polynomial> zero_v(N, Polynomial(N));
    for (int k = 0; k < N; ++k) zero_v.push_back(Polynomial::variable(N, k));
    for (int k = 0; k < N; ++k) {
      if (!(g.law[k].substitute(u_zero) == Polynomial::variable(N, k)))
        fail("u * 0 != u");
      if (!(g.law[k].substitute(zero_v) == Polynomial::variable(N, k)))
        fail("0 * v != v");
    }
    std::vector<Polynomial> u_inv = identity_args(N);
    for (int k = 0; k < N; ++k) u_inv.push_back(g.inversion[k]);
    for (int k = 0; k < N; ++k)
      if (!g.law[k].substitute(u_inv).is_zero()) fail("u * u^{-1} != 0");
  }

  // Dilations are automorphisms: graded homogeneity of the law.
  {
    std::vector<int> ww = g.weights;
    ww.insert(ww.end(), g.weights.begin(), g.weights.end());
    for (int k = 0; k < N; ++k)
      if (!g.law[k].is_weighted_homogeneous(ww, g.weights[k]))
        fail("law is not compatible with the dilations");
    for (std::size_t j = 0; j < g.generators.size(); ++j)
      for (int k = 0; k < N; ++k)
        if (!g.generators[j][k].is_weighted_homogeneous(g.weights,
                                                        g.weights[k] - 1))
          fail("generator " + std::to_string(j + 1) +
               " is not 1-homogeneous");
  }

  // Lifting structure: Z_j = X_j + R_j with R_j acting only on the added
  // coordinates.
  if (g.p >= 0 && base.n == g.n &&
      static_cast<std::size_t>(base.m) == g.generators.size()) {
    for (int j = 0; j < base.m; ++j)
      for (int k = 0; k < g.n; ++k)
        if (!(g.generators[j][k] == base.fields[j][k].extend_vars(N)))
          fail("generator " + std::to_string(j + 1) +
               " does not project onto the base field");
  }

  // Left invariance of the generators (exact).
  if (!left_invariance_holds(g.law, g.generators, N))
    fail("generators are not left invariant");

  // Associativity at exact rational sample triples.
  {
    CounterRng rng(7, "group-associativity");
    std::uint64_t ctr = 0;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> u(N), v(N), w(N);
      for (int k = 0; k < N; ++k) {
        u[k] = Rational(static_cast<long>(rng.bits(ctr++) % 17) - 8, 4);
        v[k] = Rational(static_cast<long>(rng.bits(ctr++) % 17) - 8, 4);
        w[k] = Rational(static_cast<long>(rng.bits(ctr++) % 17) - 8, 4);
      }
      auto mul_exact = [&](const std::vector<Rational>& a,
                           const std::vector<Rational>& b) {
        std::vector<Rational> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        return g.law.eval_exact(ab);
      };
      if (mul_exact(mul_exact(u, v), w) != mul_exact(u, mul_exact(v, w)))
        fail("associativity fails");
    }
  }
}

}  // namespace hk
