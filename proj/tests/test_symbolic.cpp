#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot.hpp"
#include "polynomial.hpp"
#include "support.hpp"
#include "system.hpp"

#include <json.hpp>

#include <fstream>

using namespace hk;

namespace {

nlohmann::json load(const std::string& name) {
  std::ifstream in(std::string(HK_DATA_DIR) + "/systems/" + name);
  REQUIRE(in.good());
  nlohmann::json doc;
  in >> doc;
  return doc;
}

Polynomial var(int nvars, int i) { return Polynomial::variable(nvars, i); }

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("1") == Rational(1));
  CHECK(parse_rational("-2/3") == Rational(-2, 3));
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(parse_rational("1.5"), ConfigError);
  CHECK_THROWS_AS(parse_rational("2/0"), ConfigError);
  CHECK(format_rational(Rational(-7, 2)) == "-7/2");
}

TEST_CASE("polynomial arithmetic and substitution") {
  Polynomial x = var(2, 0), y = var(2, 1);
  Polynomial p = x * x + y * Rational(3);
  CHECK(p.eval(std::vector<double>{2.0, 1.0}) == doctest::Approx(7.0));
  Polynomial dp = p.derivative(0);
  CHECK(dp == x * Rational(2));
  // p(x+y, x) = (x+y)^2 + 3x
  Polynomial q = p.substitute({x + y, x});
  CHECK(q.eval(std::vector<double>{1.0, 2.0}) == doctest::Approx(9.0 + 3.0));
}

TEST_CASE("lie bracket basics") {
  // [d/dx1, x1 d/dx2] = d/dx2
  PolyMap a(2, 2), b(2, 2);
  a[0] = Polynomial::constant(2, 1);
  b[1] = var(2, 0);
  PolyMap br = lie_bracket(a, b);
  CHECK(br[0].is_zero());
  CHECK(br[1] == Polynomial::constant(2, 1));

  // [X, X] = 0
  CHECK(lie_bracket(b, b).is_zero());

  // [d/dx1, x1^2 d/dx2] = 2 x1 d/dx2
  PolyMap c(2, 2);
  c[1] = var(2, 0) * var(2, 0);
  PolyMap br2 = lie_bracket(a, c);
  CHECK(br2[1] == var(2, 0) * Rational(2));
}

TEST_CASE("system parsing, validation and closure") {
  HomogeneousSystem grushin = parse_system(load("grushin.json"));
  CHECK(grushin.n == 2);
  CHECK(grushin.q == 3);

  HomogeneousSystem euclid = parse_system(load("euclid2.json"));
  CHECK(euclid.q == 2);

  LieStructure lg = lie_closure(grushin);
  CHECK(lg.N == 3);
  CHECK(lg.p == 1);
  CHECK(lg.step == 2);

  LieStructure le = lie_closure(euclid);
  CHECK(le.N == 2);
  CHECK(le.p == 0);
  CHECK(le.step == 1);

  HomogeneousSystem g3 = parse_system(load("grushin3.json"));
  LieStructure l3 = lie_closure(g3);
  CHECK(l3.N == 4);
  CHECK(l3.p == 2);
  CHECK(l3.step == 3);

  // Rejection: x2 d/dx1 is not 1-homogeneous for weights (1,2).
  nlohmann::json bad = load("grushin.json");
  bad["fields"][1] = {
      {{"target", 1}, {"coeff", "1"}, {"monomial", {0, 1}}}};
  CHECK_THROWS_AS(parse_system(bad), ConfigError);

  // Rejection: dependent fields.
  nlohmann::json dep = load("euclid2.json");
  dep["fields"][1] = dep["fields"][0];
  CHECK_THROWS_AS(parse_system(dep), ConfigError);

  // Rejection: unsorted weights.
  nlohmann::json uns = load("grushin.json");
  uns["weights"] = {2, 1};
  CHECK_THROWS_AS(parse_system(uns), ConfigError);
}

TEST_CASE("homogeneity identity X_j(u o delta) = (X_j u) o delta, exact") {
  for (const char* name : {"euclid2.json", "grushin.json", "grushin3.json"}) {
    HomogeneousSystem sys = parse_system(load(name));
    CounterRng rng(11, "homogeneity-test");
    std::uint64_t ctr = 0;
    for (const Rational& lam : {Rational(1, 2), Rational(2), Rational(3)}) {
      std::vector<Rational> factors;
      for (int k = 0; k < sys.n; ++k) {
        Rational f = 1;
        for (int e = 0; e < sys.dilation.weights[k]; ++e) f *= lam;
        factors.push_back(f);
      }
      for (int trial = 0; trial < 7; ++trial) {
        // Random test polynomial of weighted degree <= 4.
        Polynomial u(sys.n);
        for (int t = 0; t < 5; ++t) {
          Monomial m(sys.n, 0);
          long deg = 0;
          for (int k = 0; k < sys.n; ++k) {
            m[k] = rng.bits(ctr++) % 3;
            deg += m[k] * sys.dilation.weights[k];
          }
          if (deg > 4) continue;
          u.add_term(m, Rational(static_cast<long>(rng.bits(ctr++) % 9) - 4));
        }
        for (const auto& X : sys.fields) {
          // Degree-1 homogeneity: X(u o delta_lam) = lam * (X u) o delta_lam.
          Polynomial lhs = apply_field(X, u.scale_vars(factors));
          Polynomial rhs = apply_field(X, u).scale_vars(factors) * lam;
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("hormander rank at sampled points") {
  HomogeneousSystem grushin = parse_system(load("grushin.json"));
  LieStructure lie = lie_closure(grushin);
  CHECK(hormander_rank(grushin, lie, std::vector<double>{0.0, 0.0}) == 2);
  CounterRng rng(5, "rank-sample");
  for (int i = 0; i < 100; ++i) {
    std::vector<double> x = {rng.uniform(2 * i, -3, 3),
                             rng.uniform(2 * i + 1, -3, 3)};
    CHECK(hormander_rank(grushin, lie, x) == 2);
  }
  // Generators alone already have rank 2 away from {x1 = 0}.
  std::vector<PolyMap> gens = grushin.fields;
  HomogeneousSystem gsys = grushin;
  LieStructure gen_only;
  gen_only.basis = gens;
  gen_only.N = 2;
  CHECK(hormander_rank(gsys, gen_only, std::vector<double>{1.0, 0.0}) == 2);
}

TEST_CASE("lie_closure is idempotent") {
  HomogeneousSystem g3 = parse_system(load("grushin3.json"));
  LieStructure lie = lie_closure(g3);
  FieldSpan span;
  for (const auto& b : lie.basis) CHECK(span.insert(b));
  for (const auto& gen : g3.fields)
    for (const auto& b : lie.basis)
      CHECK(span.contains(lie_bracket(gen, b)));
  // Stratum degrees: each basis element is homogeneous of its degree.
  for (std::size_t i = 0; i < lie.basis.size(); ++i)
    for (int k = 0; k < g3.n; ++k)
      CHECK(lie.basis[i][k].is_weighted_homogeneous(
          g3.dilation.weights, g3.dilation.weights[k] - lie.degrees[i]));
}

TEST_CASE("step-2 lift reproduces the expected polynomial law") {
  HomogeneousSystem grushin = parse_system(load("grushin.json"));
  CarnotGroup g = builtin_lift(grushin);
  CHECK(g.N == 3);
  CHECK(g.p == 1);
  CHECK(g.Q == 4);
  CHECK(g.step == 2);
  CHECK(g.kernel_kind == GroupKernelKind::kHeisenbergTheta);

  // u * v = (u1+v1, u2+v2+u1 v3, u3+v3).
  PolyMap expect(6, 3);
  expect[0] = var(6, 0) + var(6, 3);
  expect[1] = var(6, 1) + var(6, 4) + var(6, 0) * var(6, 5);
  expect[2] = var(6, 2) + var(6, 5);
  for (int k = 0; k < 3; ++k) CHECK(g.law[k] == expect[k]);

  // Inverse: (-u1, -u2 + u1 u3, -u3).
  PolyMap inv(3, 3);
  inv[0] = -var(3, 0);
  inv[1] = -var(3, 1) + var(3, 0) * var(3, 2);
  inv[2] = -var(3, 2);
  for (int k = 0; k < 3; ++k) CHECK(g.inversion[k] == inv[k]);
}

TEST_CASE("euclidean and step-3 lifts validate") {
  HomogeneousSystem euclid = parse_system(load("euclid2.json"));
  CarnotGroup ge = builtin_lift(euclid);
  CHECK(ge.p == 0);
  CHECK(ge.kernel_kind == GroupKernelKind::kExactGaussian);
  // Abelian law.
  for (int k = 0; k < 2; ++k) CHECK(ge.law[k] == var(4, k) + var(4, 2 + k));

  HomogeneousSystem g3 = parse_system(load("grushin3.json"));
  CarnotGroup gl = builtin_lift(g3);
  CHECK(gl.N == 4);
  CHECK(gl.p == 2);
  CHECK(gl.Q == 7);
  CHECK(gl.step == 3);
  CHECK(gl.kernel_kind == GroupKernelKind::kMonteCarlo);
}

TEST_CASE("group invariants at random points") {
  HomogeneousSystem grushin = parse_system(load("grushin.json"));
  CarnotGroup g = builtin_lift(grushin);
  CounterRng rng(3, "group-points");
  std::uint64_t ctr = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<double> u(3), v(3);
    for (int k = 0; k < 3; ++k) {
      u[k] = rng.uniform(ctr++, -2, 2);
      v[k] = rng.uniform(ctr++, -2, 2);
    }
    auto uv = g.mul(u, v);
    // D_lambda is an automorphism.
    for (double lam : {0.5, 2.0}) {
      auto lhs = g.dilate(lam, uv);
      auto rhs = g.mul(g.dilate(lam, u), g.dilate(lam, v));
      for (int k = 0; k < 3; ++k)
        CHECK(lhs[k] == doctest::Approx(rhs[k]).epsilon(1e-12));
    }
    auto e = g.mul(u, g.inverse(u));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(e[k]) < 1e-12);
  }
  // Gauge norm: ||D_2 u|| = 2||u||, ||0|| = 0.
  std::vector<double> zero(3, 0.0);
  CHECK(g.gauge(zero) == 0.0);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> u(3);
    for (int k = 0; k < 3; ++k) u[k] = rng.uniform(ctr++, -2, 2);
    CHECK(g.gauge(g.dilate(2.0, u)) ==
          doctest::Approx(2.0 * g.gauge(u)).epsilon(1e-12));
  }
}

TEST_CASE("projected generators act like base fields on cylindrical functions") {
  HomogeneousSystem grushin = parse_system(load("grushin.json"));
  CarnotGroup g = builtin_lift(grushin);
  // For u(x) independent of the added variables, Z_j u = X_j u.
  Polynomial u = var(3, 0) * var(3, 1) + var(3, 1);
  for (int j = 0; j < 2; ++j) {
    Polynomial zu = apply_field(g.generators[j], u);
    Polynomial xu3 = apply_field(grushin.fields[j],
                                 Polynomial(var(2, 0) * var(2, 1) + var(2, 1)))
                         .extend_vars(3);
    CHECK(zu == xu3);
  }
}

TEST_CASE("user-supplied group config round trip") {
  HomogeneousSystem grushin = parse_system(load("grushin.json"));
  CarnotGroup g = builtin_lift(grushin);
  nlohmann::json doc;
  doc["name"] = "user-heisenberg";
  doc["N"] = 3;
  doc["lifted_weights"] = {1};
  nlohmann::json law = nlohmann::json::array();
  for (int k = 0; k < 3; ++k)
    for (const auto& [m, c] : g.law[k].terms())
      law.push_back({{"target", k + 1},
                     {"coeff", format_rational(c)},
                     {"monomial", m}});
  doc["group_law"] = law;
  doc["generators"] = nlohmann::json::array();
  for (const auto& Z : g.generators) doc["generators"].push_back(field_to_json(Z));
  CarnotGroup user = parse_group(doc, grushin);
  CHECK(user.Q == 4);
  CHECK(user.kernel_kind == GroupKernelKind::kHeisenbergTheta);
  for (int k = 0; k < 3; ++k) CHECK(user.inversion[k] == g.inversion[k]);

  // A broken law (wrong cocycle sign) must fail validation loudly.
  nlohmann::json bad = doc;
  bad["group_law"][2]["coeff"] = "-1";  // flip some structure term
  bool threw = false;
  try {
    parse_group(bad, grushin);
  } catch (const std::exception&) {
    threw = true;
  }
  CHECK(threw);
}
