#include "system.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <fstream>
#include <sstream>

namespace hk {

int DilationFamily::homogeneous_dimension() const {
  int q = 0;
  for (int w : weights) q += w;
  return q;
}

void DilationFamily::validate() const {
  if (weights.empty()) throw ConfigError("dilation weights missing");
  if (weights.front() != 1)
    throw ConfigError("first dilation weight must equal 1");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1)
      throw ConfigError("dilation weights must be positive integers");
    if (i > 0 && weights[i] < weights[i - 1])
      throw ConfigError("dilation weights must be non-decreasing");
  }
}

std::vector<double> DilationFamily::apply(double lambda,
                                          std::span<const double> x) const {
  std::vector<double> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    out[k] = std::pow(lambda, weights[k]) * x[k];
  return out;
}

double HomogeneousSystem::pseudo_norm(std::span<const double> x) const {
  double s = 0;
  for (int k = 0; k < n; ++k)
    s += std::pow(std::abs(x[k]), 1.0 / dilation.weights[k]);
  return s;
}

bool HomogeneousSystem::translation_invariant_along(int k) const {
  for (const auto& f : fields)
    for (int c = 0; c < f.dim(); ++c)
      for (const auto& [mono, coeff] : f[c].terms())
        if (mono[k] != 0) return false;
  return true;
}

PolyMap parse_poly_map(const nlohmann::json& spec, int nvars, int dim,
                       const std::string& what) {
  if (!spec.is_array())
    throw ConfigError(what + ": expected an array of terms");
  PolyMap f(nvars, dim);
  for (const auto& term : spec) {
    if (!term.is_object() || !term.contains("target") ||
        !term.contains("coeff") || !term.contains("monomial"))
      throw ConfigError(what + ": term needs target/coeff/monomial");
    int target = term.at("target").get<int>();
    if (target < 1 || target > dim)
      throw ConfigError(what + ": target out of range");
    Rational c = parse_rational(term.at("coeff").get<std::string>());
    const auto& mono = term.at("monomial");
    if (!mono.is_array() || static_cast<int>(mono.size()) != nvars)
      throw ConfigError(what + ": monomial length must equal the dimension");
    Monomial m(nvars);
    for (int i = 0; i < nvars; ++i) {
      int e = mono[i].get<int>();
      if (e < 0) throw ConfigError(what + ": negative exponent");
      m[i] = static_cast<unsigned>(e);
    }
    f[target - 1].add_term(m, c);
  }
  return f;
}

PolyMap parse_field(const nlohmann::json& spec, int nvars,
                    const std::string& what) {
  return parse_poly_map(spec, nvars, nvars, what);
}

nlohmann::json field_to_json(const PolyMap& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (int k = 0; k < f.dim(); ++k) {
    for (const auto& [m, c] : f[k].terms()) {
      nlohmann::json t;
      t["target"] = k + 1;
      t["coeff"] = format_rational(c);
      t["monomial"] = m;
      terms.push_back(t);
    }
  }
  return terms;
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i)
    os << (i ? "," : "") << m[i];
  os << "]";
  return os.str();
}

void check_homogeneity(const HomogeneousSystem& sys) {
  const auto& w = sys.dilation.weights;
  for (int j = 0; j < sys.m; ++j) {
    for (int k = 0; k < sys.n; ++k) {
      for (const auto& [mono, coeff] : sys.fields[j][k].terms()) {
        long d = 0;
        for (int i = 0; i < sys.n; ++i)
          d += static_cast<long>(mono[i]) * w[i];
        if (d != w[k] - 1) {
          std::ostringstream os;
          os << "field " << (j + 1) << ", coordinate " << (k + 1)
             << ", monomial " << monomial_str(mono) << ": weighted degree "
             << d << " != " << (w[k] - 1)
             << " required for 1-homogeneity";
          throw ConfigError(os.str());
        }
      }
    }
  }
}

}  // namespace

HomogeneousSystem parse_system(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("system config must be an object");
  for (const char* key : {"dimension", "weights", "fields"})
    if (!doc.contains(key))
      throw ConfigError(std::string("system config missing '") + key + "'");

  HomogeneousSystem sys;
  sys.name = doc.value("name", "unnamed");
  sys.n = doc.at("dimension").get<int>();
  if (sys.n < 1) throw ConfigError("dimension must be >= 1");
  sys.dilation.weights = doc.at("weights").get<std::vector<int>>();
  if (static_cast<int>(sys.dilation.weights.size()) != sys.n)
    throw ConfigError("weights length must equal dimension");
  sys.dilation.validate();
  sys.q = sys.dilation.homogeneous_dimension();

  const auto& fields = doc.at("fields");
  if (!fields.is_array()) throw ConfigError("'fields' must be an array");
  sys.m = static_cast<int>(fields.size());
  if (sys.m < 2) throw ConfigError("at least two vector fields are required");
  for (int j = 0; j < sys.m; ++j)
    sys.fields.push_back(
        parse_field(fields[j], sys.n, "field " + std::to_string(j + 1)));

  check_homogeneity(sys);

  FieldSpan span;
  for (int j = 0; j < sys.m; ++j)
    if (!span.insert(sys.fields[j]))
      throw ConfigError("field " + std::to_string(j + 1) +
                        " is linearly dependent on the previous ones");

  LieStructure lie = lie_closure(sys);
  std::vector<Rational> origin(sys.n, 0);
  if (rank_at_exact(lie.basis, origin) != sys.n)
    throw ConfigError("Hormander rank condition fails at the origin");
  return sys;
}

HomogeneousSystem parse_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open system config: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ConfigError("invalid JSON in " + path + ": " + e.what());
  }
  return parse_system(doc);
}

LieStructure lie_closure(const HomogeneousSystem& sys, int max_step) {
  if (max_step < 0) max_step = sys.dilation.weights.back();
  LieStructure out;
  FieldSpan span;
  std::vector<PolyMap> stratum;
  for (const auto& f : sys.fields) {
    if (span.insert(f)) {
      out.basis.push_back(f);
      out.degrees.push_back(1);
      stratum.push_back(f);
    }
  }
  out.strata_dims.push_back(static_cast<int>(stratum.size()));
  out.step = 1;
  for (int k = 2; k <= max_step && !stratum.empty(); ++k) {
    std::vector<PolyMap> next;
    for (const auto& gen : sys.fields) {
      for (const auto& prev : stratum) {
        PolyMap br = lie_bracket(gen, prev);
        if (br.is_zero()) continue;
        if (span.insert(br)) {
          out.basis.push_back(br);
          out.degrees.push_back(k);
          next.push_back(br);
        }
      }
    }
    if (!next.empty()) {
      out.strata_dims.push_back(static_cast<int>(next.size()));
      out.step = k;
    }
    stratum = std::move(next);
  }
  if (!stratum.empty()) {
    // One extra sweep to confirm closure at max_step.
    for (const auto& gen : sys.fields)
      for (const auto& prev : stratum)
        if (!span.contains(lie_bracket(gen, prev)))
          throw NumericError(
              "Lie algebra did not close by the requested step bound");
  }
  out.N = static_cast<int>(out.basis.size());
  out.p = out.N - sys.n;
  return out;
}

int rank_at_exact(const std::vector<PolyMap>& fields,
                  const std::vector<Rational>& x) {
  if (fields.empty()) return 0;
  const int dim = fields[0].dim();
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : fields) rows.push_back(f.eval_exact(x));
  // Exact elimination.
  int rank = 0;
  for (int c = 0; c < dim && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (int j = c; j < dim; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

int hormander_rank(const HomogeneousSystem& sys, const LieStructure& lie,
                   std::span<const double> x) {
  Eigen::MatrixXd mat(lie.N, sys.n);
  for (int i = 0; i < lie.N; ++i) {
    auto v = lie.basis[i].eval(x);
    for (int j = 0; j < sys.n; ++j) mat(i, j) = v[j];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(mat);
  qr.setThreshold(1e-10);
  return static_cast<int>(qr.rank());
}

int hormander_rank(const HomogeneousSystem& sys, std::span<const double> x) {
  LieStructure lie = lie_closure(sys);
  return hormander_rank(sys, lie, x);
}

}  // namespace hk
