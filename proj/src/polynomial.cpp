#include "polynomial.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace hk {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  assert(static_cast<int>(m.size()) == nvars_);
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& args) const {
  assert(static_cast<int>(args.size()) == nvars_);
  const int out_vars = args.empty() ? 0 : args[0].nvars();
  Polynomial r(out_vars);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) term = term * args[i];
    r = r + term;
  }
  return r;
}

Polynomial Polynomial::scale_vars(const std::vector<Rational>& factors) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    Rational f = c;
    for (int i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) f *= factors[i];
    r.add_term(m, f);
  }
  return r;
}

Polynomial Polynomial::extend_vars(int new_nvars) const {
  assert(new_nvars >= nvars_);
  Polynomial r(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial mm(new_nvars, 0);
    std::copy(m.begin(), m.end(), mm.begin());
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

double Polynomial::eval(std::span<const double> x) const {
  double s = 0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < nvars_; ++i) {
      switch (m[i]) {
        case 0:
          break;
        case 1:
          t *= x[i];
          break;
        case 2:
          t *= x[i] * x[i];
          break;
        default:
          t *= std::pow(x[i], static_cast<int>(m[i]));
      }
    }
    s += t;
  }
  return s;
}

Rational Polynomial::eval_exact(const std::vector<Rational>& x) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= x[i];
    s += t;
  }
  return s;
}

long Polynomial::weighted_degree(const std::vector<int>& w) const {
  long deg = -1;
  for (const auto& [m, c] : terms_) {
    long d = 0;
    for (int i = 0; i < nvars_; ++i) d += static_cast<long>(m[i]) * w[i];
    deg = std::max(deg, d);
  }
  return deg;
}

bool Polynomial::is_weighted_homogeneous(const std::vector<int>& w,
                                         long degree) const {
  for (const auto& [m, c] : terms_) {
    long d = 0;
    for (int i = 0; i < nvars_; ++i) d += static_cast<long>(m[i]) * w[i];
    if (d != degree) return false;
  }
  return true;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_rational(c);
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      os << "*";
      if (static_cast<std::size_t>(i) < names.size())
        os << names[i];
      else
        os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

std::vector<double> PolyMap::eval(std::span<const double> x) const {
  std::vector<double> out(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i) out[i] = comps_[i].eval(x);
  return out;
}

std::vector<Rational> PolyMap::eval_exact(const std::vector<Rational>& x) const {
  std::vector<Rational> out(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i)
    out[i] = comps_[i].eval_exact(x);
  return out;
}

PolyMap PolyMap::compose(const std::vector<Polynomial>& args) const {
  std::vector<Polynomial> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c.substitute(args));
  return PolyMap(std::move(out));
}

bool PolyMap::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

PolyMap PolyMap::operator+(const PolyMap& o) const {
  std::vector<Polynomial> out;
  out.reserve(comps_.size());
  for (int i = 0; i < dim(); ++i) out.push_back(comps_[i] + o.comps_[i]);
  return PolyMap(std::move(out));
}

PolyMap PolyMap::operator-(const PolyMap& o) const {
  std::vector<Polynomial> out;
  out.reserve(comps_.size());
  for (int i = 0; i < dim(); ++i) out.push_back(comps_[i] - o.comps_[i]);
  return PolyMap(std::move(out));
}

PolyMap PolyMap::operator*(const Rational& c) const {
  std::vector<Polynomial> out;
  out.reserve(comps_.size());
  for (const auto& p : comps_) out.push_back(p * c);
  return PolyMap(std::move(out));
}

Polynomial apply_field(const PolyMap& field, const Polynomial& u) {
  Polynomial r(u.nvars());
  for (int k = 0; k < field.dim(); ++k) r = r + field[k] * u.derivative(k);
  return r;
}

PolyMap lie_bracket(const PolyMap& a, const PolyMap& b) {
  std::vector<Polynomial> out;
  out.reserve(a.dim());
  for (int k = 0; k < a.dim(); ++k)
    out.push_back(apply_field(a, b[k]) - apply_field(b, a[k]));
  return PolyMap(std::move(out));
}

std::vector<std::vector<Polynomial>> jacobian(const PolyMap& field) {
  std::vector<std::vector<Polynomial>> jac(field.dim());
  for (int i = 0; i < field.dim(); ++i) {
    jac[i].reserve(field.nvars());
    for (int j = 0; j < field.nvars(); ++j)
      jac[i].push_back(field[i].derivative(j));
  }
  return jac;
}

std::map<FieldSpan::Key, Rational> FieldSpan::flatten(const PolyMap& f) {
  std::map<Key, Rational> v;
  for (int k = 0; k < f.dim(); ++k)
    for (const auto& [m, c] : f[k].terms()) v.emplace(Key{k, m}, c);
  return v;
}

std::map<FieldSpan::Key, Rational> FieldSpan::reduce(
    std::map<Key, Rational> v) const {
  for (const auto& row : rows_) {
    if (v.empty()) break;
    const auto& lead = *row.begin();
    auto it = v.find(lead.first);
    if (it == v.end()) continue;
    Rational factor = it->second / lead.second;
    for (const auto& [key, c] : row) {
      auto jt = v.find(key);
      if (jt == v.end()) {
        v.emplace(key, -factor * c);
      } else {
        jt->second -= factor * c;
        if (jt->second == 0) v.erase(jt);
      }
    }
  }
  return v;
}

bool FieldSpan::insert(const PolyMap& f) {
  auto v = reduce(flatten(f));
  if (v.empty()) return false;
  // Keep rows ordered by leading key so reduction stays triangular.
  rows_.push_back(std::move(v));
  for (std::size_t i = rows_.size(); i-- > 1;) {
    if (rows_[i].begin()->first < rows_[i - 1].begin()->first)
      std::swap(rows_[i], rows_[i - 1]);
    else
      break;
  }
  return true;
}

bool FieldSpan::contains(const PolyMap& f) const {
  return reduce(flatten(f)).empty();
}

std::vector<Rational> solve_in_span(const std::vector<PolyMap>& basis,
                                    const PolyMap& target, bool& ok) {
  // Dense exact elimination over the union of the coefficient supports.
  using Key = std::pair<int, Monomial>;
  std::map<Key, std::size_t> index;
  auto keys_of = [&](const PolyMap& f) {
    for (int k = 0; k < f.dim(); ++k)
      for (const auto& [m, c] : f[k].terms())
        index.emplace(Key{k, m}, index.size());
  };
  for (const auto& b : basis) keys_of(b);
  keys_of(target);

  const std::size_t rows = index.size(), cols = basis.size();
  std::vector<std::vector<Rational>> A(rows,
                                       std::vector<Rational>(cols + 1, 0));
  for (std::size_t j = 0; j < cols; ++j)
    for (int k = 0; k < basis[j].dim(); ++k)
      for (const auto& [m, c] : basis[j][k].terms())
        A[index.at(Key{k, m})][j] = c;
  for (int k = 0; k < target.dim(); ++k)
    for (const auto& [m, c] : target[k].terms())
      A[index.at(Key{k, m})][cols] = c;

  std::vector<std::size_t> pivot_row(cols, SIZE_MAX);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational f = A[i][c] / A[r][c];
      for (std::size_t j = c; j <= cols; ++j) A[i][j] -= f * A[r][j];
    }
    pivot_row[c] = r;
    ++r;
  }
  // Inconsistent rows mean the target is outside the span.
  for (std::size_t i = r; i < rows; ++i) {
    if (A[i][cols] != 0) {
      ok = false;
      return {};
    }
  }
  std::vector<Rational> x(cols, 0);
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_row[c] != SIZE_MAX)
      x[c] = A[pivot_row[c]][cols] / A[pivot_row[c]][c];
  ok = true;
  return x;
}

}  // namespace hk
