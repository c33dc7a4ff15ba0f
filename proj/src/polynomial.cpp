#include "segre/polynomial.hpp"

#include <algorithm>

#include "segre/error.hpp"

namespace segre {

std::vector<std::string> default_names(int n, const std::string& stem) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

Monomial Monomial::variable(int n, int i, int power) {
  Monomial m(n);
  m.e_[i] = power;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int v : e_) d += v;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < nvars(); ++i)
    if (e_[i] > 0) s.push_back(i);
  return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
  return r;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(i);
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // within a degree, x1 > x2 > ... so that x1 prints first
  return a.exponents() < b.exponents();
}

Polynomial Polynomial::constant(int n, const Scalar& c) {
  Polynomial p(n);
  p.add_term(Monomial(n), c);
  return p;
}

Polynomial Polynomial::variable(int n, int i) {
  if (i < 0 || i >= n) throw Error(ErrorCode::Input, "variable index out of range");
  Polynomial p(n);
  p.add_term(Monomial::variable(n, i), Scalar(1));
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar Polynomial::constant_term() const {
  auto it = terms_.find(Monomial(n_));
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::degree_in(int i) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
  return d;
}

bool Polynomial::involves(int i) const {
  for (const auto& [m, c] : terms_)
    if (m[i] > 0) return true;
  return false;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.nvars() != n_) throw Error(ErrorCode::Input, "monomial arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw Error(ErrorCode::Input, "polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw Error(ErrorCode::Input, "polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::Input, "polynomial arity mismatch");
  Polynomial r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial r = constant(n_, Scalar(1));
  for (int j = 0; j < k; ++j) r = r * *this;
  return r;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw Error(ErrorCode::Input, "evaluation point has wrong dimension");
  Scalar acc;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

cplx Polynomial::evaluate(const std::vector<cplx>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw Error(ErrorCode::Input, "evaluation point has wrong dimension");
  cplx acc = 0;
  for (const auto& [m, c] : terms_) {
    cplx t = c.to_complex();
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::differentiate(int var_index) const {
  if (var_index < 0 || var_index >= n_)
    throw Error(ErrorCode::Input, "derivative index out of range");
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) {
    if (m[var_index] == 0) continue;
    Monomial d(m);
    d[var_index] -= 1;
    r.add_term(d, c * Scalar(static_cast<long>(m[var_index])));
  }
  return r;
}

Polynomial Polynomial::substitute(int i, const Scalar& value) const {
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (int k = 0; k < m[i]; ++k) t *= value;
    Monomial d(m);
    d[i] = 0;
    r.add_term(d, t);
  }
  return r;
}

Polynomial Polynomial::restrict_zero(const std::vector<int>& idx) const {
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) {
    bool vanishes = false;
    for (int i : idx)
      if (m[i] > 0) vanishes = true;
    if (!vanishes) r.terms_.emplace(m, c);
  }
  return r;
}

Polynomial Polynomial::shift(const std::vector<Scalar>& a) const {
  if (static_cast<int>(a.size()) != n_) throw Error(ErrorCode::Input, "shift has wrong dimension");
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(n_, c);
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      Polynomial lin = variable(n_, i) + constant(n_, a[i]);
      t = t * lin.pow(m[i]);
    }
    r += t;
  }
  return r;
}

int Polynomial::order_at(const std::vector<Scalar>& a) const {
  if (is_zero()) return -1;
  Polynomial s = shift(a);
  int ord = -1;
  for (const auto& [m, c] : s.terms_) {
    int d = m.degree();
    if (ord < 0 || d < ord) ord = d;
  }
  return ord;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial(n_);
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) g = Monomial::gcd(g, m);
  return g;
}

Polynomial Polynomial::divide(const Monomial& d) const {
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) {
    if (!d.divides(m)) throw Error(ErrorCode::Input, "monomial does not divide polynomial");
    r.terms_.emplace(m / d, c);
  }
  return r;
}

Polynomial Polynomial::embed(int new_n, const std::vector<int>& map) const {
  Polynomial r(new_n);
  for (const auto& [m, c] : terms_) {
    Monomial e(new_n);
    for (int i = 0; i < n_; ++i) e[map[i]] += m[i];
    r.add_term(e, c);
  }
  return r;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  auto emit = [&](const Rational& coef, bool imaginary, const Monomial& m) {
    Rational a = abs(coef);
    bool neg = coef < 0;
    if (neg) out += "-";
    else if (!out.empty()) out += "+";
    std::string body;
    if (a != 1) body = rational_str(a);
    if (imaginary) body += (body.empty() ? "" : "*") + std::string("i");
    if (!m.is_one()) body += (body.empty() ? "" : "*") + m.str(names);
    if (body.empty()) body = "1";
    out += body;
  };
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (c.re() != 0) emit(c.re(), false, m);
    if (c.im() != 0) emit(c.im(), true, m);
  }
  return out;
}

bool polynomial_less(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) return a.nvars() < b.nvars();
  return a.str() < b.str();
}

NumPoly::NumPoly(const Polynomial& p) : n(p.nvars()) {
  for (const auto& [m, c] : p.terms()) {
    coef.push_back(c.to_complex());
    exps.push_back(m.exponents());
  }
}

cplx NumPoly::eval(const cplx* z) const {
  cplx acc = 0;
  for (size_t t = 0; t < coef.size(); ++t) {
    cplx v = coef[t];
    const auto& e = exps[t];
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) v *= z[i];
    acc += v;
  }
  return acc;
}

cplx NumPoly::eval_grad(const cplx* z, cplx* grad) const {
  for (int i = 0; i < n; ++i) grad[i] = 0;
  cplx acc = 0;
  for (size_t t = 0; t < coef.size(); ++t) {
    const auto& e = exps[t];
    cplx v = coef[t];
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) v *= z[i];
    acc += v;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      cplx d = coef[t] * static_cast<double>(e[i]);
      for (int j = 0; j < n; ++j) {
        int ej = (j == i) ? e[j] - 1 : e[j];
        for (int k = 0; k < ej; ++k) d *= z[j];
      }
      grad[i] += d;
    }
  }
  return acc;
}

}  // namespace segre
