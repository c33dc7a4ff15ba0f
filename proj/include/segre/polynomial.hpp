#pragma once
#include <map>
#include <string>
#include <vector>

#include "segre/scalar.hpp"

namespace segre {

constexpr int kMaxVars = 12;  // base variables are capped at 8; fiber charts add up to 4 more

std::vector<std::string> default_names(int n, const std::string& stem = "x");

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n) : e_(n, 0) {}
  explicit Monomial(std::vector<int> e) : e_(std::move(e)) {}
  static Monomial variable(int n, int i, int power = 1);

  int nvars() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  int& operator[](int i) { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  int degree() const;
  bool is_one() const;
  bool divides(const Monomial& o) const;
  bool involves(int i) const { return e_[i] > 0; }
  std::vector<int> support() const;

  Monomial operator*(const Monomial& o) const;
  // Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<int> e_;
};

// Graded lexicographic; the map stores terms in this order and printing walks it backwards.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialLess>;

  Polynomial() : n_(0) {}
  explicit Polynomial(int n) : n_(n) {}
  static Polynomial constant(int n, const Scalar& c);
  static Polynomial variable(int n, int i);
  static Polynomial monomial(const Monomial& m, const Scalar& c = Scalar(1));

  int nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Scalar constant_term() const;
  // Only meaningful when is_monomial().
  const Monomial& lead_monomial() const { return terms_.begin()->first; }
  const Scalar& lead_coefficient() const { return terms_.begin()->second; }

  int total_degree() const;
  int degree_in(int i) const;
  bool involves(int i) const;

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  Polynomial pow(int k) const;

  Scalar evaluate(const std::vector<Scalar>& point) const;
  cplx evaluate(const std::vector<cplx>& point) const;
  Polynomial differentiate(int var_index) const;

  // Substitute x_i = value (variable count unchanged, x_i no longer occurs).
  Polynomial substitute(int i, const Scalar& value) const;
  // Restriction to the coordinate subspace {x_i = 0, i in idx}.
  Polynomial restrict_zero(const std::vector<int>& idx) const;
  // p(x + a): Taylor re-centering.
  Polynomial shift(const std::vector<Scalar>& a) const;
  // Order of vanishing at a point (0 if p(a) != 0); -1 for the zero polynomial.
  int order_at(const std::vector<Scalar>& a) const;

  // Exponent-wise minimum over all terms.
  Monomial monomial_content() const;
  // Exact division by a monomial dividing every term.
  Polynomial divide(const Monomial& m) const;
  // Re-embed into a larger variable list: old variable i becomes new variable map[i].
  Polynomial embed(int new_n, const std::vector<int>& map) const;

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const { return str(default_names(n_)); }

 private:
  int n_;
  TermMap terms_;
};

// Parse with the given variable names; unknown identifiers raise ParseError (line 1, column = offset+1).
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);

bool polynomial_less(const Polynomial& a, const Polynomial& b);

// Machine-precision evaluator compiled from an exact polynomial.
struct NumPoly {
  int n = 0;
  std::vector<cplx> coef;
  std::vector<std::vector<int>> exps;

  NumPoly() = default;
  explicit NumPoly(const Polynomial& p);
  cplx eval(const cplx* z) const;
  // value and gradient in one pass
  cplx eval_grad(const cplx* z, cplx* grad) const;
};

}  // namespace segre
