#pragma once
#include <string>
#include <utility>
#include <vector>

#include "segre/polynomial.hpp"

namespace segre {

constexpr int kMaxBaseVars = 8;

class PolyMatrix {
 public:
  PolyMatrix() = default;
  // Zero m x r matrix over n variables.
  PolyMatrix(int m, int r, int n);
  PolyMatrix(std::vector<std::vector<Polynomial>> rows, int n);

  int rows() const { return m_; }
  int cols() const { return r_; }
  int nvars() const { return n_; }

  const Polynomial& at(int i, int j) const { return e_[i * r_ + j]; }
  Polynomial& at(int i, int j) { return e_[i * r_ + j]; }

  bool is_zero() const;
  bool all_monomial() const;  // zero entries count as monomial
  PolyMatrix transpose() const;
  PolyMatrix without_rows(const std::vector<int>& drop) const;
  PolyMatrix without_cols(const std::vector<int>& drop) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.m_ == b.m_ && a.r_ == b.r_ && a.n_ == b.n_ && a.e_ == b.e_;
  }

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const { return str(default_names(n_)); }

 private:
  int m_ = 0, r_ = 0, n_ = 0;
  std::vector<Polynomial> e_;
};

PolyMatrix identity_matrix(int r, int n);
PolyMatrix diagonal_matrix(const std::vector<Polynomial>& d);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix parse_matrix(const std::vector<std::vector<std::string>>& text,
                        const std::vector<std::string>& names);

Polynomial determinant(const PolyMatrix& g);

// All k x k minors, ordered lexicographically by (row subset, column subset).
std::vector<Polynomial> determinant_and_minors(const PolyMatrix& g, int k);

// g = h * g' with h the exponent-wise minimum over the nonzero entries.
// Falls back to (1, g) when some entry is not a monomial.
std::pair<Monomial, PolyMatrix> monomial_gcd_factor(const PolyMatrix& g);

// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace segre
