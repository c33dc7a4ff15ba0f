#include "segre/poly_matrix.hpp"

#include "segre/error.hpp"

namespace segre {

PolyMatrix::PolyMatrix(int m, int r, int n) : m_(m), r_(r), n_(n) {
  if (m < 1 || r < 1) throw Error(ErrorCode::Input, "matrix needs at least one row and one column");
  if (n < 0 || n > kMaxBaseVars)
    throw Error(ErrorCode::Input, "number of variables must be between 0 and 8");
  e_.assign(static_cast<size_t>(m) * r, Polynomial(n));
}

PolyMatrix::PolyMatrix(std::vector<std::vector<Polynomial>> rows, int n) {
  int m = static_cast<int>(rows.size());
  int r = m ? static_cast<int>(rows[0].size()) : 0;
  *this = PolyMatrix(m, r, n);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != r) throw Error(ErrorCode::Input, "ragged matrix");
    for (int j = 0; j < r; ++j) {
      if (rows[i][j].nvars() != n)
        throw Error(ErrorCode::Input, "matrix entries use different variable lists");
      at(i, j) = std::move(rows[i][j]);
    }
  }
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::all_monomial() const {
  for (const auto& p : e_)
    if (!p.is_zero() && !p.is_monomial()) return false;
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(r_, m_, n_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < r_; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {
bool contains(const std::vector<int>& v, int x) {
  for (int y : v)
    if (y == x) return true;
  return false;
}
}  // namespace

PolyMatrix PolyMatrix::without_rows(const std::vector<int>& drop) const {
  std::vector<std::vector<Polynomial>> rows;
  for (int i = 0; i < m_; ++i) {
    if (contains(drop, i)) continue;
    std::vector<Polynomial> row;
    for (int j = 0; j < r_; ++j) row.push_back(at(i, j));
    rows.push_back(row);
  }
  return PolyMatrix(rows, n_);
}

PolyMatrix PolyMatrix::without_cols(const std::vector<int>& drop) const {
  return transpose().without_rows(drop).transpose();
}

std::string PolyMatrix::str(const std::vector<std::string>& names) const {
  std::string out = "[";
  for (int i = 0; i < m_; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < r_; ++j) out += (j ? ", " : "") + at(i, j).str(names);
    out += "]";
  }
  return out + "]";
}

PolyMatrix identity_matrix(int r, int n) {
  PolyMatrix g(r, r, n);
  for (int i = 0; i < r; ++i) g.at(i, i) = Polynomial::constant(n, Scalar(1));
  return g;
}

PolyMatrix diagonal_matrix(const std::vector<Polynomial>& d) {
  if (d.empty()) throw Error(ErrorCode::Input, "empty diagonal");
  int n = d[0].nvars();
  PolyMatrix g(static_cast<int>(d.size()), static_cast<int>(d.size()), n);
  for (size_t i = 0; i < d.size(); ++i) g.at(i, i) = d[i];
  return g;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows() || a.nvars() != b.nvars())
    throw Error(ErrorCode::Input, "matrix product shape mismatch");
  PolyMatrix c(a.rows(), b.cols(), a.nvars());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      for (int k = 0; k < a.cols(); ++k) c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::Input, "direct sum over different spaces");
  PolyMatrix c(a.rows() + b.rows(), a.cols() + b.cols(), a.nvars());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

PolyMatrix parse_matrix(const std::vector<std::vector<std::string>>& text,
                        const std::vector<std::string>& names) {
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& tr : text) {
    std::vector<Polynomial> row;
    for (const auto& s : tr) row.push_back(parse_polynomial(s, names));
    rows.push_back(row);
  }
  return PolyMatrix(rows, static_cast<int>(names.size()));
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

// Laplace expansion along the first row of the selected submatrix.
Polynomial minor_of(const PolyMatrix& g, const std::vector<int>& rows, const std::vector<int>& cols) {
  int k = static_cast<int>(rows.size());
  if (k == 1) return g.at(rows[0], cols[0]);
  Polynomial acc(g.nvars());
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (int c = 0; c < k; ++c) {
    const Polynomial& e = g.at(rows[0], cols[c]);
    if (e.is_zero()) continue;
    std::vector<int> sub_cols;
    for (int j = 0; j < k; ++j)
      if (j != c) sub_cols.push_back(cols[j]);
    Polynomial t = e * minor_of(g, sub_rows, sub_cols);
    if (c % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

}  // namespace

std::vector<Polynomial> determinant_and_minors(const PolyMatrix& g, int k) {
  if (k < 1 || k > std::min(g.rows(), g.cols()))
    throw Error(ErrorCode::Input, "minor size out of range");
  std::vector<Polynomial> out;
  for (const auto& rs : subsets(g.rows(), k))
    for (const auto& cs : subsets(g.cols(), k)) out.push_back(minor_of(g, rs, cs));
  return out;
}

Polynomial determinant(const PolyMatrix& g) {
  if (g.rows() != g.cols()) throw Error(ErrorCode::Input, "determinant of a non-square matrix");
  return determinant_and_minors(g, g.rows()).front();
}

std::pair<Monomial, PolyMatrix> monomial_gcd_factor(const PolyMatrix& g) {
  Monomial one(g.nvars());
  if (!g.all_monomial() || g.is_zero()) return {one, g};
  bool first = true;
  Monomial h(g.nvars());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      const auto& p = g.at(i, j);
      if (p.is_zero()) continue;
      h = first ? p.lead_monomial() : Monomial::gcd(h, p.lead_monomial());
      first = false;
    }
  PolyMatrix out(g.rows(), g.cols(), g.nvars());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) out.at(i, j) = g.at(i, j).divide(h);
  return {h, out};
}

}  // namespace segre
