#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "segre/error.hpp"
#include "segre/numeric.hpp"

namespace segre {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Univariate coefficient vector, lowest degree first.
using Coeffs = std::vector<cplx>;

void trim(Coeffs& c, double rel = 0) {
  double mx = 0;
  for (auto& v : c) mx = std::max(mx, std::abs(v));
  while (!c.empty() && std::abs(c.back()) <= rel * mx) c.pop_back();
}

std::vector<cplx> companion_roots(Coeffs c) {
  trim(c);
  const int d = static_cast<int>(c.size()) - 1;
  if (d < 1) return {};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) C(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) C(i, d - 1) = -c[i] / c[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<cplx> out(es.eigenvalues().data(), es.eigenvalues().data() + d);
  return out;
}

// Bivariate polynomial as coefficients in variable e: coeffs[k](other).
struct Bivar {
  int e = 1;
  std::vector<NumPoly> parts;  // part k multiplies x_e^k
};

Bivar split(const Polynomial& p, int e) {
  Bivar b;
  b.e = e;
  int d = std::max(0, p.degree_in(e));
  std::vector<Polynomial> parts(d + 1, Polynomial(2));
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    int k = mm[e];
    mm[e] = 0;
    parts[k].add_term(mm, c);
  }
  for (auto& q : parts) b.parts.emplace_back(q);
  return b;
}

Coeffs in_e(const Bivar& b, cplx other) {
  cplx z[2];
  z[1 - b.e] = other;
  z[b.e] = 0;
  Coeffs c;
  for (const auto& p : b.parts) c.push_back(p.eval(z));
  return c;
}

cplx sylvester_det(const Coeffs& p, const Coeffs& q) {
  const int m = static_cast<int>(p.size()) - 1, n = static_cast<int>(q.size()) - 1;
  if (m == 0 && n == 0) return 1;
  if (m == 0) return std::pow(p[0], n);
  if (n == 0) return std::pow(q[0], m);
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) S(i, i + k) = p[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) S(n + i, i + k) = q[n - k];
  return S.partialPivLu().determinant();
}

Polynomial to_bivariate(const Polynomial& f) {
  if (f.nvars() != 2) throw Error(ErrorCode::Input, "root counting needs two variables");
  return f;
}

Scalar scalar_from_double(double v) { return Scalar(Rational(v)); }  // exact binary value

long count_once(const Polynomial& f1, const Polynomial& f2, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  const double tscale = 1e-4;
  Polynomial g1 = f1, g2 = f2;
  auto small = [&] { return Scalar(Rational(tscale * U(rng)), Rational(tscale * U(rng))); };
  g1.add_term(Monomial(2), small());
  g2.add_term(Monomial(2), small());
  int e = g1.degree_in(1) > 0 || g2.degree_in(1) > 0 ? 1 : 0;
  Bivar b1 = split(g1, e), b2 = split(g2, e);
  const int D = std::max(1, g1.total_degree()) * std::max(1, g2.total_degree());
  int M = 1;
  while (M <= D + 1) M *= 2;
  // sample the resultant on the unit circle and recover its coefficients
  std::vector<cplx> vals(M);
  double vmax = 0;
  for (int k = 0; k < M; ++k) {
    cplx z = std::polar(1.0, 2 * kPi * k / M);
    vals[k] = sylvester_det(in_e(b1, z), in_e(b2, z));
    vmax = std::max(vmax, std::abs(vals[k]));
  }
  if (vmax < 1e-250) throw Error(ErrorCode::NumericalFailure, "resultant vanishes identically");
  Coeffs res(M, 0.0);
  for (int j = 0; j < M; ++j) {
    cplx s = 0;
    for (int k = 0; k < M; ++k) s += vals[k] * std::polar(1.0, -2 * kPi * double(j) * k / M);
    res[j] = s / double(M);
  }
  trim(res, 1e-11);
  if (res.empty()) throw Error(ErrorCode::NumericalFailure, "resultant vanishes identically");
  NumPoly n1(g1), n2(g2);
  long count = 0;
  for (cplx x : companion_roots(res)) {
    if (std::abs(x) >= radius) continue;
    Coeffs c1 = in_e(b1, x);
    trim(c1, 1e-12);
    Coeffs c2 = in_e(b2, x);
    double s2 = 0;
    for (auto& v : c2) s2 += std::abs(v);
    for (cplx y : (c1.size() > 1 ? companion_roots(c1) : companion_roots(c2))) {
      if (std::abs(y) >= radius) continue;
      cplx z[2];
      z[e] = y;
      z[1 - e] = x;
      double scale = 1e-6 * (1 + s2) * std::pow(1 + std::abs(y), c2.size());
      if (std::abs(n1.eval(z)) < scale && std::abs(n2.eval(z)) < scale) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace

long contour_root_count(const Polynomial& p, double radius) {
  if (p.nvars() != 1) throw Error(ErrorCode::Input, "contour count needs a univariate polynomial");
  if (p.is_zero()) throw Error(ErrorCode::Input, "zero polynomial has no isolated roots");
  NumPoly f(p);
  double prev = NAN;
  for (int M = 64; M <= (1 << 16); M *= 2) {
    cplx sum = 0;
    double minmod = INFINITY, maxmod = 0;
    for (int k = 0; k < M; ++k) {
      cplx z = std::polar(radius, 2 * kPi * k / M), g;
      cplx v = f.eval_grad(&z, &g);
      minmod = std::min(minmod, std::abs(v));
      maxmod = std::max(maxmod, std::abs(v));
      sum += z * g / v;
    }
    if (minmod <= 1e-12 * maxmod)
      throw Error(ErrorCode::ContourTooClose, "a root lies on or near |x| = " + std::to_string(radius));
    double c = sum.real() / M;
    if (std::abs(c - prev) < 1e-6 && std::abs(c - std::round(c)) < 0.25) return std::lround(c);
    prev = c;
  }
  throw Error(ErrorCode::ContourTooClose, "contour integral did not converge");
}

long winding_number(const std::function<cplx(cplx)>& f, cplx c, double radius) {
  for (int M = 256; M <= (1 << 18); M *= 2) {
    double total = 0;
    bool ok = true;
    cplx prev = f(c + radius);
    if (std::abs(prev) == 0) throw Error(ErrorCode::ContourTooClose, "zero on the contour");
    for (int k = 1; k <= M && ok; ++k) {
      cplx cur = f(c + std::polar(radius, 2 * kPi * k / M));
      if (std::abs(cur) == 0) throw Error(ErrorCode::ContourTooClose, "zero on the contour");
      double d = std::arg(cur / prev);
      if (std::abs(d) > kPi / 4) ok = false;
      total += d;
      prev = cur;
    }
    if (ok) return std::lround(total / (2 * kPi));
  }
  throw Error(ErrorCode::ContourTooClose, "phase tracking failed near the contour");
}

long perturbation_root_count(const Polynomial& f1_in, const Polynomial& f2_in, double radius, int trials,
                             std::uint64_t seed, const std::vector<double>& center) {
  Polynomial f1 = to_bivariate(f1_in), f2 = to_bivariate(f2_in);
  if (center.size() == 2 && (center[0] != 0 || center[1] != 0)) {
    std::vector<Scalar> c{scalar_from_double(center[0]), scalar_from_double(center[1])};
    f1 = f1.shift(c);
    f2 = f2.shift(c);
  }
  if (f1.is_zero() || f2.is_zero()) throw Error(ErrorCode::NumericalFailure, "zero equation");
  std::mt19937_64 rng(seed);
  std::map<long, int> votes;
  for (int t = 0; t < std::max(1, trials); ++t) ++votes[count_once(f1, f2, radius, rng)];
  auto best = std::max_element(votes.begin(), votes.end(),
                               [](const auto& a, const auto& b) { return a.second < b.second; });
  int outliers = std::max(1, trials) - best->second;
  if (outliers > 1)
    throw Error(ErrorCode::Nondeterministic, "perturbed root counts disagree across trials");
  return best->first;
}

}  // namespace segre
