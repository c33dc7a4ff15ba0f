#include <algorithm>
#include <random>

#include "segre/cycle.hpp"
#include "segre/error.hpp"

namespace segre {

namespace {

using UPoly = std::vector<Scalar>;  // coefficients, low degree first

UPoly to_univariate(const Polynomial& p, int var) {
  UPoly u(std::max(p.degree_in(var), 0) + 1);
  for (const auto& [m, c] : p.terms()) u[m[var]] += c;
  while (u.size() > 1 && u.back().is_zero()) u.pop_back();
  return u;
}

// Determinant of the Sylvester matrix by exact elimination.
Scalar univariate_resultant(const UPoly& a, const UPoly& b) {
  const int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  const int N = da + db;
  if (N == 0) return Scalar(1);
  std::vector<std::vector<Scalar>> S(N, std::vector<Scalar>(N));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) S[i][i + j] = a[da - j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) S[db + i][i + j] = b[db - j];
  Scalar det(1);
  for (int c = 0; c < N; ++c) {
    int piv = -1;
    for (int r = c; r < N; ++r)
      if (!S[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Scalar(0);
    if (piv != c) {
      std::swap(S[piv], S[c]);
      det = -det;
    }
    det *= S[c][c];
    for (int r = c + 1; r < N; ++r) {
      if (S[r][c].is_zero()) continue;
      Scalar q = S[r][c] / S[c][c];
      for (int j = c; j < N; ++j) S[r][j] -= q * S[c][j];
    }
  }
  return det;
}

long integer_coefficient(const Rational& q, const CycleTerm& t) {
  if (q.get_den() != 1)
    throw Error(ErrorCode::Input, "multiplicity of a term with non-integer coefficient: " +
                                      t.str(default_names(t.fixed.nvars)));
  return q.get_num().get_si();
}

Multiplicity ask_oracle(const CycleTerm& t, const std::vector<Scalar>& point, const MultiplicityOracle& oracle,
                        long coef) {
  if (!oracle)
    throw Error(ErrorCode::Undecided, "no exact multiplicity rule for term " + t.str(default_names(t.fixed.nvars)));
  return {coef * oracle(t.moving, t.fixed, point), Provenance::Oracle};
}

}  // namespace

bool certified_coprime(const Polynomial& a, const Polynomial& b, unsigned long long seed) {
  if (a.is_zero()) return b.is_constant() && !b.is_zero();
  if (b.is_zero()) return a.is_constant();
  if (a.is_constant() || b.is_constant()) return true;
  const int n = a.nvars();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-30, 30);
  for (int l = 0; l < n; ++l) {
    if (a.degree_in(l) <= 0 || b.degree_in(l) <= 0) continue;
    bool certified = false;
    for (int attempt = 0; attempt < 12 && !certified; ++attempt) {
      Polynomial sa = a, sb = b;
      for (int v = 0; v < n; ++v) {
        if (v == l) continue;
        Scalar val(Rational(dist(rng)) / (1 + attempt % 3));
        sa = sa.substitute(v, val);
        sb = sb.substitute(v, val);
      }
      // specialization must keep the degrees for the resultant to specialize
      if (sa.degree_in(l) != a.degree_in(l) || sb.degree_in(l) != b.degree_in(l)) continue;
      if (!univariate_resultant(to_univariate(sa, l), to_univariate(sb, l)).is_zero()) certified = true;
    }
    if (!certified) return false;
  }
  return true;
}

bool certified_gcd_free(const std::vector<Polynomial>& f) {
  std::vector<Polynomial> nz;
  for (const auto& p : f)
    if (!p.is_zero()) nz.push_back(p);
  if (nz.empty()) return false;
  for (const auto& p : nz)
    if (p.is_constant()) return true;
  for (size_t i = 0; i < nz.size(); ++i)
    for (size_t j = i + 1; j < nz.size(); ++j)
      if (certified_coprime(nz[i], nz[j])) return true;
  return false;
}

Multiplicity term_multiplicity(const CycleTerm& t, const std::vector<Scalar>& point,
                               const MultiplicityOracle& oracle) {
  if (static_cast<int>(point.size()) != t.fixed.nvars)
    throw Error(ErrorCode::Input, "point has wrong dimension");
  if (t.fixed.kind == VarietyKind::FiberHypersurface)
    throw Error(ErrorCode::Input, "multiplicity is defined on the base only");
  const long coef = integer_coefficient(t.coefficient, t);
  // smooth positive-degree factors kill the Lelong number
  if (t.omega_power > 0) return {};
  if (!t.fixed.contains(point)) return {};
  if (t.moving.empty()) {
    if (t.fixed.kind == VarietyKind::MonomialDivisor)
      return {coef * t.fixed.equations.front().order_at(point), Provenance::Exact};
    return {coef, Provenance::Exact};
  }
  if (t.moving.size() > 1 || t.fixed.kind == VarietyKind::MonomialDivisor)
    return ask_oracle(t, point, oracle, coef);
  const MovingFactor& mv = t.moving.front();
  const int p = mv.power;
  std::vector<Polynomial> args;
  for (const auto& a : mv.args) {
    Polynomial ra = a.restrict_zero(t.fixed.zero_indices());
    if (!ra.is_zero()) args.push_back(ra);
  }
  if (args.empty()) return {};
  for (const auto& a : args)
    if (!a.evaluate(point).is_zero()) return {};
  if (p >= static_cast<int>(args.size())) return {};
  bool monomial = std::all_of(args.begin(), args.end(), [](const Polynomial& a) { return a.is_monomial(); });
  if (monomial) {
    const int n = t.fixed.nvars;
    std::vector<Monomial> loc;
    for (const auto& a : args) {
      Monomial m = a.lead_monomial();
      for (int i = 0; i < n; ++i)
        if (!point[i].is_zero()) m[i] = 0;
      loc.push_back(m);
    }
    Monomial h = loc.front();
    for (const auto& m : loc) h = Monomial::gcd(h, m);
    std::vector<int> degs;
    for (auto& m : loc) {
      m = m / h;
      degs.push_back(m.degree());
    }
    if (*std::min_element(degs.begin(), degs.end()) == 0) return {};
    if (p == 1) return {coef * *std::min_element(degs.begin(), degs.end()), Provenance::Exact};
    bool disjoint = true;
    for (size_t i = 0; i < loc.size(); ++i)
      for (size_t j = i + 1; j < loc.size(); ++j)
        for (int v = 0; v < n; ++v)
          if (loc[i][v] > 0 && loc[j][v] > 0) disjoint = false;
    if (disjoint) {
      std::sort(degs.begin(), degs.end());
      long prod = 1;
      for (int i = 0; i < p; ++i) prod *= degs[i];
      return {coef * prod, Provenance::Exact};
    }
    return ask_oracle(t, point, oracle, coef);
  }
  if (p == 1 && certified_gcd_free(args)) {
    int best = -1;
    for (const auto& a : args) {
      int o = a.order_at(point);
      if (best < 0 || o < best) best = o;
    }
    return {coef * best, Provenance::Exact};
  }
  return ask_oracle(t, point, oracle, coef);
}

Multiplicity multiplicity_at(const GeneralizedCycle& c, const std::vector<Scalar>& point,
                             const MultiplicityOracle& oracle) {
  if (c.space != Space::Base) throw Error(ErrorCode::Input, "multiplicity is defined on the base only");
  if (static_cast<int>(point.size()) != c.n) throw Error(ErrorCode::Input, "point has wrong dimension");
  Multiplicity total;
  for (const auto& t : c.terms) {
    Multiplicity m = term_multiplicity(t, point, oracle);
    total.value += m.value;
    if (m.provenance == Provenance::Oracle) total.provenance = Provenance::Oracle;
  }
  return total;
}

}  // namespace segre
