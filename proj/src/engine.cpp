#include "segre/engine.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "segre/error.hpp"
#include "segre/monomial_ma.hpp"

namespace segre {

namespace {

int nonzero_count_in_col(const PolyMatrix& g, int j) {
  int c = 0;
  for (int i = 0; i < g.rows(); ++i) c += !g.at(i, j).is_zero();
  return c;
}

// Entry of row i as (column, coefficient, monomial); column -1 for a zero row.
struct RowEntry {
  int col = -1;
  Scalar c;
  Monomial e;
};

std::vector<RowEntry> diagonal_rows(const PolyMatrix& g) {
  std::vector<RowEntry> out;
  for (int i = 0; i < g.rows(); ++i) {
    RowEntry re;
    for (int j = 0; j < g.cols(); ++j)
      if (!g.at(i, j).is_zero()) {
        re.col = j;
        re.c = g.at(i, j).lead_coefficient();
        re.e = g.at(i, j).lead_monomial();
      }
    out.push_back(re);
  }
  return out;
}

std::vector<MonoComp> chart_components(const PolyMatrix& g, int chart) {
  const int n = g.nvars(), N = g.nvars() + g.cols();
  std::vector<MonoComp> f;
  for (const auto& re : diagonal_rows(g)) {
    if (re.col < 0) continue;
    Monomial e(N);
    for (int i = 0; i < n; ++i) e[i] = re.e[i];
    if (re.col != chart) e[n + re.col] = 1;
    f.push_back({re.c, e});
  }
  return f;
}

Polynomial homogenize(const MonoComp& c, int n, int r, int chart) {
  Monomial e = c.e;
  int deg = 0;
  for (int j = 0; j < r; ++j) deg += e[n + j];
  if (deg > 1) throw Error(ErrorCode::UnsupportedInput, "section is not linear in the fiber");
  e[n + chart] += 1 - deg;
  return Polynomial::monomial(e, c.c);
}

std::vector<GeneralizedCycle> ring_M_diagonal(const PolyMatrix& g) {
  if (!has_diagonal_pattern(g)) throw Error(ErrorCode::UnsupportedInput, "not a diagonal monomial pattern");
  const int n = g.nvars(), r = g.cols(), N = n + r;
  if (N > 32) throw Error(ErrorCode::UnsupportedInput, "too many variables");
  std::vector<GeneralizedCycle> out;
  for (int ell = 0; ell <= n + r - 1; ++ell) {
    struct Acc {
      CycleTerm term;
      std::map<int, long> per_chart;
      std::set<int> J;
    };
    std::map<std::string, Acc> acc;
    for (int k = 0; k < r; ++k) {
      for (const auto& lt : monomial_residue(chart_components(g, k), ell)) {
        CycleTerm t;
        std::vector<int> idx;
        std::set<int> J;
        for (int y = 0; y < N; ++y)
          if (lt.zero_mask >> y & 1u) {
            idx.push_back(y);
            if (y >= n) J.insert(y - n);
          }
        t.fixed = VarietyRef::coordinate(N, idx);
        if (lt.has_moving) {
          MovingFactor mf;
          for (const auto& a : lt.args) mf.args.push_back(homogenize(a, n, r, k));
          mf.power = lt.power;
          mf.normalize();
          t.moving.push_back(mf);
        }
        std::string key = t.str(default_names(N));
        auto& a = acc[key];
        a.term = t;
        a.J = J;
        a.per_chart[k] += lt.coef;
      }
    }
    GeneralizedCycle cyc = GeneralizedCycle::proj(n, r, ell);
    for (auto& [key, a] : acc) {
      long coef = 0;
      bool first = true;
      for (int k = 0; k < r; ++k) {
        auto it = a.per_chart.find(k);
        long v = it == a.per_chart.end() ? 0 : it->second;
        bool expected = !a.J.count(k);
        if (!expected && v != 0)
          throw Error(ErrorCode::UnsupportedInput, "chart assembly: term seen in a chart where it is invisible: " + key);
        if (!expected) continue;
        if (first) coef = v;
        else if (v != coef)
          throw Error(ErrorCode::UnsupportedInput, "chart assembly: charts disagree on " + key);
        first = false;
      }
      if (coef == 0) continue;
      a.term.coefficient = coef;
      cyc.add(a.term);
    }
    out.push_back(cyc);
  }
  return out;
}

// m = 1: the residue is the divisor of G = sum g_i a_i and nothing above degree 1.
std::vector<GeneralizedCycle> ring_M_row(const PolyMatrix& g) {
  const int n = g.nvars(), r = g.cols(), N = n + r;
  std::vector<GeneralizedCycle> out;
  for (int ell = 0; ell <= n + r - 1; ++ell) out.push_back(GeneralizedCycle::proj(n, r, ell));
  Polynomial G(N);
  std::vector<int> xmap(n);
  for (int i = 0; i < n; ++i) xmap[i] = i;
  for (int j = 0; j < r; ++j)
    G += g.at(0, j).embed(N, xmap) * Polynomial::variable(N, n + j);
  if (G.is_zero()) {
    CycleTerm one;
    one.fixed = VarietyRef::whole(N);
    out[0].add(one);
    return out;
  }
  Monomial h = G.monomial_content();
  Polynomial Gp = G.divide(h);
  for (int y = 0; y < N; ++y)
    if (h[y] > 0) {
      CycleTerm t;
      t.coefficient = h[y];
      t.fixed = VarietyRef::coordinate(N, {y});
      out[1].add(t);
    }
  if (!Gp.is_constant()) {
    CycleTerm t;
    t.fixed = VarietyRef::hypersurface(Gp);
    out[1].add(t);
  }
  return out;
}

GeneralizedCycle one_cycle(int n) {
  GeneralizedCycle c = GeneralizedCycle::base(n, 0);
  CycleTerm t;
  t.fixed = VarietyRef::whole(n);
  c.add(t);
  return c;
}

bool generically_injective(const PolyMatrix& g, StructureClass cls) {
  if (cls == StructureClass::DiagonalMonomial) {
    for (int j = 0; j < g.cols(); ++j)
      if (nonzero_count_in_col(g, j) == 0) return false;
    return true;
  }
  if (cls == StructureClass::SingleRow || cls == StructureClass::ColumnSection)
    return g.cols() == 1 && !g.at(0, 0).is_zero();
  return false;
}

// Monomial cutting out Z; the constant 1 means Z is empty.
Polynomial Z_equation(const PolyMatrix& g) {
  Polynomial prod = Polynomial::constant(g.nvars(), Scalar(1));
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (!g.at(i, j).is_zero()) prod = prod * g.at(i, j);
  Monomial m = prod.is_monomial() ? prod.lead_monomial() : Monomial(g.nvars());
  for (int i = 0; i < m.nvars(); ++i) m[i] = std::min(m[i], 1);  // support only
  return Polynomial::monomial(m);
}

}  // namespace

std::string describe_Z(const MorphismResult& res, const std::vector<std::string>& names) {
  if (res.Z_whole) return "Z = X (g is not generically injective)";
  if (res.Z_equation.is_constant()) return "Z is empty";
  return "Z = {" + res.Z_equation.str(names) + " = 0}";
}

SectionOnPE section_on_chart(const PolyMatrix& g, int chart) {
  if (chart < 0 || chart >= g.cols()) throw Error(ErrorCode::Input, "chart index out of range");
  const int n = g.nvars(), r = g.cols(), N = n + r;
  SectionOnPE s;
  s.g = g;
  s.chart = chart;
  std::vector<int> xmap(n);
  for (int i = 0; i < n; ++i) xmap[i] = i;
  std::vector<Polynomial> comps;
  for (int i = 0; i < g.rows(); ++i) {
    Polynomial c(N);
    for (int j = 0; j < r; ++j) {
      Polynomial e = g.at(i, j).embed(N, xmap);
      if (j != chart) e = e * Polynomial::variable(N, n + j);
      c += e;
    }
    comps.push_back(c);
  }
  // joint monomial content
  Monomial h(N);
  bool first = true;
  for (const auto& c : comps) {
    if (c.is_zero()) continue;
    h = first ? c.monomial_content() : Monomial::gcd(h, c.monomial_content());
    first = false;
  }
  s.common_factor = h;
  for (const auto& c : comps) s.components.push_back(c.is_zero() ? c : c.divide(h));
  return s;
}

PolyMatrix remove_unit_blocks(const PolyMatrix& g, bool* everything_removed) {
  std::vector<int> drop_rows, drop_cols;
  for (int i = 0; i < g.rows(); ++i) {
    int nz = 0, col = -1;
    for (int j = 0; j < g.cols(); ++j)
      if (!g.at(i, j).is_zero()) {
        ++nz;
        col = j;
      }
    if (nz == 1 && g.at(i, col).is_constant() && nonzero_count_in_col(g, col) == 1) {
      drop_rows.push_back(i);
      drop_cols.push_back(col);
    }
  }
  bool all = static_cast<int>(drop_rows.size()) == g.rows() || static_cast<int>(drop_cols.size()) == g.cols();
  if (everything_removed) *everything_removed = all;
  if (all || drop_rows.empty()) return g;
  return g.without_rows(drop_rows).without_cols(drop_cols);
}

bool diagonal_engine_feasible(const PolyMatrix& g, bool allow_reduction) {
  if (!has_diagonal_pattern(g)) return false;
  try {
    ring_M_diagonal(g);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedInput || !allow_reduction) return false;
  }
  bool all = false;
  PolyMatrix red = remove_unit_blocks(g, &all);
  if (all) return true;
  if (red == g) return false;
  try {
    ring_M_diagonal(red);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<GeneralizedCycle> ring_M_Galpha(const PolyMatrix& g) {
  StructureClass cls = classify_structure(g);
  switch (cls) {
    case StructureClass::DiagonalMonomial: return ring_M_diagonal(g);
    case StructureClass::SingleRow:
    case StructureClass::ColumnSection: return ring_M_row(g);
    default:
      throw Error(ErrorCode::UnsupportedInput, "structure class GENERAL is outside the exact engine; use the numeric engine");
  }
}

MorphismResult compute_Mg(const PolyMatrix& g, const EngineOptions& opt) {
  MorphismResult res;
  res.n = g.nvars();
  res.structure = classify_structure(g);
  if (res.structure == StructureClass::General)
    throw Error(ErrorCode::UnsupportedInput, "structure class GENERAL is outside the exact engine; use the numeric engine");
  if (!has_diagonal_pattern(g) && g.rows() != 1) {
    // classified through its unit-block reduction
    MorphismResult inner = compute_Mg(remove_unit_blocks(g), opt);
    inner.route = "unit-block reduction";
    return inner;
  }
  res.generically_injective = generically_injective(g, res.structure);
  res.Z_whole = !res.generically_injective;
  if (!res.Z_whole) res.Z_equation = Z_equation(g);
  const int n = g.nvars();
  PolyMatrix work = g;
  if (res.structure == StructureClass::DiagonalMonomial) {
    try {
      res.ring_M = ring_M_diagonal(g);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedInput || !opt.unit_block_reduction) throw;
      bool all = false;
      work = remove_unit_blocks(g, &all);
      res.route = "unit-block reduction";
      if (all) {
        res.r = 0;
        for (int k = 0; k <= n; ++k) res.M.push_back(GeneralizedCycle::base(n, k));
        return res;
      }
      res.ring_M = ring_M_diagonal(work);
    }
  } else {
    res.ring_M = ring_M_row(g);
  }
  const int r = work.cols();
  res.r = r;
  for (int k = 0; k <= n; ++k) {
    GeneralizedCycle Mk = GeneralizedCycle::base(n, k);
    try {
      for (int ell = 0; ell <= k + r - 1 && ell <= n + r - 1; ++ell) {
        int j = k + r - 1 - ell;
        if (j > r - 1) continue;  // omega^j vanishes on the fiber
        Mk += pushforward_fiber(wedge_omega(res.ring_M[ell], j));
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedTerm || !opt.allow_partial) throw;
      res.unresolved.push_back(k);
      res.unresolved_reason.push_back(e.what());
      Mk = GeneralizedCycle::base(n, k);
    }
    res.M.push_back(Mk);
  }
  return res;
}

SegreReport segre_numbers(const MorphismResult& res, const std::vector<Scalar>& point,
                          const MultiplicityOracle& oracle) {
  if (static_cast<int>(point.size()) != res.n) throw Error(ErrorCode::Input, "point has wrong dimension");
  if (!res.unresolved.empty())
    throw Error(ErrorCode::UnsupportedTerm, "degree " + std::to_string(res.unresolved.front()) +
                                                " of M^g is not available: " + res.unresolved_reason.front());
  SegreReport rep;
  rep.point = point;
  for (const auto& Mk : res.M) {
    Multiplicity m = multiplicity_at(Mk, point, oracle);
    rep.numbers.push_back(m.value);
    rep.provenance.push_back(m.provenance);
  }
  rep.distinguished = distinguished_varieties(res);
  return rep;
}

SegreReport segre_numbers(const PolyMatrix& g, const std::vector<Scalar>& point,
                          const MultiplicityOracle& oracle) {
  return segre_numbers(compute_Mg(g), point, oracle);
}

std::vector<Distinguished> distinguished_varieties(const MorphismResult& res) {
  std::vector<Distinguished> out;
  for (size_t k = 0; k < res.M.size(); ++k) {
    auto [fixed, moving] = fixed_moving_split(res.M[k]);
    for (const auto& t : fixed.terms) out.push_back({static_cast<int>(k), t.fixed, t.coefficient});
  }
  return out;
}

std::vector<Distinguished> distinguished_varieties(const PolyMatrix& g) {
  return distinguished_varieties(compute_Mg(g));
}

GeneralizedCycle monomial_divisor_cycle(const Monomial& m) {
  GeneralizedCycle c = GeneralizedCycle::base(m.nvars(), 1);
  for (int i = 0; i < m.nvars(); ++i)
    if (m[i] > 0) {
      CycleTerm t;
      t.coefficient = m[i];
      t.fixed = VarietyRef::coordinate(m.nvars(), {i});
      c.add(t);
    }
  return c;
}

const char* metric_form_name(MetricForm w) {
  switch (w) {
    case MetricForm::SegreEHat: return "SEGRE_E_HAT";
    case MetricForm::ChernEHat: return "CHERN_E_HAT";
    case MetricForm::SegreFHat: return "SEGRE_F_HAT";
  }
  return "?";
}

MetricFormResult singular_metric_forms(const PolyMatrix& g, MetricForm which) {
  if (which == MetricForm::SegreFHat) {
    if (g.rows() != g.cols()) throw Error(ErrorCode::Input, "SEGRE_F_HAT needs a square matrix");
    if (determinant(g).is_zero()) throw Error(ErrorCode::Input, "SEGRE_F_HAT needs det g not identically zero");
  }
  MorphismResult res = compute_Mg(g);
  if (!res.unresolved.empty())
    throw Error(ErrorCode::UnsupportedTerm, "M^g is only partially available");
  const int n = g.nvars();
  MetricFormResult out;
  for (int k = 0; k <= n; ++k) {
    GeneralizedCycle part = GeneralizedCycle::base(n, k);
    if (which == MetricForm::SegreEHat) {
      part += res.M[k];
      if (k == 0 && res.generically_injective) part += one_cycle(n);
    } else {
      part += res.M[k].scaled(-1);
      if (k == 0) part += one_cycle(n);
    }
    out.parts.push_back(part);
  }
  if (which == MetricForm::SegreEHat)
    out.tail = "1_{X\\Z} s(Im g) in positive degrees (smooth, metric dependent)";
  return out;
}

}  // namespace segre
