#include "segre/properties.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "segre/error.hpp"

namespace segre {

namespace {

std::string pt_str(const std::vector<Scalar>& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].str();
  return s + ")";
}

PropertyResult fail(PropertyResult r, const std::string& why) {
  r.pass = false;
  r.detail = why;
  return r;
}

std::vector<long> numbers_at(const MorphismResult& res, const std::vector<Scalar>& p) {
  return segre_numbers(res, p).numbers;
}

std::string vec_str(const std::vector<long>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

PointList property_points(int n, const PointList& extra) {
  PointList pts = sample_grid(n);
  for (const auto& p : extra)
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  return pts;
}

PropertyResult check_determinant_law(const PolyMatrix& g, const MorphismResult& res, const PointList& pts) {
  PropertyResult r{"determinant_law", true, ""};
  if (g.rows() != g.cols()) return fail(r, "matrix is not square");
  Polynomial det = determinant(g);
  if (det.is_zero()) return fail(r, "det g vanishes identically");
  if (res.M.size() < 2) return fail(r, "M_1 missing");
  auto fixed = fixed_moving_split(res.M[1]).first;
  for (const auto& p : pts) {
    long got = multiplicity_at(fixed, p).value;
    long want = det.order_at(p);
    if (got != want)
      return fail(r, "at " + pt_str(p) + ": fixed part of M_1 has multiplicity " + std::to_string(got) +
                         ", ord det g = " + std::to_string(want));
  }
  // total coefficient per coordinate hyperplane against the exponent in the monomial content of det g
  Monomial content = det.monomial_content();
  for (int i = 0; i < g.nvars(); ++i) {
    Rational total = 0;
    for (const auto& t : fixed.terms)
      if (t.fixed.kind == VarietyKind::CoordinateSubspace && t.fixed.codim() == 1 &&
          t.fixed.zero_indices() == std::vector<int>{i})
        total += t.coefficient;
    if (det.is_monomial() && total != content[i])
      return fail(r, "coefficient of [x" + std::to_string(i + 1) + "=0] is " + rational_str(total) +
                         ", exponent in det g is " + std::to_string(content[i]));
  }
  r.detail = "det g = " + det.str() + " checked at " + std::to_string(pts.size()) + " points";
  return r;
}

PropertyResult check_nonnegativity(const MorphismResult& res, const PointList& pts, const MultiplicityOracle& oracle) {
  PropertyResult r{"nonnegativity", true, ""};
  long checked = 0;
  for (size_t k = 0; k < res.M.size(); ++k)
    for (const auto& p : pts) {
      long v = multiplicity_at(res.M[k], p, oracle).value;
      ++checked;
      if (v < 0) return fail(r, "mult of M_" + std::to_string(k) + " at " + pt_str(p) + " is " + std::to_string(v));
    }
  r.detail = std::to_string(checked) + " multiplicities";
  return r;
}

PropertyResult check_stratum(const PolyMatrix& g, const MorphismResult& res, const PointList& pts,
                             const MultiplicityOracle& oracle) {
  PropertyResult r{"stratum", true, ""};
  std::vector<bool> used(g.nvars(), false);
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      for (int v = 0; v < g.nvars(); ++v)
        if (g.at(i, j).involves(v)) used[v] = true;
  long nonzero = 0;
  for (size_t k = 0; k < res.M.size(); ++k) {
    auto moving = fixed_moving_split(res.M[k]).second;
    for (const auto& p : pts) {
      long v = multiplicity_at(moving, p, oracle).value;
      if (v == 0) continue;
      ++nonzero;
      int codim = 0;
      for (int i = 0; i < g.nvars(); ++i)
        if (used[i] && p[i].is_zero()) ++codim;
      if (codim < static_cast<int>(k) + 1)
        return fail(r, "moving part of M_" + std::to_string(k) + " has multiplicity " + std::to_string(v) + " at " +
                           pt_str(p) + " whose stratum has codim " + std::to_string(codim));
    }
  }
  r.detail = std::to_string(nonzero) + " nonzero moving multiplicities, all on admissible strata";
  return r;
}

PropertyResult check_direct_sum(const PolyMatrix& g, const PointList& pts) {
  PropertyResult r{"direct_sum", true, ""};
  MorphismResult a = compute_Mg(g);
  MorphismResult b = compute_Mg(direct_sum(g, identity_matrix(1, g.nvars())));
  for (const auto& p : pts) {
    auto x = numbers_at(a, p), y = numbers_at(b, p);
    if (x != y) return fail(r, "at " + pt_str(p) + ": " + vec_str(x) + " vs " + vec_str(y) + " after adding a unit block");
  }
  r.detail = "g and g + 1 agree at " + std::to_string(pts.size()) + " points";
  return r;
}

PolyMatrix random_monomial_matrix(int size, int nvars, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> d(-5, 5), q(1, 4);
  PolyMatrix A(size, size, nvars);
  for (int i = 0; i < size; ++i) {
    int re = d(rng), im = d(rng);
    if (re == 0 && im == 0) re = 1;
    A.at(i, perm[i]) = Polynomial::constant(nvars, Scalar(Rational(re) / q(rng), Rational(im) / q(rng)));
  }
  return A;
}

PropertyResult check_comparability(const PolyMatrix& g, const PointList& pts, std::uint64_t seed) {
  PropertyResult r{"comparability", true, ""};
  PolyMatrix A = random_monomial_matrix(g.rows(), g.nvars(), seed);
  PolyMatrix B = random_monomial_matrix(g.cols(), g.nvars(), seed + 1);
  PolyMatrix h = multiply(multiply(A, g), B);
  MorphismResult a = compute_Mg(g), b = compute_Mg(h);
  for (const auto& p : pts) {
    auto x = numbers_at(a, p), y = numbers_at(b, p);
    if (x != y) return fail(r, "at " + pt_str(p) + ": " + vec_str(x) + " vs " + vec_str(y) + " for A g B");
  }
  r.detail = "A g B = " + h.str() + " agrees at " + std::to_string(pts.size()) + " points";
  return r;
}

PropertyResult check_dimension(const MorphismResult& res) {
  PropertyResult r{"dimension", true, ""};
  if (!res.generically_injective) {
    r.detail = "not generically injective; nothing to check";
    return r;
  }
  // Z is a monomial hypersurface or empty for the exact classes
  int codim = res.Z_equation.is_constant() ? static_cast<int>(res.M.size()) : 1;
  for (int k = 0; k < codim && k < static_cast<int>(res.M.size()); ++k)
    if (!res.M[k].is_zero()) return fail(r, "M_" + std::to_string(k) + " is nonzero below codim Z");
  r.detail = "M_k = 0 for k < " + std::to_string(codim);
  return r;
}

PropertyResult run_property(const std::string& name, const PolyMatrix& g, const MorphismResult& res,
                            const PointList& pts, std::uint64_t seed, const MultiplicityOracle& oracle) {
  try {
    if (name == "determinant_law") return check_determinant_law(g, res, pts);
    if (name == "nonnegativity") return check_nonnegativity(res, pts, oracle);
    if (name == "stratum") return check_stratum(g, res, pts, oracle);
    if (name == "direct_sum") return check_direct_sum(g, pts);
    if (name == "comparability") return check_comparability(g, pts, seed);
    if (name == "dimension") return check_dimension(res);
  } catch (const Error& e) {
    return {name, false, std::string(error_code_name(e.code())) + ": " + e.what()};
  }
  throw Error(ErrorCode::Input, "unknown property '" + name + "'");
}

}  // namespace segre
