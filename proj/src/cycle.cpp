#include "segre/cycle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "segre/error.hpp"

namespace segre {

const char* variety_kind_name(VarietyKind k) {
  switch (k) {
    case VarietyKind::CoordinateSubspace: return "COORDINATE_SUBSPACE";
    case VarietyKind::MonomialDivisor: return "MONOMIAL_DIVISOR";
    case VarietyKind::Point: return "POINT";
    case VarietyKind::WholeSpace: return "WHOLE_SPACE";
    case VarietyKind::FiberHypersurface: return "FIBER_HYPERSURFACE";
  }
  return "?";
}

const char* provenance_name(Provenance p) { return p == Provenance::Exact ? "EXACT" : "ORACLE"; }

VarietyRef VarietyRef::whole(int nvars) {
  VarietyRef v;
  v.kind = VarietyKind::WholeSpace;
  v.nvars = nvars;
  return v;
}

VarietyRef VarietyRef::coordinate(int nvars, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.empty()) return whole(nvars);
  VarietyRef v;
  v.kind = VarietyKind::CoordinateSubspace;
  v.nvars = nvars;
  for (int i : idx) v.equations.push_back(Polynomial::variable(nvars, i));
  return v;
}

VarietyRef VarietyRef::at_point(std::vector<Scalar> p) {
  VarietyRef v;
  v.kind = VarietyKind::Point;
  v.nvars = static_cast<int>(p.size());
  v.point = std::move(p);
  return v;
}

VarietyRef VarietyRef::monomial_divisor(const Monomial& m) {
  if (m.is_one()) throw Error(ErrorCode::Input, "trivial monomial divisor");
  VarietyRef v;
  v.kind = VarietyKind::MonomialDivisor;
  v.nvars = m.nvars();
  v.equations.push_back(Polynomial::monomial(m));
  return v;
}

VarietyRef VarietyRef::hypersurface(const Polynomial& eq) {
  VarietyRef v;
  v.kind = VarietyKind::FiberHypersurface;
  v.nvars = eq.nvars();
  v.equations.push_back(eq);
  return v;
}

int VarietyRef::codim() const {
  switch (kind) {
    case VarietyKind::CoordinateSubspace: return static_cast<int>(equations.size());
    case VarietyKind::MonomialDivisor:
    case VarietyKind::FiberHypersurface: return 1;
    case VarietyKind::Point: return nvars;
    case VarietyKind::WholeSpace: return 0;
  }
  return 0;
}

std::vector<int> VarietyRef::zero_indices() const {
  std::vector<int> out;
  if (kind == VarietyKind::Point) {
    for (int i = 0; i < nvars; ++i) out.push_back(i);
    return out;
  }
  if (kind != VarietyKind::CoordinateSubspace) return out;
  for (const auto& e : equations) out.push_back(e.lead_monomial().support().front());
  return out;
}

bool VarietyRef::contains(const std::vector<Scalar>& p) const {
  if (static_cast<int>(p.size()) != nvars) throw Error(ErrorCode::Input, "point has wrong dimension");
  switch (kind) {
    case VarietyKind::WholeSpace: return true;
    case VarietyKind::Point: return p == point;
    default:
      for (const auto& e : equations)
        if (!e.evaluate(p).is_zero()) return false;
      return true;
  }
}

std::string VarietyRef::str(const std::vector<std::string>& names) const {
  switch (kind) {
    case VarietyKind::WholeSpace: return "X";
    case VarietyKind::Point: {
      std::string s = "[(";
      for (size_t i = 0; i < point.size(); ++i) s += (i ? "," : "") + point[i].str();
      return s + ")]";
    }
    default: {
      std::string s = "[";
      for (const auto& e : equations) s += e.str(names) + "=";
      return s + "0]";
    }
  }
}

namespace {
std::string canon_key(const VarietyRef& v) {
  std::string s = std::to_string(static_cast<int>(v.kind)) + "|";
  for (const auto& e : v.equations) s += e.str() + ";";
  for (const auto& c : v.point) s += c.str() + ",";
  return s;
}

std::string moving_key(const std::vector<MovingFactor>& mv) {
  std::string s;
  for (const auto& f : mv) {
    s += std::to_string(f.power) + ":";
    for (const auto& a : f.args) s += a.str() + ";";
    s += "|";
  }
  return s;
}
}  // namespace

bool operator==(const VarietyRef& a, const VarietyRef& b) {
  return a.kind == b.kind && a.nvars == b.nvars && a.equations == b.equations && a.point == b.point;
}

bool operator<(const VarietyRef& a, const VarietyRef& b) {
  if (a.codim() != b.codim()) return a.codim() < b.codim();
  return canon_key(a) < canon_key(b);
}

void MovingFactor::normalize() {
  std::sort(args.begin(), args.end(), polynomial_less);
}

std::string MovingFactor::str(const std::vector<std::string>& names) const {
  std::string s = "ddc log(";
  for (size_t i = 0; i < args.size(); ++i) s += (i ? "+" : "") + std::string("|") + args[i].str(names) + "|^2";
  s += ")";
  if (power != 1) s = "(" + s + ")^" + std::to_string(power);
  return "<" + s + ">";
}

bool operator==(const MovingFactor& a, const MovingFactor& b) {
  return a.power == b.power && a.args == b.args;
}

bool operator<(const MovingFactor& a, const MovingFactor& b) {
  return moving_key({a}) < moving_key({b});
}

int CycleTerm::bidegree() const {
  int k = fixed.codim() + omega_power;
  for (const auto& f : moving) k += f.power;
  return k;
}

bool CycleTerm::same_shape(const CycleTerm& o) const {
  return fixed == o.fixed && omega_power == o.omega_power && moving == o.moving;
}

std::string CycleTerm::str(const std::vector<std::string>& names) const {
  std::string s = rational_str(coefficient) + " " + fixed.str(names);
  if (omega_power) s += " ^ omega^" + std::to_string(omega_power);
  for (const auto& f : moving) s += " ^ " + f.str(names);
  return s;
}

void GeneralizedCycle::add(CycleTerm t) {
  if (t.coefficient == 0) return;
  if (t.bidegree() != degree)
    throw Error(ErrorCode::Input, "term bidegree " + std::to_string(t.bidegree()) +
                                      " does not match cycle degree " + std::to_string(degree));
  if (t.fixed.nvars != nvars()) throw Error(ErrorCode::Input, "term lives on a different space");
  for (auto& f : t.moving) f.normalize();
  std::sort(t.moving.begin(), t.moving.end());
  for (auto& u : terms)
    if (u.same_shape(t)) {
      u.coefficient += t.coefficient;
      canonicalize();
      return;
    }
  terms.push_back(std::move(t));
  canonicalize();
}

void GeneralizedCycle::canonicalize() {
  std::map<std::string, CycleTerm> merged;
  for (auto& t : terms) {
    for (auto& f : t.moving) f.normalize();
    std::sort(t.moving.begin(), t.moving.end());
    std::string key = canon_key(t.fixed) + "#" + std::to_string(t.omega_power) + "#" + moving_key(t.moving);
    auto it = merged.find(key);
    if (it == merged.end()) merged.emplace(key, t);
    else it->second.coefficient += t.coefficient;
  }
  terms.clear();
  for (auto& [k, t] : merged)
    if (t.coefficient != 0) terms.push_back(t);
  std::sort(terms.begin(), terms.end(), [](const CycleTerm& a, const CycleTerm& b) {
    if (a.fixed.codim() != b.fixed.codim()) return a.fixed.codim() > b.fixed.codim();
    std::string ka = canon_key(a.fixed), kb = canon_key(b.fixed);
    if (ka != kb) return ka < kb;
    if (a.omega_power != b.omega_power) return a.omega_power < b.omega_power;
    return moving_key(a.moving) < moving_key(b.moving);
  });
}

GeneralizedCycle& GeneralizedCycle::operator+=(const GeneralizedCycle& o) {
  if (o.space != space || o.n != n || o.r != r || o.degree != degree)
    throw Error(ErrorCode::Input, "adding cycles of different type");
  for (const auto& t : o.terms) terms.push_back(t);
  canonicalize();
  return *this;
}

GeneralizedCycle GeneralizedCycle::scaled(const Rational& c) const {
  GeneralizedCycle out = *this;
  for (auto& t : out.terms) t.coefficient *= c;
  out.canonicalize();
  return out;
}

std::vector<std::string> GeneralizedCycle::names(const std::vector<std::string>& base_names) const {
  std::vector<std::string> nm = base_names;
  if (space == Space::Projectivization)
    for (int j = 0; j < r; ++j) nm.push_back("a" + std::to_string(j + 1));
  return nm;
}

std::string GeneralizedCycle::str(const std::vector<std::string>& base_names) const {
  if (terms.empty()) return "0";
  auto nm = names(base_names);
  std::string s;
  for (const auto& t : terms) {
    std::string ts = t.str(nm);
    if (!s.empty()) s += ts[0] == '-' ? " - " + ts.substr(1) : " + " + ts;
    else s = ts;
  }
  return s;
}

bool operator==(const GeneralizedCycle& a, const GeneralizedCycle& b) {
  if (a.space != b.space || a.n != b.n || a.r != b.r || a.degree != b.degree) return false;
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (!a.terms[i].same_shape(b.terms[i]) || a.terms[i].coefficient != b.terms[i].coefficient)
      return false;
  return true;
}

GeneralizedCycle canonicalize(GeneralizedCycle c) {
  c.canonicalize();
  return c;
}

GeneralizedCycle wedge_omega(const GeneralizedCycle& c, int j) {
  if (j < 0) throw Error(ErrorCode::Input, "negative omega power");
  GeneralizedCycle out = c;
  out.degree += j;
  if (out.degree > c.dimension()) throw Error(ErrorCode::Input, "bidegree exceeds the dimension");
  for (auto& t : out.terms) t.omega_power += j;
  out.canonicalize();
  return out;
}

GeneralizedCycle wedge(const GeneralizedCycle& c, const MovingFactor& f) {
  if (f.args.empty() || f.power < 1) throw Error(ErrorCode::Input, "malformed moving factor");
  for (const auto& a : f.args)
    if (a.nvars() != c.nvars()) throw Error(ErrorCode::Input, "moving factor on a different space");
  GeneralizedCycle out = c;
  out.degree += f.power;
  if (out.degree > c.dimension()) throw Error(ErrorCode::Input, "bidegree exceeds the dimension");
  for (auto& t : out.terms) t.moving.push_back(f);
  out.canonicalize();
  return out;
}

std::pair<GeneralizedCycle, GeneralizedCycle> fixed_moving_split(const GeneralizedCycle& c) {
  GeneralizedCycle fixed(c.space, c.n, c.r, c.degree), moving(c.space, c.n, c.r, c.degree);
  for (const auto& t : c.terms) {
    bool pure = t.is_pure_fixed() && t.fixed.kind != VarietyKind::FiberHypersurface;
    (pure ? fixed : moving).terms.push_back(t);
  }
  fixed.canonicalize();
  moving.canonicalize();
  return {fixed, moving};
}

namespace {

// Pulls a base polynomial out of an (x, a) polynomial that does not involve a.
Polynomial drop_fiber_vars(const Polynomial& p, int n) {
  Polynomial out(n);
  for (const auto& [m, c] : p.terms()) {
    Monomial b(n);
    for (int i = 0; i < n; ++i) b[i] = m[i];
    out.add_term(b, c);
  }
  return out;
}

// Fiber coordinate carried by each arg when every arg has the shape m_i(x) * a_{s(i)}.
// Returns empty optional when the args are all fiber-free, throws on anything else.
std::optional<std::vector<int>> fiber_pattern(const std::vector<Polynomial>& args, int n, int r,
                                              const CycleTerm& t) {
  std::vector<int> which;
  int free_count = 0;
  for (const auto& a : args) {
    int w = -2;
    for (const auto& [m, c] : a.terms()) {
      int deg = 0, idx = -1;
      for (int j = 0; j < r; ++j)
        if (m[n + j] > 0) {
          deg += m[n + j];
          idx = j;
        }
      int cur = deg == 0 ? -1 : (deg == 1 ? idx : -3);
      if (cur == -3 || (w != -2 && w != cur))
        throw Error(ErrorCode::UnsupportedTerm, "unsupported fiber content: " + t.str(default_names(n + r)));
      w = cur;
    }
    if (w == -1) ++free_count;
    which.push_back(w);
  }
  if (free_count == static_cast<int>(args.size())) return std::nullopt;
  if (free_count != 0)
    throw Error(ErrorCode::UnsupportedTerm, "mixed fiber content: " + t.str(default_names(n + r)));
  std::set<int> distinct(which.begin(), which.end());
  if (distinct.size() != which.size())
    throw Error(ErrorCode::UnsupportedTerm, "repeated fiber coordinate: " + t.str(default_names(n + r)));
  return which;
}

}  // namespace

GeneralizedCycle pushforward_fiber(const GeneralizedCycle& c) {
  if (c.space != Space::Projectivization)
    throw Error(ErrorCode::Input, "pushforward needs a cycle on the projectivization");
  const int n = c.n, r = c.r;
  const int out_degree = c.degree - (r - 1);
  GeneralizedCycle out = GeneralizedCycle::base(n, std::max(out_degree, 0));
  auto fail = [&](const CycleTerm& t, const std::string& why) {
    throw Error(ErrorCode::UnsupportedTerm, why + ": " + t.str(c.names(default_names(n))));
  };
  for (const auto& t : c.terms) {
    if (t.fixed.kind == VarietyKind::FiberHypersurface) {
      if (!t.moving.empty()) fail(t, "moving factor on a fiber hypersurface");
      const Polynomial& eq = t.fixed.equations.front();
      std::vector<Polynomial> coeffs;
      for (int j = 0; j < r; ++j) {
        Polynomial cj(n + r);
        for (const auto& [m, v] : eq.terms()) {
          int deg = 0;
          for (int l = 0; l < r; ++l) deg += m[n + l];
          if (deg != 1) fail(t, "hypersurface is not linear in the fiber");
          if (m[n + j] == 1) cj.add_term(m / Monomial::variable(n + r, n + j), v);
        }
        if (!cj.is_zero()) coeffs.push_back(drop_fiber_vars(cj, n));
      }
      if (coeffs.size() < 2) fail(t, "degenerate fiber hypersurface");
      if (t.omega_power == r - 2) {
        CycleTerm b;
        b.coefficient = t.coefficient;
        b.fixed = VarietyRef::whole(n);
        out.add(b);
      } else if (t.omega_power == r - 1) {
        CycleTerm b;
        b.coefficient = t.coefficient;
        b.fixed = VarietyRef::whole(n);
        b.moving.push_back(MovingFactor{coeffs, 1});
        out.add(b);
      }
      continue;
    }
    std::vector<int> xs, js;
    if (t.fixed.kind == VarietyKind::CoordinateSubspace) {
      for (int i : t.fixed.zero_indices()) (i < n ? xs : js).push_back(i < n ? i : i - n);
    } else if (t.fixed.kind != VarietyKind::WholeSpace) {
      fail(t, "unsupported fixed support");
    }
    const int d = r - 1 - static_cast<int>(js.size());
    if (d < 0) fail(t, "empty fiber support");
    CycleTerm b;
    b.coefficient = t.coefficient;
    b.fixed = VarietyRef::coordinate(n, xs);
    if (t.moving.empty()) {
      if (t.omega_power == d) out.add(b);
      continue;
    }
    if (t.moving.size() > 1) fail(t, "product of moving factors");
    const MovingFactor& mv = t.moving.front();
    std::vector<int> zeroed = xs;
    for (int j : js) zeroed.push_back(n + j);
    std::vector<Polynomial> args;
    for (const auto& a : mv.args) {
      Polynomial ra = a.restrict_zero(zeroed);
      if (!ra.is_zero()) args.push_back(ra);
    }
    if (args.empty()) continue;
    auto pattern = fiber_pattern(args, n, r, t);
    if (!pattern) {
      if (t.omega_power == d) {
        std::vector<Polynomial> base_args;
        for (const auto& a : args) base_args.push_back(drop_fiber_vars(a, n));
        b.moving.push_back(MovingFactor{base_args, mv.power});
        out.add(b);
      }
      continue;
    }
    // The fiber form is a linear-projection pullback of Fubini-Study: its class has degree 1.
    if (mv.power >= static_cast<int>(args.size())) continue;
    int top = mv.power + t.omega_power;
    if (top < d) continue;
    if (top > d) fail(t, "fiber integral of a moving factor above the fiber dimension");
    out.add(b);
  }
  for (const auto& t : out.terms)
    if (t.bidegree() != out_degree) throw Error(ErrorCode::Input, "pushforward degree bookkeeping failed");
  return out;
}

std::vector<std::vector<Scalar>> sample_grid(int n) {
  static const long vals[] = {0, 1, -1, 2};
  std::vector<std::vector<Scalar>> out;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 4;
  for (long code = 0; code < total; ++code) {
    std::vector<Scalar> p(n);
    long c = code;
    for (int i = 0; i < n; ++i) {
      p[i] = Scalar(vals[c % 4]);
      c /= 4;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace segre
