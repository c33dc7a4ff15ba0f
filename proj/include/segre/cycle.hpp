#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "segre/polynomial.hpp"

namespace segre {

enum class VarietyKind { CoordinateSubspace, MonomialDivisor, Point, WholeSpace, FiberHypersurface };
const char* variety_kind_name(VarietyKind k);

// Ambient variables: base cycles use x_1..x_n; cycles on P(E) use x_1..x_n, a_1..a_r.
struct VarietyRef {
  VarietyKind kind = VarietyKind::WholeSpace;
  std::vector<Polynomial> equations;
  std::vector<Scalar> point;  // POINT only
  int nvars = 0;

  static VarietyRef whole(int nvars);
  // {y_i = 0 : i in idx}; empty idx gives the whole space
  static VarietyRef coordinate(int nvars, std::vector<int> idx);
  static VarietyRef at_point(std::vector<Scalar> p);
  static VarietyRef monomial_divisor(const Monomial& m);
  static VarietyRef hypersurface(const Polynomial& eq);

  int codim() const;
  // indices of the zeroed coordinates (COORDINATE_SUBSPACE)
  std::vector<int> zero_indices() const;
  bool contains(const std::vector<Scalar>& p) const;
  std::string str(const std::vector<std::string>& names) const;
};

bool operator==(const VarietyRef& a, const VarietyRef& b);
bool operator<(const VarietyRef& a, const VarietyRef& b);

struct MovingFactor {
  std::vector<Polynomial> args;
  int power = 1;

  void normalize();  // sorts args; the potential is symmetric in them
  std::string str(const std::vector<std::string>& names) const;
};

bool operator==(const MovingFactor& a, const MovingFactor& b);
bool operator<(const MovingFactor& a, const MovingFactor& b);

enum class Provenance { Exact, Oracle };
const char* provenance_name(Provenance p);

struct CycleTerm {
  Rational coefficient{1};
  VarietyRef fixed;
  int omega_power = 0;
  std::vector<MovingFactor> moving;

  int bidegree() const;
  bool is_pure_fixed() const { return omega_power == 0 && moving.empty(); }
  bool same_shape(const CycleTerm& o) const;
  std::string str(const std::vector<std::string>& names) const;
};

enum class Space { Base, Projectivization };

struct GeneralizedCycle {
  Space space = Space::Base;
  int n = 0;  // base dimension
  int r = 0;  // fiber rank (projectivization only)
  int degree = 0;
  std::vector<CycleTerm> terms;

  GeneralizedCycle() = default;
  GeneralizedCycle(Space s, int n_, int r_, int k) : space(s), n(n_), r(r_), degree(k) {}
  static GeneralizedCycle base(int n, int k) { return {Space::Base, n, 0, k}; }
  static GeneralizedCycle proj(int n, int r, int k) { return {Space::Projectivization, n, r, k}; }

  int nvars() const { return space == Space::Base ? n : n + r; }
  int dimension() const { return space == Space::Base ? n : n + r - 1; }
  bool is_zero() const { return terms.empty(); }

  // Checks the bidegree and merges like terms into canonical order.
  void add(CycleTerm t);
  void canonicalize();
  GeneralizedCycle& operator+=(const GeneralizedCycle& o);
  GeneralizedCycle scaled(const Rational& c) const;

  std::vector<std::string> names(const std::vector<std::string>& base_names) const;
  std::string str(const std::vector<std::string>& base_names) const;
};

bool operator==(const GeneralizedCycle& a, const GeneralizedCycle& b);

GeneralizedCycle canonicalize(GeneralizedCycle c);
GeneralizedCycle wedge_omega(const GeneralizedCycle& c, int j);
GeneralizedCycle wedge(const GeneralizedCycle& c, const MovingFactor& f);

std::pair<GeneralizedCycle, GeneralizedCycle> fixed_moving_split(const GeneralizedCycle& c);

// Fiber integration P(E) -> X under the trivial-metric normalization.
GeneralizedCycle pushforward_fiber(const GeneralizedCycle& c);

// Numeric fallback for moving terms: (factors, fixed support, point) -> Lelong number.
using MultiplicityOracle = std::function<long(const std::vector<MovingFactor>&, const VarietyRef&,
                                              const std::vector<Scalar>&)>;

struct Multiplicity {
  long value = 0;
  Provenance provenance = Provenance::Exact;
};

Multiplicity term_multiplicity(const CycleTerm& t, const std::vector<Scalar>& point,
                               const MultiplicityOracle& oracle = nullptr);
Multiplicity multiplicity_at(const GeneralizedCycle& c, const std::vector<Scalar>& point,
                             const MultiplicityOracle& oracle = nullptr);

// Certified coprimality of two polynomials via resultants at random rational points.
bool certified_coprime(const Polynomial& a, const Polynomial& b, unsigned long long seed = 7);
// Coprimality of a whole tuple: some pair is certified coprime, or one entry is a unit.
bool certified_gcd_free(const std::vector<Polynomial>& f);

// Deterministic sample grid {0,1,-1,2}^n.
std::vector<std::vector<Scalar>> sample_grid(int n);

}  // namespace segre
