#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "segre/cycle.hpp"
#include "segre/error.hpp"

using namespace segre;

namespace {

const std::vector<std::string> X2{"x1", "x2"};

Polynomial P(const std::string& s, const std::vector<std::string>& names = X2) { return parse_polynomial(s, names); }

std::vector<Scalar> pt(long a, long b) { return {Scalar(a), Scalar(b)}; }

CycleTerm term(Rational c, VarietyRef v, int omega = 0, std::vector<MovingFactor> mv = {}) {
  CycleTerm t;
  t.coefficient = c;
  t.fixed = std::move(v);
  t.omega_power = omega;
  t.moving = std::move(mv);
  return t;
}

// Random base cycle of degree 1 on C^3 built from a small pool of shapes.
std::vector<CycleTerm> random_terms(std::mt19937_64& rng, int count) {
  const int n = 3;
  std::uniform_int_distribution<int> pick(0, 4), c(-3, 3), var(0, n - 1);
  std::vector<CycleTerm> out;
  for (int i = 0; i < count; ++i) {
    int v = var(rng);
    switch (pick(rng)) {
      case 0: out.push_back(term(c(rng), VarietyRef::coordinate(n, {v}))); break;
      case 1: out.push_back(term(c(rng), VarietyRef::whole(n), 1)); break;
      case 2: {
        MovingFactor f{{Polynomial::variable(n, v), Polynomial::variable(n, (v + 1) % n)}, 1};
        out.push_back(term(c(rng), VarietyRef::whole(n), 0, {f}));
        break;
      }
      case 3: {
        // argument order is irrelevant to the factor
        MovingFactor f{{Polynomial::variable(n, (v + 1) % n), Polynomial::variable(n, v)}, 1};
        out.push_back(term(c(rng), VarietyRef::whole(n), 0, {f}));
        break;
      }
      default: {
        Monomial m(n);
        m[v] = 2;
        out.push_back(term(c(rng), VarietyRef::monomial_divisor(m)));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("variety basics") {
  auto v = VarietyRef::coordinate(3, {2, 0, 2});
  CHECK(v.codim() == 2);
  CHECK(v.zero_indices() == std::vector<int>{0, 2});
  CHECK(v.str({"x", "y", "z"}) == "[x=z=0]");
  CHECK(v.contains({Scalar(0), Scalar(5), Scalar(0)}));
  CHECK_FALSE(v.contains({Scalar(1), Scalar(0), Scalar(0)}));
  CHECK(VarietyRef::coordinate(3, {}) == VarietyRef::whole(3));
  CHECK(VarietyRef::at_point(pt(1, 0)).str(X2) == "[(1,0)]");
  CHECK(VarietyRef::at_point(pt(1, 0)).codim() == 2);
  CHECK_THROWS_AS(VarietyRef::monomial_divisor(Monomial(2)), Error);
}

TEST_CASE("adding terms checks the bidegree") {
  auto c = GeneralizedCycle::base(2, 1);
  CHECK_THROWS_AS(c.add(term(1, VarietyRef::coordinate(2, {0, 1}))), Error);
  CHECK_THROWS_AS(c.add(term(1, VarietyRef::coordinate(3, {0}))), Error);
  c.add(term(0, VarietyRef::coordinate(2, {0})));
  CHECK(c.is_zero());
  CHECK(c.str(X2) == "0");
}

TEST_CASE("like terms merge and cancel") {
  auto c = GeneralizedCycle::base(2, 1);
  c.add(term(2, VarietyRef::coordinate(2, {0})));
  c.add(term(Rational(1, 2), VarietyRef::coordinate(2, {1})));
  c.add(term(-2, VarietyRef::coordinate(2, {0})));
  REQUIRE(c.terms.size() == 1);
  CHECK(c.str(X2) == "1/2 [x2=0]");
  auto d = c.scaled(-4);
  CHECK(d.str(X2) == "-2 [x2=0]");
  d += c.scaled(4);
  CHECK(d.is_zero());
}

TEST_CASE("property: canonical form does not depend on term order") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    auto ts = random_terms(rng, 1 + trial % 8);
    auto a = GeneralizedCycle::base(3, 1), b = GeneralizedCycle::base(3, 1), c = GeneralizedCycle::base(3, 1);
    for (const auto& t : ts) a.add(t);
    std::shuffle(ts.begin(), ts.end(), rng);
    for (const auto& t : ts) b.add(t);
    // bulk insertion then one canonicalize
    c.terms = ts;
    c.canonicalize();
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.str({"x1", "x2", "x3"}) == c.str({"x1", "x2", "x3"}));
    CHECK(canonicalize(a) == a);
  }
}

TEST_CASE("property: fixed and moving parts add back to the cycle") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = GeneralizedCycle::base(3, 1);
    for (const auto& t : random_terms(rng, 6)) c.add(t);
    auto [f, m] = fixed_moving_split(c);
    for (const auto& t : f.terms) CHECK(t.is_pure_fixed());
    for (const auto& t : m.terms) CHECK_FALSE(t.is_pure_fixed());
    auto sum = f;
    sum += m;
    CHECK(sum == c);
    // linearity of the split
    auto [f2, m2] = fixed_moving_split(c.scaled(3));
    CHECK(f2 == f.scaled(3));
    CHECK(m2 == m.scaled(3));
  }
}

TEST_CASE("wedge with omega and with a moving factor") {
  auto c = GeneralizedCycle::base(2, 1);
  c.add(term(1, VarietyRef::coordinate(2, {0})));
  auto w = wedge_omega(c, 1);
  CHECK(w.degree == 2);
  CHECK(w.str(X2) == "1 [x1=0] ^ omega^1");
  CHECK_THROWS_AS(wedge_omega(w, 1), Error);
  auto x = GeneralizedCycle::base(2, 0);
  x.add(term(1, VarietyRef::whole(2)));
  auto mv = wedge(x, MovingFactor{{P("x2"), P("x1")}, 1});
  CHECK(mv.str(X2) == "1 X ^ <ddc log(|x1|^2+|x2|^2)>");
  CHECK_THROWS_AS(wedge(x, MovingFactor{{}, 1}), Error);
}

TEST_CASE("pushforward along the fiber") {
  const std::vector<std::string> names{"x1", "x2", "a1", "a2"};
  // hyperplane x1*a1 + x2*a2 = 0 in P(E) with r = 2
  auto h = GeneralizedCycle::proj(2, 2, 1);
  h.add(term(1, VarietyRef::hypersurface(P("x1*a1+x2*a2", names))));
  auto b = pushforward_fiber(h);
  CHECK(b.degree == 0);
  CHECK(b.str(X2) == "1 X");
  auto hw = wedge_omega(h, 1);
  CHECK(pushforward_fiber(hw).str(X2) == "1 X ^ <ddc log(|x1|^2+|x2|^2)>");
  // omega^(r-1) over a base subspace integrates to that subspace
  auto f = GeneralizedCycle::proj(2, 2, 2);
  f.add(term(3, VarietyRef::coordinate(4, {1}), 1));
  CHECK(pushforward_fiber(f).str(X2) == "3 [x2=0]");
  // wrong fiber degree integrates to zero
  auto z = GeneralizedCycle::proj(2, 2, 1);
  z.add(term(1, VarietyRef::coordinate(4, {0})));
  CHECK(pushforward_fiber(z).is_zero());
  // a fiber coordinate hyperplane is a section of the fiber
  auto s = GeneralizedCycle::proj(2, 2, 1);
  s.add(term(1, VarietyRef::coordinate(4, {2})));
  CHECK(pushforward_fiber(s).str(X2) == "1 X");
  CHECK_THROWS_AS(pushforward_fiber(GeneralizedCycle::base(2, 1)), Error);
}

TEST_CASE("pushforward rejects non-linear fiber equations") {
  const std::vector<std::string> names{"x1", "x2", "a1", "a2"};
  auto h = GeneralizedCycle::proj(2, 2, 1);
  h.add(term(1, VarietyRef::hypersurface(P("x1*a1^2+x2*a2^2", names))));
  try {
    pushforward_fiber(h);
    FAIL("expected UNSUPPORTED_TERM");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedTerm);
  }
}

TEST_CASE("multiplicity of fixed terms") {
  auto c = GeneralizedCycle::base(2, 1);
  Monomial m({2, 1});
  c.add(term(1, VarietyRef::monomial_divisor(m)));
  c.add(term(2, VarietyRef::coordinate(2, {1})));
  CHECK(multiplicity_at(c, pt(0, 0)).value == 5);
  CHECK(multiplicity_at(c, pt(0, 3)).value == 2);
  CHECK(multiplicity_at(c, pt(3, 0)).value == 3);
  CHECK(multiplicity_at(c, pt(1, 1)).value == 0);
  CHECK(multiplicity_at(c, pt(0, 0)).provenance == Provenance::Exact);
  auto p = GeneralizedCycle::base(2, 2);
  p.add(term(4, VarietyRef::at_point(pt(1, 0))));
  CHECK(multiplicity_at(p, pt(1, 0)).value == 4);
  CHECK(multiplicity_at(p, pt(0, 0)).value == 0);
  CHECK_THROWS_AS(multiplicity_at(p, {Scalar(0)}), Error);
}

TEST_CASE("smooth factors carry no Lelong number") {
  auto c = GeneralizedCycle::base(2, 2);
  c.add(term(7, VarietyRef::coordinate(2, {0}), 1));
  CHECK(multiplicity_at(c, pt(0, 0)).value == 0);
}

TEST_CASE("non-integer coefficients are rejected") {
  auto c = GeneralizedCycle::base(2, 1);
  c.add(term(Rational(1, 2), VarietyRef::coordinate(2, {0})));
  CHECK_THROWS_AS(multiplicity_at(c, pt(0, 0)), Error);
}

TEST_CASE("property: Lelong numbers of monomial moving factors") {
  // The moving factor lives off the common zero set, so a power at least the number of
  // generators leaves nothing. Below that, for monomials in separate variables, the first power
  // gives the least degree and the second power the product of the two least degrees.
  const std::vector<std::string> X3{"x1", "x2", "x3"};
  std::vector<Scalar> o3{Scalar(0), Scalar(0), Scalar(0)};
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        std::vector<Polynomial> f{Polynomial::monomial(Monomial({a, 0, 0})), Polynomial::monomial(Monomial({0, b, 0})),
                                  Polynomial::monomial(Monomial({0, 0, c}))};
        std::vector<int> d{a, b, c};
        std::sort(d.begin(), d.end());
        for (int p = 1; p <= 3; ++p) {
          auto cyc = GeneralizedCycle::base(3, p);
          cyc.add(term(1, VarietyRef::whole(3), 0, {MovingFactor{f, p}}));
          long want = p == 1 ? d[0] : p == 2 ? d[0] * d[1] : 0;
          CHECK(multiplicity_at(cyc, o3).value == want);
          CHECK(multiplicity_at(cyc, {Scalar(0), Scalar(0), Scalar(1)}).value == 0);
        }
        auto two = GeneralizedCycle::base(3, 2);
        two.add(term(1, VarietyRef::whole(3), 0, {MovingFactor{{f[0], f[1]}, 2}}));
        CHECK(multiplicity_at(two, o3).value == 0);
      }
}

TEST_CASE("moving factor restricted to a subspace") {
  // [x1=0] ^ <ddc log(|x1|^2+|x2|^3)>: on x1=0 only x2^3 is left, a unit-free single generator
  auto c = GeneralizedCycle::base(2, 2);
  c.add(term(1, VarietyRef::coordinate(2, {0}), 0, {MovingFactor{{P("x1"), P("x2^3")}, 1}}));
  CHECK(multiplicity_at(c, pt(0, 0)).value == 0);
  auto d = GeneralizedCycle::base(3, 2);
  d.add(term(1, VarietyRef::coordinate(3, {0}), 0,
             {MovingFactor{{P("x1", {"x1", "x2", "x3"}), P("x2^2", {"x1", "x2", "x3"}), P("x3^3", {"x1", "x2", "x3"})}, 1}}));
  CHECK(multiplicity_at(d, {Scalar(0), Scalar(0), Scalar(0)}).value == 2);
  CHECK(multiplicity_at(d, {Scalar(0), Scalar(0), Scalar(1)}).value == 0);
}

TEST_CASE("non-monomial moving factors use orders when the arguments are coprime") {
  auto c = GeneralizedCycle::base(2, 1);
  c.add(term(1, VarietyRef::whole(2), 0, {MovingFactor{{P("x1^2-x2^3"), P("x1*x2")}, 1}}));
  CHECK(multiplicity_at(c, pt(0, 0)).value == 2);
  const std::vector<std::string> X3{"x1", "x2", "x3"};
  std::vector<Scalar> o3{Scalar(0), Scalar(0), Scalar(0)};
  auto d = GeneralizedCycle::base(3, 2);
  d.add(term(1, VarietyRef::whole(3), 0, {MovingFactor{{P("x1^2-x2^3", X3), P("x1*x2", X3), P("x3", X3)}, 2}}));
  try {
    multiplicity_at(d, o3);
    FAIL("expected UNDECIDED without an oracle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Undecided);
  }
  MultiplicityOracle five = [](const std::vector<MovingFactor>&, const VarietyRef&, const std::vector<Scalar>&) {
    return 5L;
  };
  auto m = multiplicity_at(d, o3, five);
  CHECK(m.value == 5);
  CHECK(m.provenance == Provenance::Oracle);
}

TEST_CASE("certified coprimality") {
  CHECK(certified_coprime(P("x1"), P("x2")));
  CHECK(certified_coprime(P("x1^2-x2^3"), P("x1*x2")));
  CHECK_FALSE(certified_coprime(P("x1*x2"), P("x1*(x1-1)")));
  CHECK_FALSE(certified_coprime(P("(x1+x2)^2"), P("x1^2-x2^2")));
  CHECK(certified_gcd_free({P("x1*x2"), P("x1*(x1-1)"), P("x2+1")}));
  CHECK_FALSE(certified_gcd_free({P("x1*x2"), P("x1^2")}));
}

TEST_CASE("sample grid") {
  auto g = sample_grid(2);
  CHECK(g.size() == 16);
  CHECK(std::find(g.begin(), g.end(), pt(-1, 2)) != g.end());
}
