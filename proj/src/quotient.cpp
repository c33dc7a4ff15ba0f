#include <algorithm>
#include <cmath>

#include "segre/engine.hpp"
#include "segre/error.hpp"
#include "segre/numeric.hpp"

namespace segre {

namespace {

// Zeros are certified complete inside this polydisk around the origin.
constexpr double kSearchRadius = 2.5;

bool is_zero_at(const Polynomial& p, const std::vector<Scalar>& z) { return p.evaluate(z).is_zero(); }

std::vector<double> real_center(const std::vector<Scalar>& z) {
  if (!z[0].is_real() || !z[1].is_real())
    throw Error(ErrorCode::UnsupportedInput, "complex candidate zeros are not supported");
  return {z[0].re().get_d(), z[1].re().get_d()};
}

}  // namespace

MaResult compute_Ma(const PolyMatrix& g, const MaOptions& opt) {
  if (g.rows() != 1 || g.cols() != 2 || g.nvars() != 2)
    throw Error(ErrorCode::UnsupportedInput, "M^a is implemented for a 1 x 2 row over C^2");
  Polynomial g1 = g.at(0, 0), g2 = g.at(0, 1);
  if (g1.is_zero() && g2.is_zero()) throw Error(ErrorCode::Input, "both entries vanish identically");

  MaResult res;
  Monomial h = Monomial::gcd(g1.is_zero() ? g2.monomial_content() : g1.monomial_content(),
                             g2.is_zero() ? g1.monomial_content() : g2.monomial_content());
  res.common_factor = h;
  Polynomial r1 = g1.is_zero() ? g1 : g1.divide(h), r2 = g2.is_zero() ? g2 : g2.divide(h);
  if (!certified_gcd_free({r1, r2}))
    throw Error(ErrorCode::UnsupportedInput, "reduced entries are not certified coprime; zeros may not be isolated");

  for (int y = 0; y < 2; ++y)
    if (h[y] > 0 && !certified_coprime(r1.restrict_zero({y}), r2.restrict_zero({y})))
      throw Error(ErrorCode::UnsupportedInput, "reduced entries share a zero on the common divisor");

  res.Ma.push_back(GeneralizedCycle::base(2, 0));
  res.Ma.push_back(monomial_divisor_cycle(h));
  GeneralizedCycle m2 = GeneralizedCycle::base(2, 2);

  // candidate points: grid plus caller-supplied ones, kept only if both entries vanish exactly
  std::vector<std::vector<Scalar>> cand = sample_grid(2);
  for (const auto& c : opt.candidate_zeros) {
    if (c.size() != 2) throw Error(ErrorCode::Input, "candidate zero must have two coordinates");
    cand.push_back(c);
  }
  std::vector<std::vector<Scalar>> zeros;
  for (const auto& z : cand)
    if (is_zero_at(r1, z) && is_zero_at(r2, z) &&
        std::find(zeros.begin(), zeros.end(), z) == zeros.end())
      zeros.push_back(z);

  const bool monomial_pair = r1.is_monomial() && r2.is_monomial();
  long found_inside = 0;
  for (const auto& z : zeros) {
    std::vector<double> c = real_center(z);
    long cz = perturbation_root_count(r1, r2, opt.radius, opt.trials, opt.seed, c);
    long cz_small = perturbation_root_count(r1, r2, opt.radius / 4, opt.trials, opt.seed + 1, c);
    if (cz != cz_small)
      throw Error(ErrorCode::UnsupportedInput, "local intersection number is not stable under shrinking");
    if (monomial_pair) {
      // coprime monomials with a common zero are x1^a and x2^b up to scalars
      long exact = 1;
      for (const auto* p : {&r1, &r2}) exact *= p->lead_monomial().degree();
      if (exact != cz)
        throw Error(ErrorCode::NumericalFailure, "perturbation count disagrees with the monomial count");
    }
    res.zeros.push_back({z, cz});
    CycleTerm t;
    t.coefficient = -cz;
    t.fixed = VarietyRef::at_point(z);
    m2.add(t);
    if (std::abs(c[0]) < kSearchRadius && std::abs(c[1]) < kSearchRadius) found_inside += cz;
  }
  long total = perturbation_root_count(r1, r2, kSearchRadius, opt.trials, opt.seed + 2, {0.0, 0.0});
  if (total != found_inside)
    throw Error(ErrorCode::UnsupportedInput,
                "common zeros exist off the candidate grid; supply them as candidate zeros");

  if (!h.is_one() && !(r1.is_constant() && r2.is_constant())) {
    MovingFactor f;
    for (const auto* p : {&r1, &r2})
      if (!p->is_zero()) f.args.push_back(*p);
    f.normalize();
    for (int y = 0; y < 2; ++y)
      if (h[y] > 0) {
        CycleTerm t;
        t.coefficient = -h[y];
        t.fixed = VarietyRef::coordinate(2, {y});
        t.moving.push_back(f);
        m2.add(t);
      }
  }
  m2.canonicalize();
  res.Ma.push_back(m2);
  return res;
}

}  // namespace segre
