#include <algorithm>
#include <cmath>
#include <random>

#include "segre/error.hpp"
#include "segre/numeric.hpp"

namespace segre {

namespace {

// Re-expresses p on the free coordinates of a coordinate subspace.
Polynomial to_free_vars(const Polynomial& p, const std::vector<int>& free) {
  Polynomial out(static_cast<int>(free.size()));
  for (const auto& [m, c] : p.terms()) {
    Monomial mm(static_cast<int>(free.size()));
    for (size_t i = 0; i < free.size(); ++i) mm[static_cast<int>(i)] = m[free[i]];
    out.add_term(mm, c);
  }
  return out;
}

Polynomial combo(const std::vector<Polynomial>& args, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  Polynomial s(args[0].nvars());
  for (const auto& a : args) {
    int re = d(rng), im = d(rng);
    if (re == 0 && im == 0) re = 1;
    s += a * Scalar(Rational(re), Rational(im));
  }
  return s;
}

}  // namespace

long crofton_moving_multiplicity(const std::vector<MovingFactor>& factors, const VarietyRef& fixed,
                                 const std::vector<Scalar>& point, const RegConfig& cfg) {
  if (factors.size() != 1)
    throw Error(ErrorCode::Undecided, "numeric multiplicity handles a single moving factor");
  if (fixed.kind != VarietyKind::WholeSpace && fixed.kind != VarietyKind::CoordinateSubspace)
    throw Error(ErrorCode::Undecided, "numeric multiplicity needs a coordinate subspace");
  const int n = static_cast<int>(point.size());
  std::vector<int> zero = fixed.kind == VarietyKind::WholeSpace ? std::vector<int>{} : fixed.zero_indices();
  std::vector<int> free;
  for (int i = 0; i < n; ++i)
    if (std::find(zero.begin(), zero.end(), i) == zero.end()) free.push_back(i);
  const int d = static_cast<int>(free.size());
  const int p = factors[0].power;
  std::vector<Polynomial> args;
  std::vector<Scalar> fp;
  for (int i : free) fp.push_back(point[i]);
  for (const auto& a : factors[0].args) {
    Polynomial q = to_free_vars(a.restrict_zero(zero), free);
    if (!q.is_zero()) args.push_back(q);
  }
  if (args.empty() || p >= d || p >= static_cast<int>(args.size())) return 0;
  for (const auto& a : args)
    if (!a.evaluate(fp).is_zero()) return 0;
  if (d != 2 || p != 1)
    throw Error(ErrorCode::Undecided, "numeric multiplicity covers p = 1 on surfaces only");

  std::vector<double> c{fp[0].re().get_d(), fp[1].re().get_d()};
  if (!fp[0].is_real() || !fp[1].is_real())
    throw Error(ErrorCode::Undecided, "numeric multiplicity needs a real point");
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  const double R0 = std::min(0.2, cfg.radius / 4);
  // the common zero set must be isolated near the point
  try {
    perturbation_root_count(combo(args, rng), combo(args, rng), R0, 3, rng(), c);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NumericalFailure)
      throw Error(ErrorCode::Undecided, "common zeros of the arguments are not isolated");
    throw;
  }
  std::vector<double> counts;
  for (int s = 0; s < 6; ++s) {
    Polynomial f = combo(args, rng);
    std::uniform_int_distribution<int> dd(1, 7);
    Polynomial line = Polynomial::variable(2, 0) * Scalar(dd(rng)) - Polynomial::variable(2, 1) * Scalar(dd(rng));
    // line through the point: a (x - c0) - b (y - c1)
    Polynomial shifted_line = line.shift({Scalar(Rational(-c[0])), Scalar(Rational(-c[1]))});
    for (double R : {R0, R0 / 2})
      counts.push_back(static_cast<double>(perturbation_root_count(f, shifted_line, R, 3, rng(), c)));
  }
  double mean = 0;
  for (double v : counts) mean += v;
  mean /= counts.size();
  long k = std::lround(mean);
  if (std::abs(mean - k) > 0.25) throw Error(ErrorCode::Undecided, "numeric multiplicity is not near an integer");
  return k;
}

MultiplicityOracle make_crofton_oracle(const RegConfig& cfg) {
  return [cfg](const std::vector<MovingFactor>& f, const VarietyRef& fixed, const std::vector<Scalar>& pt) {
    return crofton_moving_multiplicity(f, fixed, pt, cfg);
  };
}

}  // namespace segre
