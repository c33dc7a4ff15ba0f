#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "segre/error.hpp"
#include "segre/numeric.hpp"

using namespace segre;

namespace {

const std::vector<std::string> X1{"x"};
const std::vector<std::string> X2{"x1", "x2"};

Polynomial P(const std::string& s, const std::vector<std::string>& names = X2) { return parse_polynomial(s, names); }

RegConfig quick(long samples = 40000) {
  RegConfig c;
  c.samples = samples;
  return c;
}

}  // namespace

TEST_CASE("halton sequence") {
  CHECK(halton(1, 2) == doctest::Approx(0.5));
  CHECK(halton(2, 2) == doctest::Approx(0.25));
  CHECK(halton(3, 2) == doctest::Approx(0.75));
  CHECK(halton(1, 3) == doctest::Approx(1.0 / 3));
  CHECK(halton(5, 3) == doctest::Approx(7.0 / 9));
}

TEST_CASE("pairwise sum matches a long double accumulation") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> v(10001);
  long double ref = 0;
  for (auto& x : v) {
    x = u(rng);
    ref += x;
  }
  CHECK(std::abs(pairwise_sum(v.data(), v.size()) - static_cast<double>(ref)) < 1e-12);
  CHECK(pairwise_sum(v.data(), 0) == 0.0);
}

TEST_CASE("qmc: serial and parallel paths are bit-identical") {
  Integrand f = [](const double* u, double* out) {
    out[0] = std::sin(6 * u[0]) * u[1] + u[2] * u[2];
    out[1] = std::exp(-u[0] - u[1]);
  };
  auto a = qmc_integrate(f, 3, 2, 30000, 8, 99, false);
  auto b = qmc_integrate(f, 3, 2, 30000, 8, 99, true);
  REQUIRE(a.partition_means.size() == 8);
  for (size_t p = 0; p < 8; ++p)
    for (int v = 0; v < 2; ++v) CHECK(a.partition_means[p][v] == b.partition_means[p][v]);
  // seeds matter, and the mean is right
  auto c = qmc_integrate(f, 3, 2, 30000, 8, 100, true);
  CHECK(c.partition_means[0][0] != a.partition_means[0][0]);
  double mean = 0;
  for (const auto& pm : a.partition_means) mean += pm[1] / 8;
  CHECK(mean == doctest::Approx((1 - std::exp(-1.0)) * (1 - std::exp(-1.0))).epsilon(1e-3));
}

TEST_CASE("Cauchy-Binet sum against det(J J*)") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int t = 0; t < 100; ++t) {
    const int m = 2 + t % 3, N = m + 1 + t % 2, k = 1 + t % m;
    std::vector<std::complex<double>> J(m * N);
    for (auto& z : J) z = {g(rng), g(rng)};
    // oracle: sum of |k-minors|^2 equals the k-th elementary symmetric function of the eigenvalues of J J*
    Eigen::MatrixXcd A(m, N);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < N; ++j) A(i, j) = J[i * N + j];
    Eigen::MatrixXcd G = A * A.adjoint();
    Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(G).eigenvalues();
    std::vector<double> e(m + 1, 0.0);
    e[0] = 1;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j >= 1; --j) e[j] += e[j - 1] * ev[i];
    double got = cauchy_binet_sigma(J, m, N, k);
    CHECK(std::abs(got - e[k]) <= 1e-10 * std::abs(e[k]));
    if (k == m) CHECK(std::abs(got - G.determinant().real()) <= 1e-10 * std::abs(got));
  }
}

TEST_CASE("cutoff and extrapolation helpers") {
  CHECK(chi(0.2) == 0.0);
  CHECK(chi(0.9) == 1.0);
  CHECK(chi(0.625) == doctest::Approx(0.5));
  for (double t = 0.5; t < 0.75; t += 0.01) CHECK(chi(t) <= chi(t + 0.01));
  // v(eps) = 3 + 2 eps is exactly linear, so order 1 recovers 3
  CHECK(richardson(0.1, 3.2, 0.01, 3.02, 1) == doctest::Approx(3.0));
  // v(eps) = 1 + eps^2 with order 2
  CHECK(richardson(0.2, 1.04, 0.1, 1.01, 2) == doctest::Approx(1.0));
}

TEST_CASE("configuration validation") {
  RegConfig c;
  CHECK_NOTHROW(c.validate());
  auto bad = [](auto mutate) {
    RegConfig r;
    mutate(r);
    try {
      r.validate();
      return false;
    } catch (const Error& e) {
      return e.code() == ErrorCode::Input;
    }
  };
  CHECK(bad([](RegConfig& r) { r.epsilon_schedule = {}; }));
  CHECK(bad([](RegConfig& r) { r.epsilon_schedule = {0.1, 0.2}; }));
  CHECK(bad([](RegConfig& r) { r.epsilon_schedule = {0.1, -0.01}; }));
  CHECK(bad([](RegConfig& r) { r.samples = 0; }));
  CHECK(bad([](RegConfig& r) { r.radius = 0; }));
  CHECK(bad([](RegConfig& r) { r.chi_thresholds = {0.8, 0.5}; }));
}

TEST_CASE("epsilon mass of x^3 converges to 3") {
  RegConfig c = quick(100000);
  auto m = epsilon_mass({P("x^3", X1)}, 1, c);
  CHECK(m.value == doctest::Approx(3.0).epsilon(0.02));
  CHECK(m.extrapolated);
  CHECK(m.per_epsilon.size() == c.epsilon_schedule.size());
  auto again = epsilon_mass({P("x^3", X1)}, 1, c);
  CHECK(again.value == m.value);
  CHECK(again.stderr_ == m.stderr_);
}

TEST_CASE("epsilon masses of ideals in two variables") {
  RegConfig c = quick();
  CHECK(epsilon_mass({P("x1"), P("x2")}, 2, c).value == doctest::Approx(1.0).epsilon(0.03));
  CHECK(epsilon_mass({P("x1^2"), P("x2")}, 2, c).value == doctest::Approx(2.0).epsilon(0.03));
  CHECK(std::abs(epsilon_mass({P("x1"), P("x1")}, 2, c).value) < 0.05);
  // a zero away from the center but inside the ball
  CHECK(epsilon_mass({P("x-1/4", X1)}, 1, c).value == doctest::Approx(1.0).epsilon(0.03));
  // no zero inside the ball
  CHECK(std::abs(epsilon_mass({P("x-3", X1)}, 1, c).value) < 0.03);
  // center shift
  CHECK(epsilon_mass({P("(x-2)^2", X1)}, 1, c, {2.0}).value == doctest::Approx(2.0).epsilon(0.03));
}

TEST_CASE("epsilon mass rejects bad input") {
  RegConfig c = quick(1000);
  CHECK_THROWS_AS(epsilon_mass({}, 1, c), Error);
  CHECK_THROWS_AS(epsilon_mass({P("x", X1)}, 2, c), Error);
}

TEST_CASE("root counts inside a disk") {
  CHECK(contour_root_count(P("x^3", X1), 1.0) == 3);
  CHECK(contour_root_count(P("(x-1/2)*(x+2)", X1), 1.0) == 1);
  CHECK(contour_root_count(P("x^2+1", X1), 0.5) == 0);
  CHECK_THROWS_AS(contour_root_count(P("x-1", X1), 1.0), Error);
  auto f = [](std::complex<double> z) { return z * z * (z - 3.0); };
  CHECK(winding_number(f, 0.0, 1.0) == 2);
  CHECK(winding_number(f, 3.0, 1.0) == 1);
  CHECK(winding_number(f, 0.0, 4.0) == 3);
}

TEST_CASE("perturbation root counts") {
  CHECK(perturbation_root_count(P("x1"), P("x2"), 0.5, 5, 1) == 1);
  CHECK(perturbation_root_count(P("x1^2"), P("x2"), 0.5, 5, 1) == 2);
  CHECK(perturbation_root_count(P("x1^2-x2^3"), P("x1*x2"), 0.5, 5, 1) == 5);
  CHECK(perturbation_root_count(P("x1-1"), P("x2"), 0.5, 5, 1) == 0);
  CHECK(perturbation_root_count(P("x1-1"), P("x2"), 0.5, 5, 1, {1.0, 0.0}) == 1);
  CHECK(perturbation_root_count(P("x1^2"), P("x2"), 0.5, 5, 1) == perturbation_root_count(P("x1^2"), P("x2"), 0.5, 5, 9));
}

TEST_CASE("crofton multiplicities of moving factors") {
  RegConfig c = quick(20000);
  auto X = VarietyRef::whole(2);
  std::vector<Scalar> o{Scalar(0), Scalar(0)};
  CHECK(crofton_moving_multiplicity({MovingFactor{{P("x1"), P("x2")}, 1}}, X, o, c) == 1);
  CHECK(crofton_moving_multiplicity({MovingFactor{{P("x1^2+x2^3"), P("x1*x2^2")}, 1}}, X, o, c) == 2);
  CHECK(crofton_moving_multiplicity({MovingFactor{{P("x1"), P("x2")}, 1}}, X, {Scalar(1), Scalar(0)}, c) == 0);
  auto oracle = make_crofton_oracle(c);
  CHECK(oracle({MovingFactor{{P("x1^2"), P("x2^3")}, 1}}, X, o) == 2);
}

TEST_CASE("mass balance for square matrices over one variable") {
  RegConfig c = quick();
  auto b = mass_balance_check(parse_matrix({{"x^2", "0"}, {"0", "x"}}, X1), c);
  CHECK(b.det_count == 3);
  CHECK(b.numeric_mass == doctest::Approx(3.0).epsilon(0.1 / 3));
  CHECK(b.pass);
  auto z = mass_balance_check(parse_matrix({{"x+2", "0"}, {"0", "x+3"}}, X1), c);
  CHECK(z.det_count == 0);
  CHECK(std::abs(z.numeric_mass) < 0.1);
  CHECK(z.pass);
  CHECK_THROWS_AS(mass_balance_check(parse_matrix({{"x1", "x2"}}, X2), c), Error);
}

TEST_CASE("lifted mass of a non-diagonal matrix") {
  RegConfig c = quick();
  auto m = lifted_mass(parse_matrix({{"x", "1"}, {"0", "x"}}, X1), c);
  CHECK(m.value == doctest::Approx(2.0).epsilon(0.05));
}
