#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "segre/cycle.hpp"
#include "segre/poly_matrix.hpp"

namespace segre {

enum class Extrapolation { None, Richardson };

struct RegConfig {
  std::vector<double> epsilon_schedule{1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
  long samples = 200000;
  std::uint64_t seed = 20240601;
  std::pair<double, double> chi_thresholds{0.5, 0.75};
  double radius = 1.0;
  Extrapolation extrapolation = Extrapolation::Richardson;
  int extrapolation_order = 1;
  int partitions = 16;
  double radial_power = 4.0;  // samples concentrate near the center as u^q
  bool use_window = false;    // multiply by chi(|z - center|^2 / radius^2) from the outside
  bool parallel = true;

  void validate() const;
};

struct MassEstimate {
  double value = 0;
  double stderr_ = 0;
  std::vector<std::pair<double, double>> per_epsilon;
  bool extrapolated = false;
  bool asymptotic_flag = false;  // consecutive per-epsilon values within 3 stderr
};

// Cubic smoothstep: 0 below t0, 1 above t1.
double chi(double t, double t0 = 0.5, double t1 = 0.75);

// Extrapolates the smallest-epsilon pair to epsilon -> 0.
double richardson(double eps_big, double v_big, double eps_small, double v_small, int order);

// --- QMC kernel -----------------------------------------------------------------
// Integrand: maps a point of [0,1)^dim to nvals weighted samples.
using Integrand = std::function<void(const double* u, double* out)>;

struct QmcResult {
  std::vector<std::vector<double>> partition_means;  // [partition][value]
};

// Randomly shifted Halton points, one shift per partition seeded by (seed, partition).
// Parallel and serial paths produce bit-identical sums.
QmcResult qmc_integrate(const Integrand& f, int dim, int nvals, long samples, int partitions,
                        std::uint64_t seed, bool parallel);

double halton(std::uint64_t index, int base);
double pairwise_sum(const double* v, std::size_t n, std::size_t stride = 1);

// --- epsilon-regularized masses ------------------------------------------------
MassEstimate epsilon_mass(const std::vector<Polynomial>& G, int k, const RegConfig& cfg,
                          const std::vector<double>& center = {});

// Sum of squared k x k minors of a complex m x N matrix (row-major).
double cauchy_binet_sigma(const std::vector<std::complex<double>>& J, int m, int N, int k);

// Mass of M^g_1 over the disk |x| < radius for a square matrix over C^1, via charts on P(E).
MassEstimate lifted_mass(const PolyMatrix& g, const RegConfig& cfg);

struct MassBalance {
  double numeric_mass = 0;
  double stderr_ = 0;
  long det_count = 0;
  bool pass = false;
};

MassBalance mass_balance_check(const PolyMatrix& g, const RegConfig& cfg);

// --- root counting --------------------------------------------------------------
long contour_root_count(const Polynomial& p, double radius);
// Winding number of f around 0 along |z - c| = radius by phase tracking.
long winding_number(const std::function<std::complex<double>(std::complex<double>)>& f,
                    std::complex<double> c, double radius);

long perturbation_root_count(const Polynomial& f1, const Polynomial& f2, double radius, int trials,
                             std::uint64_t seed, const std::vector<double>& center = {0.0, 0.0});

// Numeric Lelong number of moving factors at a point; integer-certified.
long crofton_moving_multiplicity(const std::vector<MovingFactor>& factors, const VarietyRef& fixed,
                                 const std::vector<Scalar>& point, const RegConfig& cfg);

MultiplicityOracle make_crofton_oracle(const RegConfig& cfg);

}  // namespace segre
