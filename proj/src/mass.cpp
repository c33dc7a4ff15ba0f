#include <Eigen/Dense>
#include <cmath>
#include <numeric>

#include "segre/error.hpp"
#include "segre/numeric.hpp"

namespace segre {

namespace {

constexpr double kPi = 3.14159265358979323846;

double factorial(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

std::string point_str(const std::vector<cplx>& z) {
  std::string s = "(";
  for (size_t i = 0; i < z.size(); ++i)
    s += (i ? ", " : "") + std::to_string(z[i].real()) + (z[i].imag() < 0 ? "" : "+") +
         std::to_string(z[i].imag()) + "i";
  return s + ")";
}

// Polar map of (u, v) in [0,1)^2 onto the disk of radius R with radial power q; returns the Jacobian.
double polar(double u, double v, double R, double q, cplx c, cplx& z) {
  double rad = R * std::pow(u, q);
  z = c + std::polar(rad, 2 * kPi * v);
  return 2 * kPi * q * R * R * std::pow(u, 2 * q - 1);
}

cplx det_of(const Eigen::MatrixXcd& M) { return M.rows() == 0 ? cplx(1) : M.partialPivLu().determinant(); }

// Combines per-partition values into an estimate.
MassEstimate summarize(const QmcResult& q, const RegConfig& cfg) {
  const auto& eps = cfg.epsilon_schedule;
  const size_t E = eps.size(), P = q.partition_means.size();
  MassEstimate est;
  std::vector<double> per_eps_sd(E);
  for (size_t e = 0; e < E; ++e) {
    double mean = 0, sq = 0;
    for (const auto& pm : q.partition_means) mean += pm[e];
    mean /= P;
    for (const auto& pm : q.partition_means) sq += (pm[e] - mean) * (pm[e] - mean);
    per_eps_sd[e] = std::sqrt(sq / (P - 1) / P);
    est.per_epsilon.push_back({eps[e], mean});
  }
  std::vector<double> final_vals;
  for (const auto& pm : q.partition_means) {
    if (cfg.extrapolation == Extrapolation::Richardson && E >= 2)
      final_vals.push_back(richardson(eps[E - 2], pm[E - 2], eps[E - 1], pm[E - 1], cfg.extrapolation_order));
    else
      final_vals.push_back(pm[E - 1]);
  }
  double mean = std::accumulate(final_vals.begin(), final_vals.end(), 0.0) / P, sq = 0;
  for (double v : final_vals) sq += (v - mean) * (v - mean);
  est.value = mean;
  est.stderr_ = std::sqrt(sq / (P - 1) / P);
  est.extrapolated = cfg.extrapolation == Extrapolation::Richardson && E >= 2;
  est.asymptotic_flag = true;
  for (size_t e = 1; e < E; ++e) {
    double tol = 3 * std::max(per_eps_sd[e], per_eps_sd[e - 1]);
    if (std::abs(est.per_epsilon[e].second - est.per_epsilon[e - 1].second) >= tol) est.asymptotic_flag = false;
  }
  return est;
}

void check_sample(double v, const std::vector<cplx>& z) {
  if (!std::isfinite(v))
    throw Error(ErrorCode::NumericalFailure, "non-finite integrand at " + point_str(z));
  if (v < -1e-9)
    throw Error(ErrorCode::NumericalFailure, "negative integrand " + std::to_string(v) + " at " + point_str(z));
}

}  // namespace

void RegConfig::validate() const {
  if (epsilon_schedule.empty()) throw Error(ErrorCode::Input, "empty epsilon schedule");
  for (size_t i = 0; i < epsilon_schedule.size(); ++i) {
    if (!(epsilon_schedule[i] > 0)) throw Error(ErrorCode::Input, "epsilon values must be positive");
    if (i && !(epsilon_schedule[i] < epsilon_schedule[i - 1]))
      throw Error(ErrorCode::Input, "epsilon schedule must be strictly decreasing");
  }
  if (extrapolation == Extrapolation::Richardson && epsilon_schedule.size() < 3)
    throw Error(ErrorCode::Input, "extrapolation needs at least three epsilon values");
  if (samples < 2L * partitions) throw Error(ErrorCode::Input, "too few samples");
  if (!(radius > 0)) throw Error(ErrorCode::Input, "radius must be positive");
  if (!(chi_thresholds.first < chi_thresholds.second)) throw Error(ErrorCode::Input, "bad cutoff thresholds");
  if (extrapolation_order < 1) throw Error(ErrorCode::Input, "extrapolation order must be positive");
}

double chi(double t, double t0, double t1) {
  if (t <= t0) return 0.0;
  if (t >= t1) return 1.0;
  double s = (t - t0) / (t1 - t0);
  return s * s * (3 - 2 * s);
}

double richardson(double eps_big, double v_big, double eps_small, double v_small, int order) {
  double a = std::pow(eps_big, order), b = std::pow(eps_small, order);
  return (a * v_small - b * v_big) / (a - b);
}

double cauchy_binet_sigma(const std::vector<cplx>& J, int m, int N, int k) {
  if (k == 0) return 1.0;
  if (k > m || k > N) return 0.0;
  if (k == 1) {
    double s = 0;
    for (const auto& v : J) s += std::norm(v);
    return s;
  }
  double s = 0;
  for (const auto& rs : subsets(m, k))
    for (const auto& cs : subsets(N, k)) {
      Eigen::MatrixXcd M(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) M(i, j) = J[rs[i] * N + cs[j]];
      s += std::norm(det_of(M));
    }
  return s;
}

MassEstimate epsilon_mass(const std::vector<Polynomial>& G, int k, const RegConfig& cfg,
                          const std::vector<double>& center_in) {
  cfg.validate();
  if (G.empty()) throw Error(ErrorCode::Input, "empty tuple");
  const int N = G[0].nvars(), m = static_cast<int>(G.size());
  if (k < 1 || k > N) throw Error(ErrorCode::Input, "degree k must satisfy 1 <= k <= N");
  std::vector<double> center = center_in.empty() ? std::vector<double>(N, 0.0) : center_in;
  if (static_cast<int>(center.size()) != N) throw Error(ErrorCode::Input, "center has wrong dimension");
  std::vector<NumPoly> num;
  for (const auto& g : G) {
    if (g.nvars() != N) throw Error(ErrorCode::Input, "tuple entries use different variables");
    num.emplace_back(g);
  }
  const auto& eps = cfg.epsilon_schedule;
  const int E = static_cast<int>(eps.size());
  const double R = cfg.radius;
  const double norm = factorial(k) / (std::pow(kPi, N) * std::pow(R, 2.0 * (N - k)));
  Integrand f = [&](const double* u, double* out) {
    std::vector<cplx> z(N), J(static_cast<size_t>(m) * N), grad(N);
    double w = 1, maxrel = 0;
    for (int j = 0; j < N; ++j) {
      w *= polar(u[2 * j], u[2 * j + 1], R, cfg.radial_power, cplx(center[j], 0), z[j]);
      maxrel = std::max(maxrel, std::norm(z[j] - center[j]) / (R * R));
    }
    double s = 0;
    for (int i = 0; i < m; ++i) {
      cplx v = num[i].eval_grad(z.data(), grad.data());
      s += std::norm(v);
      for (int j = 0; j < N; ++j) J[i * N + j] = grad[j];
    }
    double dens = w * norm * cauchy_binet_sigma(J, m, N, k);
    if (cfg.use_window) dens *= 1 - chi(maxrel, cfg.chi_thresholds.first, cfg.chi_thresholds.second);
    for (int e = 0; e < E; ++e) {
      out[e] = dens * eps[e] / std::pow(s + eps[e], k + 1);
      check_sample(out[e], z);
    }
  };
  return summarize(qmc_integrate(f, 2 * N, E, cfg.samples, cfg.partitions, cfg.seed, cfg.parallel), cfg);
}

MassEstimate lifted_mass(const PolyMatrix& g, const RegConfig& cfg) {
  cfg.validate();
  if (g.nvars() != 1) throw Error(ErrorCode::Input, "lifted mass needs a morphism over C^1");
  if (g.rows() != g.cols()) throw Error(ErrorCode::Input, "lifted mass needs a square matrix");
  const int r = g.cols(), N = r;  // x plus r-1 fiber coordinates
  std::vector<NumPoly> val(r * r), der(r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      val[i * r + j] = NumPoly(g.at(i, j));
      der[i * r + j] = NumPoly(g.at(i, j).differentiate(0));
    }
  const auto& eps = cfg.epsilon_schedule;
  const int E = static_cast<int>(eps.size());
  const double R = cfg.radius;
  const double fs_const = factorial(r - 1) / std::pow(kPi, r - 1);

  // Density over P^{r-1} relative to the Fubini-Study probability measure, summed over charts.
  auto fiber = [&](const std::vector<cplx>& alpha, const std::vector<cplx>& gx, const std::vector<cplx>& dgx,
                   double weight, double* out) {
    double a2 = 0;
    for (const auto& v : alpha) a2 += std::norm(v);
    for (int chart = 0; chart < r; ++chart) {
      double rho = std::norm(alpha[chart]) / a2;
      if (rho < 1e-300) continue;
      std::vector<cplx> a(r);
      std::vector<int> wcol;  // fiber coordinate index -> column
      for (int j = 0; j < r; ++j) {
        a[j] = alpha[j] / alpha[chart];
        if (j != chart) wcol.push_back(j);
      }
      // coordinates: 0 = x, 1..r-1 = w
      std::vector<cplx> G(r, 0.0), dG(static_cast<size_t>(r) * N, 0.0);
      for (int s = 0; s < r; ++s) {
        for (int j = 0; j < r; ++j) {
          G[s] += gx[s * r + j] * a[j];
          dG[s * N + 0] += dgx[s * r + j] * a[j];
        }
        for (int t = 0; t < N - 1; ++t) dG[s * N + 1 + t] = gx[s * r + wcol[t]];
      }
      double P = 0, Q = 1;
      for (int s = 0; s < r; ++s) P += std::norm(G[s]);
      std::vector<cplx> Qa(N, 0.0), Pa(N, 0.0);
      for (int t = 0; t < N - 1; ++t) {
        Q += std::norm(a[wcol[t]]);
        Qa[1 + t] = std::conj(a[wcol[t]]);
      }
      for (int aa = 0; aa < N; ++aa)
        for (int s = 0; s < r; ++s) Pa[aa] += dG[s * N + aa] * std::conj(G[s]);
      Eigen::MatrixXcd A(N, N), B(N, N);
      for (int aa = 0; aa < N; ++aa)
        for (int bb = 0; bb < N; ++bb) {
          cplx Pab = 0;
          for (int s = 0; s < r; ++s) Pab += dG[s * N + aa] * std::conj(dG[s * N + bb]);
          double Qab = (aa == bb && aa > 0) ? 1.0 : 0.0;
          A(aa, bb) = Pab / Q - (Pa[aa] * std::conj(Qa[bb]) + Qa[aa] * std::conj(Pa[bb])) / (Q * Q) -
                      P * Qab / (Q * Q) + 2 * P * Qa[aa] * std::conj(Qa[bb]) / (Q * Q * Q);
          B(aa, bb) = Qab / Q - Qa[aa] * std::conj(Qa[bb]) / (Q * Q);
        }
      const double phi = P / Q;
      const double fs_density = fs_const / std::pow(Q, r);
      // mixed volumes: column subsets taken from A, the rest from B
      for (int j = 0; j <= r - 1; ++j) {
        const int aq = j + 1, bq = r - 1 - j;
        double mixed = 0;
        for (const auto& cols : subsets(N, aq)) {
          Eigen::MatrixXcd M = B;
          for (int c : cols) M.col(c) = A.col(c);
          mixed += det_of(M).real();
        }
        double top = factorial(aq) * factorial(bq) * mixed / std::pow(kPi, N);
        double base = weight * rho * binom(r, j + 1) * top / fs_density;
        for (int e = 0; e < E; ++e) out[e] += base * eps[e] / std::pow(phi + eps[e], aq + 1);
      }
    }
  };

  Integrand f = [&](const double* u, double* out) {
    for (int e = 0; e < E; ++e) out[e] = 0;
    cplx x;
    double wx = polar(u[0], u[1], R, cfg.radial_power, cplx(0, 0), x);
    // uniform point of P^{r-1} from r complex Gaussians
    std::vector<cplx> beta(r);
    for (int j = 0; j < r; ++j) {
      double uu = std::max(u[2 + 2 * j], 1e-300);
      beta[j] = std::polar(std::sqrt(-2 * std::log(uu)), 2 * kPi * u[3 + 2 * j]);
    }
    std::vector<cplx> gx(r * r), dgx(r * r);
    Eigen::MatrixXcd gm(r, r);
    for (int t = 0; t < r * r; ++t) {
      gx[t] = val[t].eval(&x);
      dgx[t] = der[t].eval(&x);
      gm(t / r, t % r) = gx[t];
    }
    // Deterministic two-point mixture: beta itself and [g(x)^{-1} beta], which lands near ker g(x).
    // The pushforward of the FS measure under [b] -> [g^{-1} b] has density |det g|^2 / phi^r.
    auto mixture = [&](const std::vector<cplx>& alpha, cplx det) {
      Eigen::VectorXcd av = Eigen::Map<const Eigen::VectorXcd>(alpha.data(), r);
      double phi = (gm * av).squaredNorm() / av.squaredNorm();
      return 0.5 + 0.5 * std::norm(det) / std::pow(phi, r);
    };
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(gm);
    cplx det = lu.determinant();
    if (std::abs(det) < 1e-280) {
      fiber(beta, gx, dgx, wx, out);
    } else {
      Eigen::VectorXcd bv = Eigen::Map<Eigen::VectorXcd>(beta.data(), r);
      Eigen::VectorXcd tv = lu.solve(bv);
      std::vector<cplx> alpha2(tv.data(), tv.data() + r);
      double m1 = mixture(beta, det), m2 = mixture(alpha2, det);
      if (std::isfinite(m1)) fiber(beta, gx, dgx, 0.5 * wx / m1, out);
      if (std::isfinite(m2)) fiber(alpha2, gx, dgx, 0.5 * wx / m2, out);
    }
    std::vector<cplx> loc{x};
    for (int e = 0; e < E; ++e) check_sample(out[e], loc);
  };
  return summarize(qmc_integrate(f, 2 + 2 * r, E, cfg.samples, cfg.partitions, cfg.seed, cfg.parallel), cfg);
}

MassBalance mass_balance_check(const PolyMatrix& g, const RegConfig& cfg) {
  if (g.rows() != g.cols() || g.nvars() != 1)
    throw Error(ErrorCode::Input, "mass balance needs a square matrix over C^1");
  Polynomial det = determinant(g);
  if (det.is_zero()) throw Error(ErrorCode::Input, "det g vanishes identically");
  MassBalance mb;
  mb.det_count = contour_root_count(det, cfg.radius);
  MassEstimate est = lifted_mass(g, cfg);
  mb.numeric_mass = est.value;
  mb.stderr_ = est.stderr_;
  mb.pass = std::abs(mb.numeric_mass - static_cast<double>(mb.det_count)) < 0.1;
  return mb;
}

}  // namespace segre
