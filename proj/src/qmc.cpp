#include <omp.h>

#include <algorithm>
#include <exception>
#include <random>
#include <stdexcept>

#include "segre/error.hpp"
#include "segre/numeric.hpp"

namespace segre {

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                           59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One partition: fills vals[i * nvals + v], then reduces each column pairwise.
std::vector<double> run_partition(const Integrand& f, int dim, int nvals, long count,
                                  const std::vector<double>& shift, bool parallel) {
  std::vector<double> vals(static_cast<size_t>(count) * nvals);
  auto point = [&](long i, double* u) {
    for (int d = 0; d < dim; ++d) {
      double x = halton(static_cast<std::uint64_t>(i) + 1, kPrimes[d]) + shift[d];
      u[d] = x - static_cast<long>(x);
    }
  };
  if (parallel) {
    std::exception_ptr failure;
#pragma omp parallel
    {
      std::vector<double> u(dim);
#pragma omp for schedule(static)
      for (long i = 0; i < count; ++i) {
        try {
          point(i, u.data());
          f(u.data(), &vals[static_cast<size_t>(i) * nvals]);
        } catch (...) {
#pragma omp critical(segre_qmc_failure)
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    std::vector<double> u(dim);
    for (long i = 0; i < count; ++i) {
      point(i, u.data());
      f(u.data(), &vals[static_cast<size_t>(i) * nvals]);
    }
  }
  std::vector<double> means(nvals);
  for (int v = 0; v < nvals; ++v)
    means[v] = pairwise_sum(vals.data() + v, static_cast<size_t>(count), nvals) / static_cast<double>(count);
  return means;
}

}  // namespace

double halton(std::uint64_t index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

double pairwise_sum(const double* v, std::size_t n, std::size_t stride) {
  if (n <= 8) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += v[i * stride];
    return s;
  }
  std::size_t h = n / 2;
  return pairwise_sum(v, h, stride) + pairwise_sum(v + h * stride, n - h, stride);
}

QmcResult qmc_integrate(const Integrand& f, int dim, int nvals, long samples, int partitions,
                        std::uint64_t seed, bool parallel) {
  if (dim < 1 || dim > static_cast<int>(std::size(kPrimes)))
    throw Error(ErrorCode::Input, "QMC dimension out of range");
  if (partitions < 2 || samples < partitions) throw Error(ErrorCode::Input, "need at least two samples per partition");
  const long per = samples / partitions;
  QmcResult res;
  for (int p = 0; p < partitions; ++p) {
    std::mt19937_64 rng(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(p) + 1)));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> shift(dim);
    for (auto& s : shift) s = uni(rng);
    res.partition_means.push_back(run_partition(f, dim, nvals, per, shift, parallel));
  }
  return res;
}

}  // namespace segre
