#pragma once
#include <cstdint>
#include <vector>

#include "segre/polynomial.hpp"

namespace segre {

// A component c * y^e of a monomial section.
struct MonoComp {
  Scalar c;
  Monomial e;
};

// Chart-local output of the Monge-Ampere recursion: coef * [y_i = 0, i in mask] (^ moving).
struct LocalTerm {
  long coef = 0;
  std::uint32_t zero_mask = 0;
  bool has_moving = false;
  std::vector<MonoComp> args;
  int power = 0;
};

// Rank of the exponent differences e_i - e_0.
int exponent_rank(const std::vector<MonoComp>& f);

// [S] ^ [dd^c log|f|^2]^k for a monomial tuple, restricted to the coordinate subspace S.
// Non-proper configurations raise UNSUPPORTED_INPUT.
std::vector<LocalTerm> monomial_ma(std::uint32_t S, const std::vector<MonoComp>& f, int k);

// 1_{Z(f)} [dd^c log|f|^2]^k on the whole chart.
std::vector<LocalTerm> monomial_residue(const std::vector<MonoComp>& f, int k);

}  // namespace segre
