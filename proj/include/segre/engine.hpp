#pragma once
#include <string>
#include <vector>

#include "segre/cycle.hpp"
#include "segre/poly_matrix.hpp"
#include "segre/structure.hpp"

namespace segre {

// G = g(x) a restricted to the chart a_chart = 1, over the variables (x, a).
struct SectionOnPE {
  PolyMatrix g;
  int chart = 0;
  std::vector<Polynomial> components;  // divided by common_factor
  Monomial common_factor;
};

SectionOnPE section_on_chart(const PolyMatrix& g, int chart);

struct EngineOptions {
  bool allow_partial = false;      // keep going when a degree cannot be pushed forward
  bool unit_block_reduction = true;  // g + (unit) has the same M as g
};

struct MorphismResult {
  int n = 0, r = 0;
  std::vector<GeneralizedCycle> M;       // k = 0..n
  std::vector<GeneralizedCycle> ring_M;  // on P(E) of the morphism actually evaluated
  std::vector<int> unresolved;           // degrees skipped under allow_partial
  std::vector<std::string> unresolved_reason;
  StructureClass structure = StructureClass::General;
  std::string route = "direct";
  bool Z_whole = false;   // g not generically injective
  Polynomial Z_equation;  // monomial cutting out Z otherwise
  std::string engine = "EXACT";
  bool generically_injective = false;
};

std::string describe_Z(const MorphismResult& res, const std::vector<std::string>& names);

std::vector<GeneralizedCycle> ring_M_Galpha(const PolyMatrix& g);
MorphismResult compute_Mg(const PolyMatrix& g, const EngineOptions& opt = {});

struct Distinguished {
  int degree = 0;
  VarietyRef variety;
  Rational coefficient;
};

struct SegreReport {
  std::vector<Scalar> point;
  std::vector<long> numbers;  // e_0..e_n
  std::vector<Provenance> provenance;
  std::vector<Distinguished> distinguished;
};

SegreReport segre_numbers(const MorphismResult& res, const std::vector<Scalar>& point,
                          const MultiplicityOracle& oracle = nullptr);
SegreReport segre_numbers(const PolyMatrix& g, const std::vector<Scalar>& point,
                          const MultiplicityOracle& oracle = nullptr);

std::vector<Distinguished> distinguished_varieties(const MorphismResult& res);
std::vector<Distinguished> distinguished_varieties(const PolyMatrix& g);

// Divisor of a monomial as a cycle: sum of e_i [x_i = 0].
GeneralizedCycle monomial_divisor_cycle(const Monomial& m);

enum class MetricForm { SegreEHat, ChernEHat, SegreFHat };
const char* metric_form_name(MetricForm w);

struct MetricFormResult {
  std::vector<GeneralizedCycle> parts;  // degrees 0..n
  std::string tail;                      // smooth remainder kept symbolic
};

MetricFormResult singular_metric_forms(const PolyMatrix& g, MetricForm which);

// Quotient construction for a 1 x 2 morphism over C^2.
struct MaOptions {
  double radius = 0.5;
  int trials = 5;
  unsigned long long seed = 1;
  std::vector<std::vector<Scalar>> candidate_zeros;  // added to the default grid
};

struct MaResult {
  std::vector<GeneralizedCycle> Ma;  // degrees 0..2
  std::vector<std::pair<std::vector<Scalar>, long>> zeros;  // isolated common zeros and their counts
  Monomial common_factor;
};

MaResult compute_Ma(const PolyMatrix& g, const MaOptions& opt = {});

}  // namespace segre

namespace segre {

// Drops rows and columns that carry a lone nonzero constant.
PolyMatrix remove_unit_blocks(const PolyMatrix& g, bool* everything_removed = nullptr);

// Whether the monomial recursion handles the diagonal-pattern input (optionally after unit removal).
bool diagonal_engine_feasible(const PolyMatrix& g, bool allow_reduction);

}  // namespace segre
