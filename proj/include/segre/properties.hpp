#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "segre/engine.hpp"

namespace segre {

struct PropertyResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

using PointList = std::vector<std::vector<Scalar>>;

// Grid {0,1,-1,2}^n plus extra query points.
PointList property_points(int n, const PointList& extra = {});

// Fixed part of M_1 matches div(det g) pointwise and per coordinate hyperplane.
PropertyResult check_determinant_law(const PolyMatrix& g, const MorphismResult& res, const PointList& pts);
// Every multiplicity is a non-negative integer.
PropertyResult check_nonnegativity(const MorphismResult& res, const PointList& pts,
                                   const MultiplicityOracle& oracle = nullptr);
// Moving parts of M_k have nonzero multiplicity only where at least k+1 coordinates used by g vanish.
PropertyResult check_stratum(const PolyMatrix& g, const MorphismResult& res, const PointList& pts,
                             const MultiplicityOracle& oracle = nullptr);
// g and g + identity block give the same Segre numbers.
PropertyResult check_direct_sum(const PolyMatrix& g, const PointList& pts);
// A g B with constant invertible monomial-pattern A, B gives the same multiplicities.
PropertyResult check_comparability(const PolyMatrix& g, const PointList& pts, std::uint64_t seed);
// M_k = 0 for k < codim Z when g is generically injective.
PropertyResult check_dimension(const MorphismResult& res);

PropertyResult run_property(const std::string& name, const PolyMatrix& g, const MorphismResult& res,
                            const PointList& pts, std::uint64_t seed, const MultiplicityOracle& oracle = nullptr);

// Constant invertible matrix: a random permutation with Gaussian-rational nonzero entries.
PolyMatrix random_monomial_matrix(int size, int nvars, std::uint64_t seed);

}  // namespace segre
