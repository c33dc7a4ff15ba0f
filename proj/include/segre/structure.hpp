#pragma once
#include "segre/poly_matrix.hpp"

namespace segre {

enum class StructureClass { DiagonalMonomial, SingleRow, ColumnSection, General };
const char* structure_class_name(StructureClass c);

// Routing: DIAGONAL_MONOMIAL is reported only when the exact engine can evaluate the input,
// possibly after removing unit diagonal blocks.
StructureClass classify_structure(const PolyMatrix& g);

// Each row and each column has at most one nonzero entry, and all entries are monomials.
bool has_diagonal_pattern(const PolyMatrix& g);

}  // namespace segre
