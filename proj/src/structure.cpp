#include "segre/structure.hpp"

#include "segre/cycle.hpp"
#include "segre/engine.hpp"

namespace segre {

const char* structure_class_name(StructureClass c) {
  switch (c) {
    case StructureClass::DiagonalMonomial: return "DIAGONAL_MONOMIAL";
    case StructureClass::SingleRow: return "SINGLE_ROW";
    case StructureClass::ColumnSection: return "COLUMN_SECTION";
    case StructureClass::General: return "GENERAL";
  }
  return "?";
}

bool has_diagonal_pattern(const PolyMatrix& g) {
  if (!g.all_monomial()) return false;
  for (int i = 0; i < g.rows(); ++i) {
    int nz = 0;
    for (int j = 0; j < g.cols(); ++j) nz += !g.at(i, j).is_zero();
    if (nz > 1) return false;
  }
  for (int j = 0; j < g.cols(); ++j) {
    int nz = 0;
    for (int i = 0; i < g.rows(); ++i) nz += !g.at(i, j).is_zero();
    if (nz > 1) return false;
  }
  return true;
}

namespace {

StructureClass classify_direct(const PolyMatrix& g) {
  if (has_diagonal_pattern(g))
    return diagonal_engine_feasible(g, true) ? StructureClass::DiagonalMonomial : StructureClass::General;
  if (g.rows() == 1 && g.cols() >= 2) {
    if (g.all_monomial()) return StructureClass::SingleRow;
    std::vector<Polynomial> entries;
    Monomial h(g.nvars());
    bool first = true;
    for (int j = 0; j < g.cols(); ++j) {
      if (g.at(0, j).is_zero()) continue;
      entries.push_back(g.at(0, j));
      h = first ? g.at(0, j).monomial_content() : Monomial::gcd(h, g.at(0, j).monomial_content());
      first = false;
    }
    if (entries.size() < 2) return StructureClass::General;
    for (auto& e : entries) e = e.divide(h);
    if (certified_gcd_free(entries)) return StructureClass::ColumnSection;
  }
  return StructureClass::General;
}

}  // namespace

StructureClass classify_structure(const PolyMatrix& g) {
  StructureClass c = classify_direct(g);
  if (c != StructureClass::General || has_diagonal_pattern(g)) return c;
  // g + (unit block) presents the same sheaf as g
  bool all = false;
  PolyMatrix red = remove_unit_blocks(g, &all);
  if (all || red == g) return c;
  return classify_direct(red);
}

}  // namespace segre
