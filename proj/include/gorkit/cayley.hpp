#pragma once

#include "gorkit/gorenstein.hpp"

namespace gorkit {

/**
 * Conv(P_1 x e_1, ..., P_r x e_r) in the fixed coordinates (x, y_1..y_{r-1})
 * of the slice {sum y_i = 1}: part i < r gets y = e_i, the last part y = 0.
 */
LatticePolytope cayley_polytope(const std::vector<LatticePolytope>& parts);

struct CayleyCheck {
  LatticePolytope cayley;
  LatticePolytope minkowski;
  bool cayley_gorenstein = false;      // Cayley polytope Gorenstein of index r
  Int cayley_index;                    // 0 when not Gorenstein
  bool cone_reflexive = false;         // cone over the Cayley polytope reflexive of index r
  bool minkowski_reflexive = false;
  bool m_matches = false;              // m of the Cayley polytope = (m of the sum) x (1,..,1)
  Vec m_sigma_dual;                    // in M + Z^r coordinates, when everything holds
  bool all_equivalent = false;         // the three predicates agree
};

CayleyCheck cayley_gorenstein_check(const std::vector<LatticePolytope>& parts);

struct CayleyStructure {
  std::vector<Vec> functionals;               // e*_1..e*_r, degree-1 points of the dual cone, lex sorted
  std::vector<std::vector<int>> part_vertex;  // per functional: vertex indices of the part
  std::vector<LatticePolytope> parts;         // the parts, in the ambient coordinates of p
};

/** All length-r Cayley structures of pair.p, in lexicographic order of the functional lists. */
std::vector<CayleyStructure> cayley_structures(const DualPair& pair, long cap = kDefaultCap);

struct SpecialSimplex {
  std::vector<Vec> points;  // r affinely independent lattice points, lex sorted
};

/**
 * All special (r-1)-simplices of a Gorenstein polytope of index r: r-subsets
 * of lattice points summing to the interior point of rP, affinely
 * independent; each facet then contains exactly r-1 of them.
 */
std::vector<SpecialSimplex> special_simplices(const LatticePolytope& p, long cap = kDefaultCap);

struct SpecialProjection {
  LatticePolytope projected;  // reflexive, dim = dim p - r + 1, with 0 interior
  IntMatrix quotient_map;     // rows: lattice functionals on the cone over p cutting the quotient
};

/** Projection of p along the affine span of a special simplex, in the index-r refined lattice. */
SpecialProjection project_along_special(const LatticePolytope& p, const std::vector<Vec>& simplex,
                                        long cap = kDefaultCap);

/** Block direct sum of two Gorenstein cones; the support is the free join of the supports. */
GorensteinCone direct_sum(const GorensteinCone& a, const GorensteinCone& b);

/**
 * Whether every lattice point of the cone over p at degrees 2..K splits into
 * degree-1 points, with K = the Gorenstein index when p is Gorenstein and
 * dim p otherwise.
 */
bool integrally_closed(const LatticePolytope& p, long cap = kDefaultCap);

}  // namespace gorkit
