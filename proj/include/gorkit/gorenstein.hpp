#pragma once

#include <optional>

#include "gorkit/polytope.hpp"

namespace gorkit {

struct GorensteinData {
  Int r;                              // index
  QVec interior;                      // x with facet distance 1/r
  Vec m;                              // r*x, lattice point
  LatticePolytope reflexive_witness;  // rP - m
};

/**
 * Detects whether a full-dimensional polytope is Gorenstein: solves
 * ⟨u_F, x⟩ + a_F = 1/r for all facets simultaneously. Requires dim ≥ 1.
 */
std::optional<GorensteinData> gorenstein_data(const LatticePolytope& p);

bool is_reflexive(const LatticePolytope& p);

struct GorensteinCone {
  int ambient = 0;            // cone lives in Z^ambient
  std::vector<Vec> rays;      // primitive generators on the degree-1 hyperplane
  Vec n_sigma;                // degree functional
  AffineChart support_chart;  // degree-1 affine lattice -> support coordinates
  LatticePolytope support;    // in support_chart coordinates
  std::optional<Int> index;   // when support is Gorenstein
  std::optional<Vec> m_dual;  // m_{sigma-dual} in cone coordinates, when reflexive
};

GorensteinCone cone_over(const LatticePolytope& p);
LatticePolytope slice(const GorensteinCone& c, const Int& k);

struct DualPair {
  LatticePolytope p;
  GorensteinData data;
  LatticePolytope p_dual;        // support of the dual cone in the chart below
  AffineChart dual_support_chart;  // {y : ⟨m_dual, y⟩ = 1} -> p_dual coordinates
  std::vector<Vec> dual_rays;    // facet normals (u_F, a_F) of the cone over p, aligned with p.facets()
  Vec m_dual;                    // (r·x, r)
  IntMatrix dual_chart_fwd;      // unimodular map y ↦ (p_dual coords, degree)
  IntMatrix dual_chart_inv;
  std::vector<int> dual_face_of; // p.face_lattice() index -> p_dual.face_lattice() index
  std::vector<int> vertex_ray;   // p_dual vertex index -> index into dual_rays
};

DualPair dual_gorenstein(const LatticePolytope& p);

/** Index into pair.p_dual.face_lattice() of the face dual to the given face of pair.p. */
int dual_face(const DualPair& pair, int face_index);

/** The dual reflexive Gorenstein cone, whose support is pair.p_dual. */
GorensteinCone dual_cone(const DualPair& pair);

struct RefinedLatticeReport {
  // both point sets in refined coordinates (last cone coordinate scaled by r)
  std::vector<Vec> boundary_dual;     // ∂(support of dual cone) ∩ N̄
  std::vector<Vec> boundary_refined;  // ∂(dual of the index-r reflexive slice) ∩ refined lattice
  bool equal = false;
};

RefinedLatticeReport refined_lattice_check(const LatticePolytope& p);

}  // namespace gorkit
