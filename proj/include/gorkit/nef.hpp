#pragma once

#include "gorkit/gorenstein.hpp"

namespace gorkit {

struct NefPartition {
  int r = 0;                           // number of parts
  std::vector<LatticePolytope> parts;  // Δ_1..Δ_r in M
  std::vector<Vec> base_points;        // p_i ∈ Δ_i with Σp_i = m
  LatticePolytope sum;                 // Δ_1 + ... + Δ_r, reflexive
  Vec m;                               // the interior lattice point of the sum
  bool centered = false;               // all p_i = 0
  bool proper = false;                 // all dim Δ_i > 0
};

/** Validated assembly from parts and explicit base points (throws on any violation). */
NefPartition make_nef_partition(const std::vector<LatticePolytope>& parts,
                                const std::vector<Vec>& base_points);

/**
 * Checks that the Minkowski sum is reflexive and searches lattice points
 * p_i ∈ Δ_i with Σp_i = m; returns the lexicographically first witness
 * tuple, or nothing. The sum must be full-dimensional.
 */
std::optional<NefPartition> detect_nef(const std::vector<LatticePolytope>& parts,
                                       long cap = kDefaultCap);

struct CenteredNef {
  NefPartition np;  // parts translated by -p_i, dim-0 parts removed
  int dropped = 0;
};

CenteredNef center_and_properize(const NefPartition& np);

/** ∇_i = {y : ⟨Δ_j, y⟩ ≥ -δ_ij ∀j}; requires a centered partition. */
NefPartition dual_nef(const NefPartition& np);

/**
 * Independent route to the nonzero vertices of each ∇_i: the vertices v of
 * the polar dual of the sum with min_{u ∈ Δ_i} ⟨u, v⟩ = -1.
 */
std::vector<std::vector<Vec>> nef_vertex_formula(const NefPartition& np,
                                                 const LatticePolytope& dual_of_sum);

/**
 * Replaces the parts in each block by their Minkowski sum. Blocks must be
 * nonempty, disjoint, and cover {0..r-1}. On centered input each collected
 * part is verified against the support-function description
 * Δ^I = {x ∈ Δ : ⟨x, ∇_j⟩ ≥ 0 ∀j ∉ I}.
 */
NefPartition collect(const NefPartition& np, const std::vector<std::vector<int>>& blocks,
                     long cap = kDefaultCap);

struct NefProjection {
  NefPartition projected;       // all r parts pushed to the quotient lattice Z^k
  IntMatrix projection;         // k x d surjection with kernel lin(Δ^J) ∩ M
  LatticePolytope face;         // F = ∇_I ∩ (Δ^J)^⊥, in ambient N coordinates
  LatticePolytope face_chart;   // F in the dual quotient coordinates Z^k
  NefPartition dual_projected;  // {∇_i ∩ F} in the dual quotient coordinates
};

/**
 * Projects a centered partition along lin(Δ^J) for a proper nonempty index
 * set J whose span is strictly lower-dimensional. The dual reflexive
 * polytope of the projected sum is the smallest face of ∇_I containing 0.
 */
NefProjection project_nef(const NefPartition& np, const std::vector<int>& j_set);

struct NefDecomposition {
  std::vector<std::vector<int>> blocks;  // minimal index sets with 0 ∈ relint(Δ^I)
  std::vector<NefPartition> components;  // each in coordinates of its own span
  bool direct_sum = false;               // the spans decompose M_R as a vector space
  bool length_bound = false;             // r ≤ 2·dim
  bool hull_crosspolytope = false;       // checked when r = 2·dim
};

/** Unique decomposition of a proper centered partition into irreducible ones. */
NefDecomposition decompose_irreducible(const NefPartition& np);

struct CancelReport {
  bool sum_reflexive = false;
  bool p_has_interior_point = false;  // lattice point in the relative interior of P
  bool applies = false;               // both hypotheses hold
  bool p_reflexive = false;           // relative to its span, after recentering
  bool q_reflexive = false;
  std::optional<NefPartition> partition;  // P, Q as a length-2 partition
};

/** If P + Q is reflexive and P has a relative-interior lattice point, P and Q
 *  are reflexive and form a nef-partition; otherwise reports what fails. */
CancelReport cancel_check(const LatticePolytope& p, const LatticePolytope& q,
                          long cap = kDefaultCap);

struct CountIdentityReport {
  Int dual_count;   // |Δ* ∩ N|
  Int parts_count;  // Σ|∇_i ∩ N| - r + 1
  bool equal = false;
};

CountIdentityReport lattice_point_count_identity(const NefPartition& np, long cap = kDefaultCap);

/** Whether cone(a) ∩ cone(b) = {0}, decided exactly over the rationals. */
bool cone_intersection_trivial(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace gorkit
