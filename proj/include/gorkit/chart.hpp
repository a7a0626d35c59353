#pragma once

#include <optional>

#include "gorkit/matrix.hpp"

namespace gorkit {

/**
 * Integer coordinates on the affine lattice aff(S) ∩ Z^d of a point set S.
 *
 * base is the lexicographically smallest input point, basis rows span the
 * saturated direction lattice, and proj is an integer left inverse of
 * basis^T, so chart coordinates of lattice points are again lattice points.
 */
struct AffineChart {
  int ambient = 0;
  int dim = 0;
  Vec base;
  IntMatrix basis;  // dim x ambient
  IntMatrix proj;   // dim x ambient, proj * basis^T = identity

  static AffineChart from_points(const std::vector<Vec>& pts);
  static AffineChart from_base_and_basis(Vec base, IntMatrix basis);
  static AffineChart identity_chart(int d);

  Vec to_chart(const Vec& x) const;                 // throws if x outside the affine lattice
  std::optional<Vec> try_to_chart(const Vec& x) const;
  Vec to_ambient(const Vec& c) const;               // base + basis^T c
  Vec direction_to_ambient(const Vec& c) const;     // basis^T c
};

/** Extends saturated basis rows to a unimodular d x d matrix (basis rows first). */
IntMatrix extend_to_unimodular(const IntMatrix& basis, int d);

}  // namespace gorkit
