#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <map>
#include <vector>

#include "gorkit/chart.hpp"

namespace gorkit {

/** Inequality ⟨normal, x⟩ ≥ -offset. */
struct Facet {
  Vec normal;
  Int offset;
  bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
};

struct CapExceeded : std::runtime_error {
  CapExceeded() : std::runtime_error("enumeration cap") {}
};

struct FaceLattice {
  struct Face {
    std::uint64_t vset = 0;  // vertex-index bitset
    int dim = -1;
  };
  std::vector<Face> faces;  // sorted by (dim, vset); faces[0] = empty face, faces.back() = full

  int size() const { return static_cast<int>(faces.size()); }
  int top() const { return size() - 1; }
  bool leq(int i, int j) const { return (faces[i].vset & ~faces[j].vset) == 0 && faces[i].dim <= faces[j].dim; }
  int index_of(std::uint64_t vset) const;
};

class LatticePolytope {
 public:
  LatticePolytope() = default;  // empty polytope
  static LatticePolytope empty(int ambient);

  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }
  int n_vertices() const { return static_cast<int>(verts_.size()); }

  const std::vector<Vec>& vertices() const { return verts_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const AffineChart& chart() const { return chart_; }
  /** chart_vertices()[i] == chart().to_chart(vertices()[i]) */
  const std::vector<Vec>& chart_vertices() const { return chart_verts_; }
  const std::vector<Facet>& chart_facets() const { return chart_facets_; }

  bool contains(const Vec& x) const;            // membership in P (ambient lattice point)
  bool strictly_contains(const Vec& x) const;   // relative interior
  bool operator==(const LatticePolytope& o) const { return ambient_ == o.ambient_ && verts_ == o.verts_; }

  const FaceLattice& face_lattice() const;
  LatticePolytope face_polytope(int face_index) const;
  std::vector<Vec> face_vertices(std::uint64_t vset) const;

  friend LatticePolytope build_polytope(const std::vector<Vec>& points);

 private:
  int ambient_ = 0;
  int dim_ = -1;
  std::vector<Vec> verts_;            // lex sorted
  std::vector<Facet> facets_;         // ambient coordinates
  AffineChart chart_;
  std::vector<Vec> chart_verts_;      // aligned with verts_
  std::vector<Facet> chart_facets_;   // primitive, lex sorted

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

LatticePolytope build_polytope(const std::vector<Vec>& points);

struct RationalPolytope {
  int ambient = 0;
  std::vector<QVec> vertices;  // lex sorted

  bool is_lattice() const;
  LatticePolytope to_lattice() const;
};

/** (P−m)* = {y : ⟨y, x−m⟩ ≥ −1 ∀x ∈ P}; requires dim P = ambient and m interior. */
RationalPolytope dual_polytope(const LatticePolytope& p, const QVec& m);

enum class PointMode { All, Interior, Boundary };

inline constexpr long kDefaultCap = 10000000L;

std::vector<Vec> lattice_points(const LatticePolytope& p, PointMode mode = PointMode::All,
                                long cap = kDefaultCap);
Int count_lattice_points(const LatticePolytope& p, PointMode mode = PointMode::All,
                         long cap = kDefaultCap);
/** |kP ∩ M| for k = 0..upto (uses the box-point formula for simplices). */
std::vector<Int> ehrhart_counts(const LatticePolytope& p, int upto, long cap = kDefaultCap);
/** h* coefficient vector (size dim+1; {1} for the empty polytope and points). */
std::vector<Int> hstar_coeffs(const LatticePolytope& p, long cap = kDefaultCap);
/**
 * Height histogram of the lattice points in the half-open parallelepiped
 * spanned by (v_i, 1) for the vertices v_i of a simplex, optionally only the
 * points interior to the closed parallelepiped. Index = last coordinate.
 */
std::vector<Int> simplex_box_degrees(const std::vector<Vec>& simplex_chart_verts, bool interior_only,
                                     long cap = kDefaultCap);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope convex_hull_union(const std::vector<LatticePolytope>& ps);
LatticePolytope dilate(const LatticePolytope& p, const Int& k);
LatticePolytope translate(const LatticePolytope& p, const Vec& t);

Int normalized_volume(const LatticePolytope& p);

struct PyramidWitness {
  Vec apex;
  int facet_index;  // into facets()
};
std::optional<PyramidWitness> is_lattice_pyramid(const LatticePolytope& p);

FaceLattice face_lattice(const LatticePolytope& p);

/**
 * Primitive generators of {y : ⟨y, g⟩ ≥ 0 ∀g}, lex sorted.
 * Requires the generators to span R^n (so the dual cone is pointed).
 */
std::vector<Vec> dual_cone_rays(const std::vector<Vec>& generators);

/** Vertices of the bounded set {x : ⟨u_i, x⟩ ≥ −a_i}; throws if unbounded or empty. */
std::vector<QVec> vertices_from_facets(const std::vector<Facet>& facets, int d);

}  // namespace gorkit
