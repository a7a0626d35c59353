#include "doctest.h"
#include "gorkit/cayley.hpp"
#include "gorkit/stringy.hpp"

#include <algorithm>
#include <set>

using namespace gorkit;

namespace {

std::vector<Vec> cube_verts(int d, long lo, long hi) {
  std::vector<Vec> vs;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vec v(d);
    for (int j = 0; j < d; ++j) v[j] = (mask >> j) & 1 ? hi : lo;
    vs.push_back(v);
  }
  return vs;
}

std::vector<Vec> unimodular_simplex(int d) {
  std::vector<Vec> vs{Vec(d, Int(0))};
  for (int j = 0; j < d; ++j) {
    Vec v(d, Int(0));
    v[j] = 1;
    vs.push_back(v);
  }
  return vs;
}

// the two segments whose Cayley polytope is dual to a 2 * unimodular 3-simplex
std::vector<LatticePolytope> fig_parts() {
  return {build_polytope({to_vec({-1, 0}), to_vec({0, -1})}),
          build_polytope({to_vec({0, 0}), to_vec({1, 1})})};
}

}  // namespace

TEST_CASE("cayley_polytope basics") {
  LatticePolytope sq = build_polytope(cube_verts(2, -1, 1));
  CHECK(cayley_polytope({sq}) == sq);

  LatticePolytope seg = build_polytope({to_vec({0}), to_vec({1})});
  LatticePolytope two = cayley_polytope({seg, seg});
  CHECK(two.dim() == 2);
  CHECK(two == build_polytope(cube_verts(2, 0, 1)));
  auto gd = gorenstein_data(two);
  REQUIRE(gd.has_value());
  CHECK(gd->r == 2);

  LatticePolytope fig = cayley_polytope(fig_parts());
  CHECK(fig.dim() == 3);
  auto gf = gorenstein_data(fig);
  REQUIRE(gf.has_value());
  CHECK(gf->r == 2);
}

TEST_CASE("cayley_gorenstein_check three-way equivalence") {
  CayleyCheck fig = cayley_gorenstein_check(fig_parts());
  CHECK(fig.cayley_gorenstein);
  CHECK(fig.cone_reflexive);
  CHECK(fig.minkowski_reflexive);
  CHECK(fig.all_equivalent);
  CHECK(fig.m_matches);
  CHECK(fig.minkowski ==
        build_polytope({to_vec({-1, 0}), to_vec({0, 1}), to_vec({0, -1}), to_vec({1, 0})}));
  CHECK(fig.m_sigma_dual == to_vec({0, 0, 1, 1}));

  // the unit-cube pair: [0,1]^2 and [-1,0]^2 sum to [-1,1]^2
  CayleyCheck cubes =
      cayley_gorenstein_check({build_polytope(cube_verts(2, 0, 1)), build_polytope(cube_verts(2, -1, 0))});
  CHECK(cubes.cayley_gorenstein);
  CHECK(cubes.minkowski_reflexive);
  CHECK(cubes.all_equivalent);
  CHECK(cubes.minkowski == build_polytope(cube_verts(2, -1, 1)));

  // [0,2] + [0,2] = [0,4] is not reflexive, and the Cayley polytope is not Gorenstein
  LatticePolytope long_seg = build_polytope({to_vec({0}), to_vec({2})});
  CayleyCheck bad = cayley_gorenstein_check({long_seg, long_seg});
  CHECK_FALSE(bad.cayley_gorenstein);
  CHECK_FALSE(bad.cone_reflexive);
  CHECK_FALSE(bad.minkowski_reflexive);
  CHECK(bad.all_equivalent);
}

TEST_CASE("cayley_structures counts") {
  // [0,1]^d admits exactly d Cayley structures of length 2
  for (int d = 2; d <= 3; ++d) {
    DualPair pair = dual_gorenstein(build_polytope(cube_verts(d, 0, 1)));
    auto cs = cayley_structures(pair);
    CHECK(static_cast<int>(cs.size()) == d);
    for (const auto& c : cs) {
      REQUIRE(c.parts.size() == 2);
      CHECK(convex_hull_union(c.parts) == pair.p);
      for (const auto& part : c.parts) CHECK_FALSE(part.is_empty());
    }
  }
  // a reflexive polytope has the single structure e*_1 = n_sigma
  DualPair refl = dual_gorenstein(build_polytope(cube_verts(2, -1, 1)));
  auto rs = cayley_structures(refl);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].functionals == std::vector<Vec>{to_vec({0, 0, 1})});
}

TEST_CASE("special_simplices counts and barycenter") {
  for (int d = 2; d <= 4; ++d) {
    LatticePolytope cube = build_polytope(cube_verts(d, 0, 1));
    auto ss = special_simplices(cube);
    CHECK(static_cast<int>(ss.size()) == (1 << (d - 1)));
    Vec target = Vec(d, Int(1));
    for (const auto& s : ss) {
      REQUIRE(s.points.size() == 2);
      CHECK(s.points[0] + s.points[1] == target);  // shared barycenter m/2
      // opposite vertex pairs
      CHECK(std::find(cube.vertices().begin(), cube.vertices().end(), s.points[0]) !=
            cube.vertices().end());
    }
  }

  // reflexive: exactly one 0-simplex, the interior point
  auto r1 = special_simplices(build_polytope(cube_verts(3, -1, 1)));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].points == std::vector<Vec>{Vec(3, Int(0))});

  // 2 * simplex has special 1-simplices, its dual has none
  LatticePolytope twos = dilate(build_polytope(unimodular_simplex(3)), 2);
  CHECK_FALSE(special_simplices(twos).empty());
  DualPair pair = dual_gorenstein(twos);
  CHECK(special_simplices(pair.p_dual).empty());
}

TEST_CASE("structures of P match special simplices of the dual") {
  for (auto& verts : {cube_verts(2, 0, 1), cube_verts(3, 0, 1), cube_verts(2, -1, 1)}) {
    DualPair pair = dual_gorenstein(build_polytope(verts));
    auto cs = cayley_structures(pair);
    auto ss = special_simplices(pair.p_dual);
    REQUIRE(cs.size() == ss.size());
    std::set<std::vector<Vec>> lifted;
    for (const auto& s : ss) {
      std::vector<Vec> f;
      for (const auto& n : s.points) f.push_back(pair.dual_support_chart.to_ambient(n));
      std::sort(f.begin(), f.end());
      lifted.insert(f);
    }
    for (const auto& c : cs) CHECK(lifted.count(c.functionals) == 1);
  }
}

TEST_CASE("projection along a special simplex: worked example") {
  auto parts = fig_parts();
  LatticePolytope fig = cayley_polytope(parts);
  DualPair pair = dual_gorenstein(fig);
  LatticePolytope nabla = pair.p_dual;
  // the dual is a 2 * unimodular-3-simplex shape
  CHECK(nabla.n_vertices() == 4);
  CHECK(normalized_volume(nabla) == 8);

  auto specials = special_simplices(nabla);
  REQUIRE_FALSE(specials.empty());
  // the special simplex corresponding to the structure {parts[0], parts[1]}:
  // the functionals selecting the y_i coordinates of the Cayley embedding
  std::vector<Vec> marked{pair.dual_support_chart.to_chart(to_vec({0, 0, 1, 0})),
                          pair.dual_support_chart.to_chart(to_vec({0, 0, -1, 1}))};
  std::sort(marked.begin(), marked.end());
  bool found = false;
  for (const auto& s : specials) found = found || s.points == marked;
  CHECK(found);
  SpecialProjection proj = project_along_special(nabla, marked);
  LatticePolytope square = proj.projected;
  CHECK(square.dim() == 2);
  CHECK(is_reflexive(square));
  CHECK(hstar(square) == hstar(nabla));

  // the polar dual of the projection equals the Minkowski sum of the parts,
  // read back through the exact lattice identifications
  RationalPolytope polar = dual_polytope(square, QVec(2, Rat(0)));
  REQUIRE(polar.is_lattice());
  LatticePolytope ps = polar.to_lattice();
  std::vector<Vec> mapped;
  for (const auto& c : ps.vertices()) {
    Vec w_int = proj.quotient_map.apply_left(c);
    Vec w_true = pair.dual_chart_fwd.apply_left(w_int);
    for (std::size_t j = 2; j < w_true.size(); ++j) CHECK(w_true[j] == 0);
    mapped.push_back({w_true[0], w_true[1]});
  }
  std::sort(mapped.begin(), mapped.end());
  LatticePolytope mink = minkowski_sum(parts[0], parts[1]);
  CHECK(mapped == mink.vertices());
  CHECK(mink == build_polytope({to_vec({-1, 0}), to_vec({0, 1}), to_vec({0, -1}), to_vec({1, 0})}));
}

TEST_CASE("projection preserves hstar on the cube and for index 1") {
  LatticePolytope cube = build_polytope(cube_verts(3, 0, 1));
  auto specials = special_simplices(cube);
  REQUIRE(specials.size() == 4);
  for (const auto& s : specials) {
    SpecialProjection proj = project_along_special(cube, s.points);
    CHECK(proj.projected.dim() == 2);
    CHECK(is_reflexive(proj.projected));
    CHECK(hstar(proj.projected) == hstar(cube));
  }

  LatticePolytope sq = build_polytope(cube_verts(2, -1, 1));
  SpecialProjection p1 = project_along_special(sq, {Vec(2, Int(0))});
  CHECK(p1.projected.dim() == 2);
  CHECK(hstar(p1.projected) == hstar(sq));

  // a non-special input is rejected
  CHECK_THROWS_AS(project_along_special(cube, {to_vec({0, 0, 0}), to_vec({1, 0, 0})}),
                  std::invalid_argument);
}

TEST_CASE("direct sums of Gorenstein cones") {
  GorensteinCone seg = cone_over(build_polytope({to_vec({-1}), to_vec({1})}));
  REQUIRE(seg.index.has_value());
  CHECK(*seg.index == 1);
  GorensteinCone sum = direct_sum(seg, seg);
  REQUIRE(sum.index.has_value());
  CHECK(*sum.index == 2);
  CHECK(sum.support.dim() == 3);
  CHECK_FALSE(special_simplices(sum.support).empty());

  // the seven-dimensional index-4 example: 2*simplex joined with its dual
  LatticePolytope twos = dilate(build_polytope(unimodular_simplex(3)), 2);
  DualPair pair = dual_gorenstein(twos);
  GorensteinCone big = direct_sum(cone_over(twos), dual_cone(pair));
  REQUIRE(big.index.has_value());
  CHECK(*big.index == 4);
  CHECK(big.support.dim() == 7);
  CHECK(big.support.n_vertices() == 8);
  // no special 3-simplex, because the dual factor has no special 1-simplex
  CHECK(special_simplices(big.support).empty());
  // the AND law holds with both factors admitting special simplices
  GorensteinCone cc = direct_sum(cone_over(build_polytope(cube_verts(2, 0, 1))),
                                 cone_over(build_polytope(cube_verts(2, 0, 1))));
  REQUIRE(cc.index.has_value());
  CHECK(*cc.index == 4);
  CHECK_FALSE(special_simplices(cc.support).empty());
}

TEST_CASE("integral closedness") {
  for (int d = 1; d <= 3; ++d) CHECK(integrally_closed(build_polytope(cube_verts(d, 0, 1))));
  CHECK(integrally_closed(build_polytope(unimodular_simplex(3))));
  // integrally closed Gorenstein polytopes contain a special simplex
  for (auto& verts : {cube_verts(2, 0, 1), cube_verts(3, 0, 1), cube_verts(3, -1, 1)}) {
    LatticePolytope p = build_polytope(verts);
    if (integrally_closed(p)) CHECK_FALSE(special_simplices(p).empty());
  }
}
