#include "gorkit/gorenstein.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorkit {

std::optional<GorensteinData> gorenstein_data(const LatticePolytope& p) {
  if (p.dim() < 1) return std::nullopt;
  if (p.dim() != p.ambient_dim())
    throw std::invalid_argument("gorenstein_data: polytope not full-dimensional");
  const int d = p.ambient_dim();
  const auto& fs = p.facets();
  // unknowns (x, c): ⟨u_F, x⟩ - c = -a_F, the common facet distance c = 1/r
  IntMatrix a(static_cast<int>(fs.size()), d + 1);
  QVec b(fs.size());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < d; ++j) a.at(i, j) = fs[i].normal[j];
    a.at(i, d) = -1;
    b[i] = -fs[i].offset;
  }
  auto sol = solve_rational(a, b);
  if (!sol) return std::nullopt;
  Rat c = (*sol)[d];
  if (c <= 0 || c.get_num() != 1) return std::nullopt;
  GorensteinData gd;
  gd.r = c.get_den();
  gd.interior.assign(sol->begin(), sol->begin() + d);
  gd.m.resize(d);
  for (int j = 0; j < d; ++j) {
    Rat mj = gd.interior[j] * Rat(gd.r);
    if (mj.get_den() != 1) return std::nullopt;
    gd.m[j] = mj.get_num();
  }
  std::vector<Vec> wverts;
  for (const auto& v : p.vertices()) wverts.push_back(gd.r * v - gd.m);
  gd.reflexive_witness = build_polytope(wverts);
  return gd;
}

bool is_reflexive(const LatticePolytope& p) {
  auto gd = gorenstein_data(p);
  return gd && gd->r == 1;
}

GorensteinCone cone_over(const LatticePolytope& p) {
  if (p.is_empty()) throw std::invalid_argument("cone_over: empty polytope");
  GorensteinCone c;
  const int d = p.ambient_dim();
  c.ambient = d + 1;
  for (const auto& v : p.vertices()) {
    Vec r = v;
    r.push_back(1);
    c.rays.push_back(std::move(r));
  }
  c.n_sigma = Vec(d + 1, Int(0));
  c.n_sigma[d] = 1;
  Vec base(d + 1, Int(0));
  base[d] = 1;
  IntMatrix basis(d, d + 1);
  for (int i = 0; i < d; ++i) basis.at(i, i) = 1;
  c.support_chart = AffineChart::from_base_and_basis(std::move(base), std::move(basis));
  c.support = p;
  if (p.dim() == p.ambient_dim()) {
    if (auto gd = gorenstein_data(p)) {
      c.index = gd->r;
      Vec md = gd->m;
      md.push_back(gd->r);
      c.m_dual = std::move(md);
    }
  }
  return c;
}

LatticePolytope slice(const GorensteinCone& c, const Int& k) {
  if (k <= 0) throw std::invalid_argument("slice: k must be positive");
  return dilate(c.support, k);
}

DualPair dual_gorenstein(const LatticePolytope& p) {
  auto gd = gorenstein_data(p);
  if (!gd) throw std::invalid_argument("dual_gorenstein: polytope is not Gorenstein");
  DualPair pair;
  pair.p = p;
  pair.data = *gd;
  const int d = p.ambient_dim();
  const Int& r = gd->r;

  for (const auto& f : p.facets()) {
    Vec ray = f.normal;
    ray.push_back(f.offset);
    pair.dual_rays.push_back(std::move(ray));
  }
  pair.m_dual = gd->m;
  pair.m_dual.push_back(r);
  for (const auto& ray : pair.dual_rays)
    if (dot(ray, pair.m_dual) != 1) throw std::logic_error("dual_gorenstein: degree check failed");

  IntMatrix meq(1, d + 1);
  for (int j = 0; j <= d; ++j) meq.at(0, j) = pair.m_dual[j];
  auto y0 = solve_integer(meq, {Int(1)});
  if (!y0) throw std::logic_error("dual_gorenstein: m_dual not primitive");
  std::vector<Vec> kernel = integer_kernel(meq);
  pair.dual_support_chart = AffineChart::from_base_and_basis(*y0, IntMatrix::from_rows(kernel));

  std::vector<Vec> dverts;
  for (const auto& ray : pair.dual_rays) dverts.push_back(pair.dual_support_chart.to_chart(ray));
  pair.p_dual = build_polytope(dverts);
  if (pair.p_dual.n_vertices() != static_cast<int>(pair.dual_rays.size()))
    throw std::logic_error("dual_gorenstein: dual support vertex mismatch");

  // unimodular cone chart y ↦ (support coords of the degree-1 shadow, degree)
  const AffineChart& ch = pair.dual_support_chart;
  Vec proj_y0 = ch.proj.apply(*y0);
  pair.dual_chart_fwd = IntMatrix(d + 1, d + 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= d; ++j)
      pair.dual_chart_fwd.at(i, j) = ch.proj.at(i, j) - proj_y0[i] * pair.m_dual[j];
  for (int j = 0; j <= d; ++j) pair.dual_chart_fwd.at(d, j) = pair.m_dual[j];
  pair.dual_chart_inv = inverse_unimodular(pair.dual_chart_fwd);

  // align dual vertices with rays
  pair.vertex_ray.assign(pair.p_dual.n_vertices(), -1);
  for (int k = 0; k < pair.p_dual.n_vertices(); ++k) {
    for (int j = 0; j < static_cast<int>(dverts.size()); ++j)
      if (dverts[j] == pair.p_dual.vertices()[k]) {
        pair.vertex_ray[k] = j;
        break;
      }
    if (pair.vertex_ray[k] < 0) throw std::logic_error("dual_gorenstein: ray alignment failed");
  }

  // order-reversing face bijection via cone orthogonality
  const FaceLattice& fl = p.face_lattice();
  const FaceLattice& dfl = pair.p_dual.face_lattice();
  pair.dual_face_of.assign(fl.size(), -1);
  for (int fi = 0; fi < fl.size(); ++fi) {
    std::uint64_t dset = 0;
    for (int k = 0; k < pair.p_dual.n_vertices(); ++k) {
      const Vec& ray = pair.dual_rays[pair.vertex_ray[k]];
      bool orth = true;
      for (int vi = 0; vi < p.n_vertices() && orth; ++vi) {
        if (!(fl.faces[fi].vset & (1ull << vi))) continue;
        Vec vx = p.vertices()[vi];
        vx.push_back(1);
        if (dot(vx, ray) != 0) orth = false;
      }
      if (orth) dset |= 1ull << k;
    }
    int di = dfl.index_of(dset);
    if (di < 0) throw std::logic_error("dual_gorenstein: dual face not found");
    pair.dual_face_of[fi] = di;
    if (fl.faces[fi].dim + dfl.faces[di].dim != p.dim() - 1)
      throw std::logic_error("dual_gorenstein: dual face dimension law failed");
  }
  return pair;
}

int dual_face(const DualPair& pair, int face_index) { return pair.dual_face_of[face_index]; }

GorensteinCone dual_cone(const DualPair& pair) {
  GorensteinCone c;
  c.ambient = pair.p.ambient_dim() + 1;
  c.rays = pair.dual_rays;
  c.n_sigma = pair.m_dual;
  c.support_chart = pair.dual_support_chart;
  c.support = pair.p_dual;
  c.index = pair.data.r;
  Vec md(c.ambient, Int(0));
  md[c.ambient - 1] = 1;
  c.m_dual = std::move(md);
  return c;
}

RefinedLatticeReport refined_lattice_check(const LatticePolytope& p) {
  DualPair pair = dual_gorenstein(p);
  const int d = p.ambient_dim();
  const Int& r = pair.data.r;
  RefinedLatticeReport rep;

  // side A: boundary of the dual support in the unrefined lattice, rescaled
  for (const auto& c : lattice_points(pair.p_dual, PointMode::Boundary)) {
    Vec y = pair.dual_support_chart.to_ambient(c);
    y[d] *= r;
    rep.boundary_dual.push_back(std::move(y));
  }

  // side B: the same cone read in the refined lattice (last coordinate / r):
  // in rescaled coordinates z = (y_1..y_d, r·y_{d+1}) the support vertices are
  // (u_F, r·a_F) on the hyperplane ⟨(m, 1), z⟩ = 1
  Vec mz = pair.data.m;
  mz.push_back(1);
  IntMatrix meq(1, d + 1);
  for (int j = 0; j <= d; ++j) meq.at(0, j) = mz[j];
  auto z0 = solve_integer(meq, {Int(1)});
  if (!z0) throw std::logic_error("refined_lattice_check: degree functional not primitive");
  AffineChart chz = AffineChart::from_base_and_basis(*z0, IntMatrix::from_rows(integer_kernel(meq)));
  std::vector<Vec> zverts;
  for (const auto& f : p.facets()) {
    Vec z = f.normal;
    z.push_back(r * f.offset);
    zverts.push_back(chz.to_chart(z));
  }
  LatticePolytope refined = build_polytope(zverts);
  for (const auto& c : lattice_points(refined, PointMode::Boundary))
    rep.boundary_refined.push_back(chz.to_ambient(c));

  std::sort(rep.boundary_dual.begin(), rep.boundary_dual.end());
  std::sort(rep.boundary_refined.begin(), rep.boundary_refined.end());
  rep.equal = rep.boundary_dual == rep.boundary_refined;
  return rep;
}

}  // namespace gorkit
