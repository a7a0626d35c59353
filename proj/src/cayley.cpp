#include "gorkit/cayley.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace gorkit {

namespace {

// all index subsets {i_1 < ... < i_r} of points with sum == target
void subset_sum_search(const std::vector<Vec>& points, int r, const Vec& target, int from,
                       Vec& partial, std::vector<int>& chosen,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(chosen.size()) == r) {
    if (partial == target) out.push_back(chosen);
    return;
  }
  int need = r - static_cast<int>(chosen.size());
  for (int i = from; i + need <= static_cast<int>(points.size()); ++i) {
    for (std::size_t j = 0; j < partial.size(); ++j) partial[j] += points[i][j];
    chosen.push_back(i);
    subset_sum_search(points, r, target, i + 1, partial, chosen, out);
    chosen.pop_back();
    for (std::size_t j = 0; j < partial.size(); ++j) partial[j] -= points[i][j];
  }
}

std::vector<std::vector<int>> subsets_with_sum(const std::vector<Vec>& points, int r,
                                               const Vec& target) {
  std::vector<std::vector<int>> out;
  if (r <= 0 || points.empty()) return out;
  Vec partial(points[0].size(), Int(0));
  std::vector<int> chosen;
  subset_sum_search(points, r, target, 0, partial, chosen, out);
  return out;
}

Vec lift1(const Vec& v) {
  Vec y = v;
  y.push_back(1);
  return y;
}

}  // namespace

LatticePolytope cayley_polytope(const std::vector<LatticePolytope>& parts) {
  if (parts.empty()) throw std::invalid_argument("cayley_polytope: no parts");
  const int r = static_cast<int>(parts.size());
  const int d = parts[0].ambient_dim();
  for (const auto& p : parts) {
    if (p.ambient_dim() != d) throw std::invalid_argument("cayley_polytope: mixed ambient dims");
    if (p.is_empty()) throw std::invalid_argument("cayley_polytope: empty part");
  }
  if (r == 1) return parts[0];
  std::vector<Vec> pts;
  for (int i = 0; i < r; ++i)
    for (const auto& v : parts[i].vertices()) {
      Vec w = v;
      w.resize(d + r - 1, Int(0));
      if (i < r - 1) w[d + i] = 1;
      pts.push_back(std::move(w));
    }
  return build_polytope(pts);
}

CayleyCheck cayley_gorenstein_check(const std::vector<LatticePolytope>& parts) {
  const int r = static_cast<int>(parts.size());
  CayleyCheck rep;
  rep.cayley = cayley_polytope(parts);
  rep.minkowski = parts[0];
  for (int i = 1; i < r; ++i) rep.minkowski = minkowski_sum(rep.minkowski, parts[i]);

  auto gd = gorenstein_data(rep.cayley);
  rep.cayley_gorenstein = gd.has_value() && gd->r == r;
  rep.cayley_index = gd ? gd->r : Int(0);
  rep.cone_reflexive = rep.cayley_gorenstein && is_reflexive(gd->reflexive_witness);

  auto gs = gorenstein_data(rep.minkowski);
  rep.minkowski_reflexive = gs.has_value() && gs->r == 1;

  if (rep.cayley_gorenstein && rep.minkowski_reflexive) {
    const int d = rep.minkowski.ambient_dim();
    Vec expect = gs->m;
    expect.resize(d + r - 1, Int(1));
    rep.m_matches = gd->m == expect;
    rep.m_sigma_dual = gs->m;
    rep.m_sigma_dual.resize(d + r, Int(1));
  }
  rep.all_equivalent = rep.cayley_gorenstein == rep.minkowski_reflexive &&
                       rep.cayley_gorenstein == rep.cone_reflexive;
  return rep;
}

std::vector<CayleyStructure> cayley_structures(const DualPair& pair, long cap) {
  const int r = static_cast<int>(pair.data.r.get_si());
  const int dd = pair.p.ambient_dim();
  std::vector<Vec> pts;
  for (const auto& c : lattice_points(pair.p_dual, PointMode::All, cap))
    pts.push_back(pair.dual_support_chart.to_ambient(c));
  std::sort(pts.begin(), pts.end());
  Vec n_sigma(dd + 1, Int(0));
  n_sigma[dd] = 1;

  std::vector<CayleyStructure> out;
  for (const auto& idx : subsets_with_sum(pts, r, n_sigma)) {
    CayleyStructure cs;
    for (int i : idx) cs.functionals.push_back(pts[i]);
    cs.part_vertex.assign(r, {});
    for (int vi = 0; vi < pair.p.n_vertices(); ++vi) {
      Vec v = lift1(pair.p.vertices()[vi]);
      int hit = -1;
      for (int j = 0; j < r; ++j) {
        Int val = dot(v, cs.functionals[j]);
        if (val == 1) {
          if (hit >= 0) throw std::logic_error("cayley_structures: vertex in two parts");
          hit = j;
        } else if (val != 0) {
          throw std::logic_error("cayley_structures: pairing value outside {0,1}");
        }
      }
      if (hit < 0) throw std::logic_error("cayley_structures: vertex in no part");
      cs.part_vertex[hit].push_back(vi);
    }
    for (int j = 0; j < r; ++j) {
      if (cs.part_vertex[j].empty()) throw std::logic_error("cayley_structures: empty part");
      std::vector<Vec> pv;
      for (int vi : cs.part_vertex[j]) pv.push_back(pair.p.vertices()[vi]);
      cs.parts.push_back(build_polytope(pv));
    }
    out.push_back(std::move(cs));
  }
  std::sort(out.begin(), out.end(),
            [](const CayleyStructure& a, const CayleyStructure& b) { return a.functionals < b.functionals; });
  return out;
}

std::vector<SpecialSimplex> special_simplices(const LatticePolytope& p, long cap) {
  auto gd = gorenstein_data(p);
  if (!gd) throw std::invalid_argument("special_simplices: polytope is not Gorenstein");
  const int r = static_cast<int>(gd->r.get_si());
  std::vector<Vec> pts = lattice_points(p, PointMode::All, cap);
  std::sort(pts.begin(), pts.end());

  std::vector<SpecialSimplex> out;
  for (const auto& idx : subsets_with_sum(pts, r, gd->m)) {
    SpecialSimplex s;
    for (int i : idx) s.points.push_back(pts[i]);
    if (affine_rank(s.points) != r - 1) continue;
    for (const auto& f : p.facets()) {
      int on = 0;
      for (const auto& n : s.points)
        if (dot(f.normal, n) + f.offset == 0) ++on;
      if (on != r - 1) throw std::logic_error("special_simplices: facet characterization failed");
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const SpecialSimplex& a, const SpecialSimplex& b) { return a.points < b.points; });
  return out;
}

SpecialProjection project_along_special(const LatticePolytope& p, const std::vector<Vec>& simplex,
                                        long cap) {
  auto gd = gorenstein_data(p);
  if (!gd) throw std::invalid_argument("project_along_special: polytope is not Gorenstein");
  const int r = static_cast<int>(gd->r.get_si());
  const int d = p.ambient_dim();
  if (static_cast<int>(simplex.size()) != r)
    throw std::invalid_argument("project_along_special: simplex size must equal the index");
  std::vector<Vec> pts = simplex;
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw std::invalid_argument("project_along_special: repeated simplex point");
  Vec sum(d, Int(0));
  for (const auto& n : pts) {
    if (!p.contains(n)) throw std::invalid_argument("project_along_special: point outside polytope");
    sum = sum + n;
  }
  if (sum != gd->m) throw std::invalid_argument("project_along_special: simplex is not special");
  if (affine_rank(pts) != r - 1)
    throw std::invalid_argument("project_along_special: points not affinely independent");
  for (const auto& f : p.facets()) {
    int on = 0;
    for (const auto& n : pts)
      if (dot(f.normal, n) + f.offset == 0) ++on;
    if (on != r - 1) throw std::invalid_argument("project_along_special: simplex is not special");
  }

  std::vector<Vec> kernel;
  for (const auto& n : pts) kernel.push_back(lift1(n));
  QuotientMap qm = quotient_projection(kernel, d + 1);

  SpecialProjection res;
  res.quotient_map = qm.matrix;
  std::vector<Vec> image;
  for (const auto& v : p.vertices()) image.push_back(qm.matrix.apply(lift1(v)));
  res.projected = build_polytope(image);
  if (res.projected.dim() != d + 1 - r)
    throw std::logic_error("project_along_special: wrong projected dimension");
  if (!is_reflexive(res.projected))
    throw std::logic_error("project_along_special: projection is not reflexive");
  (void)cap;
  return res;
}

GorensteinCone direct_sum(const GorensteinCone& a, const GorensteinCone& b) {
  GorensteinCone c;
  c.ambient = a.ambient + b.ambient;
  for (const auto& ra : a.rays) {
    Vec v = ra;
    v.resize(c.ambient, Int(0));
    c.rays.push_back(std::move(v));
  }
  for (const auto& rb : b.rays) {
    Vec v(a.ambient, Int(0));
    v.insert(v.end(), rb.begin(), rb.end());
    c.rays.push_back(std::move(v));
  }
  c.n_sigma = a.n_sigma;
  c.n_sigma.insert(c.n_sigma.end(), b.n_sigma.begin(), b.n_sigma.end());

  IntMatrix meq(1, c.ambient);
  for (int j = 0; j < c.ambient; ++j) meq.at(0, j) = c.n_sigma[j];
  auto y0 = solve_integer(meq, {Int(1)});
  if (!y0) throw std::invalid_argument("direct_sum: degree functional not primitive");
  c.support_chart = AffineChart::from_base_and_basis(*y0, IntMatrix::from_rows(integer_kernel(meq)));
  std::vector<Vec> sv;
  for (const auto& ray : c.rays) sv.push_back(c.support_chart.to_chart(ray));
  c.support = build_polytope(sv);
  if (c.support.dim() == c.support.ambient_dim()) {
    if (auto gd = gorenstein_data(c.support)) c.index = gd->r;
  }
  if (a.index && b.index && c.index && *c.index != *a.index + *b.index)
    throw std::logic_error("direct_sum: index is not additive");
  if (a.m_dual && b.m_dual) {
    Vec md = *a.m_dual;
    md.insert(md.end(), b.m_dual->begin(), b.m_dual->end());
    c.m_dual = std::move(md);
  }
  return c;
}

bool integrally_closed(const LatticePolytope& p, long cap) {
  if (p.is_empty() || p.dim() <= 0) return true;
  LatticePolytope q = p.dim() == p.ambient_dim() ? p : build_polytope(p.chart_vertices());
  auto gd = gorenstein_data(q);
  const long upto = gd ? gd->r.get_si() : q.dim();
  if (upto < 2) return true;

  std::vector<Vec> s1 = lattice_points(q, PointMode::All, cap);
  std::set<Vec> s1set(s1.begin(), s1.end());
  std::map<std::pair<Vec, long>, bool> memo;

  std::function<bool(const Vec&, long)> decompose = [&](const Vec& z, long k) -> bool {
    if (k == 1) return s1set.count(z) > 0;
    auto key = std::make_pair(z, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& a : s1) {
      if (decompose(z - a, k - 1)) {
        ok = true;
        break;
      }
    }
    memo[key] = ok;
    return ok;
  };

  for (long k = 2; k <= upto; ++k)
    for (const auto& z : lattice_points(dilate(q, Int(k)), PointMode::All, cap))
      if (!decompose(z, k)) return false;
  return true;
}

}  // namespace gorkit
