#include "gorkit/nef.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace gorkit {

namespace {

Vec zero_vec(int d) { return Vec(d, Int(0)); }

LatticePolytope minkowski_all(const std::vector<LatticePolytope>& parts) {
  LatticePolytope s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s = minkowski_sum(s, parts[i]);
  return s;
}

bool all_zero(const std::vector<Vec>& vs) {
  for (const auto& v : vs)
    if (!std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; })) return false;
  return true;
}

bool all_positive_dim(const std::vector<LatticePolytope>& parts) {
  return std::all_of(parts.begin(), parts.end(),
                     [](const LatticePolytope& p) { return p.dim() > 0; });
}

/** Reflexivity relative to the affine span (dim ≤ 0 counts as reflexive). */
bool reflexive_in_span(const LatticePolytope& p) {
  if (p.dim() <= 0) return true;
  if (p.dim() == p.ambient_dim()) return is_reflexive(p);
  return is_reflexive(build_polytope(p.chart_vertices()));
}

std::optional<Vec> integral(const QVec& q) {
  Vec v;
  v.reserve(q.size());
  for (const auto& c : q) {
    if (c.get_den() != 1) return std::nullopt;
    v.push_back(c.get_num());
  }
  return v;
}

LatticePolytope lattice_polytope_from_facets(const std::vector<Facet>& facets, int d,
                                             const char* who) {
  std::vector<Vec> verts;
  for (const auto& q : vertices_from_facets(facets, d)) {
    auto v = integral(q);
    if (!v) throw std::logic_error(std::string(who) + ": non-lattice vertex");
    verts.push_back(std::move(*v));
  }
  if (verts.empty()) throw std::logic_error(std::string(who) + ": empty intersection");
  return build_polytope(verts);
}

NefPartition assemble(std::vector<LatticePolytope> parts, std::vector<Vec> base) {
  if (parts.empty()) throw std::invalid_argument("nef partition: no parts");
  const int d = parts[0].ambient_dim();
  for (const auto& p : parts) {
    if (p.is_empty()) throw std::invalid_argument("nef partition: empty part");
    if (p.ambient_dim() != d) throw std::invalid_argument("nef partition: mixed ambient dims");
  }
  if (base.size() != parts.size())
    throw std::invalid_argument("nef partition: one base point per part required");

  NefPartition np;
  np.r = static_cast<int>(parts.size());
  np.sum = minkowski_all(parts);
  if (np.sum.dim() != d) throw std::invalid_argument("nef partition: sum not full-dimensional");
  auto gd = gorenstein_data(np.sum);
  if (!gd || gd->r != 1) throw std::invalid_argument("nef partition: sum not reflexive");
  np.m = gd->m;

  Vec s = zero_vec(d);
  for (int i = 0; i < np.r; ++i) {
    if (!parts[i].contains(base[i]))
      throw std::invalid_argument("nef partition: base point outside its part");
    s = s + base[i];
  }
  if (s != np.m) throw std::invalid_argument("nef partition: base points do not sum to m");

  np.centered = all_zero(base);
  np.proper = all_positive_dim(parts);
  np.parts = std::move(parts);
  np.base_points = std::move(base);
  return np;
}

void require_centered(const NefPartition& np, const char* who) {
  if (!np.centered) throw std::invalid_argument(std::string(who) + ": partition not centered");
}

Int min_pairing(const LatticePolytope& p, const Vec& y) {
  Int best = dot(p.vertices()[0], y);
  for (const auto& u : p.vertices()) best = std::min(best, dot(u, y));
  return best;
}

}  // namespace

NefPartition make_nef_partition(const std::vector<LatticePolytope>& parts,
                                const std::vector<Vec>& base_points) {
  return assemble(parts, base_points);
}

std::optional<NefPartition> detect_nef(const std::vector<LatticePolytope>& parts, long cap) {
  if (parts.empty()) throw std::invalid_argument("detect_nef: no parts");
  const int d = parts[0].ambient_dim();
  LatticePolytope sum = minkowski_all(parts);
  if (sum.dim() != d) throw std::invalid_argument("detect_nef: sum not full-dimensional");
  auto gd = gorenstein_data(sum);
  if (!gd || gd->r != 1) return std::nullopt;

  const int r = static_cast<int>(parts.size());
  std::vector<std::vector<Vec>> pts(r);
  for (int i = 0; i < r; ++i) pts[i] = lattice_points(parts[i], PointMode::All, cap);

  // componentwise suffix bounds for pruning the lexicographic search
  std::vector<Vec> lo(r + 1, zero_vec(d)), hi(r + 1, zero_vec(d));
  for (int i = r - 1; i >= 0; --i) {
    Vec plo = pts[i][0], phi = pts[i][0];
    for (const auto& q : pts[i])
      for (int c = 0; c < d; ++c) {
        plo[c] = std::min(plo[c], q[c]);
        phi[c] = std::max(phi[c], q[c]);
      }
    lo[i] = lo[i + 1] + plo;
    hi[i] = hi[i + 1] + phi;
  }

  std::vector<Vec> base(r);
  std::function<bool(int, const Vec&)> search = [&](int i, const Vec& rest) -> bool {
    if (i == r) return std::all_of(rest.begin(), rest.end(), [](const Int& c) { return c == 0; });
    for (int c = 0; c < d; ++c)
      if (rest[c] < lo[i][c] || rest[c] > hi[i][c]) return false;
    for (const auto& q : pts[i]) {
      if (search(i + 1, rest - q)) {
        base[i] = q;
        return true;
      }
    }
    return false;
  };
  if (!search(0, gd->m)) return std::nullopt;
  return assemble(parts, base);
}

CenteredNef center_and_properize(const NefPartition& np) {
  CenteredNef res;
  std::vector<LatticePolytope> parts;
  std::vector<Vec> base;
  for (int i = 0; i < np.r; ++i) {
    LatticePolytope t = translate(np.parts[i], Int(-1) * np.base_points[i]);
    if (t.dim() == 0) {
      ++res.dropped;
      continue;
    }
    parts.push_back(std::move(t));
    base.push_back(zero_vec(np.sum.ambient_dim()));
  }
  if (parts.empty()) throw std::invalid_argument("center_and_properize: every part is a point");
  res.np = assemble(std::move(parts), std::move(base));
  return res;
}

NefPartition dual_nef(const NefPartition& np) {
  require_centered(np, "dual_nef");
  const int d = np.sum.ambient_dim();
  std::vector<LatticePolytope> duals;
  for (int i = 0; i < np.r; ++i) {
    std::vector<Facet> facets;
    for (int j = 0; j < np.r; ++j) {
      const Int delta = i == j ? 1 : 0;
      for (const auto& u : np.parts[j].vertices()) {
        if (is_zero(u) && delta == 0) continue;
        facets.push_back(Facet{u, delta});
      }
    }
    duals.push_back(lattice_polytope_from_facets(facets, d, "dual_nef"));
  }
  NefPartition dual = assemble(std::move(duals), std::vector<Vec>(np.r, zero_vec(d)));
  if (!is_reflexive(dual.sum)) throw std::logic_error("dual_nef: dual sum not reflexive");
  for (int i = 0; i < np.r; ++i)
    if ((np.parts[i].dim() == 0) != (dual.parts[i].dim() == 0))
      throw std::logic_error("dual_nef: properness not preserved");
  return dual;
}

std::vector<std::vector<Vec>> nef_vertex_formula(const NefPartition& np,
                                                 const LatticePolytope& dual_of_sum) {
  require_centered(np, "nef_vertex_formula");
  std::vector<std::vector<Vec>> out(np.r);
  for (int i = 0; i < np.r; ++i) {
    for (const auto& v : dual_of_sum.vertices())
      if (min_pairing(np.parts[i], v) == -1) out[i].push_back(v);
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

NefPartition collect(const NefPartition& np, const std::vector<std::vector<int>>& blocks,
                     long cap) {
  std::vector<bool> used(np.r, false);
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("collect: empty block");
    for (int i : block) {
      if (i < 0 || i >= np.r || used[i]) throw std::invalid_argument("collect: invalid blocks");
      used[i] = true;
    }
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw std::invalid_argument("collect: blocks do not cover all parts");

  std::vector<LatticePolytope> parts;
  std::vector<Vec> base;
  for (const auto& block : blocks) {
    std::vector<LatticePolytope> sel;
    Vec b = zero_vec(np.sum.ambient_dim());
    for (int i : block) {
      sel.push_back(np.parts[i]);
      b = b + np.base_points[i];
    }
    parts.push_back(minkowski_all(sel));
    base.push_back(std::move(b));
  }

  if (np.centered) {
    // support-function description of each collected part
    NefPartition dual = dual_nef(np);
    std::vector<Vec> sum_pts = lattice_points(np.sum, PointMode::All, cap);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      std::vector<Vec> kept;
      for (const auto& x : sum_pts) {
        bool ok = true;
        for (int j = 0; j < np.r && ok; ++j) {
          if (std::find(blocks[k].begin(), blocks[k].end(), j) != blocks[k].end()) continue;
          ok = min_pairing(dual.parts[j], x) >= 0;
        }
        if (ok) kept.push_back(x);
      }
      if (build_polytope(kept) != parts[k])
        throw std::logic_error("collect: support-function description mismatch");
    }
  }
  return assemble(std::move(parts), std::move(base));
}

NefProjection project_nef(const NefPartition& np, const std::vector<int>& j_set) {
  require_centered(np, "project_nef");
  const int d = np.sum.ambient_dim();
  std::set<int> jset(j_set.begin(), j_set.end());
  if (jset.empty() || static_cast<int>(jset.size()) == np.r ||
      jset.size() != j_set.size() || *jset.begin() < 0 || *jset.rbegin() >= np.r)
    throw std::invalid_argument("project_nef: J must be a proper nonempty index subset");

  std::vector<LatticePolytope> jparts;
  for (int j : jset) jparts.push_back(np.parts[j]);
  LatticePolytope delta_j = minkowski_all(jparts);
  if (delta_j.dim() >= d)
    throw std::invalid_argument("project_nef: span of the selected parts is full-dimensional");

  NefProjection res;
  QuotientMap qm = quotient_projection(delta_j.vertices(), d);
  res.projection = qm.matrix;
  const int k = res.projection.rows();

  std::vector<LatticePolytope> proj_parts;
  for (const auto& part : np.parts) {
    std::vector<Vec> img;
    for (const auto& v : part.vertices()) img.push_back(res.projection.apply(v));
    proj_parts.push_back(build_polytope(img));
  }
  res.projected = assemble(std::move(proj_parts), std::vector<Vec>(np.r, zero_vec(k)));
  std::vector<Vec> sum_img;
  for (const auto& v : np.sum.vertices()) sum_img.push_back(res.projection.apply(v));
  if (res.projected.sum != build_polytope(sum_img))
    throw std::logic_error("project_nef: projected sum mismatch");

  // F = ∇_I ∩ (Δ^J)^⊥ is the smallest face of ∇_I containing 0
  NefPartition dual = dual_nef(np);
  std::vector<LatticePolytope> iparts;
  for (int i = 0; i < np.r; ++i)
    if (!jset.count(i)) iparts.push_back(dual.parts[i]);
  LatticePolytope nabla_i = convex_hull_union(iparts);
  std::vector<Vec> fverts;
  if (nabla_i.dim() == 0) {
    fverts = nabla_i.vertices();
  } else {
    Vec origin = *nabla_i.chart().try_to_chart(zero_vec(d));
    for (int vi = 0; vi < nabla_i.n_vertices(); ++vi) {
      bool on_all = true;
      for (const auto& f : nabla_i.chart_facets()) {
        if (dot(f.normal, origin) + f.offset != 0) continue;
        if (dot(f.normal, nabla_i.chart_vertices()[vi]) + f.offset != 0) on_all = false;
      }
      if (on_all) fverts.push_back(nabla_i.vertices()[vi]);
    }
    if (fverts.empty()) fverts.push_back(zero_vec(d));
  }
  res.face = build_polytope(fverts);

  // the face is cut out by orthogonality to the projected-away span
  std::vector<Vec> ortho;
  for (const auto& y : lattice_points(nabla_i)) {
    bool perp = true;
    for (const auto& v : delta_j.vertices())
      if (dot(v, y) != 0) perp = false;
    if (perp) ortho.push_back(y);
  }
  if (build_polytope(ortho) != res.face)
    throw std::logic_error("project_nef: face is not the orthogonal slice");
  if (res.face.dim() + delta_j.dim() != d)
    throw std::logic_error("project_nef: dimension law violated");

  // dual quotient coordinates: y = projectionᵀ · c
  IntMatrix tt = res.projection.transposed();
  auto to_chart = [&](const Vec& y) {
    auto c = solve_integer(tt, y);
    if (!c) throw std::logic_error("project_nef: face point outside the dual quotient lattice");
    return *c;
  };
  std::vector<Vec> fchart;
  for (const auto& y : res.face.vertices()) fchart.push_back(to_chart(y));
  res.face_chart = build_polytope(fchart);

  std::vector<LatticePolytope> dual_parts;
  for (int i = 0; i < np.r; ++i) {
    std::vector<Vec> pts;
    for (const auto& y : lattice_points(dual.parts[i]))
      if (res.face.contains(y)) pts.push_back(to_chart(y));
    dual_parts.push_back(build_polytope(pts));
  }
  res.dual_projected = assemble(std::move(dual_parts), std::vector<Vec>(np.r, zero_vec(k)));
  return res;
}

NefDecomposition decompose_irreducible(const NefPartition& np) {
  require_centered(np, "decompose_irreducible");
  if (!np.proper) throw std::invalid_argument("decompose_irreducible: partition not proper");
  const int d = np.sum.ambient_dim();
  const int r = np.r;
  if (r > 30) throw std::invalid_argument("decompose_irreducible: too many parts");

  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << r); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  NefDecomposition res;
  std::vector<unsigned> accepted;
  for (unsigned m : masks) {
    bool superset = false;
    for (unsigned a : accepted)
      if ((a & m) == a && a != m) superset = true;
    if (superset) continue;
    std::vector<LatticePolytope> sel;
    for (int i = 0; i < r; ++i)
      if (m & (1u << i)) sel.push_back(np.parts[i]);
    if (minkowski_all(sel).strictly_contains(zero_vec(d))) accepted.push_back(m);
  }

  unsigned covered = 0;
  for (unsigned a : accepted) {
    if (covered & a) throw std::logic_error("decompose_irreducible: blocks overlap");
    covered |= a;
  }
  if (covered != (1u << r) - 1)
    throw std::logic_error("decompose_irreducible: blocks do not cover all parts");

  std::sort(accepted.begin(), accepted.end(),
            [](unsigned a, unsigned b) { return (a & -a) < (b & -b); });

  long dim_total = 0;
  std::vector<Vec> all_span;
  for (unsigned mask : accepted) {
    std::vector<int> block;
    std::vector<LatticePolytope> sel;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) {
        block.push_back(i);
        sel.push_back(np.parts[i]);
      }
    res.blocks.push_back(block);
    LatticePolytope block_sum = minkowski_all(sel);
    dim_total += block_sum.dim();
    for (const auto& v : block_sum.vertices()) all_span.push_back(v);

    // component in lattice coordinates of its own span
    std::vector<Vec> basis = saturated_row_span(block_sum.vertices(), d);
    IntMatrix bt = IntMatrix::from_rows(basis).transposed();
    std::vector<LatticePolytope> cparts;
    for (const auto& part : sel) {
      std::vector<Vec> cverts;
      for (const auto& v : part.vertices()) {
        auto c = solve_integer(bt, v);
        if (!c) throw std::logic_error("decompose_irreducible: part outside the block span");
        cverts.push_back(std::move(*c));
      }
      cparts.push_back(build_polytope(cverts));
    }
    res.components.push_back(assemble(
        std::move(cparts), std::vector<Vec>(block.size(), zero_vec(block_sum.dim()))));
  }
  res.direct_sum = dim_total == d && rank_of(IntMatrix::from_rows(all_span)) == d;
  if (!res.direct_sum) throw std::logic_error("decompose_irreducible: spans are not a direct sum");

  res.length_bound = r <= 2 * d;
  if (r == 2 * d) {
    LatticePolytope hull = convex_hull_union(np.parts);
    bool cross = hull.n_vertices() == 2 * d &&
                 static_cast<long>(hull.facets().size()) == (1L << d);
    for (const auto& f : hull.facets()) {
      int on = 0;
      for (const auto& v : hull.vertices())
        if (dot(f.normal, v) + f.offset == 0) ++on;
      if (on != d) cross = false;
    }
    res.hull_crosspolytope = cross;
  }
  return res;
}

CancelReport cancel_check(const LatticePolytope& p, const LatticePolytope& q, long cap) {
  if (p.ambient_dim() != q.ambient_dim())
    throw std::invalid_argument("cancel_check: mixed ambient dims");
  const int d = p.ambient_dim();
  LatticePolytope sum = minkowski_sum(p, q);
  if (sum.dim() != d) throw std::invalid_argument("cancel_check: sum not full-dimensional");

  CancelReport rep;
  auto gd = gorenstein_data(sum);
  rep.sum_reflexive = gd.has_value() && gd->r == 1;
  std::vector<Vec> relint = lattice_points(p, PointMode::Interior, cap);
  rep.p_has_interior_point = !relint.empty();
  rep.applies = rep.sum_reflexive && rep.p_has_interior_point;
  if (!rep.applies) return rep;

  const Vec& p0 = relint[0];
  Vec q0 = gd->m - p0;
  if (!q.contains(q0)) throw std::logic_error("cancel_check: matching base point missing");
  rep.p_reflexive = reflexive_in_span(translate(p, Int(-1) * p0));
  rep.q_reflexive = reflexive_in_span(translate(q, Int(-1) * q0));
  if (!rep.p_reflexive || !rep.q_reflexive)
    throw std::logic_error("cancel_check: recentered part not reflexive");
  rep.partition = assemble({p, q}, {p0, q0});
  return rep;
}

CountIdentityReport lattice_point_count_identity(const NefPartition& np, long cap) {
  require_centered(np, "lattice_point_count_identity");
  const int d = np.sum.ambient_dim();
  RationalPolytope dual = dual_polytope(np.sum, QVec(d, Rat(0)));
  if (!dual.is_lattice())
    throw std::logic_error("lattice_point_count_identity: dual is not a lattice polytope");

  CountIdentityReport rep;
  rep.dual_count = count_lattice_points(dual.to_lattice(), PointMode::All, cap);
  rep.parts_count = Int(1) - np.r;
  for (const auto& nabla : dual_nef(np).parts)
    rep.parts_count += count_lattice_points(nabla, PointMode::All, cap);
  rep.equal = rep.dual_count == rep.parts_count;
  return rep;
}

bool cone_intersection_trivial(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> ga, gb;
  for (const auto& v : a)
    if (!is_zero(v)) ga.push_back(v);
  for (const auto& v : b)
    if (!is_zero(v)) gb.push_back(v);
  if (ga.empty() || gb.empty()) return true;
  const int d = static_cast<int>(ga[0].size());
  const int na = static_cast<int>(ga.size()), nb = static_cast<int>(gb.size());
  const int n = na + nb;

  // common nonzero ray ⟺ some vertex of the coefficient polytope
  // {λ, μ ≥ 0, Σλ + Σμ = 1, Σλ_i a_i = Σμ_j b_j} has a nonzero combination
  std::vector<Facet> facets;
  for (int i = 0; i < n; ++i) {
    Vec e = zero_vec(n);
    e[i] = 1;
    facets.push_back(Facet{std::move(e), Int(0)});
  }
  facets.push_back(Facet{Vec(n, Int(-1)), Int(1)});
  facets.push_back(Facet{Vec(n, Int(1)), Int(-1)});
  for (int c = 0; c < d; ++c) {
    Vec row(n);
    for (int i = 0; i < na; ++i) row[i] = ga[i][c];
    for (int j = 0; j < nb; ++j) row[na + j] = -gb[j][c];
    facets.push_back(Facet{row, Int(0)});
    for (auto& x : row) x = -x;
    facets.push_back(Facet{std::move(row), Int(0)});
  }

  for (const auto& vert : vertices_from_facets(facets, n)) {
    for (int c = 0; c < d; ++c) {
      Rat x(0);
      for (int i = 0; i < na; ++i) x += vert[i] * Rat(ga[i][c]);
      if (x != 0) return false;
    }
  }
  return true;
}

}  // namespace gorkit
