#include "gorkit/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gorkit {

namespace {

struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  static Bits intersect(const Bits& a, const Bits& b) {
    Bits r;
    r.w.resize(a.w.size());
    for (std::size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  std::vector<int> indices() const {
    std::vector<int> idx;
    for (std::size_t b = 0; b < w.size(); ++b)
      for (int k = 0; k < 64; ++k)
        if (w[b] & (1ull << k)) idx.push_back(static_cast<int>(b) * 64 + k);
    return idx;
  }
};

struct Ray {
  Vec v;
  Bits zero;
};

long rank_of_rows(const std::vector<const Vec*>& rows, int n) {
  if (rows.empty()) return 0;
  std::vector<QVec> w;
  w.reserve(rows.size());
  for (const Vec* r : rows) w.push_back(to_qvec(*r));
  long rank = 0;
  int row = 0;
  for (int c = 0; c < n && row < static_cast<int>(w.size()); ++c) {
    int p = -1;
    for (int i = row; i < static_cast<int>(w.size()); ++i)
      if (w[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(w[row], w[p]);
    for (int i = row + 1; i < static_cast<int>(w.size()); ++i) {
      if (w[i][c] == 0) continue;
      Rat f = w[i][c] / w[row][c];
      for (int j = c; j < n; ++j) w[i][j] -= f * w[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<Vec> dual_cone_rays(const std::vector<Vec>& generators) {
  std::vector<Vec> gens;
  for (const auto& g : generators)
    if (!is_zero(g)) gens.push_back(g);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty()) throw std::invalid_argument("dual_cone_rays: no nonzero generators");
  const int n = static_cast<int>(gens[0].size());

  // greedy linearly independent subset for a simplicial start
  std::vector<int> init;
  {
    std::vector<const Vec*> rows;
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
      rows.push_back(&gens[i]);
      if (rank_of_rows(rows, n) == static_cast<long>(rows.size()))
        init.push_back(i);
      else
        rows.pop_back();
    }
  }
  if (static_cast<int>(init.size()) != n)
    throw std::invalid_argument("dual_cone_rays: generators do not span");

  std::vector<int> order = init;
  {
    std::set<int> used(init.begin(), init.end());
    for (int i = 0; i < static_cast<int>(gens.size()); ++i)
      if (!used.count(i)) order.push_back(i);
  }
  const int m = static_cast<int>(order.size());

  // simplicial cone rays: signed adjugate columns of the initial rows
  std::vector<Ray> rays;
  {
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = gens[order[i]][j];
    Int d = det(a);
    std::vector<QVec> inv = inverse_rational(a);
    for (int k = 0; k < n; ++k) {
      Vec r(n);
      for (int i = 0; i < n; ++i) {
        Rat e = inv[i][k] * Rat(d);
        if (e.get_den() != 1) throw std::logic_error("dual_cone_rays: adjugate not integral");
        r[i] = d > 0 ? e.get_num() : -e.get_num();
      }
      Ray ray{primitive(std::move(r)), Bits(m)};
      for (int l = 0; l < n; ++l)
        if (l != k) ray.zero.set(l);
      rays.push_back(std::move(ray));
    }
  }

  for (int ci = n; ci < m; ++ci) {
    const Vec& g = gens[order[ci]];
    std::vector<Int> s(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(g, rays[i].v);
      if (s[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (s[i] == 0) rays[i].zero.set(ci);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (s[i] >= 0) {
        Ray r = rays[i];
        if (s[i] == 0) r.zero.set(ci);
        next.push_back(std::move(r));
      }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (s[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (s[q] >= 0) continue;
        Bits z = Bits::intersect(rays[p].zero, rays[q].zero);
        if (z.count() < n - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && z.subset_of(rays[r].zero)) adjacent = false;
        if (!adjacent) continue;
        // exact confirmation: the common tight constraints cut out a 2-face
        std::vector<const Vec*> tight;
        for (int idx : z.indices()) tight.push_back(&gens[order[idx]]);
        if (rank_of_rows(tight, n) != n - 2) continue;
        Ray nr;
        nr.v = primitive(s[p] * rays[q].v - s[q] * rays[p].v);
        nr.zero = z;
        nr.zero.set(ci);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  std::vector<Vec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<QVec> vertices_from_facets(const std::vector<Facet>& facets, int d) {
  std::vector<Vec> gens;
  gens.reserve(facets.size());
  for (const auto& f : facets) {
    Vec g = f.normal;
    g.push_back(f.offset);
    gens.push_back(std::move(g));
  }
  std::vector<Vec> rays = dual_cone_rays(gens);
  std::vector<QVec> verts;
  for (const auto& r : rays) {
    const Int& t = r[d];
    if (t <= 0) throw std::invalid_argument("vertices_from_facets: unbounded system");
    QVec v(d);
    for (int j = 0; j < d; ++j) v[j] = Rat(r[j]) / Rat(t);
    verts.push_back(std::move(v));
  }
  std::sort(verts.begin(), verts.end());
  return verts;
}

struct LatticePolytope::Cache {
  std::mutex mtx;
  std::optional<FaceLattice> fl;
};

LatticePolytope LatticePolytope::empty(int ambient) {
  LatticePolytope p;
  p.ambient_ = ambient;
  return p;
}

LatticePolytope build_polytope(const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("build_polytope: empty point list");
  LatticePolytope p;
  p.ambient_ = static_cast<int>(points[0].size());
  std::vector<Vec> pts = points;
  for (const auto& q : pts)
    if (static_cast<int>(q.size()) != p.ambient_) throw std::invalid_argument("build_polytope: mixed dimensions");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  p.chart_ = AffineChart::from_points(pts);
  p.dim_ = p.chart_.dim;
  p.cache_ = std::make_shared<LatticePolytope::Cache>();

  std::vector<Vec> cpts;
  cpts.reserve(pts.size());
  for (const auto& q : pts) cpts.push_back(p.chart_.to_chart(q));

  if (p.dim_ == 0) {
    p.verts_ = pts;
    p.chart_verts_ = cpts;
    return p;
  }

  // facets in the chart
  std::vector<Vec> gens;
  gens.reserve(cpts.size());
  for (const auto& q : cpts) {
    Vec g = q;
    g.push_back(1);
    gens.push_back(std::move(g));
  }
  std::vector<Vec> rays = dual_cone_rays(gens);
  for (const auto& r : rays) {
    Vec u(r.begin(), r.end() - 1);
    if (is_zero(u)) continue;
    p.chart_facets_.push_back(Facet{std::move(u), r.back()});
  }

  // vertices: points whose tight facet normals span
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(cpts.size()); ++i) {
    std::vector<const Vec*> tight;
    for (const auto& f : p.chart_facets_)
      if (dot(f.normal, cpts[i]) + f.offset == 0) tight.push_back(&f.normal);
    if (rank_of_rows(tight, p.dim_) == p.dim_) keep.push_back(i);
  }
  for (int i : keep) {
    p.verts_.push_back(pts[i]);
    p.chart_verts_.push_back(cpts[i]);
  }

  // ambient-coordinate facet inequalities (valid on all of P)
  for (const auto& f : p.chart_facets_) {
    Vec u = p.chart_.proj.transposed().apply(f.normal);
    Int off = f.offset - dot(u, p.chart_.base);
    p.facets_.push_back(Facet{std::move(u), std::move(off)});
  }
  return p;
}

bool LatticePolytope::contains(const Vec& x) const {
  if (is_empty()) return false;
  auto c = chart_.try_to_chart(x);
  if (!c) return false;
  for (const auto& f : chart_facets_)
    if (dot(f.normal, *c) + f.offset < 0) return false;
  return true;
}

bool LatticePolytope::strictly_contains(const Vec& x) const {
  if (is_empty()) return false;
  auto c = chart_.try_to_chart(x);
  if (!c) return false;
  if (dim_ == 0) return true;
  for (const auto& f : chart_facets_)
    if (dot(f.normal, *c) + f.offset <= 0) return false;
  return true;
}

int FaceLattice::index_of(std::uint64_t vset) const {
  for (int i = 0; i < size(); ++i)
    if (faces[i].vset == vset) return i;
  return -1;
}

const FaceLattice& LatticePolytope::face_lattice() const {
  static const FaceLattice empty_fl{{FaceLattice::Face{0, -1}}};
  if (is_empty()) return empty_fl;
  std::lock_guard<std::mutex> lock(cache_->mtx);
  if (cache_->fl) return *cache_->fl;
  const int n = n_vertices();
  if (n > 64) throw std::invalid_argument("face_lattice: more than 64 vertices unsupported");
  const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;

  std::vector<std::uint64_t> facet_sets;
  for (const auto& f : chart_facets_) {
    std::uint64_t s = 0;
    for (int i = 0; i < n; ++i)
      if (dot(f.normal, chart_verts_[i]) + f.offset == 0) s |= 1ull << i;
    facet_sets.push_back(s);
  }

  std::set<std::uint64_t> seen{full, 0};
  std::vector<std::uint64_t> work{full};
  while (!work.empty()) {
    std::uint64_t cur = work.back();
    work.pop_back();
    for (std::uint64_t fs : facet_sets) {
      std::uint64_t nxt = cur & fs;
      if (nxt != cur && seen.insert(nxt).second) work.push_back(nxt);
    }
  }

  FaceLattice fl;
  for (std::uint64_t s : seen) {
    std::vector<Vec> vs;
    for (int i = 0; i < n; ++i)
      if (s & (1ull << i)) vs.push_back(verts_[i]);
    fl.faces.push_back(FaceLattice::Face{s, static_cast<int>(affine_rank(vs))});
  }
  std::sort(fl.faces.begin(), fl.faces.end(),
            [](const FaceLattice::Face& a, const FaceLattice::Face& b) {
              return a.dim != b.dim ? a.dim < b.dim : a.vset < b.vset;
            });
  cache_->fl = std::move(fl);
  return *cache_->fl;
}

FaceLattice face_lattice(const LatticePolytope& p) { return p.face_lattice(); }

std::vector<Vec> LatticePolytope::face_vertices(std::uint64_t vset) const {
  std::vector<Vec> vs;
  for (int i = 0; i < n_vertices(); ++i)
    if (vset & (1ull << i)) vs.push_back(verts_[i]);
  return vs;
}

LatticePolytope LatticePolytope::face_polytope(int face_index) const {
  const FaceLattice& fl = face_lattice();
  std::uint64_t s = fl.faces[face_index].vset;
  if (s == 0) return LatticePolytope::empty(ambient_);
  return build_polytope(face_vertices(s));
}

bool RationalPolytope::is_lattice() const {
  for (const auto& v : vertices)
    for (const auto& c : v)
      if (c.get_den() != 1) return false;
  return true;
}

LatticePolytope RationalPolytope::to_lattice() const {
  if (!is_lattice()) throw std::invalid_argument("to_lattice: non-integral vertex");
  std::vector<Vec> vs;
  for (const auto& v : vertices) {
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].get_num();
    vs.push_back(std::move(w));
  }
  return build_polytope(vs);
}

RationalPolytope dual_polytope(const LatticePolytope& p, const QVec& m) {
  if (p.dim() != p.ambient_dim()) throw std::invalid_argument("dual_polytope: polytope not full-dimensional");
  RationalPolytope q;
  q.ambient = p.ambient_dim();
  for (const auto& f : p.facets()) {
    Rat denom = f.offset;
    for (int j = 0; j < q.ambient; ++j) denom += Rat(f.normal[j]) * m[j];
    if (denom <= 0) throw std::invalid_argument("not an interior point");
    QVec v(q.ambient);
    for (int j = 0; j < q.ambient; ++j) v[j] = Rat(f.normal[j]) / denom;
    q.vertices.push_back(std::move(v));
  }
  std::sort(q.vertices.begin(), q.vertices.end());
  q.vertices.erase(std::unique(q.vertices.begin(), q.vertices.end()), q.vertices.end());
  return q;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("minkowski_sum: ambient mismatch");
  std::vector<Vec> pts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(a + b);
  return build_polytope(pts);
}

LatticePolytope convex_hull_union(const std::vector<LatticePolytope>& ps) {
  if (ps.empty()) throw std::invalid_argument("convex_hull_union: empty list");
  std::vector<Vec> pts;
  for (const auto& p : ps) {
    if (p.ambient_dim() != ps[0].ambient_dim()) throw std::invalid_argument("convex_hull_union: ambient mismatch");
    for (const auto& v : p.vertices()) pts.push_back(v);
  }
  return build_polytope(pts);
}

LatticePolytope dilate(const LatticePolytope& p, const Int& k) {
  if (k < 0) throw std::invalid_argument("dilate: negative factor");
  std::vector<Vec> pts;
  for (const auto& v : p.vertices()) pts.push_back(k * v);
  if (pts.empty()) return p;
  return build_polytope(pts);
}

LatticePolytope translate(const LatticePolytope& p, const Vec& t) {
  std::vector<Vec> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + t);
  if (pts.empty()) return p;
  return build_polytope(pts);
}

Int normalized_volume(const LatticePolytope& p) {
  std::vector<Int> h = hstar_coeffs(p);
  Int s = 0;
  for (const auto& c : h) s += c;
  return s;
}

std::optional<PyramidWitness> is_lattice_pyramid(const LatticePolytope& p) {
  if (p.dim() < 1) return std::nullopt;
  const auto& cf = p.chart_facets();
  for (int vi = 0; vi < p.n_vertices(); ++vi) {
    for (int fi = 0; fi < static_cast<int>(cf.size()); ++fi) {
      Int h = dot(cf[fi].normal, p.chart_vertices()[vi]) + cf[fi].offset;
      if (h != 1) continue;
      bool pyramid = true;
      for (int vj = 0; vj < p.n_vertices() && pyramid; ++vj) {
        if (vj == vi) continue;
        if (dot(cf[fi].normal, p.chart_vertices()[vj]) + cf[fi].offset != 0) pyramid = false;
      }
      if (pyramid) return PyramidWitness{p.vertices()[vi], fi};
    }
  }
  return std::nullopt;
}

}  // namespace gorkit
