#include "gorkit/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorkit {

namespace {

// enumerate Z^k points of a full-dimensional chart polytope via bounding box
template <class Fn>
void scan_chart(const std::vector<Vec>& verts, const std::vector<Facet>& facets, long cap, Fn&& fn) {
  const int k = static_cast<int>(verts[0].size());
  Vec lo = verts[0], hi = verts[0];
  for (const auto& v : verts)
    for (int j = 0; j < k; ++j) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  Int candidates = 1;
  for (int j = 0; j < k; ++j) candidates *= hi[j] - lo[j] + 1;
  if (candidates > cap) throw CapExceeded();

  Vec x = lo;
  for (;;) {
    int tight = 0;
    bool inside = true;
    for (const auto& f : facets) {
      Int h = dot(f.normal, x) + f.offset;
      if (h < 0) {
        inside = false;
        break;
      }
      if (h == 0) ++tight;
    }
    if (inside) fn(x, tight == 0);
    int j = 0;
    for (; j < k; ++j) {
      if (x[j] < hi[j]) {
        ++x[j];
        break;
      }
      x[j] = lo[j];
    }
    if (j == k) break;
  }
}

std::vector<Vec> scaled(const std::vector<Vec>& verts, const Int& k) {
  std::vector<Vec> out;
  out.reserve(verts.size());
  for (const auto& v : verts) out.push_back(k * v);
  return out;
}

std::vector<Facet> scaled_facets(const std::vector<Facet>& facets, const Int& k) {
  std::vector<Facet> out;
  out.reserve(facets.size());
  for (const auto& f : facets) out.push_back(Facet{f.normal, k * f.offset});
  return out;
}

bool is_simplex(const LatticePolytope& p) { return p.n_vertices() == p.dim() + 1; }

Int eval_counts_from_hstar(const std::vector<Int>& h, int d, const Int& k, bool interior) {
  Int s = 0;
  for (int j = 0; j < static_cast<int>(h.size()); ++j) {
    Int n = interior ? Int(k + j - 1) : Int(k - j + d);
    if (n >= d) s += h[j] * binomial(n, static_cast<unsigned long>(d));
  }
  return s;
}

}  // namespace

std::vector<Int> simplex_box_degrees(const std::vector<Vec>& simplex_chart_verts, bool interior_only,
                                     long cap) {
  const int d = static_cast<int>(simplex_chart_verts.size()) - 1;
  if (d < 0) throw std::invalid_argument("simplex_box_degrees: empty simplex");
  IntMatrix a(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    if (static_cast<int>(simplex_chart_verts[i].size()) != d)
      throw std::invalid_argument("simplex_box_degrees: vertices not in chart coordinates");
    for (int j = 0; j < d; ++j) a.at(i, j) = simplex_chart_verts[i][j];
    a.at(i, d) = 1;
  }
  SnfResult s = snf(a);
  Int vol = 1;
  for (int i = 0; i <= d; ++i) {
    if (s.s.at(i, i) == 0) throw std::invalid_argument("simplex_box_degrees: degenerate simplex");
    vol *= s.s.at(i, i);
  }
  if (vol > cap) throw CapExceeded();
  IntMatrix vinv = inverse_unimodular(s.v);
  std::vector<QVec> ainv = inverse_rational(a);

  std::vector<unsigned long> mods(d + 1), w(d + 1, 0);
  for (int i = 0; i <= d; ++i) mods[i] = s.s.at(i, i).get_ui();

  std::vector<Int> hist(d + 1, Int(0));
  for (;;) {
    Vec z(d + 1, Int(0));
    for (int i = 0; i <= d; ++i) {
      if (w[i] == 0) continue;
      for (int j = 0; j <= d; ++j) z[j] += Int(w[i]) * vinv.at(i, j);
    }
    Rat grade = 0;
    bool keep = true;
    for (int i = 0; i <= d; ++i) {
      Rat lam = 0;
      for (int j = 0; j <= d; ++j) lam += Rat(z[j]) * ainv[j][i];
      lam -= Rat(qfloor(lam));
      if (interior_only && lam == 0) {
        keep = false;
        break;
      }
      grade += lam;
    }
    if (keep) {
      if (grade.get_den() != 1) throw std::logic_error("simplex_box_degrees: non-integral grade");
      hist[grade.get_num().get_si()] += 1;
    }
    int i = 0;
    for (; i <= d; ++i) {
      if (++w[i] < mods[i]) break;
      w[i] = 0;
    }
    if (i > d) break;
  }
  return hist;
}

std::vector<Vec> lattice_points(const LatticePolytope& p, PointMode mode, long cap) {
  std::vector<Vec> out;
  if (p.is_empty()) return out;
  if (p.dim() == 0) {
    if (mode != PointMode::Boundary) out.push_back(p.vertices()[0]);
    return out;
  }
  scan_chart(p.chart_vertices(), p.chart_facets(), cap, [&](const Vec& x, bool interior) {
    if ((mode == PointMode::Interior && !interior) || (mode == PointMode::Boundary && interior)) return;
    out.push_back(p.chart().to_ambient(x));
  });
  std::sort(out.begin(), out.end());
  return out;
}

Int count_lattice_points(const LatticePolytope& p, PointMode mode, long cap) {
  if (p.is_empty()) return 0;
  if (p.dim() == 0) return mode == PointMode::Boundary ? 0 : 1;
  if (is_simplex(p)) {
    std::vector<Int> h = simplex_box_degrees(p.chart_vertices(), false, cap);
    Int all = eval_counts_from_hstar(h, p.dim(), 1, false);
    if (mode == PointMode::All) return all;
    Int in = eval_counts_from_hstar(h, p.dim(), 1, true);
    return mode == PointMode::Interior ? in : all - in;
  }
  Int all = 0, in = 0;
  scan_chart(p.chart_vertices(), p.chart_facets(), cap, [&](const Vec&, bool interior) {
    ++all;
    if (interior) ++in;
  });
  switch (mode) {
    case PointMode::All: return all;
    case PointMode::Interior: return in;
    default: return all - in;
  }
}

std::vector<Int> ehrhart_counts(const LatticePolytope& p, int upto, long cap) {
  std::vector<Int> counts;
  counts.reserve(upto + 1);
  counts.push_back(1);
  if (upto == 0) return counts;
  if (p.is_empty()) throw std::invalid_argument("ehrhart_counts: empty polytope");
  if (p.dim() == 0) {
    counts.assign(upto + 1, Int(1));
    return counts;
  }
  if (is_simplex(p)) {
    std::vector<Int> h = simplex_box_degrees(p.chart_vertices(), false, cap);
    for (int k = 1; k <= upto; ++k) counts.push_back(eval_counts_from_hstar(h, p.dim(), k, false));
    return counts;
  }
  for (int k = 1; k <= upto; ++k) {
    Int n = 0;
    scan_chart(scaled(p.chart_vertices(), k), scaled_facets(p.chart_facets(), k), cap,
               [&](const Vec&, bool) { ++n; });
    counts.push_back(n);
  }
  return counts;
}

std::vector<Int> hstar_coeffs(const LatticePolytope& p, long cap) {
  if (p.is_empty() || p.dim() == 0) return {Int(1)};
  const int d = p.dim();
  if (is_simplex(p)) {
    std::vector<Int> h = simplex_box_degrees(p.chart_vertices(), false, cap);
    h.resize(d + 1, Int(0));
    return h;
  }
  std::vector<Int> l = ehrhart_counts(p, d, cap);
  std::vector<Int> h(d + 1, Int(0));
  for (int j = 0; j <= d; ++j)
    for (int i = 0; i <= j; ++i) {
      Int c = binomial(d + 1, static_cast<unsigned long>(j - i)) * l[i];
      if ((j - i) % 2 == 0)
        h[j] += c;
      else
        h[j] -= c;
    }
  return h;
}

}  // namespace gorkit
