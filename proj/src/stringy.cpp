#include "gorkit/stringy.hpp"

#include <stdexcept>

namespace gorkit {

namespace {

UniPoly tminus1_power(int k) {
  UniPoly p = UniPoly::one();
  UniPoly tm1({Int(-1), Int(1)});
  for (int i = 0; i < k; ++i) p = p * tm1;
  return p;
}

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

UniPoly hstar(const LatticePolytope& p, long cap) { return UniPoly(hstar_coeffs(p, cap)); }

UniPoly hstar_series(const LatticePolytope& p, long cap) {
  if (p.is_empty() || p.dim() == 0) return UniPoly::one();
  const int d = p.dim();
  const int upto = 2 * d + 1;
  std::vector<Int> counts{Int(1)};
  for (int k = 1; k <= upto; ++k)
    counts.push_back(Int(lattice_points(dilate(p, k), PointMode::All, cap).size()));
  std::vector<Int> h(upto + 1, Int(0));
  for (int j = 0; j <= upto; ++j)
    for (int i = 0; i <= j && j - i <= d + 1; ++i) {
      Int c = binomial(d + 1, static_cast<unsigned long>(j - i)) * counts[i];
      if ((j - i) % 2 == 0)
        h[j] += c;
      else
        h[j] -= c;
    }
  for (int j = d + 1; j <= upto; ++j)
    if (h[j] != 0) throw std::logic_error("hstar_series: numerator does not terminate at the dimension");
  h.resize(d + 1);
  return UniPoly(std::move(h));
}

const UniPoly& GCalc::h(int bottom, int top, bool dual) {
  auto key = std::make_tuple(bottom, top, dual);
  auto it = hmemo_.find(key);
  if (it != hmemo_.end()) return it->second;
  UniPoly acc;
  if (rank(bottom, top) == 0) {
    acc = UniPoly::one();
  } else {
    for (int z = 0; z < fl_.size(); ++z) {
      if (!fl_.leq(bottom, z) || !fl_.leq(z, top)) continue;
      if (!dual) {
        if (z == bottom) continue;
        int k = fl_.faces[z].dim - fl_.faces[bottom].dim;
        acc = acc + tminus1_power(k - 1) * g(z, top, false);
      } else {
        if (z == top) continue;
        int k = fl_.faces[top].dim - fl_.faces[z].dim;
        acc = acc + tminus1_power(k - 1) * g(bottom, z, true);
      }
    }
  }
  return hmemo_.emplace(key, std::move(acc)).first->second;
}

const UniPoly& GCalc::g(int bottom, int top, bool dual) {
  auto key = std::make_tuple(bottom, top, dual);
  auto it = gmemo_.find(key);
  if (it != gmemo_.end()) return it->second;
  const int rk = rank(bottom, top);
  UniPoly res;
  if (rk == 0) {
    res = UniPoly::one();
  } else {
    const UniPoly& hp = h(bottom, top, dual);
    std::vector<Int> gc{hp.coeff(0)};
    for (int i = 1; 2 * i < rk; ++i) gc.push_back(hp.coeff(i) - hp.coeff(i - 1));
    res = UniPoly(std::move(gc));
  }
  return gmemo_.emplace(key, std::move(res)).first->second;
}

std::pair<UniPoly, UniPoly> g_and_h(const FaceLattice& fl, int bottom, int top) {
  GCalc gc(fl);
  return {gc.g(bottom, top), gc.h(bottom, top)};
}

UniPoly stilde(const LatticePolytope& p, long cap) {
  if (p.is_empty()) return UniPoly::one();
  if (p.dim() == 0) return UniPoly();
  const FaceLattice& fl = p.face_lattice();
  GCalc gc(fl);
  const int top = fl.top();
  UniPoly acc;
  for (int fi = 0; fi < fl.size(); ++fi) {
    UniPoly hs = fi == 0 ? UniPoly::one() : hstar(p.face_polytope(fi), cap);
    UniPoly term = hs * gc.g(fi, top);
    if (sign_pow(p.dim() - fl.faces[fi].dim) == 1)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

UniPoly stilde_simplex(const LatticePolytope& p, long cap) {
  if (p.is_empty()) return UniPoly::one();
  if (p.dim() == 0) return UniPoly();
  if (p.n_vertices() != p.dim() + 1)
    throw std::invalid_argument("stilde_simplex: polytope is not a simplex");
  return UniPoly(simplex_box_degrees(p.chart_vertices(), true, cap));
}

LaurentPoly2 b_poly(const FaceLattice& fl, int bottom, int top) {
  GCalc gc(fl);
  LaurentPoly2 acc;
  for (int x = 0; x < fl.size(); ++x) {
    if (!fl.leq(bottom, x) || !fl.leq(x, top)) continue;
    int k = fl.faces[top].dim - fl.faces[x].dim;
    LaurentPoly2 term = LaurentPoly2::from_uni(gc.g(x, top, true), -1, 1) *
                        LaurentPoly2::from_uni(gc.g(bottom, x, false), 1, 1);
    term = term.shifted(k, 0) * LaurentPoly2::constant(Int(sign_pow(k)));
    acc = acc + term;
  }
  return acc;
}

EstResult est(const DualPair& pair, long cap) {
  EstResult res;
  res.r = pair.data.r;
  res.cy_dim = pair.p.dim() + 1 - 2 * res.r.get_si();
  const FaceLattice& fl = pair.p.face_lattice();
  LaurentPoly2 acc;
  for (int fi = 0; fi < fl.size(); ++fi) {
    UniPoly sf = stilde(pair.p.face_polytope(fi), cap);
    if (sf.is_zero()) continue;
    UniPoly sfs = stilde(pair.p_dual.face_polytope(dual_face(pair, fi)), cap);
    if (sfs.is_zero()) continue;
    int e = fl.faces[fi].dim + 1;
    LaurentPoly2 term = LaurentPoly2::from_uni(sf, -1, 1) * LaurentPoly2::from_uni(sfs, 1, 1);
    term = term.shifted(e, 0) * LaurentPoly2::constant(Int(sign_pow(e)));
    acc = acc + term;
  }
  long r = res.r.get_si();
  res.e = acc.shifted(-r, -r);
  res.polynomial = res.e.is_polynomial();
  return res;
}

EstResult est(const LatticePolytope& p, long cap) { return est(dual_gorenstein(p), cap); }

EstSpecializations est_specializations(const DualPair& pair, long cap) {
  EstSpecializations spec;
  EstResult er = est(pair, cap);
  for (const auto& [k, c] : er.e.terms()) {
    Int& slot = spec.e_at_u1[k.second];
    slot += c;
    if (slot == 0) spec.e_at_u1.erase(k.second);
  }
  spec.e_at_11 = er.e.eval_int(Int(1), Int(1));

  const FaceLattice& fl = pair.p.face_lattice();
  const long r = pair.data.r.get_si();
  spec.volume_route = 0;
  for (int fi = 0; fi < fl.size(); ++fi) {
    LatticePolytope f = pair.p.face_polytope(fi);
    LatticePolytope fs = pair.p_dual.face_polytope(dual_face(pair, fi));
    int sgn = sign_pow(fl.faces[fi].dim + 1);
    UniPoly prod = hstar(f, cap) * hstar(fs, cap);
    for (int j = 0; j <= prod.degree(); ++j) {
      Int c = prod.coeff(j);
      if (c == 0) continue;
      Int& slot = spec.hstar_route[j - r];
      slot += sgn * c;
      if (slot == 0) spec.hstar_route.erase(j - r);
    }
    spec.volume_route += sgn * normalized_volume(f) * normalized_volume(fs);
  }
  spec.u1_agrees = spec.e_at_u1 == spec.hstar_route;
  spec.at11_agrees = spec.e_at_11 == spec.volume_route;
  return spec;
}

ConjectureReport conjecture_diagnostics(const DualPair& pair, long cap) {
  ConjectureReport rep;
  EstResult er = est(pair, cap);
  const LaurentPoly2& e = er.e;
  const long n = er.cy_dim;
  rep.cy_dim = n;
  rep.e_at_11 = e.eval_int(Int(1), Int(1));
  rep.polynomial = er.polynomial;

  if (n < 0)
    rep.degree_bound = e.is_zero();
  else if (n == 0)
    rep.degree_bound = e.is_zero() || (e.terms().size() == 1 && e.terms().count({0, 0}) == 1);
  else
    rep.degree_bound = e.min_u() >= 0 && e.min_v() >= 0 && e.total_degree() <= 2 * n;

  rep.symmetric = e == e.swapped_vars();
  rep.poincare = e.exponent_map(-1, 0, 0, -1).shifted(n, n) == e;

  EstResult ed = est(dual_gorenstein(pair.p_dual), cap);
  int npar = static_cast<int>(((n % 2) + 2) % 2);
  LaurentPoly2 rhs = ed.e.exponent_map(-1, 0, 0, 1).shifted(n, 0) * LaurentPoly2::constant(Int(sign_pow(npar)));
  rep.reciprocity = e == rhs;

  if (n >= 1) {
    std::map<long, Int> a = e.at_v0();
    std::map<long, Int> mirror;
    for (const auto& [i, c] : a) mirror[n - i] = sign_pow(n % 2) * c;
    rep.edge_symmetry = a == mirror;

    std::map<long, Int> c1 = e.at_v1();
    Int d2 = 0;
    for (const auto& [i, c] : c1) d2 += c * Int(i) * Int(i - 1);
    rep.second_derivative = 12 * d2 == Int(n) * Int(3 * n - 5) * rep.e_at_11;
  }

  if (n == 1) {
    Int k = e.coeff(0, 0);
    LaurentPoly2 one_minus_u;
    one_minus_u.add_term(0, 0, Int(1));
    one_minus_u.add_term(1, 0, Int(-1));
    LaurentPoly2 one_minus_v;
    one_minus_v.add_term(0, 0, Int(1));
    one_minus_v.add_term(0, 1, Int(-1));
    rep.closed_form = e == one_minus_u * one_minus_v * LaurentPoly2::constant(k);
    rep.k = k;
  } else if (n == 2) {
    Int k = e.coeff(0, 0);
    Int cu = e.coeff(1, 0);
    if (cu % 2 != 0) {
      rep.closed_form = false;
    } else {
      Int l = -cu / 2;
      LaurentPoly2 expect;
      for (auto [i, j] : {std::pair<long, long>{0, 0}, {2, 0}, {0, 2}, {2, 2}}) expect.add_term(i, j, k);
      for (auto [i, j] : {std::pair<long, long>{1, 0}, {0, 1}, {2, 1}, {1, 2}}) expect.add_term(i, j, -2 * l);
      expect.add_term(1, 1, 20 * k - 16 * l);
      rep.closed_form = e == expect;
      rep.k = k;
      rep.l = l;
    }
    rep.div24 = rep.e_at_11 % 24 == 0;
  }
  return rep;
}

ConjectureReport conjecture_diagnostics(const LatticePolytope& p, long cap) {
  return conjecture_diagnostics(dual_gorenstein(p), cap);
}

WeightedReport weighted_simplex(const WeightSystem& ws, long cap) {
  if (ws.w <= 0) throw std::invalid_argument("weighted_simplex: total weight must be positive");
  if (ws.weights.size() < 2) throw std::invalid_argument("weighted_simplex: need at least two weights");
  WeightedReport rep;
  const int n = static_cast<int>(ws.weights.size());
  rep.sum_inv_k = 0;
  for (const auto& wi : ws.weights) {
    if (wi <= 0) throw std::invalid_argument("weighted_simplex: weights must be positive");
    if (ws.w % wi != 0) throw std::invalid_argument("weighted_simplex: weight does not divide the total");
    rep.k.push_back(ws.w / wi);
    rep.sum_inv_k += Rat(Int(1), rep.k.back());
  }
  std::vector<Vec> verts;
  for (int i = 0; i < n; ++i) {
    Vec v(n, Int(0));
    v[i] = rep.k[i];
    verts.push_back(std::move(v));
  }
  LatticePolytope amb = build_polytope(verts);
  rep.simplex = build_polytope(amb.chart_vertices());
  for (const auto& ki : rep.k)
    if (ki == 1) rep.pyramid = true;
  for (const auto& ki : rep.k)
    if (ki >= 3) ++rep.s;
  auto gd = gorenstein_data(rep.simplex);
  if (gd) {
    rep.gorenstein = true;
    rep.r = gd->r;
    rep.cy_dim = rep.simplex.dim() + 1 - 2 * rep.r.get_si();
    rep.bound_holds = Int(rep.s) <= 3 * Int(rep.cy_dim);
    rep.est_zero = est(rep.simplex, cap).e.is_zero();
  }
  return rep;
}

}  // namespace gorkit
