#include "gorkit/chart.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorkit {

IntMatrix extend_to_unimodular(const IntMatrix& basis, int d) {
  const int k = basis.rows();
  if (k == 0) return IntMatrix::identity(d);
  SnfResult s = snf(basis);
  for (int t = 0; t < k; ++t)
    if (s.s.at(t, t) != 1) throw std::invalid_argument("extend_to_unimodular: basis not saturated");
  IntMatrix vinv = inverse_unimodular(s.v);
  IntMatrix w(d, d);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < d; ++j) w.at(i, j) = basis.at(i, j);
  for (int i = k; i < d; ++i)
    for (int j = 0; j < d; ++j) w.at(i, j) = vinv.at(i, j);
  // sanity: must be unimodular by construction
  inverse_unimodular(w);
  return w;
}

AffineChart AffineChart::identity_chart(int d) {
  AffineChart c;
  c.ambient = d;
  c.dim = d;
  c.base = Vec(d, Int(0));
  c.basis = IntMatrix::identity(d);
  c.proj = IntMatrix::identity(d);
  return c;
}

AffineChart AffineChart::from_base_and_basis(Vec base, IntMatrix basis) {
  AffineChart c;
  c.ambient = static_cast<int>(base.size());
  c.dim = basis.rows();
  c.base = std::move(base);
  c.basis = std::move(basis);
  if (c.dim == 0) {
    c.proj = IntMatrix(0, c.ambient);
    return c;
  }
  IntMatrix w = extend_to_unimodular(c.basis, c.ambient);
  IntMatrix winv_t = inverse_unimodular(w).transposed();
  c.proj = IntMatrix(c.dim, c.ambient);
  for (int i = 0; i < c.dim; ++i)
    for (int j = 0; j < c.ambient; ++j) c.proj.at(i, j) = winv_t.at(i, j);
  return c;
}

AffineChart AffineChart::from_points(const std::vector<Vec>& pts) {
  if (pts.empty()) throw std::invalid_argument("AffineChart: empty point set");
  const int d = static_cast<int>(pts[0].size());
  Vec base = *std::min_element(pts.begin(), pts.end());
  std::vector<Vec> dirs;
  for (const auto& p : pts)
    if (p != base) dirs.push_back(p - base);
  std::vector<Vec> sat = saturated_row_span(dirs, d);
  IntMatrix basis = sat.empty() ? IntMatrix(0, d) : IntMatrix::from_rows(sat);
  return from_base_and_basis(std::move(base), std::move(basis));
}

std::optional<Vec> AffineChart::try_to_chart(const Vec& x) const {
  Vec coords = proj.apply(x - base);
  if (to_ambient(coords) != x) return std::nullopt;
  return coords;
}

Vec AffineChart::to_chart(const Vec& x) const {
  auto c = try_to_chart(x);
  if (!c) throw std::invalid_argument("AffineChart: point outside affine lattice");
  return *c;
}

Vec AffineChart::to_ambient(const Vec& c) const {
  return base + direction_to_ambient(c);
}

Vec AffineChart::direction_to_ambient(const Vec& c) const {
  if (static_cast<int>(c.size()) != dim) throw std::invalid_argument("AffineChart: bad coord size");
  Vec x(ambient, Int(0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < ambient; ++j) x[j] += c[i] * basis.at(i, j);
  return x;
}

}  // namespace gorkit
