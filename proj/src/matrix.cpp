#include "gorkit/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorkit {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != rows[0].size()) throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec IntMatrix::row(int i) const {
  Vec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Vec> IntMatrix::to_rows() const {
  std::vector<Vec> rs(rows_);
  for (int i = 0; i < rows_; ++i) rs[i] = row(i);
  return rs;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& b) const {
  if (cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix c(rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Vec IntMatrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: shape mismatch");
  Vec y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

Vec IntMatrix::apply_left(const Vec& y) const {
  if (static_cast<int>(y.size()) != rows_) throw std::invalid_argument("apply_left: shape mismatch");
  Vec x(cols_);
  for (int i = 0; i < rows_; ++i) {
    if (y[i] == 0) continue;
    for (int j = 0; j < cols_; ++j) x[j] += y[i] * at(i, j);
  }
  return x;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& c) {
  if (c == 0) return;
  for (int j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_col(int i) {
  for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& c) {
  if (c == 0) return;
  for (int r = 0; r < rows_; ++r) at(r, dst) += c * at(r, src);
}

HnfResult hnf(const IntMatrix& a) {
  HnfResult res{a, IntMatrix::identity(a.rows())};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  int r = 0;
  for (int c = 0; c < h.cols() && r < h.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < h.rows(); ++i)
      if (h.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    h.swap_rows(r, piv);
    u.swap_rows(r, piv);
    for (int i = r + 1; i < h.rows(); ++i) {
      if (h.at(i, c) == 0) continue;
      Int g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h.at(r, c).get_mpz_t(), h.at(i, c).get_mpz_t());
      Int p = h.at(r, c) / g, q = h.at(i, c) / g;
      for (int j = 0; j < h.cols(); ++j) {
        Int hr = h.at(r, j), hi = h.at(i, j);
        h.at(r, j) = x * hr + y * hi;
        h.at(i, j) = -q * hr + p * hi;
      }
      for (int j = 0; j < u.cols(); ++j) {
        Int ur = u.at(r, j), ui = u.at(i, j);
        u.at(r, j) = x * ur + y * ui;
        u.at(i, j) = -q * ur + p * ui;
      }
    }
    if (h.at(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return res;
}

SnfResult snf(const IntMatrix& a) {
  SnfResult res{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  IntMatrix& s = res.s;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  const int n = std::min(s.rows(), s.cols());
  for (int t = 0; t < n; ++t) {
    // move a nonzero entry of minimal magnitude to (t, t)
    auto find_pivot = [&]() -> bool {
      int bi = -1, bj = -1;
      Int best = 0;
      for (int i = t; i < s.rows(); ++i)
        for (int j = t; j < s.cols(); ++j)
          if (s.at(i, j) != 0 && (bi < 0 || cmp(abs(s.at(i, j)), best) < 0)) {
            bi = i;
            bj = j;
            best = abs(s.at(i, j));
          }
      if (bi < 0) return false;
      s.swap_rows(t, bi);
      u.swap_rows(t, bi);
      s.swap_cols(t, bj);
      v.swap_cols(t, bj);
      return true;
    };
    if (!find_pivot()) break;
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < s.rows(); ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = s.at(i, t) / s.at(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s.at(i, t) != 0) {
          s.swap_rows(t, i);
          u.swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < s.cols(); ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = s.at(t, j) / s.at(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s.at(t, j) != 0) {
          s.swap_cols(t, j);
          v.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest of the block
      bool divides = true;
      for (int i = t + 1; i < s.rows() && divides; ++i)
        for (int j = t + 1; j < s.cols() && divides; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            s.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (s.at(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return res;
}

Int det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: not square");
  const int n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

long rank_of(const IntMatrix& a) {
  long r = 0;
  IntMatrix h = hnf(a).h;
  for (int i = 0; i < h.rows(); ++i)
    if (!is_zero(h.row(i))) ++r;
  return r;
}

long affine_rank(const std::vector<Vec>& pts) {
  if (pts.empty()) return -1;
  std::vector<Vec> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(pts[i] - pts[0]);
  if (dirs.empty()) return 0;
  return rank_of(IntMatrix::from_rows(dirs));
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  HnfResult res = hnf(a);
  if (!(res.h == IntMatrix::identity(a.rows()))) throw std::invalid_argument("inverse_unimodular: not unimodular");
  return res.u;
}

std::vector<Vec> integer_kernel(const IntMatrix& a) {
  const int d = a.cols();
  if (a.rows() == 0) return IntMatrix::identity(d).to_rows();
  HnfResult res = hnf(a.transposed());
  std::vector<Vec> ker;
  for (int i = 0; i < res.h.rows(); ++i)
    if (is_zero(res.h.row(i))) ker.push_back(res.u.row(i));
  if (ker.empty()) return ker;
  IntMatrix k = hnf(IntMatrix::from_rows(ker)).h;
  ker.clear();
  for (int i = 0; i < k.rows(); ++i)
    if (!is_zero(k.row(i))) ker.push_back(k.row(i));
  return ker;
}

std::vector<Vec> saturated_row_span(const std::vector<Vec>& rows, int d) {
  if (rows.empty()) return {};
  std::vector<Vec> perp = integer_kernel(IntMatrix::from_rows(rows));
  if (perp.empty()) return IntMatrix::identity(d).to_rows();
  IntMatrix p(static_cast<int>(perp.size()), d);
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < d; ++j) p.at(i, j) = perp[i][j];
  return integer_kernel(p);
}

std::optional<QVec> solve_rational(const IntMatrix& a, const QVec& b) {
  const int m = a.rows(), n = a.cols();
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("solve_rational: shape mismatch");
  std::vector<QVec> w(m, QVec(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = a.at(i, j);
    w[i][n] = b[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (w[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(w[r], w[p]);
    Rat inv = 1 / w[r][c];
    for (int j = c; j <= n; ++j) w[r][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || w[i][c] == 0) continue;
      Rat f = w[i][c];
      for (int j = c; j <= n; ++j) w[i][j] -= f * w[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (w[i][n] != 0) return std::nullopt;
  QVec x(n, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = w[i][n];
  return x;
}

std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b) {
  // x with A x = b, via the row Hermite form of A^T: solve y H = b, x = y U.
  const int m = a.rows(), n = a.cols();
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("solve_integer: shape mismatch");
  HnfResult res = hnf(a.transposed());
  Vec rem = b;
  Vec y(n, Int(0));
  for (int i = 0; i < res.h.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < m; ++j)
      if (res.h.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) break;
    if (rem[p] % res.h.at(i, p) != 0) return std::nullopt;
    y[i] = rem[p] / res.h.at(i, p);
    for (int j = 0; j < m; ++j) rem[j] -= y[i] * res.h.at(i, j);
  }
  if (!is_zero(rem)) return std::nullopt;
  return res.u.apply_left(y);
}

std::vector<QVec> inverse_rational(const IntMatrix& a) {
  const int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse_rational: not square");
  std::vector<QVec> w(n, QVec(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = a.at(i, j);
    w[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (w[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) throw std::invalid_argument("inverse_rational: singular");
    std::swap(w[c], w[p]);
    Rat inv = 1 / w[c][c];
    for (int j = 0; j < 2 * n; ++j) w[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || w[i][c] == 0) continue;
      Rat f = w[i][c];
      for (int j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
    }
  }
  std::vector<QVec> inv(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = w[i][n + j];
  return inv;
}

QuotientMap quotient_projection(const std::vector<Vec>& kernel, int ambient_dim) {
  QuotientMap qm;
  qm.source_dim = ambient_dim;
  qm.kernel_basis = saturated_row_span(kernel, ambient_dim);
  std::vector<Vec> q;
  if (qm.kernel_basis.empty()) {
    q = IntMatrix::identity(ambient_dim).to_rows();
  } else {
    q = integer_kernel(IntMatrix::from_rows(qm.kernel_basis));
  }
  qm.matrix = IntMatrix::from_rows(q);
  if (qm.matrix.rows() == 0) qm.matrix = IntMatrix(0, ambient_dim);
  return qm;
}

}  // namespace gorkit
