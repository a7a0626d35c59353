#include "doctest.h"
#include "gorkit/matrix.hpp"

#include <random>

using namespace gorkit;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

bool is_hnf(const IntMatrix& h) {
  int prev_pivot = -1;
  bool seen_zero = false;
  for (int i = 0; i < h.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (p <= prev_pivot) return false;
    if (h.at(i, p) <= 0) return false;
    for (int k = 0; k < i; ++k)
      if (h.at(k, p) < 0 || h.at(k, p) >= h.at(i, p)) return false;
    prev_pivot = p;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf basic cases") {
  CHECK(hnf(IntMatrix::identity(2)).h == IntMatrix::identity(2));
  CHECK(hnf(IntMatrix::identity(2)).u == IntMatrix::identity(2));

  IntMatrix swp = IntMatrix::from_rows({to_vec({0, 1}), to_vec({1, 0})});
  HnfResult rs = hnf(swp);
  CHECK(rs.h == IntMatrix::identity(2));
  CHECK(rs.u == swp);

  IntMatrix a = IntMatrix::from_rows({to_vec({2, 2}), to_vec({0, 2})});
  HnfResult r = hnf(a);
  CHECK(r.u * a == r.h);
  Int du = det(r.u);
  CHECK((du == 1 || du == -1));
  CHECK(is_hnf(r.h));
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + trial % 5, cols = 1 + (trial / 5) % 5;
    IntMatrix a = random_matrix(rng, rows, cols, -9, 9);
    HnfResult r = hnf(a);
    CHECK(r.u * a == r.h);
    Int du = det(r.u);
    CHECK((du == 1 || du == -1));
    CHECK(is_hnf(r.h));
    // idempotent on its own output
    CHECK(hnf(r.h).h == r.h);
  }
}

TEST_CASE("snf basic cases") {
  SnfResult id = snf(IntMatrix::identity(3));
  CHECK(id.s == IntMatrix::identity(3));

  SnfResult z = snf(IntMatrix(2, 2));
  CHECK(z.s == IntMatrix(2, 2));

  IntMatrix a = IntMatrix::from_rows({to_vec({2, 0}), to_vec({0, 3})});
  SnfResult r = snf(a);
  CHECK(r.s == IntMatrix::from_rows({to_vec({1, 0}), to_vec({0, 6})}));
  CHECK(r.u * a * r.v == r.s);
}

TEST_CASE("snf properties on random matrices") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    IntMatrix a = random_matrix(rng, rows, cols, -7, 7);
    SnfResult r = snf(a);
    CHECK(r.u * a * r.v == r.s);
    Int du = det(r.u), dv = det(r.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    Int prev = 0;
    for (int t = 0; t < std::min(rows, cols); ++t) {
      const Int& d = r.s.at(t, t);
      CHECK(d >= 0);
      if (prev != 0) CHECK((d == 0 || d % prev == 0));
      if (t > 0 && prev == 0) CHECK(d == 0);
      prev = d;
      for (int j = 0; j < cols; ++j)
        if (j != t) CHECK(r.s.at(t, j) == 0);
    }
  }
}

TEST_CASE("determinant and unimodular inverse") {
  IntMatrix a = IntMatrix::from_rows({to_vec({1, 2, 3}), to_vec({0, 1, 4}), to_vec({0, 0, 1})});
  CHECK(det(a) == 1);
  IntMatrix inv = inverse_unimodular(a);
  CHECK(inv * a == IntMatrix::identity(3));
  IntMatrix b = IntMatrix::from_rows({to_vec({2, 1}), to_vec({7, 4})});
  CHECK(det(b) == 1);
  CHECK(inverse_unimodular(b) * b == IntMatrix::identity(2));
  IntMatrix sing = IntMatrix::from_rows({to_vec({1, 2}), to_vec({2, 4})});
  CHECK(det(sing) == 0);
}

TEST_CASE("integer kernel is saturated") {
  // kernel of (2 4): spanned by (2,-1), not (4,-2)
  IntMatrix a = IntMatrix::from_rows({to_vec({2, 4})});
  auto k = integer_kernel(a);
  REQUIRE(k.size() == 1);
  CHECK(content(k[0]) == 1);
  CHECK(dot(a.row(0), k[0]) == 0);
}

TEST_CASE("integer kernel on random matrices") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + trial % 3, cols = 2 + trial % 4;
    IntMatrix a = random_matrix(rng, rows, cols, -5, 5);
    auto k = integer_kernel(a);
    CHECK(static_cast<long>(k.size()) == cols - rank_of(a));
    for (const auto& v : k) {
      CHECK(is_zero(a.apply(v)));
      CHECK_FALSE(is_zero(v));
    }
    if (!k.empty()) {
      // saturation: elementary divisors of the basis matrix are all 1
      SnfResult s = snf(IntMatrix::from_rows(k));
      for (std::size_t t = 0; t < k.size(); ++t) CHECK(s.s.at(static_cast<int>(t), static_cast<int>(t)) == 1);
    }
  }
}

TEST_CASE("quotient by span{(1,1,0)} identifies e1 with -e2") {
  QuotientMap q = quotient_projection({to_vec({1, 1, 0})}, 3);
  REQUIRE(q.matrix.rows() == 2);
  CHECK(q.matrix.apply(to_vec({1, 0, 0})) == q.matrix.apply(to_vec({0, -1, 0})));
  CHECK(is_zero(q.matrix.apply(to_vec({1, 1, 0}))));
  CHECK_FALSE(is_zero(q.matrix.apply(to_vec({0, 0, 1}))));
}

TEST_CASE("quotient projection kills exactly the saturation") {
  // span{(2,0)} saturates to span{(1,0)}
  QuotientMap q = quotient_projection({to_vec({2, 0})}, 2);
  REQUIRE(q.matrix.rows() == 1);
  CHECK(is_zero(q.matrix.apply(to_vec({1, 0}))));
  CHECK_FALSE(is_zero(q.matrix.apply(to_vec({0, 1}))));
  REQUIRE(q.kernel_basis.size() == 1);
  CHECK(q.kernel_basis[0] == to_vec({1, 0}));
}

TEST_CASE("quotient projection is surjective onto Z^(d-k)") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    int d = 2 + trial % 4;
    int nk = 1 + trial % 2;
    std::vector<Vec> ker;
    for (int i = 0; i < nk; ++i) ker.push_back(random_matrix(rng, 1, d, -4, 4).row(0));
    QuotientMap q = quotient_projection(ker, d);
    long k = static_cast<long>(q.kernel_basis.size());
    REQUIRE(q.matrix.rows() == d - k);
    for (const auto& v : ker) CHECK(is_zero(q.matrix.apply(v)));
    if (q.matrix.rows() > 0) {
      SnfResult s = snf(q.matrix);
      for (int t = 0; t < q.matrix.rows(); ++t) CHECK(s.s.at(t, t) == 1);
    }
    // composing with a further quotient matches quotienting by the union
    if (d - k >= 2) {
      Vec extra = random_matrix(rng, 1, d, -3, 3).row(0);
      std::vector<Vec> both = ker;
      both.push_back(extra);
      QuotientMap q2 = quotient_projection({q.matrix.apply(extra)}, d - static_cast<int>(k));
      QuotientMap qb = quotient_projection(both, d);
      CHECK(qb.matrix.rows() == q2.matrix.rows());
      std::vector<Vec> span_a = (q2.matrix * q.matrix).to_rows();
      std::vector<Vec> span_b = qb.matrix.to_rows();
      // same kernel, hence equal row spans up to GL_Z: compare saturations
      CHECK(saturated_row_span(span_a, d) == saturated_row_span(span_b, d));
    }
  }
}

TEST_CASE("integer linear solve") {
  IntMatrix a = IntMatrix::from_rows({to_vec({2, 4, 1})});
  auto x = solve_integer(a, to_vec({3}));
  REQUIRE(x.has_value());
  CHECK(dot(a.row(0), *x) == 3);
  IntMatrix b = IntMatrix::from_rows({to_vec({2, 4})});
  CHECK_FALSE(solve_integer(b, to_vec({3})).has_value());
  CHECK(solve_integer(b, to_vec({6})).has_value());
}
