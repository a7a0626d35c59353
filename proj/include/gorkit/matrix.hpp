#pragma once

#include <optional>
#include <vector>

#include "gorkit/ints.hpp"

namespace gorkit {

/** Dense matrix over the integers, row major. */
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  std::vector<Vec> to_rows() const;
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& b) const;
  Vec apply(const Vec& x) const;          // A * x
  Vec apply_left(const Vec& y) const;     // y^T * A
  bool operator==(const IntMatrix& b) const { return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_; }

  void swap_rows(int i, int j);
  void negate_row(int i);
  void add_row_multiple(int dst, int src, const Int& c);  // row dst += c * row src
  void swap_cols(int i, int j);
  void negate_col(int i);
  void add_col_multiple(int dst, int src, const Int& c);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct HnfResult {
  IntMatrix h;  // row-style Hermite normal form
  IntMatrix u;  // unimodular, u * input == h
};

/**
 * Row Hermite normal form. Pivots are positive, entries above a pivot are
 * reduced into [0, pivot), zero rows are pushed to the bottom.
 */
HnfResult hnf(const IntMatrix& a);

struct SnfResult {
  IntMatrix s;  // diagonal, nonnegative, d1 | d2 | ...
  IntMatrix u, v;  // unimodular, u * input * v == s
};

SnfResult snf(const IntMatrix& a);

Int det(const IntMatrix& a);
long rank_of(const IntMatrix& a);
/** Dimension of the affine span (−1 for the empty set). */
long affine_rank(const std::vector<Vec>& pts);
IntMatrix inverse_unimodular(const IntMatrix& a);

/** Saturated basis of {x : A x = 0}, rows in Hermite normal form. */
std::vector<Vec> integer_kernel(const IntMatrix& a);

/** Basis of span_Q(rows) ∩ Z^d, rows in Hermite normal form. */
std::vector<Vec> saturated_row_span(const std::vector<Vec>& rows, int d);

/** One rational solution of A x = b, if any. */
std::optional<QVec> solve_rational(const IntMatrix& a, const QVec& b);

/** One integer solution of A x = b, if any. */
std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b);

/** Exact inverse of a nonsingular rational matrix given by integer rows. */
std::vector<QVec> inverse_rational(const IntMatrix& a);

/**
 * Surjective lattice map Z^d -> Z^(d-k) whose kernel is the saturation of the
 * span of the given vectors.
 */
struct QuotientMap {
  int source_dim = 0;
  IntMatrix matrix;                // (d-k) x d, applied on the left to column vectors
  std::vector<Vec> kernel_basis;   // saturated, Hermite normal form
};

QuotientMap quotient_projection(const std::vector<Vec>& kernel, int ambient_dim);

}  // namespace gorkit
