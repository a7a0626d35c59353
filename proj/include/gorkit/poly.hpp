#pragma once

#include <map>
#include <string>
#include <utility>

#include "gorkit/ints.hpp"

namespace gorkit {

/** Dense univariate polynomial with exact integer coefficients. */
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly one() { return UniPoly({Int(1)}); }
  static UniPoly monomial(int k, Int coeff = Int(1));

  /** Degree; -1 for the zero polynomial. */
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Int(0); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Int& k) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

  Int eval(const Int& t) const;
  Int sum_coeffs() const { return eval(Int(1)); }
  /** t^n * p(1/t); requires n >= degree. */
  UniPoly reversed(int n) const;
  /** Drops all terms of degree >= cutoff. */
  UniPoly truncated_below(int cutoff) const;
  bool nonnegative() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<Int> c_;
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

/** Laurent polynomial in two variables u, v; no zero coefficients stored. */
class LaurentPoly2 {
 public:
  using Key = std::pair<long, long>;  // (exponent of u, exponent of v)

  LaurentPoly2() = default;
  static LaurentPoly2 constant(const Int& c);
  /** Substitutes t -> u^a v^b into a univariate polynomial. */
  static LaurentPoly2 from_uni(const UniPoly& p, long a, long b);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Int>& terms() const { return terms_; }
  Int coeff(long i, long j) const;

  void add_term(long i, long j, const Int& c);
  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly2& o) const { return terms_ != o.terms_; }

  /** Multiplies by u^a v^b. */
  LaurentPoly2 shifted(long a, long b) const;
  /** Applies (i, j) -> (a11 i + a12 j, a21 i + a22 j) to every exponent pair. */
  LaurentPoly2 exponent_map(long a11, long a12, long a21, long a22) const;
  LaurentPoly2 swapped_vars() const { return exponent_map(0, 1, 1, 0); }

  bool is_polynomial() const;  // no negative exponents
  long min_u() const;
  long max_u() const;
  long min_v() const;
  long max_v() const;
  /** max(i + j) over stored terms; 0 for the zero polynomial. */
  long total_degree() const;

  /** Exact evaluation at integer (u, v); requires is_polynomial() unless u,v = ±1. */
  Int eval_int(const Int& u, const Int& v) const;
  /** Restriction to v = 0 as a univariate Laurent polynomial in u. */
  std::map<long, Int> at_v0() const;
  /** Specialization u = t, v = t as a map degree -> coefficient. */
  std::map<long, Int> diagonal() const;
  /** Specialization v = 1 as a map (u-degree) -> coefficient. */
  std::map<long, Int> at_v1() const;

  std::string to_string() const;

 private:
  std::map<Key, Int> terms_;
};

}  // namespace gorkit
