#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gorkit {

// All arithmetic in gorkit is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec operator*(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dotq(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline Int content(const Vec& a) {
  Int g = 0;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

// Divides out the gcd, keeping the sign of the first nonzero entry.
inline Vec primitive(Vec a) {
  Int g = content(a);
  if (g > 1)
    for (auto& x : a) x /= g;
  return a;
}

inline Vec to_vec(std::initializer_list<long> xs) {
  Vec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline QVec to_qvec(const Vec& v) {
  QVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = v[i];
  return q;
}

// Exact floor/ceil of a rational.
inline Int qfloor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int qceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int binomial(const Int& n, unsigned long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

}  // namespace gorkit
