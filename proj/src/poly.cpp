#include "gorkit/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gorkit {

UniPoly UniPoly::monomial(int k, Int coeff) {
  if (coeff == 0) return UniPoly();
  std::vector<Int> c(k + 1, Int(0));
  c[k] = std::move(coeff);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Int& k) const {
  std::vector<Int> c = c_;
  for (auto& x : c) x *= k;
  return UniPoly(std::move(c));
}

Int UniPoly::eval(const Int& t) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

UniPoly UniPoly::reversed(int n) const {
  if (degree() > n) throw std::invalid_argument("UniPoly::reversed: degree exceeds n");
  std::vector<Int> c(n + 1, Int(0));
  for (int i = 0; i <= degree(); ++i) c[n - i] = c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::truncated_below(int cutoff) const {
  if (cutoff <= 0) return UniPoly();
  std::vector<Int> c(c_.begin(), c_.begin() + std::min<std::size_t>(cutoff, c_.size()));
  return UniPoly(std::move(c));
}

bool UniPoly::nonnegative() const {
  for (const auto& x : c_)
    if (x < 0) return false;
  return true;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Int mag = abs(a);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) {
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly2 LaurentPoly2::constant(const Int& c) {
  LaurentPoly2 p;
  p.add_term(0, 0, c);
  return p;
}

LaurentPoly2 LaurentPoly2::from_uni(const UniPoly& p, long a, long b) {
  LaurentPoly2 r;
  for (int k = 0; k <= p.degree(); ++k) r.add_term(a * k, b * k, p.coeff(k));
  return r;
}

Int LaurentPoly2::coeff(long i, long j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly2::add_term(long i, long j, const Int& c) {
  if (c == 0) return;
  Int& slot = terms_[{i, j}];
  slot += c;
  if (slot == 0) terms_.erase({i, j});
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

LaurentPoly2 LaurentPoly2::shifted(long a, long b) const {
  LaurentPoly2 r;
  for (const auto& [k, c] : terms_) r.add_term(k.first + a, k.second + b, c);
  return r;
}

LaurentPoly2 LaurentPoly2::exponent_map(long a11, long a12, long a21, long a22) const {
  LaurentPoly2 r;
  for (const auto& [k, c] : terms_)
    r.add_term(a11 * k.first + a12 * k.second, a21 * k.first + a22 * k.second, c);
  return r;
}

bool LaurentPoly2::is_polynomial() const {
  for (const auto& [k, c] : terms_)
    if (k.first < 0 || k.second < 0) return false;
  return true;
}

long LaurentPoly2::min_u() const {
  long m = 0;
  for (const auto& [k, c] : terms_) m = std::min(m, k.first);
  return m;
}

long LaurentPoly2::max_u() const {
  long m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.first);
  return m;
}

long LaurentPoly2::min_v() const {
  long m = 0;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return m;
}

long LaurentPoly2::max_v() const {
  long m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

long LaurentPoly2::total_degree() const {
  long m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.first + k.second);
  return m;
}

namespace {

Int int_pow(const Int& base, long e) {
  if (e >= 0) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
  }
  if (base == 1) return Int(1);
  if (base == -1) return (e % 2 == 0) ? Int(1) : Int(-1);
  throw std::invalid_argument("LaurentPoly2::eval_int: negative exponent at non-unit base");
}

}  // namespace

Int LaurentPoly2::eval_int(const Int& u, const Int& v) const {
  Int s = 0;
  for (const auto& [k, c] : terms_) s += c * int_pow(u, k.first) * int_pow(v, k.second);
  return s;
}

std::map<long, Int> LaurentPoly2::at_v0() const {
  std::map<long, Int> r;
  for (const auto& [k, c] : terms_)
    if (k.second == 0) r[k.first] = c;
  return r;
}

std::map<long, Int> LaurentPoly2::diagonal() const {
  std::map<long, Int> r;
  for (const auto& [k, c] : terms_) {
    Int& slot = r[k.first + k.second];
    slot += c;
    if (slot == 0) r.erase(k.first + k.second);
  }
  return r;
}

std::map<long, Int> LaurentPoly2::at_v1() const {
  std::map<long, Int> r;
  for (const auto& [k, c] : terms_) {
    Int& slot = r[k.first];
    slot += c;
    if (slot == 0) r.erase(k.first);
  }
  return r;
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int mag = abs(c);
    bool unit = mag == 1 && (k.first != 0 || k.second != 0);
    if (!unit) os << mag.get_str();
    if (k.first != 0) {
      os << "u";
      if (k.first != 1) os << "^" << k.first;
    }
    if (k.second != 0) {
      os << "v";
      if (k.second != 1) os << "^" << k.second;
    }
    first = false;
  }
  return os.str();
}

}  // namespace gorkit
