#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace svtakagi {

/// Thrown when two geometric objects of different ambient dimension meet.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a request exceeds a documented capability bound.
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed textual input (rationals, JSON documents).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace exactgeom {

/// Arbitrary precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Decimal and exponent notation are rejected.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw ParseError("not an exact rational: \"" + std::string(text) + "\"");
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  Rational q{Integer(std::string(num), 10), d};
  q.canonicalize();
  if (text.front() == '-') q = -q;
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Decimal rendering rounded half away from zero to `digits` fractional digits.
inline std::string to_decimal(const Rational& q, unsigned digits = 12) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Rational scaled = abs(q) * scale + Rational(1, 2);
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string s = n.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = (q < 0 && n != 0) ? "-" : "";
  out += s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return out;
}

inline Integer floor(const Rational& q) {
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return n;
}

/// 2^k for any integer k.
inline Rational pow2(long k) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k < 0 ? -k : k));
  return k < 0 ? Rational(Integer(1), p) : Rational(p);
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

/// Point of rational d-space. Equality and ordering are exact and lexicographic.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim, Rational(0)) {}
  RationalVector(std::initializer_list<Rational> values) : coords_(values) {}
  explicit RationalVector(std::vector<Rational> values) : coords_(std::move(values)) {}

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  RationalVector& operator+=(const RationalVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  RationalVector& operator-=(const RationalVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  RationalVector& operator*=(const Rational& c) {
    for (auto& x : coords_) x *= c;
    return *this;
  }

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator-(RationalVector a) { return a *= Rational(-1); }
  friend RationalVector operator*(const Rational& c, RationalVector a) { return a *= c; }
  friend RationalVector operator*(RationalVector a, const Rational& c) { return a *= c; }

  friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = cmp(a.coords_[i], b.coords_[i]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
    return os << ')';
  }

 private:
  void check_same(const RationalVector& o) const {
    if (o.size() != size()) throw DimensionError("vector dimension mismatch");
  }
  std::vector<Rational> coords_;
};

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational norm_l1(const RationalVector& v) {
  Rational s = 0;
  for (const auto& c : v) s += abs(c);
  return s;
}

inline Rational norm_linf(const RationalVector& v) {
  Rational s = 0;
  for (const auto& c : v)
    if (abs(c) > s) s = abs(c);
  return s;
}

inline Rational norm_sq_l2(const RationalVector& v) { return dot(v, v); }

}  // namespace exactgeom
}  // namespace svtakagi
