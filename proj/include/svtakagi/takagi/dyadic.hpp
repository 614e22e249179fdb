#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svtakagi/exactgeom/rational.hpp"

namespace svtakagi::takagi {

using exactgeom::Integer;
using exactgeom::Rational;

/// p / 2^m in canonical form (p odd, or m = 0).
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(Integer p, unsigned m) : p_(std::move(p)), m_(m) { normalize(); }

  /// nullopt unless the reduced denominator is a power of two.
  static std::optional<DyadicRational> from_rational(const Rational& q) {
    const auto& den = q.get_den();
    const auto bits = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
    if (mpz_scan1(den.get_mpz_t(), 0) != bits) return std::nullopt;
    return DyadicRational(q.get_num(), static_cast<unsigned>(bits));
  }

  /// Parses "p/2^m" as well as any exact rational with power-of-two denominator.
  static DyadicRational parse(const std::string& text) {
    auto hat = text.find("/2^");
    if (hat != std::string::npos) {
      const std::string exp = text.substr(hat + 3);
      if (exp.empty() || exp.size() > 4 || exp.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad dyadic exponent in \"" + text + "\"");
      Rational p = exactgeom::parse_rational(text.substr(0, hat));
      if (p.get_den() != 1) throw ParseError("bad dyadic numerator in \"" + text + "\"");
      return DyadicRational(p.get_num(), static_cast<unsigned>(std::stoul(exp)));
    }
    auto d = from_rational(exactgeom::parse_rational(text));
    if (!d) throw ParseError("not a dyadic rational: \"" + text + "\"");
    return *d;
  }

  const Integer& numerator() const { return p_; }
  unsigned exponent() const { return m_; }
  Rational value() const { return Rational(p_) * exactgeom::pow2(-static_cast<long>(m_)); }

  /// Always rendered as "p/2^m", including m = 0.
  std::string str() const { return p_.get_str() + "/2^" + std::to_string(m_); }

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend bool operator<(const DyadicRational& a, const DyadicRational& b) { return a.value() < b.value(); }

 private:
  void normalize() {
    while (m_ > 0 && mpz_even_p(p_.get_mpz_t())) {
      p_ /= 2;
      --m_;
    }
    if (p_ == 0) m_ = 0;
  }

  Integer p_ = 0;
  unsigned m_ = 0;
};

/// Every dyadic t in [0, 1] with exponent at most m_max, in increasing order.
inline std::vector<DyadicRational> dyadic_lattice(unsigned m_max) {
  std::vector<DyadicRational> out;
  const unsigned long count = 1ul << m_max;
  for (unsigned long k = 0; k <= count; ++k) out.emplace_back(Integer(k), m_max);
  return out;
}

}  // namespace svtakagi::takagi
