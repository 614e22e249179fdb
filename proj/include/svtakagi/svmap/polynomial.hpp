#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "svtakagi/exactgeom/rational.hpp"

namespace svtakagi::svmap {

using exactgeom::Rational;
using exactgeom::RationalVector;

inline constexpr unsigned kMaxPolynomialDegree = 4;

struct Monomial {
  Rational coef;
  std::vector<unsigned> exponents;  // one per domain coordinate

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exponents) d += e;
    return d;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Scalar polynomial with rational coefficients, total degree <= 4.
class Polynomial {
 public:
  Polynomial(std::size_t domain_dim, std::vector<Monomial> terms = {})
      : domain_dim_(domain_dim), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
      if (t.exponents.size() != domain_dim_) throw DimensionError("monomial exponent count differs from domain dimension");
      if (t.degree() > kMaxPolynomialDegree) throw CapabilityError("polynomial degree above 4");
    }
  }

  std::size_t domain_dim() const { return domain_dim_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  Rational operator()(const RationalVector& x) const {
    if (x.size() != domain_dim_) throw DimensionError("polynomial evaluated at a point of wrong dimension");
    Rational sum = 0;
    for (const auto& t : terms_) {
      Rational v = t.coef;
      for (std::size_t i = 0; i < domain_dim_; ++i) v *= exactgeom::pow(x[i], t.exponents[i]);
      sum += v;
    }
    return sum;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t domain_dim_;
  std::vector<Monomial> terms_;
};

/// Vector of scalar polynomials sharing one domain.
class PolynomialMap {
 public:
  PolynomialMap(std::size_t domain_dim, std::vector<Polynomial> components)
      : domain_dim_(domain_dim), components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("polynomial map needs at least one component");
    for (const auto& c : components_)
      if (c.domain_dim() != domain_dim_) throw DimensionError("polynomial component has wrong domain dimension");
  }

  std::size_t domain_dim() const { return domain_dim_; }
  std::size_t value_dim() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }

  RationalVector operator()(const RationalVector& x) const {
    RationalVector out(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) out[i] = components_[i](x);
    return out;
  }

  friend bool operator==(const PolynomialMap&, const PolynomialMap&) = default;

 private:
  std::size_t domain_dim_;
  std::vector<Polynomial> components_;
};

/// c * |x|_2^2 as a polynomial in d variables.
inline Polynomial scaled_sq_norm(std::size_t d, const Rational& c) {
  std::vector<Monomial> terms;
  for (std::size_t i = 0; i < d; ++i) {
    Monomial m{c, std::vector<unsigned>(d, 0)};
    m.exponents[i] = 2;
    terms.push_back(std::move(m));
  }
  return Polynomial(d, std::move(terms));
}

/// c0 + sum_i c_i x_i.
inline Polynomial affine(const Rational& c0, const std::vector<Rational>& coefs) {
  const std::size_t d = coefs.size();
  std::vector<Monomial> terms{{c0, std::vector<unsigned>(d, 0)}};
  for (std::size_t i = 0; i < d; ++i) {
    Monomial m{coefs[i], std::vector<unsigned>(d, 0)};
    m.exponents[i] = 1;
    terms.push_back(std::move(m));
  }
  return Polynomial(d, std::move(terms));
}

}  // namespace svtakagi::svmap
