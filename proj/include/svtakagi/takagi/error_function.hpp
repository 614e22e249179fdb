#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "svtakagi/exactgeom/rational.hpp"
#include "svtakagi/takagi/dyadic.hpp"
#include "svtakagi/takagi/series.hpp"

namespace svtakagi::takagi {

using exactgeom::RationalVector;

enum class ErrorKind { constant, l1, linf, sq_l2, tabulated };

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::constant: return "constant";
    case ErrorKind::l1: return "l1";
    case ErrorKind::linf: return "linf";
    case ErrorKind::sq_l2: return "sq_l2";
    case ErrorKind::tabulated: return "tabulated";
  }
  return "?";
}

inline ErrorKind error_kind_from_name(const std::string& s) {
  for (auto k : {ErrorKind::constant, ErrorKind::l1, ErrorKind::linf, ErrorKind::sq_l2, ErrorKind::tabulated})
    if (s == kind_name(k)) return k;
  throw ParseError("unknown error function kind \"" + s + "\"");
}

/// Nonnegative scalar error phi. Built-in kinds are epsilon times a constant,
/// the l1 norm, the l-infinity norm or the squared l2 norm; tabulated kinds
/// hold explicit values.
class ErrorFunction {
 public:
  static ErrorFunction constant(Rational eps) { return ErrorFunction(ErrorKind::constant, std::move(eps)); }
  static ErrorFunction l1(Rational eps) { return ErrorFunction(ErrorKind::l1, std::move(eps)); }
  static ErrorFunction linf(Rational eps) { return ErrorFunction(ErrorKind::linf, std::move(eps)); }
  static ErrorFunction sq_l2(Rational eps) { return ErrorFunction(ErrorKind::sq_l2, std::move(eps)); }
  static ErrorFunction zero() { return constant(0); }
  static ErrorFunction tabulated(std::map<RationalVector, Rational> table) {
    for (const auto& [x, v] : table)
      if (v < 0) throw std::invalid_argument("tabulated error function must be nonnegative");
    ErrorFunction f(ErrorKind::tabulated, 1);
    f.table_ = std::move(table);
    return f;
  }

  ErrorKind kind() const { return kind_; }
  const Rational& epsilon() const { return epsilon_; }
  const std::map<RationalVector, Rational>& table() const { return table_; }

  /// Homogeneity degree: phi(s x) = |s|^alpha phi(x). Tabulated maps have none.
  std::optional<unsigned> alpha() const {
    switch (kind_) {
      case ErrorKind::constant: return 0;
      case ErrorKind::l1:
      case ErrorKind::linf: return 1;
      case ErrorKind::sq_l2: return 2;
      case ErrorKind::tabulated: return std::nullopt;
    }
    return std::nullopt;
  }

  bool is_constant() const { return kind_ == ErrorKind::constant; }

  Rational operator()(const RationalVector& x) const {
    switch (kind_) {
      case ErrorKind::constant: return epsilon_;
      case ErrorKind::l1: return epsilon_ * exactgeom::norm_l1(x);
      case ErrorKind::linf: return epsilon_ * exactgeom::norm_linf(x);
      case ErrorKind::sq_l2: return epsilon_ * exactgeom::norm_sq_l2(x);
      case ErrorKind::tabulated: {
        auto it = table_.find(x);
        if (it == table_.end()) {
          std::ostringstream os;
          os << "tabulated error function has no value at " << x;
          throw std::out_of_range(os.str());
        }
        return it->second;
      }
    }
    return 0;
  }

  bool vanishes_at_zero(std::size_t dim) const {
    if (kind_ == ErrorKind::constant) return epsilon_ == 0;
    if (kind_ != ErrorKind::tabulated) return true;
    auto it = table_.find(RationalVector(dim));
    return it != table_.end() && it->second == 0;
  }

  friend bool operator==(const ErrorFunction&, const ErrorFunction&) = default;

 private:
  ErrorFunction(ErrorKind k, Rational eps) : kind_(k), epsilon_(std::move(eps)) {
    if (epsilon_ < 0) throw std::invalid_argument("error modulus epsilon must be nonnegative");
  }

  ErrorKind kind_;
  Rational epsilon_;
  std::map<RationalVector, Rational> table_;
};

/// phi^T(t, x) = sum_n 2^{-n} phi(2 d(2^n t) x), exact at dyadic t.
///
/// Constant phi returns 2 epsilon directly. Otherwise phi(0) must be 0, so the
/// series stops after the m terms of t = p/2^m.
inline Rational phi_transform_dyadic(const ErrorFunction& phi, const DyadicRational& t, const RationalVector& x) {
  if (phi.is_constant()) return 2 * phi.epsilon();
  if (!phi.vanishes_at_zero(x.size()))
    throw std::invalid_argument("exact phi transform needs phi(0) = 0 for non-constant kinds");
  const Rational tv = t.value();
  Rational sum = 0;
  for (unsigned n = 0; n < t.exponent(); ++n) {
    const Rational s = 2 * dist_to_integers(tv * exactgeom::pow2(n));
    sum += exactgeom::pow2(-static_cast<long>(n)) * phi(s * x);
  }
  return sum;
}

}  // namespace svtakagi::takagi
