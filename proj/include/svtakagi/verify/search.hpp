#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "svtakagi/verify/checks.hpp"

namespace svtakagi::verify {

/// A map, its error maps and the sample it lives on.
struct Family {
  SetValuedMap F;
  ErrorMap A;
  ErrorMap B;
  std::vector<RationalVector> points;
  Mode mode = Mode::convex;
  unsigned m_max = 6;
};

struct CounterexampleWitness {
  enum class Kind { bug, hypothesis_necessity };
  Kind kind;
  std::size_t i, j;
  DyadicRational t;
  std::optional<exactgeom::Witness> witness;

  std::string describe() const {
    std::string s = kind == Kind::bug ? "bug witness" : "hypothesis necessity witness";
    s += ": pair [" + std::to_string(i) + "," + std::to_string(j) + "] t=" + t.str();
    if (witness) {
      s += witness->is_ray ? " ray (" : " point (";
      for (std::size_t k = 0; k < witness->point.size(); ++k) s += (k ? ", " : "") + witness->point[k].get_str();
      s += ")";
    }
    return s;
  }
};

/// Draws (pair, t) from a seeded generator. A conclusion failure is reported
/// as a bug witness when every Jensen step of its bisection chain holds (the
/// endpoint paired with itself included), and
/// as a hypothesis necessity witness otherwise. Draws that leave a tabulated
/// domain are skipped.
inline std::optional<CounterexampleWitness> search_counterexample(const Family& fam, std::size_t trials,
                                                                  std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("counterexample search needs at least one trial");
  const std::size_t n = fam.points.size();
  if (n == 0) throw std::invalid_argument("counterexample search needs grid points");
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    TestPair p;
    p.i = static_cast<std::size_t>(rng() % n);
    p.j = static_cast<std::size_t>(rng() % n);
    p.x = fam.points[p.i];
    p.y = fam.points[p.j];
    const unsigned m = static_cast<unsigned>(rng() % (fam.m_max + 1));
    const DyadicRational t(exactgeom::Integer(static_cast<unsigned long>(rng() % ((1ul << m) + 1))), m);
    try {
      auto concl = check_conclusion(fam.F, fam.A, fam.B, p, t, SlackBox(), fam.mode);
      if (!concl.failed()) continue;
      bool hypotheses = true;
      Rational tj = t.value();
      for (unsigned j = 0; j < t.exponent() && hypotheses; ++j) {
        const bool low = tj <= Rational(1, 2);
        const Rational next = low ? Rational(2 * tj) : Rational(2 * tj - 1);
        TestPair step;
        step.x = detail::combination(next, p.x, p.y);
        step.y = low ? p.y : p.x;
        if (!low) std::swap(step.x, step.y);
        hypotheses = check_jensen(fam.F, fam.A, fam.B, step, fam.mode).passed();
        tj = next;
      }
      if (hypotheses) {
        TestPair base;
        base.x = base.y = detail::combination(tj, p.x, p.y);
        hypotheses = check_jensen(fam.F, fam.A, fam.B, base, fam.mode).passed();
      }
      using K = CounterexampleWitness::Kind;
      return CounterexampleWitness{hypotheses ? K::bug : K::hypothesis_necessity, p.i, p.j, t, concl.witness};
    } catch (const std::out_of_range&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace svtakagi::verify
