#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "circumlab/error.hpp"

namespace circumlab {

using Rational = boost::rational<std::int64_t>;

enum class Theorem1Case { ShortPath, MidPath, LongPath };

constexpr std::string_view to_string(Theorem1Case c) {
  switch (c) {
    case Theorem1Case::ShortPath: return "ShortPath";
    case Theorem1Case::MidPath: return "MidPath";
    case Theorem1Case::LongPath: return "LongPath";
  }
  return "?";
}

// floor(sqrt(x)), exact.
inline std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw Error(Errc::InvalidArgument, "isqrt of negative");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// A value of the form (rational + sqrt(radicand)) / den with den > 0 and
// radicand >= 0. Every bound in this file fits that shape, which keeps
// comparisons against integer circumferences exact.
struct QuadraticSurd {
  std::int64_t rational = 0;
  std::int64_t radicand = 0;
  std::int64_t den = 1;

  double value() const {
    return (static_cast<double>(rational) + std::sqrt(static_cast<double>(radicand))) /
           static_cast<double>(den);
  }

  // c >= value, decided as den*c - rational >= sqrt(radicand).
  bool at_most(std::int64_t c) const {
    const std::int64_t lhs = den * c - rational;
    if (radicand == 0) return lhs >= 0;
    return lhs >= 0 && lhs * lhs >= radicand;
  }

  // value < c.
  bool below(std::int64_t c) const {
    const std::int64_t lhs = den * c - rational;
    if (radicand == 0) return lhs > 0;
    return lhs > 0 && lhs * lhs > radicand;
  }

  bool is_integer() const {
    const std::int64_t r = isqrt(radicand);
    return r * r == radicand && (rational + r) % den == 0;
  }

  // Smallest integer c with c >= value.
  std::int64_t ceil() const {
    auto c = static_cast<std::int64_t>(std::floor(value())) - 1;
    while (!at_most(c)) ++c;
    return c;
  }

  std::string to_string() const {
    if (radicand == 0 && den == 1) return std::to_string(rational);
    std::string num = std::to_string(rational);
    if (radicand != 0) num = "(" + num + "+sqrt(" + std::to_string(radicand) + "))";
    return den == 1 ? num : num + "/" + std::to_string(den);
  }
};

struct Theorem1Bound {
  Theorem1Case kind = Theorem1Case::ShortPath;
  QuadraticSurd bound;

  double value() const { return bound.value(); }
};

namespace detail {

inline void require_thm1_domain(std::int64_t p, std::int64_t delta) {
  if (delta < 2 || p < 3) {
    throw Error(Errc::InvalidArgument, "bounds require delta >= 2 and p >= 3 (got p=" +
                                           std::to_string(p) + ", delta=" + std::to_string(delta) + ")");
  }
}

// a + sqrt(r) > sqrt(s) for nonnegative integers.
inline bool sum_exceeds_sqrt(std::int64_t a, std::int64_t r, std::int64_t s) {
  const std::int64_t d = s - a * a - r;
  if (d < 0) return true;
  return 4 * a * a * r > d * d;
}

}  // namespace detail

// c >= min{n, 2 delta}.
inline std::int64_t dirac_degree_bound(std::int64_t n, std::int64_t delta) {
  if (n < 3 || delta < 2) throw Error(Errc::InvalidArgument, "dirac_degree_bound domain");
  return std::min(n, 2 * delta);
}

// c >= sqrt(2p); display value.
inline double dirac_path_bound(std::int64_t p) {
  if (p < 3) throw Error(Errc::InvalidArgument, "dirac_path_bound requires p >= 3");
  return std::sqrt(2.0 * static_cast<double>(p));
}

// ceil(sqrt(2p)), the form compared against integer c.
inline std::int64_t dirac_path_bound_int(std::int64_t p) {
  if (p < 3) throw Error(Errc::InvalidArgument, "dirac_path_bound requires p >= 3");
  const std::int64_t r = isqrt(2 * p);
  return r * r == 2 * p ? r : r + 1;
}

inline Theorem1Case theorem1_case(std::int64_t p, std::int64_t delta) {
  detail::require_thm1_domain(p, delta);
  if (p <= 2 * delta) return Theorem1Case::ShortPath;
  if (p <= 3 * delta - 2) return Theorem1Case::MidPath;
  return Theorem1Case::LongPath;
}

// The three-case lower bound on c from p and delta. The long-path value
// delta + 1/2 + sqrt(2p - 10 + (delta - 7/2)^2) is stored doubled inside the
// radical: (2 delta + 1 + sqrt(8p - 40 + (2 delta - 7)^2)) / 2.
inline Theorem1Bound theorem1_bound(std::int64_t p, std::int64_t delta) {
  const Theorem1Case kind = theorem1_case(p, delta);
  switch (kind) {
    case Theorem1Case::ShortPath: return {kind, {p, 0, 1}};
    case Theorem1Case::MidPath: return {kind, {p - 1, 0, 1}};
    case Theorem1Case::LongPath: {
      const std::int64_t t = 2 * delta - 7;
      return {kind, {2 * delta + 1, 8 * p - 40 + t * t, 2}};
    }
  }
  return {};
}

// Exact integer decision of c >= theorem1_bound(p, delta).
inline bool theorem1_satisfied(std::int64_t c, std::int64_t p, std::int64_t delta) {
  return theorem1_bound(p, delta).bound.at_most(c);
}

// (2p - 10) / (m + 1) + 4.
inline Rational lemma2_bound(std::int64_t p, std::int64_t m) {
  if (p < 3 || m < 1) throw Error(Errc::InvalidArgument, "lemma2_bound requires p >= 3, m >= 1");
  return Rational(2 * p - 10, m + 1) + 4;
}

inline std::int64_t lemma3_bound(std::int64_t dx, std::int64_t dy, std::int64_t m) {
  if (dx < 1 || dy < 1 || m < 1) throw Error(Errc::InvalidArgument, "lemma3_bound domain");
  return dx + dy + m - 2;
}

// c >= p-1, or c >= 3 delta - 3, or (kappa = 2 and p >= 3 delta - 1).
inline bool theoremC_holds(std::int64_t c, std::int64_t p, std::int64_t delta, std::int64_t kappa) {
  return c >= p - 1 || c >= 3 * delta - 3 || (kappa == 2 && p >= 3 * delta - 1);
}

// theorem1_bound(p, delta) > sqrt(2p), compared through squares.
inline bool theorem1_dominates_B(std::int64_t p, std::int64_t delta) {
  const QuadraticSurd b = theorem1_bound(p, delta).bound;
  // (a + sqrt(r)) / den > sqrt(2p)  <=>  a + sqrt(r) > sqrt(2p den^2)
  return detail::sum_exceeds_sqrt(b.rational, b.radicand, 2 * p * b.den * b.den);
}

struct BoundReport {
  int n = 0;
  int p = 0;
  int c = 0;
  int delta = 0;
  int kappa = 0;
  std::int64_t thmA = 0;
  double thmB = 0.0;
  std::int64_t thmB_int = 0;
  Theorem1Bound thm1;
  Theorem1Case thm1_case = Theorem1Case::ShortPath;
  bool thm1_tight = false;
  bool thmA_ok = false;
  bool thmB_ok = false;
  bool thm1_ok = false;
  bool thmC_ok = false;
};

inline BoundReport make_bound_report(int n, int p, int c, int delta, int kappa) {
  BoundReport r;
  r.n = n;
  r.p = p;
  r.c = c;
  r.delta = delta;
  r.kappa = kappa;
  r.thmA = dirac_degree_bound(n, delta);
  r.thmB = dirac_path_bound(p);
  r.thmB_int = dirac_path_bound_int(p);
  r.thm1 = theorem1_bound(p, delta);
  r.thm1_case = r.thm1.kind;
  r.thm1_tight = c == r.thm1.bound.ceil();
  r.thmA_ok = c >= r.thmA;
  r.thmB_ok = std::int64_t{c} * c >= 2 * std::int64_t{p};
  r.thm1_ok = r.thm1.bound.at_most(c);
  r.thmC_ok = theoremC_holds(c, p, delta, kappa);
  return r;
}

}  // namespace circumlab
