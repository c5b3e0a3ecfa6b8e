#pragma once

// Finite, affine and extended affine Weyl groups of sl(3).
//
// Weights are integer pairs in the fundamental-weight basis. An element of the
// extended affine Weyl group is stored canonically as (wbar, lam), meaning the
// product wbar * t_{-lam}; it lies in the (non-extended) affine Weyl group W
// iff lam is in the root lattice.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace sl3ext {

// ---------------------------------------------------------------------------
// Weights

struct Weight {
  int c1 = 0;
  int c2 = 0;

  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;

  constexpr Weight operator-() const { return {-c1, -c2}; }
  constexpr Weight& operator+=(Weight o) {
    c1 += o.c1;
    c2 += o.c2;
    return *this;
  }
  constexpr Weight& operator-=(Weight o) {
    c1 -= o.c1;
    c2 -= o.c2;
    return *this;
  }
  friend constexpr Weight operator+(Weight a, Weight b) { return a += b; }
  friend constexpr Weight operator-(Weight a, Weight b) { return a -= b; }
  friend constexpr Weight operator*(int k, Weight a) { return {k * a.c1, k * a.c2}; }
};

inline constexpr Weight kOmega1{1, 0};
inline constexpr Weight kOmega2{0, 1};
inline constexpr Weight kAlpha1{2, -1};
inline constexpr Weight kAlpha2{-1, 2};
inline constexpr Weight kTheta{1, 1};
inline constexpr Weight kRho{1, 1};

/// Three times the invariant form, so that the result is an integer.
constexpr int inner3(Weight a, Weight b) {
  return 2 * a.c1 * b.c1 + a.c1 * b.c2 + a.c2 * b.c1 + 2 * a.c2 * b.c2;
}

constexpr int mod3(int v) { return ((v % 3) + 3) % 3; }

/// Triality (lam1 + 2 lam2) mod 3; zero exactly on the root lattice.
constexpr int triality(Weight w) { return mod3(w.c1 + 2 * w.c2); }

constexpr bool in_root_lattice(Weight w) { return triality(w) == 0; }

constexpr bool is_dominant_weight(Weight w) { return w.c1 >= 0 && w.c2 >= 0; }

/// Level of a dominant weight, lam1 + lam2 = <lam, theta>.
constexpr int level_of(Weight w) { return w.c1 + w.c2; }

/// Diagram automorphism alpha1 <-> alpha2.
constexpr Weight conjugate(Weight w) { return {w.c2, w.c1}; }

struct RootCoords {
  int a = 0;  // coefficient of alpha1
  int b = 0;  // coefficient of alpha2
  friend constexpr bool operator==(const RootCoords&, const RootCoords&) = default;
};

/// Coordinates in the simple-root basis; empty off the root lattice.
constexpr std::optional<RootCoords> root_coords(Weight w) {
  if (!in_root_lattice(w)) return std::nullopt;
  return RootCoords{(2 * w.c1 + w.c2) / 3, (w.c1 + 2 * w.c2) / 3};
}

constexpr Weight from_root_coords(int a, int b) { return a * kAlpha1 + b * kAlpha2; }

/// Height a + b of a root-lattice weight.
inline int height(Weight w) {
  const auto rc = root_coords(w);
  if (!rc) throw std::invalid_argument("height: weight is not in the root lattice");
  return rc->a + rc->b;
}

/// Membership in the positive root cone Q+.
constexpr bool in_positive_cone(Weight w) {
  const auto rc = root_coords(w);
  return rc && rc->a >= 0 && rc->b >= 0;
}

inline std::ostream& operator<<(std::ostream& os, Weight w) {
  return os << '(' << w.c1 << ',' << w.c2 << ')';
}

inline std::string to_string(Weight w) {
  return "(" + std::to_string(w.c1) + "," + std::to_string(w.c2) + ")";
}

/// Parses the "(a,b)" text form.
inline Weight parse_weight(std::string_view text) {
  static const std::regex re(R"(^\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, re))
    throw std::invalid_argument("cannot parse weight '" + std::string(text) + "'");
  return {std::stoi(m[1].str()), std::stoi(m[2].str())};
}

// ---------------------------------------------------------------------------
// Finite Weyl group S3

enum class Wbar : std::uint8_t { e, s1, s2, s12, s21, s121 };

inline constexpr std::array<Wbar, 6> kAllWbar{Wbar::e,   Wbar::s1,  Wbar::s2,
                                              Wbar::s12, Wbar::s21, Wbar::s121};

namespace detail {

// Integer matrix acting on fundamental-weight coordinates (column vectors).
struct Mat2 {
  int a, b, c, d;
  constexpr bool operator==(const Mat2&) const = default;
  constexpr Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

inline constexpr Mat2 kMatE{1, 0, 0, 1};
inline constexpr Mat2 kMatS1{-1, 0, 1, 1};
inline constexpr Mat2 kMatS2{1, 1, 0, -1};

inline constexpr std::array<Mat2, 6> kWbarMat{
    kMatE, kMatS1, kMatS2, kMatS1 * kMatS2, kMatS2 * kMatS1, kMatS1 * kMatS2 * kMatS1};

constexpr std::array<std::array<std::uint8_t, 6>, 6> make_compose_table() {
  std::array<std::array<std::uint8_t, 6>, 6> t{};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const Mat2 m = kWbarMat[i] * kWbarMat[j];
      for (std::size_t k = 0; k < 6; ++k)
        if (kWbarMat[k] == m) t[i][j] = static_cast<std::uint8_t>(k);
    }
  return t;
}

inline constexpr auto kComposeTable = make_compose_table();

}  // namespace detail

constexpr std::size_t index_of(Wbar w) { return static_cast<std::size_t>(w); }

/// Composition a∘b (apply b first).
constexpr Wbar compose(Wbar a, Wbar b) {
  return static_cast<Wbar>(detail::kComposeTable[index_of(a)][index_of(b)]);
}

constexpr Wbar inverse(Wbar w) {
  switch (w) {
    case Wbar::s12: return Wbar::s21;
    case Wbar::s21: return Wbar::s12;
    default: return w;
  }
}

constexpr int det(Wbar w) {
  switch (w) {
    case Wbar::e:
    case Wbar::s12:
    case Wbar::s21: return 1;
    default: return -1;
  }
}

constexpr Wbar conjugate(Wbar w) {
  switch (w) {
    case Wbar::s1: return Wbar::s2;
    case Wbar::s2: return Wbar::s1;
    case Wbar::s12: return Wbar::s21;
    case Wbar::s21: return Wbar::s12;
    default: return w;
  }
}

constexpr Weight apply(Wbar w, Weight v) {
  const auto& m = detail::kWbarMat[index_of(w)];
  return {m.a * v.c1 + m.b * v.c2, m.c * v.c1 + m.d * v.c2};
}

/// Shifted action w·v = w(v + rho) - rho.
constexpr Weight shifted(Wbar w, Weight v) { return apply(w, v + kRho) - kRho; }

inline std::string_view name_of(Wbar w) {
  static constexpr std::array<std::string_view, 6> names{"e", "s1", "s2", "s12", "s21", "s121"};
  return names[index_of(w)];
}

inline std::optional<Wbar> wbar_from_name(std::string_view s) {
  for (Wbar w : kAllWbar)
    if (name_of(w) == s) return w;
  return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, Wbar w) { return os << name_of(w); }

/// A root (given as a root-lattice weight) is positive iff it lies in Q+.
constexpr bool is_positive_root(Weight alpha) { return in_positive_cone(alpha); }

inline constexpr std::array<Weight, 3> kPositiveRoots{kAlpha1, kAlpha2, kTheta};

/// Simple reflections s_i with w(alpha_i) < 0; bit i-1 set for i in {1,2}.
constexpr unsigned descent_mask(Wbar w) {
  unsigned mask = 0;
  if (!is_positive_root(apply(w, kAlpha1))) mask |= 1u;
  if (!is_positive_root(apply(w, kAlpha2))) mask |= 2u;
  return mask;
}

/// lam in P+^{(w)}: dominant with lam_i > 0 for every descent i of w.
constexpr bool in_chamber_set(Wbar w, Weight lam) {
  if (!is_dominant_weight(lam)) return false;
  const unsigned mask = descent_mask(w);
  if ((mask & 1u) && lam.c1 <= 0) return false;
  if ((mask & 2u) && lam.c2 <= 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Extended affine Weyl group

/// The element wbar * t_{-lam}.
struct AffineElement {
  Wbar wbar = Wbar::e;
  Weight lam{};

  friend constexpr auto operator<=>(const AffineElement&, const AffineElement&) = default;
};

constexpr AffineElement identity_element() { return {}; }

/// Translation t_beta = (e, -beta).
constexpr AffineElement translation(Weight beta) { return {Wbar::e, -beta}; }

constexpr AffineElement finite_element(Wbar w) { return {w, {}}; }

/// (x1, l1)(x2, l2) = (x1 x2, x2^{-1}(l1) + l2).
constexpr AffineElement operator*(const AffineElement& x, const AffineElement& y) {
  return {compose(x.wbar, y.wbar), apply(inverse(y.wbar), x.lam) + y.lam};
}

constexpr AffineElement inverse(const AffineElement& x) {
  return {inverse(x.wbar), -apply(x.wbar, x.lam)};
}

inline AffineElement power(AffineElement x, int n) {
  if (n < 0) {
    x = inverse(x);
    n = -n;
  }
  AffineElement out = identity_element();
  for (int i = 0; i < n; ++i) out = out * x;
  return out;
}

constexpr int det(const AffineElement& y) { return det(y.wbar); }

constexpr bool in_affine_weyl(const AffineElement& y) { return in_root_lattice(y.lam); }

/// y * x^{-1} in W, i.e. both lie in the same coset of W.
constexpr bool same_coset(const AffineElement& x, const AffineElement& y) {
  return triality(x.lam - y.lam) == 0;
}

constexpr AffineElement conjugate(const AffineElement& y) {
  return {conjugate(y.wbar), conjugate(y.lam)};
}

// Affine simple reflections and the generator of A.
constexpr AffineElement w0_element() { return {Wbar::s121, kTheta}; }
constexpr AffineElement w1_element() { return {Wbar::s1, {}}; }
constexpr AffineElement w2_element() { return {Wbar::s2, {}}; }
constexpr AffineElement w10_element() { return w1_element() * w0_element(); }
constexpr AffineElement w20_element() { return w2_element() * w0_element(); }

/// gamma = t_{omega1} s1 s2, canonically (s12, omega2).
constexpr AffineElement gamma() { return translation(kOmega1) * finite_element(Wbar::s12); }

/// Elements w_i generating W, indexed 0..2.
constexpr AffineElement simple_reflection(int i) {
  switch (i) {
    case 0: return w0_element();
    case 1: return w1_element();
    case 2: return w2_element();
    default: throw std::invalid_argument("simple_reflection: index must be 0, 1 or 2");
  }
}

/// Product w_{i1} w_{i2} ... of affine simple reflections, e.g. "0121".
inline AffineElement word(std::string_view digits) {
  AffineElement out = identity_element();
  for (char c : digits) {
    if (c < '0' || c > '2') throw std::invalid_argument("word: digits must be 0, 1 or 2");
    out = out * simple_reflection(c - '0');
  }
  return out;
}

/// Rejects p < 2 and p divisible by 3.
inline void check_p(int p) {
  if (p < 2 || p % 3 == 0)
    throw std::invalid_argument("invalid p = " + std::to_string(p) +
                                " (need p >= 2 and gcd(p,3) = 1)");
}

/// gamma_[p] = t_{p omega1} gamma-bar = t_{(p-1) omega1} gamma.
inline AffineElement gamma_p(int p) {
  check_p(p);
  return translation((p - 1) * kOmega1) * gamma();
}

/// Order-3 alcove automorphism x -> gamma x gamma_[p]^{-p}.
inline AffineElement sigma_p(int p, const AffineElement& x) {
  return gamma() * x * power(gamma_p(p), -p);
}

/// The "twisted log" iota(wbar t_{-lam}) = 3 lam + wbar^{-1}(rho) - rho.
constexpr Weight iota(const AffineElement& y) {
  return 3 * y.lam + apply(inverse(y.wbar), kRho) - kRho;
}

struct RationalWeight {
  Rational c1;
  Rational c2;
  friend constexpr bool operator==(const RationalWeight&, const RationalWeight&) = default;
};

inline RationalWeight operator+(const RationalWeight& a, const RationalWeight& b) {
  return {a.c1 + b.c1, a.c2 + b.c2};
}

inline RationalWeight apply(Wbar w, const RationalWeight& v) {
  const auto& m = detail::kWbarMat[index_of(w)];
  return {Rational(m.a) * v.c1 + Rational(m.b) * v.c2,
          Rational(m.c) * v.c1 + Rational(m.d) * v.c2};
}

/// Horizontal projection h(y) = ybar·(-kappa lam) of y·k Lambda_0.
inline RationalWeight horizontal_weight(const AffineElement& y, Rational kappa) {
  const RationalWeight v{-kappa * Rational(y.lam.c1) + Rational(1),
                         -kappa * Rational(y.lam.c2) + Rational(1)};
  const RationalWeight moved = apply(y.wbar, v);
  return {moved.c1 - Rational(1), moved.c2 - Rational(1)};
}

// ---------------------------------------------------------------------------
// Partition functions

/// Kostant partition function: ways to write beta as k1 a1 + k2 a2 + k3 theta.
inline long long kostant(Weight beta) {
  const auto rc = root_coords(beta);
  if (!rc || rc->a < 0 || rc->b < 0) return 0;
  return std::min(rc->a, rc->b) + 1;
}

/// Same count with every k_i bounded by 2.
inline long long refined_partition(Weight mu) {
  const auto rc = root_coords(mu);
  if (!rc || rc->a < 0 || rc->b < 0) return 0;
  long long n = 0;
  for (int k3 = 0; k3 <= 2; ++k3) {
    const int k1 = rc->a - k3;
    const int k2 = rc->b - k3;
    if (k1 >= 0 && k1 <= 2 && k2 >= 0 && k2 <= 2) ++n;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Length, chambers, alcoves

/// Reduced length in the Coxeter generators w0, w1, w2 of W.
///
/// Counts the positive affine roots alpha + m delta sent to negative roots;
/// y = wbar t_{-lam} maps alpha + m delta to wbar(alpha) + (m + <alpha,lam>) delta.
inline int length(const AffineElement& y) {
  if (!in_affine_weyl(y))
    throw std::invalid_argument("length: element is not in the affine Weyl group");
  int total = 0;
  for (Weight pos : kPositiveRoots) {
    for (Weight alpha : {pos, -pos}) {
      const int c = inner3(alpha, y.lam) / 3;
      const int m_min = is_positive_root(alpha) ? 0 : 1;
      total += std::max(0, -c - m_min);
      if (-c >= m_min && !is_positive_root(apply(y.wbar, alpha))) ++total;
    }
  }
  return total;
}

/// Dominant chamber: iota(y) in P+.
constexpr bool is_dominant(const AffineElement& y) { return is_dominant_weight(iota(y)); }

struct ChamberDecomposition {
  AffineElement chamber;  // x in the dominant chamber
  Wbar wbar;              // y = x * wbar
};

/// Unique factorization y = x * wbar with x dominant.
inline ChamberDecomposition reduce_to_fundamental(const AffineElement& y) {
  const Weight shifted_iota = iota(y) + kRho;
  for (Wbar w : kAllWbar) {
    const Weight v = apply(w, shifted_iota);
    if (v.c1 > 0 && v.c2 > 0) return {y * finite_element(inverse(w)), w};
  }
  throw std::logic_error("reduce_to_fundamental: iota(y)+rho is singular");
}

/// lam in P+_{,p}^{(ybar)}: the extended admissible alcove condition.
inline bool in_extended_alcove(const AffineElement& y, int p) {
  if (!in_chamber_set(y.wbar, y.lam)) return false;
  const bool minus_theta_negative = !is_positive_root(apply(y.wbar, -kTheta));
  const int lvl = level_of(y.lam);
  return minus_theta_negative ? lvl < p : lvl <= p;
}

inline bool in_alcove(const AffineElement& y, int p) {
  return in_affine_weyl(y) && in_extended_alcove(y, p);
}

/// C~_p, 3p^2 elements in canonical order.
inline std::vector<AffineElement> enumerate_extended_alcove(int p) {
  check_p(p);
  std::vector<AffineElement> out;
  for (Wbar w : kAllWbar)
    for (int a = 0; a <= p; ++a)
      for (int b = 0; a + b <= p; ++b) {
        const AffineElement y{w, {a, b}};
        if (in_extended_alcove(y, p)) out.push_back(y);
      }
  return out;
}

/// C_p, the p^2 triality-zero elements of C~_p, in canonical order.
inline std::vector<AffineElement> enumerate_alcove(int p) {
  auto all = enumerate_extended_alcove(p);
  std::erase_if(all, [](const AffineElement& y) { return !in_affine_weyl(y); });
  return all;
}

/// Elements of the dominant chamber C (triality zero) with length <= max_length.
inline std::vector<AffineElement> chamber_elements(int max_length) {
  std::vector<AffineElement> out;
  // |<alpha, lam>| contributes to the length for every root, so lam is bounded.
  const int bound = max_length + 1;
  for (Wbar w : kAllWbar)
    for (int a = -bound; a <= bound; ++a)
      for (int b = -bound; b <= bound; ++b) {
        const AffineElement y{w, {a, b}};
        if (!in_affine_weyl(y) || !is_dominant(y)) continue;
        if (length(y) <= max_length) out.push_back(y);
      }
  std::sort(out.begin(), out.end(), [](const AffineElement& x, const AffineElement& y) {
    const int lx = length(x), ly = length(y);
    return lx != ly ? lx < ly : x < y;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Text form: "s12*t[-1,-1]" is (s12, lam = (1,1)); the identity is "e".

inline std::string to_string(const AffineElement& y) {
  if (y == identity_element()) return "e";
  return std::string(name_of(y.wbar)) + "*t[" + std::to_string(-y.lam.c1) + "," +
         std::to_string(-y.lam.c2) + "]";
}

inline std::ostream& operator<<(std::ostream& os, const AffineElement& y) {
  return os << to_string(y);
}

inline AffineElement parse_element(std::string_view text) {
  static const std::regex re(
      R"(^\s*(e|s1|s2|s12|s21|s121)(\s*\*\s*t\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\])?\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, re))
    throw std::invalid_argument("cannot parse element '" + std::string(text) + "'");
  AffineElement y{*wbar_from_name(m[1].str()), {}};
  if (m[2].matched) y.lam = {-std::stoi(m[3].str()), -std::stoi(m[4].str())};
  return y;
}

}  // namespace sl3ext
