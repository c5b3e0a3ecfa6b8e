#pragma once

// Classical sl(3) characters, tensor products, integrable fusion by affine
// folding, and the complex-valued integrable characters and S-matrix.

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "weyl.hpp"

namespace sl3ext {

using Complex = std::complex<double>;

/// Weight multiplicities of a finite-dimensional module, zero entries omitted.
using ClassicalCharacter = std::map<Weight, long long>;

/// Weyl dimension formula.
inline long long weyl_dimension(Weight lam) {
  if (!is_dominant_weight(lam)) throw std::invalid_argument("weyl_dimension: weight not dominant");
  const long long a = lam.c1 + 1, b = lam.c2 + 1;
  return a * b * (a + b) / 2;
}

/// Kostant alternating sum over the finite Weyl group.
inline long long weight_multiplicity(Weight lam, Weight mu) {
  if (!is_dominant_weight(lam))
    throw std::invalid_argument("weight_multiplicity: highest weight " + to_string(lam) +
                                " not dominant");
  long long m = 0;
  for (Wbar w : kAllWbar) m += det(w) * kostant(shifted(w, lam) - mu);
  return m;
}

namespace detail {

inline ClassicalCharacter compute_character(Weight lam) {
  ClassicalCharacter out;
  const int n = level_of(lam);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      const Weight mu = lam - from_root_coords(a, b);
      if (const long long m = weight_multiplicity(lam, mu); m != 0) out.emplace(mu, m);
    }
  return out;
}

}  // namespace detail

/// Full weight diagram of the irreducible module with highest weight lam.
inline const ClassicalCharacter& character(Weight lam) {
  if (!is_dominant_weight(lam))
    throw std::invalid_argument("character: weight " + to_string(lam) + " not dominant");
  static std::mutex mtx;
  static std::map<Weight, ClassicalCharacter> cache;
  std::lock_guard lock(mtx);
  auto it = cache.find(lam);
  if (it == cache.end()) it = cache.emplace(lam, detail::compute_character(lam)).first;
  return it->second;
}

struct ShiftedOrbit {
  Weight dominant;  // nu' with nu = w·nu'
  int sign;         // det(w), or 0 when nu + rho is singular
};

/// Moves nu into P+ under the shifted action.
inline ShiftedOrbit resolve_shifted(Weight nu) {
  const Weight v = nu + kRho;
  for (Wbar w : kAllWbar) {
    const Weight u = apply(w, v);
    if (u.c1 > 0 && u.c2 > 0) return {u - kRho, det(w)};
  }
  return {{}, 0};
}

/// Weyl-Steinberg formula for the multiplicity of nu in lam (x) mu.
inline long long tensor_multiplicity(Weight lam, Weight mu, Weight nu) {
  if (!is_dominant_weight(lam) || !is_dominant_weight(mu) || !is_dominant_weight(nu))
    throw std::invalid_argument("tensor_multiplicity: weights must be dominant");
  if (mod3(triality(lam) + triality(mu)) != triality(nu)) return 0;
  const ClassicalCharacter& ch = character(lam);
  long long n = 0;
  for (Wbar w : kAllWbar) {
    const auto it = ch.find(shifted(w, nu) - mu);
    if (it != ch.end()) n += det(w) * it->second;
  }
  return n;
}

/// Racah-Speiser decomposition of lam (x) mu.
inline std::map<Weight, long long> tensor_decomposition(Weight lam, Weight mu) {
  std::map<Weight, long long> out;
  for (const auto& [kappa, m] : character(lam)) {
    const ShiftedOrbit r = resolve_shifted(kappa + mu);
    if (r.sign != 0) out[r.dominant] += r.sign * m;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// ---------------------------------------------------------------------------
// Affine folding at shifted level h

struct FoldResult {
  Weight weight;
  int sign = 0;
  friend bool operator==(const FoldResult&, const FoldResult&) = default;
};

/// Brings nu + rho into the closed alcove {v1, v2 >= 0, v1 + v2 <= h} with sign.
inline FoldResult fold_to_alcove(Weight nu, int h) {
  if (h < 2) throw std::invalid_argument("fold_to_alcove: h must be >= 2");
  Weight v = nu + kRho;
  int sign = 1;
  for (int step = 0; step <= 10 * h; ++step) {
    if (v.c1 == 0 || v.c2 == 0 || v.c1 + v.c2 == h) return {{}, 0};
    if (v.c1 < 0) {
      v = apply(Wbar::s1, v);
    } else if (v.c2 < 0) {
      v = apply(Wbar::s2, v);
    } else if (v.c1 + v.c2 > h) {
      v = v - (v.c1 + v.c2 - h) * kTheta;
    } else {
      return {v - kRho, sign};
    }
    sign = -sign;
  }
  throw std::logic_error("fold_to_alcove: iteration cap exceeded for " + to_string(nu));
}

inline bool in_level_alcove(Weight lam, int h) {
  return is_dominant_weight(lam) && level_of(lam) <= h - 3;
}

/// Kac-Walton fusion multiplicity at shifted level h.
inline long long integrable_fusion(Weight lam, Weight mu, Weight nu, int h) {
  for (Weight w : {lam, mu, nu})
    if (!in_level_alcove(w, h))
      throw std::invalid_argument("integrable_fusion: " + to_string(w) +
                                  " outside the level-" + std::to_string(h - 3) + " alcove");
  long long n = 0;
  for (const auto& [kappa, m] : tensor_decomposition(lam, mu)) {
    const FoldResult f = fold_to_alcove(kappa, h);
    if (f.sign != 0 && f.weight == nu) n += f.sign * m;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Complex evaluations

namespace detail {
inline Complex phase(double turns) { return std::polar(1.0, 2.0 * std::numbers::pi * turns); }
}  // namespace detail

/// chi-bar^{(h)}_nu(mu); non-dominant nu resolved through the shifted orbit.
inline Complex q_character_eval(Weight nu, Weight mu, int h) {
  if (h < 2) throw std::invalid_argument("q_character_eval: h must be >= 2");
  const ShiftedOrbit r = resolve_shifted(nu);
  if (r.sign == 0) return 0.0;
  const Weight x = mu + kRho;
  Complex s = 0.0;
  for (const auto& [w, m] : character(r.dominant))
    s += static_cast<double>(m) * detail::phase(-static_cast<double>(inner3(w, x)) / (3.0 * h));
  return static_cast<double>(r.sign) * s;
}

/// Kac-Peterson S-matrix at shifted level h.
inline Complex modular_s(Weight lam, Weight mu, int h) {
  if (h < 2) throw std::invalid_argument("modular_s: h must be >= 2");
  const Weight x = lam + kRho, y = mu + kRho;
  Complex s = 0.0;
  for (Wbar w : kAllWbar)
    s += static_cast<double>(det(w)) *
         detail::phase(-static_cast<double>(inner3(apply(w, x), y)) / (3.0 * h));
  return Complex(0.0, -1.0) / (h * std::sqrt(3.0)) * s;
}

/// R(mu), the sum over the three conjugates of exp(-2 pi i <theta, mu+rho>/3p).
inline Complex r_eval(Weight mu, int p) {
  const Weight x = mu + kRho;
  const double n = 3.0 * p;
  return detail::phase(-(x.c1 + x.c2) / n) + detail::phase(x.c1 / n) + detail::phase(x.c2 / n);
}

}  // namespace sl3ext
