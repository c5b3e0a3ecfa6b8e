#pragma once

// Quantization at kappa = 3/p: the dual set E_p, the sign-resolved class
// element F(mu), quantized characters, fusion tables and their
// simultaneous eigenvectors.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "charring.hpp"
#include "extring.hpp"
#include "weyl.hpp"

namespace sl3ext {

// ---------------------------------------------------------------------------
// Dual set

enum HyperplaneFlag : unsigned { kOnAlpha1 = 1u, kOnAlpha2 = 2u, kOnTheta = 4u };

struct DualPoint {
  Weight mu;
  int epsilon = 1;
  unsigned hyperplanes = 0;  // HyperplaneFlag bits: <mu + rho, alpha> = p

  bool on_hyperplane() const { return hyperplanes != 0; }
};

inline DualPoint make_dual_point(Weight mu, int p) {
  DualPoint d{mu, level_of(mu) <= p - 2 ? 1 : -1, 0};
  if (mu.c1 + 1 == p) d.hyperplanes |= kOnAlpha1;
  if (mu.c2 + 1 == p) d.hyperplanes |= kOnAlpha2;
  if (level_of(mu) + 2 == p) d.hyperplanes |= kOnTheta;
  return d;
}

/// E_p = [0, p-1]^2 in lexicographic order.
inline std::vector<DualPoint> dual_set(int p) {
  check_p(p);
  std::vector<DualPoint> out;
  out.reserve(static_cast<std::size_t>(p) * p);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) out.push_back(make_dual_point({a, b}, p));
  return out;
}

/// F(mu) = epsilon |R(mu)|.
inline double f_eval(const DualPoint& mu, int p) {
  return mu.epsilon * std::abs(r_eval(mu.mu, p));
}

/// r_eps = R + conj(R) - eps |R|.
inline double r_epsilon(const DualPoint& mu, int p) {
  const Complex r = r_eval(mu.mu, p);
  return 2.0 * r.real() - mu.epsilon * std::abs(r);
}

// ---------------------------------------------------------------------------
// Quantized characters

namespace detail {

struct QCharParts {
  Complex phase;   // overall phase e^{-2 pi i p tau(mu) tau(lam)/3}
  Complex plain;   // coefficient of 1
  Complex f_part;  // coefficient of (F + 2)
};

inline QCharParts qchar_parts(const AffineElement& y, Weight mu, int p) {
  const Wbar yi = inverse(y.wbar);
  auto term = [&](Weight shift) { return q_character_eval(y.lam + shifted(yi, shift), mu, p); };
  QCharParts parts;
  parts.phase = phase(-static_cast<double>(p * triality(mu) * triality(y.lam)) / 3.0);
  parts.plain = term({0, 0}) + term(-2 * kOmega1) + term(-2 * kOmega2);
  parts.f_part = term(-kRho) + term(-kOmega2) + term(-kOmega1);
  return parts;
}

inline void require_extended_alcove(const AffineElement& y, int p) {
  check_p(p);
  if (!in_extended_alcove(y, p))
    throw std::invalid_argument("q_char: " + to_string(y) + " is outside the extended alcove for p = " +
                                std::to_string(p));
}

}  // namespace detail

/// chi^{(p)}_y(mu) from six integrable characters at shifted level p.
inline Complex q_char(const AffineElement& y, const DualPoint& mu, int p) {
  detail::require_extended_alcove(y, p);
  const auto parts = detail::qchar_parts(y, mu.mu, p);
  return parts.phase * (parts.plain + (f_eval(mu, p) + 2.0) * parts.f_part);
}

/// Same value through the level-3p character of iota(y).
inline Complex q_char_via_level_3p(const AffineElement& y, const DualPoint& mu, int p) {
  detail::require_extended_alcove(y, p);
  const auto parts = detail::qchar_parts(y, mu.mu, p);
  return parts.phase *
         (q_character_eval(iota(y), mu.mu, 3 * p) - r_epsilon(mu, p) * parts.f_part);
}

// ---------------------------------------------------------------------------
// Fusion tables

struct FusionTable {
  int p = 0;
  std::vector<AffineElement> labels;
  std::vector<long long> n;  // n[(z * size + x) * size + y] = N^z_{x,y}

  std::size_t size() const { return labels.size(); }
  long long& at(std::size_t x, std::size_t y, std::size_t z) {
    return n[(z * size() + x) * size() + y];
  }
  long long at(std::size_t x, std::size_t y, std::size_t z) const {
    return n[(z * size() + x) * size() + y];
  }
  std::size_t index_of(const AffineElement& y) const {
    const auto it = std::lower_bound(labels.begin(), labels.end(), y);
    if (it == labels.end() || *it != y)
      throw std::invalid_argument(to_string(y) + " is not in the alcove for p = " + std::to_string(p));
    return static_cast<std::size_t>(it - labels.begin());
  }
  friend bool operator==(const FusionTable&, const FusionTable&) = default;
};

/// N^z_{x,y} = Kac-Walton multiplicity at shifted level 3p of the iota images.
inline long long fusion_constant(const AffineElement& x, const AffineElement& y,
                                 const AffineElement& z, int p) {
  return integrable_fusion(iota(x), iota(y), iota(z), 3 * p);
}

/// N^z_{x,y} = sum over W^{[p]} = {(wbar, p beta), beta in Q} of det m^x_{z w y^{-1}}.
inline long long fusion_constant_direct(const AffineElement& x, const AffineElement& y,
                                        const AffineElement& z, int p) {
  check_p(p);
  const AffineElement yi = inverse(y);
  // iota(z w y^{-1}) moves by 3p ybar(beta); the weight diagram of iota(x)
  // has root coordinates within level(iota(x)) of the origin.
  const int radius = level_of(iota(x)) + level_of(iota(y)) + level_of(iota(z)) + 4;
  const int bound = radius / (3 * p) + 1;
  long long n = 0;
  for (Wbar w : kAllWbar)
    for (int a = -bound; a <= bound; ++a)
      for (int b = -bound; b <= bound; ++b) {
        const AffineElement tw{w, p * from_root_coords(a, b)};
        n += det(w) * multiplicity(x, z * tw * yi);
      }
  return n;
}

inline FusionTable fusion_table(int p) {
  FusionTable t{p, enumerate_alcove(p), {}};
  const std::size_t n = t.size();
  t.n.assign(n * n * n, 0);
  std::vector<Weight> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = iota(t.labels[i]);
  std::map<Weight, std::size_t> by_iota;
  for (std::size_t i = 0; i < n; ++i) by_iota.emplace(im[i], i);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& [kappa, m] : tensor_decomposition(im[x], im[y])) {
        const FoldResult f = fold_to_alcove(kappa, 3 * p);
        if (f.sign == 0) continue;
        const auto it = by_iota.find(f.weight);
        if (it != by_iota.end()) t.at(x, y, it->second) += f.sign * m;
      }
  return t;
}

inline FusionTable fusion_table_direct(int p) {
  FusionTable t{p, enumerate_alcove(p), {}};
  const std::size_t n = t.size();
  t.n.assign(n * n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        t.at(x, y, z) = fusion_constant_direct(t.labels[x], t.labels[y], t.labels[z], p);
  return t;
}

// ---------------------------------------------------------------------------
// Spectral data

struct EigenData {
  int p = 0;
  std::vector<AffineElement> labels;
  std::vector<DualPoint> points;
  std::vector<Complex> chi;  // chi[y * points + mu]
  std::vector<Complex> psi;
  std::vector<double> psi1;

  std::size_t rows() const { return labels.size(); }
  std::size_t cols() const { return points.size(); }
  Complex chi_at(std::size_t y, std::size_t mu) const { return chi[y * cols() + mu]; }
  Complex psi_at(std::size_t y, std::size_t mu) const { return psi[y * cols() + mu]; }
};

/// Max |(psi psi^dagger) - 1| over both products.
inline double unitarity_defect(const EigenData& ed) {
  const std::size_t n = ed.rows(), m = ed.cols();
  double worst = 0.0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Complex s = 0.0;
      for (std::size_t y = 0; y < n; ++y) s += ed.psi_at(y, a) * std::conj(ed.psi_at(y, b));
      worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < m; ++a) s += ed.psi_at(x, a) * std::conj(ed.psi_at(y, a));
      worst = std::max(worst, std::abs(s - (x == y ? 1.0 : 0.0)));
    }
  return worst;
}

inline constexpr double kUnitarityTolerance = 1e-8;
inline constexpr double kRoundingTolerance = 1e-6;

inline EigenData eigen_data(int p) {
  EigenData ed{p, enumerate_alcove(p), dual_set(p), {}, {}, {}};
  const std::size_t n = ed.rows(), m = ed.cols();
  if (n != m) throw std::logic_error("eigen_data: alcove and dual set differ in size");
  ed.chi.resize(n * m);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t a = 0; a < m; ++a) ed.chi[y * m + a] = q_char(ed.labels[y], ed.points[a], p);
  ed.psi1.resize(m);
  ed.psi.resize(n * m);
  for (std::size_t a = 0; a < m; ++a) {
    double norm2 = 0.0;
    for (std::size_t y = 0; y < n; ++y) norm2 += std::norm(ed.chi_at(y, a));
    ed.psi1[a] = 1.0 / std::sqrt(norm2);
    for (std::size_t y = 0; y < n; ++y) ed.psi[y * m + a] = ed.chi_at(y, a) * ed.psi1[a];
  }
  if (const double d = unitarity_defect(ed); !(d < kUnitarityTolerance))
    throw std::runtime_error("eigen_data: unitarity defect " + std::to_string(d) +
                             " exceeds tolerance for p = " + std::to_string(p));
  return ed;
}

struct PasquierVerlinde {
  FusionTable table;
  double max_defect = 0.0;  // distance to the nearest integer before rounding
};

/// N^z_{x,y} = sum_mu psi_x psi_y conj(psi_z) / psi_1, rounded.
inline PasquierVerlinde pasquier_verlinde_with_defect(const EigenData& ed) {
  const std::size_t n = ed.rows(), m = ed.cols();
  if (const double d = unitarity_defect(ed); !(d < kUnitarityTolerance))
    throw std::runtime_error("pasquier_verlinde: unitarity defect " + std::to_string(d));
  PasquierVerlinde out{{ed.p, ed.labels, std::vector<long long>(n * n * n, 0)}, 0.0};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Complex s = 0.0;
        for (std::size_t a = 0; a < m; ++a)
          s += ed.psi_at(x, a) * ed.psi_at(y, a) * std::conj(ed.psi_at(z, a)) / ed.psi1[a];
        const double r = std::round(s.real());
        out.max_defect = std::max(out.max_defect, std::abs(s - Complex(r, 0.0)));
        out.table.at(x, y, z) = static_cast<long long>(r);
      }
  if (!(out.max_defect < kRoundingTolerance))
    throw std::runtime_error("pasquier_verlinde: pre-rounding defect " +
                             std::to_string(out.max_defect) + " exceeds tolerance");
  return out;
}

inline FusionTable pasquier_verlinde(const EigenData& ed) {
  return pasquier_verlinde_with_defect(ed).table;
}

}  // namespace sl3ext
