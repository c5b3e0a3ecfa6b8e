#pragma once

// The extended character ring inside Z[W~]: generalized Verma and
// finite-module characters, products, structure constants, Pieri rules,
// dimensions and the polynomial presentation in three generators.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "charring.hpp"
#include "weyl.hpp"

namespace sl3ext {

// ---------------------------------------------------------------------------
// Group ring

class GroupRingElement {
public:
  using Map = std::map<AffineElement, long long>;

  GroupRingElement() = default;
  GroupRingElement(long long c) {  // NOLINT: integers embed as multiples of 1
    add(identity_element(), c);
  }
  GroupRingElement(const AffineElement& z, long long c = 1) { add(z, c); }

  static GroupRingElement from_map(Map m) {
    GroupRingElement out;
    for (const auto& [z, c] : m) out.add(z, c);
    return out;
  }

  void add(const AffineElement& z, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(z, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  long long coeff(const AffineElement& z) const {
    const auto it = terms_.find(z);
    return it == terms_.end() ? 0 : it->second;
  }

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Sum of coefficients (augmentation).
  long long total() const {
    long long s = 0;
    for (const auto& [z, c] : terms_) s += c;
    return s;
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    for (const auto& [z, c] : o.terms_) add(z, c);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    for (const auto& [z, c] : o.terms_) add(z, -c);
    return *this;
  }
  GroupRingElement& operator*=(long long k) {
    if (k == 0) terms_.clear();
    for (auto& [z, c] : terms_) c *= k;
    return *this;
  }

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(long long k, GroupRingElement a) { return a *= k; }
  friend GroupRingElement operator-(GroupRingElement a) { return a *= -1; }

  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement out;
    for (const auto& [x, cx] : a.terms_)
      for (const auto& [y, cy] : b.terms_) out.add(x * y, cx * cy);
    return out;
  }

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

private:
  Map terms_;
};

inline GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b) {
  return a * b;
}

inline GroupRingElement conjugate(const GroupRingElement& g) {
  GroupRingElement out;
  for (const auto& [z, c] : g.terms()) out.add(conjugate(z), c);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const GroupRingElement& g) {
  if (g.empty()) return os << "0";
  bool first = true;
  for (const auto& [z, c] : g.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c << "*[" << z << "]";
  }
  return os;
}

/// F = w0 + w1 + w2.
inline GroupRingElement class_element() {
  return GroupRingElement(w0_element()) + GroupRingElement(w1_element()) +
         GroupRingElement(w2_element());
}

/// chi-bar_kappa embedded as sum of m (e, mu); skew-extended to any kappa.
inline GroupRingElement embed_classical(Weight kappa) {
  const ShiftedOrbit r = resolve_shifted(kappa);
  GroupRingElement out;
  if (r.sign == 0) return out;
  for (const auto& [mu, m] : character(r.dominant)) out.add({Wbar::e, mu}, r.sign * m);
  return out;
}

// ---------------------------------------------------------------------------
// Verma characters

/// Unique z in the W-coset of y with iota(z) = mu, if any.
inline std::optional<AffineElement> iota_preimage(Weight mu, const AffineElement& coset_rep) {
  for (Wbar w : kAllWbar) {
    const Weight num = mu + kRho - apply(inverse(w), kRho);
    if (mod3(num.c1) != 0 || mod3(num.c2) != 0) continue;
    const AffineElement z{w, {num.c1 / 3, num.c2 / 3}};
    if (same_coset(z, coset_rep)) return z;
  }
  return std::nullopt;
}

/// K_{iota(y) - iota(z)} on the coset of y, zero elsewhere.
inline long long verma_multiplicity(const AffineElement& y, const AffineElement& z) {
  if (!same_coset(y, z)) return 0;
  return kostant(iota(y) - iota(z));
}

/// Verma character restricted to height(iota(y) - iota(z)) <= depth.
inline GroupRingElement verma_character_truncated(const AffineElement& y, int depth) {
  if (depth < 0) throw std::invalid_argument("verma_character_truncated: negative depth");
  GroupRingElement out;
  const Weight top = iota(y);
  for (int a = 0; a <= depth; ++a)
    for (int b = 0; a + b <= depth; ++b) {
      const Weight beta = from_root_coords(a, b);
      if (const auto z = iota_preimage(top - beta, y)) out.add(*z, kostant(beta));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Finite-module characters

/// m^y_z = m-bar^{iota(y)}_{iota(z)} on the coset of y; y must be dominant.
inline long long multiplicity(const AffineElement& y, const AffineElement& z) {
  if (!same_coset(y, z)) return 0;
  const ClassicalCharacter& ch = character(iota(y));
  const auto it = ch.find(iota(z));
  return it == ch.end() ? 0 : it->second;
}

inline void require_dominant(const AffineElement& y, const char* what) {
  if (!is_dominant(y))
    throw std::invalid_argument(std::string(what) + ": " + to_string(y) +
                                " is not in the dominant chamber");
}

/// Character built from the weight diagram of iota(y).
inline GroupRingElement ext_character_from_multiplicities(const AffineElement& y) {
  require_dominant(y, "ext_character");
  GroupRingElement out;
  for (const auto& [mu, m] : character(iota(y)))
    if (const auto z = iota_preimage(mu, y)) out.add(*z, m);
  return out;
}

/// Character built from six ordinary sl(3) characters and the class element.
inline GroupRingElement ext_character_from_classical(const AffineElement& x) {
  require_dominant(x, "ext_character");
  const Weight nu = apply(x.wbar, x.lam);
  const GroupRingElement g(gamma());
  const GroupRingElement gi(inverse(gamma()));
  GroupRingElement out = embed_classical(nu) + g * embed_classical(nu - 2 * kOmega1) +
                         gi * embed_classical(nu - 2 * kOmega2);
  GroupRingElement inner = embed_classical(nu - kRho) + g * embed_classical(nu - kOmega2) +
                           gi * embed_classical(nu - kOmega1);
  out += (class_element() + GroupRingElement(2)) * inner;
  return det(x.wbar) * out;
}

/// chi_y for dominant y.
inline GroupRingElement ext_character(const AffineElement& y) {
  return ext_character_from_multiplicities(y);
}

/// chi_y for any y in W~, through chi_{x wbar} = det(wbar) chi_x.
inline GroupRingElement ext_character_any(const AffineElement& y) {
  const ChamberDecomposition d = reduce_to_fundamental(y);
  return det(d.wbar) * ext_character(d.chamber);
}

// ---------------------------------------------------------------------------
// Decompositions and structure constants

using Decomposition = std::map<AffineElement, long long>;

inline void add_term(Decomposition& d, const AffineElement& z, long long c) {
  if (c == 0) return;
  if ((d[z] += c) == 0) d.erase(z);
}

/// Adds sign * chi_v to a decomposition, v arbitrary in W~.
inline void add_reduced(Decomposition& d, const AffineElement& v, long long c) {
  const ChamberDecomposition r = reduce_to_fundamental(v);
  add_term(d, r.chamber, det(r.wbar) * c);
}

/// Expands a combination of chi's back into Z[W~].
inline GroupRingElement evaluate(const Decomposition& d) {
  GroupRingElement out;
  for (const auto& [z, c] : d) out += c * ext_character(z);
  return out;
}

/// Writes a W-bar skew-invariant group-ring element as a combination of chi_z
/// by stripping the term with the highest iota-height.
inline Decomposition decompose_character(GroupRingElement g) {
  Decomposition out;
  while (!g.empty()) {
    const AffineElement* top = nullptr;
    int top_height = 0;
    for (const auto& [z, c] : g.terms()) {
      const Weight i = iota(z);
      const int h = i.c1 + i.c2;  // proportional to root height
      if (top == nullptr || h > top_height) {
        top = &z;
        top_height = h;
      }
    }
    const AffineElement z = *top;
    if (!is_dominant(z))
      throw std::invalid_argument("decompose_character: leading term " + to_string(z) +
                                  " is not dominant");
    const long long c = g.coeff(z);
    add_term(out, z, c);
    g -= c * ext_character(z);
  }
  return out;
}

/// chi_x chi_y = sum_v m^x_v chi_{v y}, each term reduced to the chamber.
inline Decomposition product_decomposition(const AffineElement& x, const AffineElement& y) {
  require_dominant(x, "product_decomposition");
  require_dominant(y, "product_decomposition");
  Decomposition out;
  const GroupRingElement chi = ext_character(x);
  for (const auto& [v, m] : chi.terms()) add_reduced(out, v * y, m);
  return out;
}

/// N^z_{x,y} as sum_w det(w) m^x_{z w y^{-1}}.
inline long long structure_constant(const AffineElement& x, const AffineElement& y,
                                    const AffineElement& z) {
  require_dominant(x, "structure_constant");
  require_dominant(y, "structure_constant");
  require_dominant(z, "structure_constant");
  const AffineElement yi = inverse(y);
  long long n = 0;
  for (Wbar w : kAllWbar) n += det(w) * multiplicity(x, z * finite_element(w) * yi);
  return n;
}

/// N^z_{x,y} as the classical tensor multiplicity of the iota images.
inline long long structure_constant_classical(const AffineElement& x, const AffineElement& y,
                                              const AffineElement& z) {
  if (!same_coset(x * y, z)) return 0;
  return tensor_multiplicity(iota(x), iota(y), iota(z));
}

// ---------------------------------------------------------------------------
// Generators and Pieri rules

/// f = t_{-omega1} = (e, omega1) and its conjugate.
constexpr AffineElement f_element() { return {Wbar::e, kOmega1}; }
constexpr AffineElement f_star_element() { return {Wbar::e, kOmega2}; }

/// f0 = chi_{w0}, f1 = chi_{w20}, f2 = chi_{w10}.
inline AffineElement generator_label(int j) {
  switch (j) {
    case 0: return w0_element();
    case 1: return w20_element();
    case 2: return w10_element();
    default: throw std::invalid_argument("generator index must be 0, 1 or 2");
  }
}

inline const std::array<std::string_view, 7>& pieri_words(bool star) {
  static const std::array<std::string_view, 7> f{"", "1", "21", "121", "0121", "021", "2021"};
  static const std::array<std::string_view, 7> fs{"", "2", "12", "212", "0212", "012", "1012"};
  return star ? fs : f;
}

/// chi_f chi_y (or chi_{f*} chi_y) through the seven-term rule.
inline Decomposition pieri_f(const AffineElement& y, bool star = false) {
  require_dominant(y, "pieri");
  const AffineElement f = star ? f_star_element() : f_element();
  Decomposition out;
  for (std::string_view w : pieri_words(star)) add_reduced(out, word(w) * f * y, 1);
  return out;
}

/// Decomposition of f_j chi_y.
inline Decomposition pieri(int j, const AffineElement& y) {
  require_dominant(y, "pieri");
  Decomposition out;
  switch (j) {
    case 0:
      add_reduced(out, y, 2);
      for (int i = 0; i < 3; ++i) add_reduced(out, simple_reflection(i) * y, 1);
      return out;
    case 1:
      for (const auto& [z, c] : pieri_f(y, false)) add_term(out, gamma() * z, c);
      return out;
    case 2:
      for (const auto& [z, c] : pieri_f(y, true)) add_term(out, inverse(gamma()) * z, c);
      return out;
    default: throw std::invalid_argument("pieri: generator index must be 0, 1 or 2");
  }
}

// ---------------------------------------------------------------------------
// Dimensions

inline long long dimension(const AffineElement& y) { return ext_character(y).total(); }

/// (2 D-bar_{iota(y)} + det(ybar)) / 3.
inline long long dimension_closed_form(const AffineElement& y) {
  require_dominant(y, "dimension");
  const long long num = 2 * weyl_dimension(iota(y)) + det(y.wbar);
  if (num % 3 != 0) throw std::logic_error("dimension_closed_form: non-integral result");
  return num / 3;
}

// ---------------------------------------------------------------------------
// Polynomial presentation: chi_y = sum c * f0^eps f1^n1 f2^n2, eps in {0,1}

struct Monomial {
  int eps = 0;
  int n1 = 0;
  int n2 = 0;
  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

using GeneratorPolynomial = std::map<Monomial, long long>;

inline void add_term(GeneratorPolynomial& poly, const Monomial& m, long long c) {
  if (c == 0) return;
  if ((poly[m] += c) == 0) poly.erase(m);
}

inline GeneratorPolynomial& operator+=(GeneratorPolynomial& a, const GeneratorPolynomial& b) {
  for (const auto& [m, c] : b) add_term(a, m, c);
  return a;
}

/// Multiplies by f_j, using f0^2 = 1 + 2 f0 + f1 + f2.
inline GeneratorPolynomial multiply_by_generator(const GeneratorPolynomial& poly, int j) {
  GeneratorPolynomial out;
  for (const auto& [m, c] : poly) {
    if (j == 1) {
      add_term(out, {m.eps, m.n1 + 1, m.n2}, c);
    } else if (j == 2) {
      add_term(out, {m.eps, m.n1, m.n2 + 1}, c);
    } else if (m.eps == 0) {
      add_term(out, {1, m.n1, m.n2}, c);
    } else {
      add_term(out, {0, m.n1, m.n2}, c);
      add_term(out, {1, m.n1, m.n2}, 2 * c);
      add_term(out, {0, m.n1 + 1, m.n2}, c);
      add_term(out, {0, m.n1, m.n2 + 1}, c);
    }
  }
  return out;
}

/// Evaluates a generator polynomial in Z[W~].
inline GroupRingElement evaluate(const GeneratorPolynomial& poly) {
  std::array<GroupRingElement, 3> gen;
  for (int j = 0; j < 3; ++j) gen[j] = ext_character(generator_label(j));
  GroupRingElement out;
  std::map<std::pair<int, int>, GroupRingElement> powers;
  for (const auto& [m, c] : poly) {
    auto it = powers.find({m.n1, m.n2});
    if (it == powers.end()) {
      GroupRingElement g(1);
      for (int i = 0; i < m.n1; ++i) g = g * gen[1];
      for (int i = 0; i < m.n2; ++i) g = g * gen[2];
      it = powers.emplace(std::pair{m.n1, m.n2}, g).first;
    }
    out += c * (m.eps ? gen[0] * it->second : it->second);
  }
  return out;
}

/// Presentations of every chamber element in C up to the given length.
///
/// chi_y for y of length L is peeled off f_j chi_x, where y is the only term
/// of f_j chi_x of maximal length and all other terms are already known.
inline std::map<AffineElement, GeneratorPolynomial> generator_presentations(int max_length) {
  std::map<AffineElement, GeneratorPolynomial> known;
  known[identity_element()] = {{Monomial{}, 1}};
  const std::vector<AffineElement> chamber = chamber_elements(max_length);

  std::vector<AffineElement> pending;
  for (const auto& y : chamber)
    if (!known.contains(y)) pending.push_back(y);

  bool progress = true;
  while (!pending.empty() && progress) {
    progress = false;
    for (auto it = pending.begin(); it != pending.end();) {
      const AffineElement y = *it;
      const int ly = length(y);
      bool done = false;
      for (int j : {1, 2, 0}) {
        for (const auto& [x, px] : known) {
          const int lx = length(x);
          if (lx + (j == 0 ? 1 : 2) != ly) continue;
          const Decomposition prod = pieri(j, x);
          const auto hit = prod.find(y);
          if (hit == prod.end() || hit->second != 1) continue;
          bool usable = true;
          GeneratorPolynomial poly = multiply_by_generator(px, j);
          for (const auto& [z, c] : prod) {
            if (z == y) continue;
            const auto kz = known.find(z);
            if (length(z) >= ly || kz == known.end()) {
              usable = false;
              break;
            }
            GeneratorPolynomial neg;
            for (const auto& [m, cm] : kz->second) add_term(neg, m, -c * cm);
            poly += neg;
          }
          if (!usable) continue;
          known[y] = std::move(poly);
          done = true;
          break;
        }
        if (done) break;
      }
      if (done) {
        it = pending.erase(it);
        progress = true;
      } else {
        ++it;
      }
    }
  }
  if (!pending.empty())
    throw std::logic_error("generator_presentations: no presentation found for " +
                           to_string(pending.front()));
  return known;
}

/// chi_y as a polynomial in f0, f1, f2 with f0-degree at most 1; y in C.
inline GeneratorPolynomial express_in_generators(const AffineElement& y) {
  if (!in_affine_weyl(y) || !is_dominant(y))
    throw std::invalid_argument("express_in_generators: " + to_string(y) +
                                " is not in the triality-zero chamber");
  auto all = generator_presentations(length(y));
  return all.at(y);
}

}  // namespace sl3ext
