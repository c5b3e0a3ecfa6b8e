#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sl3ext/admissible.hpp"

using namespace sl3ext;

namespace {

constexpr double kTol = 1e-9;

Complex cis(double turns) { return std::polar(1.0, 2.0 * std::numbers::pi * turns); }

}  // namespace

TEST(DualSet, SmallCases) {
  const auto d2 = dual_set(2);
  ASSERT_EQ(d2.size(), 4u);
  const std::vector<Weight> mus{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  const std::vector<int> eps{1, -1, -1, -1};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(d2[i].mu, mus[i]);
    EXPECT_EQ(d2[i].epsilon, eps[i]);
  }
  EXPECT_EQ(dual_set(5).size(), 25u);
  for (const auto& d : dual_set(5)) {
    if (level_of(d.mu) == 3) {
      EXPECT_EQ(d.epsilon, 1);
      EXPECT_TRUE(d.hyperplanes & kOnTheta);
    }
    if (d.mu.c1 == 4) {
      EXPECT_TRUE(d.hyperplanes & kOnAlpha1);
    }
  }
  EXPECT_THROW(dual_set(6), std::invalid_argument);
}

TEST(ClassElement, SquareAndHyperplanes) {
  const DualPoint zero = make_dual_point({0, 0}, 5);
  const Complex r0 = cis(-2.0 / 15.0) + 2.0 * cis(1.0 / 15.0);
  EXPECT_NEAR(f_eval(zero, 5), std::abs(r0), 1e-12);
  for (int p : {4, 5, 7}) {
    for (const auto& mu : dual_set(p)) {
      const double f = f_eval(mu, p);
      const Complex f2 = 3.0 + q_character_eval({1, 0}, mu.mu, p) + q_character_eval({0, 1}, mu.mu, p);
      EXPECT_NEAR(std::abs(f * f - f2), 0.0, 1e-10);
      if (mu.on_hyperplane()) {
        EXPECT_NEAR(r_epsilon(mu, p), 0.0, 1e-10) << mu.mu;
      }
    }
  }
}

TEST(QChar, Examples) {
  for (int p : {2, 4, 5}) {
    for (const auto& mu : dual_set(p)) {
      EXPECT_NEAR(std::abs(q_char(identity_element(), mu, p) - 1.0), 0.0, kTol);
      EXPECT_NEAR(std::abs(q_char(gamma(), mu, p) - cis(p * triality(mu.mu) / 3.0)), 0.0, kTol);
      const Complex w0 = q_char(w0_element(), mu, p);
      EXPECT_NEAR(std::abs(w0 - (2.0 + f_eval(mu, p))), 0.0, kTol);
      const Complex w20 = q_char(w20_element(), mu, p);
      EXPECT_NEAR(std::abs(w20 - (q_character_eval({1, 0}, mu.mu, p) + 1.0 + f_eval(mu, p))), 0.0, kTol);
    }
  }
  EXPECT_THROW(q_char(AffineElement{Wbar::e, {9, 9}}, make_dual_point({0, 0}, 4), 4),
               std::invalid_argument);
}

TEST(QChar, TwoEvaluationsAgree) {
  for (int p : {2, 4, 5, 7})
    for (const auto& y : enumerate_extended_alcove(p))
      for (const auto& mu : dual_set(p))
        EXPECT_NEAR(std::abs(q_char(y, mu, p) - q_char_via_level_3p(y, mu, p)), 0.0, kTol) << y;
}

TEST(QChar, ConjugationAndCosets) {
  for (int p : {4, 5}) {
    for (const auto& y : enumerate_alcove(p))
      for (const auto& mu : dual_set(p)) {
        const Complex v = q_char(y, mu, p);
        EXPECT_NEAR(std::abs(q_char(conjugate(y), mu, p) - std::conj(v)), 0.0, kTol);
        EXPECT_NEAR(std::abs(q_char(y, make_dual_point(conjugate(mu.mu), p), p) - std::conj(v)), 0.0, kTol);
      }
    // gamma y and sigma_p(y) share a quantized character.
    for (const auto& y : enumerate_alcove(p)) {
      const AffineElement gy = gamma() * y;
      if (!in_extended_alcove(gy, p)) continue;
      for (const auto& mu : dual_set(p))
        EXPECT_NEAR(std::abs(q_char(gy, mu, p) - q_char(sigma_p(p, y), mu, p)), 0.0, kTol) << y;
    }
    // Elements of C~_p differing by A^{[p]} = <gamma_[p]> on the right agree.
    const auto ext = enumerate_extended_alcove(p);
    for (const auto& y : ext)
      for (int k = 1; k < 3; ++k) {
        const AffineElement ya = y * power(gamma_p(p), k);
        if (!in_extended_alcove(ya, p)) continue;
        for (const auto& mu : dual_set(p))
          EXPECT_NEAR(std::abs(q_char(ya, mu, p) - q_char(y, mu, p)), 0.0, 1e-10) << y;
      }
  }
}

TEST(QChar, DegenerateCaseMatchesIntegrable) {
  for (const auto& y : enumerate_alcove(2))
    for (const auto& mu : dual_set(2))
      EXPECT_NEAR(std::abs(q_char(y, mu, 2) - q_character_eval(iota(y), mu.mu, 6)), 0.0, 1e-10);
}

TEST(QChar, HyperplaneReduction) {
  for (int p : {4, 5, 7})
    for (const auto& mu : dual_set(p)) {
      if (!mu.on_hyperplane()) continue;
      for (const auto& y : enumerate_alcove(p))
        EXPECT_NEAR(std::abs(q_char(y, mu, p) - q_character_eval(iota(y), mu.mu, 3 * p)), 0.0, kTol);
    }
}

TEST(QChar, VanishingOutsideImage) {
  for (int p : {4, 5, 7}) {
    const int k = 3 * p - 3;
    for (int a = 0; a <= k; ++a)
      for (int b = 0; a + b <= k; ++b) {
        const Weight lam{a, b};
        if (triality(lam) != 0 || mod3(a + 1) != 0 || mod3(b + 1) != 0) continue;
        for (int c = 0; c <= k; ++c)
          for (int d = 0; c + d <= k; ++d) {
            const Weight mu{c, d};
            const bool on_wall = (c + 1) % p == 0 || (d + 1) % p == 0 || (c + d + 2) % p == 0;
            if (on_wall) {
              EXPECT_NEAR(std::abs(q_character_eval(lam, mu, 3 * p)), 0.0, 1e-10) << lam << mu;
            }
          }
      }
  }
}

TEST(Fusion, ExamplesAndRoutes) {
  const FusionTable t2 = fusion_table(2);
  const std::size_t w0 = t2.index_of(w0_element());
  std::map<AffineElement, long long> row;
  for (std::size_t z = 0; z < t2.size(); ++z)
    if (t2.at(w0, w0, z) != 0) row[t2.labels[z]] = t2.at(w0, w0, z);
  EXPECT_EQ(row, (std::map<AffineElement, long long>{
                     {identity_element(), 1}, {w0_element(), 2}, {w10_element(), 1}, {w20_element(), 1}}));
  for (int p : {2, 4, 5, 7}) {
    const FusionTable t = fusion_table(p);
    EXPECT_EQ(t, fusion_table_direct(p)) << p;
    const std::size_t one = t.index_of(identity_element());
    for (std::size_t x = 0; x < t.size(); ++x)
      for (std::size_t y = 0; y < t.size(); ++y) {
        EXPECT_EQ(t.at(one, x, y), x == y ? 1 : 0);
        EXPECT_EQ(t.at(x, y, one), t.labels[y] == conjugate(t.labels[x]) ? 1 : 0);
      }
  }
}

TEST(Fusion, SimpleCurrentAndAlgebra) {
  for (int p : {4, 5}) {
    const FusionTable t = fusion_table(p);
    const std::size_t n = t.size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const auto sy = t.index_of(sigma_p(p, t.labels[y]));
          const auto sz = t.index_of(sigma_p(p, t.labels[z]));
          EXPECT_EQ(t.at(x, sy, sz), t.at(x, y, z));
          EXPECT_EQ(t.at(x, y, z), t.at(y, x, z));
          EXPECT_GE(t.at(x, y, z), 0);
          const auto cx = t.index_of(conjugate(t.labels[x]));
          const auto cy = t.index_of(conjugate(t.labels[y]));
          const auto cz = t.index_of(conjugate(t.labels[z]));
          EXPECT_EQ(t.at(cx, cy, cz), t.at(x, y, z));
        }
  }
}

TEST(Spectral, EigenvaluesAndReconstruction) {
  for (int p : {2, 4, 5}) {
    const FusionTable t = fusion_table(p);
    const EigenData ed = eigen_data(p);
    EXPECT_LT(unitarity_defect(ed), kUnitarityTolerance);
    const std::size_t one = t.index_of(identity_element());
    for (std::size_t a = 0; a < ed.cols(); ++a) {
      EXPECT_NEAR(std::abs(ed.chi_at(one, a) - 1.0), 0.0, 1e-12);
      EXPECT_GT(ed.psi1[a], 0.0);
    }
    for (std::size_t x = 0; x < t.size(); ++x)
      for (std::size_t y = 0; y < t.size(); ++y)
        for (std::size_t a = 0; a < ed.cols(); ++a) {
          Complex s = 0.0;
          for (std::size_t z = 0; z < t.size(); ++z) s += static_cast<double>(t.at(x, y, z)) * ed.chi_at(z, a);
          EXPECT_NEAR(std::abs(ed.chi_at(x, a) * ed.chi_at(y, a) - s), 0.0, 1e-8);
        }
    const PasquierVerlinde pv = pasquier_verlinde_with_defect(ed);
    EXPECT_LT(pv.max_defect, kRoundingTolerance);
    EXPECT_EQ(pv.table, t);
  }
}

TEST(Spectral, ColumnsSeparatedByGenerators) {
  for (int p : {4, 5, 7}) {
    const EigenData ed = eigen_data(p);
    std::vector<std::size_t> rows;
    for (const auto& y : {identity_element(), w0_element(), w10_element(), w20_element()})
      rows.push_back(static_cast<std::size_t>(
          std::lower_bound(ed.labels.begin(), ed.labels.end(), y) - ed.labels.begin()));
    for (std::size_t a = 0; a < ed.cols(); ++a)
      for (std::size_t b = a + 1; b < ed.cols(); ++b) {
        double diff = 0.0;
        for (std::size_t r : rows) diff = std::max(diff, std::abs(ed.chi_at(r, a) - ed.chi_at(r, b)));
        EXPECT_GT(diff, 1e-6) << ed.points[a].mu << ed.points[b].mu;
      }
  }
}

TEST(Spectral, PsiOnHyperplanesIsSMatrix) {
  for (int p : {4, 5, 7}) {
    const EigenData ed = eigen_data(p);
    for (std::size_t a = 0; a < ed.cols(); ++a) {
      const DualPoint& mu = ed.points[a];
      if (!mu.on_hyperplane()) continue;
      EXPECT_GT(modular_s({0, 0}, mu.mu, 3 * p).real(), 0.0);
      const double scale = mu.mu == Weight{p - 1, p - 1} ? 1.0 : std::sqrt(3.0);
      for (std::size_t y = 0; y < ed.rows(); ++y)
        EXPECT_NEAR(std::abs(ed.psi_at(y, a) - scale * modular_s(iota(ed.labels[y]), mu.mu, 3 * p)), 0.0,
                    kTol);
    }
  }
}

TEST(Admissible, InvalidLevelsRejected) {
  for (int p : {-1, 0, 1, 3, 6, 9}) {
    EXPECT_THROW(dual_set(p), std::invalid_argument) << p;
    EXPECT_THROW(fusion_table(p), std::invalid_argument) << p;
    EXPECT_THROW(eigen_data(p), std::invalid_argument) << p;
  }
}
