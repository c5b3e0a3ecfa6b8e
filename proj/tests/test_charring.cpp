#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sl3ext/charring.hpp"

using namespace sl3ext;

TEST(Character, Examples) {
  EXPECT_EQ(weight_multiplicity({1, 1}, {0, 0}), 2);
  EXPECT_EQ(weight_multiplicity({1, 0}, {1, 0}), 1);
  EXPECT_EQ(weyl_dimension({1, 1}), 8);
  EXPECT_EQ(weyl_dimension({3, 0}), 10);
  EXPECT_THROW(weight_multiplicity({-1, 0}, {0, 0}), std::invalid_argument);
  EXPECT_THROW(character({2, -1}), std::invalid_argument);
}

TEST(Character, MatchesFreudenthal) {
  for (int a = 0; a <= 7; ++a)
    for (int b = 0; a + b <= 8; ++b) {
      const Weight lam{a, b};
      const auto expected = oracle::freudenthal(lam);
      ClassicalCharacter got = character(lam);
      EXPECT_EQ(got, ClassicalCharacter(expected.begin(), expected.end())) << lam;
    }
}

TEST(Character, WeylInvarianceAndDimension) {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; a + b <= 8; ++b) {
      const Weight lam{a, b};
      long long mass = 0;
      for (const auto& [mu, m] : character(lam)) {
        mass += m;
        for (Wbar w : kAllWbar) EXPECT_EQ(weight_multiplicity(lam, apply(w, mu)), m);
      }
      EXPECT_EQ(mass, weyl_dimension(lam));
    }
}

TEST(Tensor, Examples) {
  EXPECT_EQ(tensor_multiplicity({1, 0}, {0, 1}, {0, 0}), 1);
  EXPECT_EQ(tensor_multiplicity({1, 1}, {1, 1}, {1, 1}), 2);
  EXPECT_EQ(tensor_multiplicity({1, 1}, {1, 1}, {2, 2}), 1);
}

TEST(Tensor, WeylSteinbergMatchesCharacterProduct) {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (int c = 0; c <= 5; ++c)
        for (int d = 0; c + d <= 5; ++d) {
          const Weight lam{a, b}, mu{c, d};
          const auto expected = oracle::tensor_brute(lam, mu);
          EXPECT_EQ(tensor_decomposition(lam, mu), expected) << lam << mu;
          for (const auto& [nu, n] : expected) EXPECT_EQ(tensor_multiplicity(lam, mu, nu), n);
          // A few weights absent from the product.
          for (Weight nu : {Weight{a + c + 1, b + d}, Weight{0, 0}, Weight{a + c, b + d + 3}})
            if (!expected.contains(nu)) {
              EXPECT_EQ(tensor_multiplicity(lam, mu, nu), 0);
            }
        }
}

TEST(Fold, Examples) {
  EXPECT_EQ(fold_to_alcove({1, 1}, 6), (FoldResult{{1, 1}, 1}));
  EXPECT_EQ(fold_to_alcove({2, 2}, 6).sign, 0);
  EXPECT_EQ(fold_to_alcove({4, 1}, 6), (FoldResult{{3, 0}, -1}));
  EXPECT_EQ(fold_to_alcove({-1, 0}, 6).sign, 0);
  EXPECT_EQ(fold_to_alcove({-2, 0}, 6).sign, 0);
  EXPECT_EQ(fold_to_alcove({-3, 0}, 6), (FoldResult{{0, 0}, 1}));
  EXPECT_THROW(fold_to_alcove({0, 0}, 1), std::invalid_argument);
}

TEST(Fusion, Examples) {
  EXPECT_EQ(integrable_fusion({1, 1}, {1, 1}, {0, 0}, 6), 1);
  EXPECT_EQ(integrable_fusion({1, 1}, {1, 1}, {1, 1}, 6), 2);
  EXPECT_EQ(integrable_fusion({1, 1}, {1, 1}, {3, 0}, 6), 1);
  EXPECT_EQ(integrable_fusion({1, 1}, {1, 1}, {2, 0}, 6), 0);
  EXPECT_THROW(integrable_fusion({4, 0}, {0, 0}, {4, 0}, 6), std::invalid_argument);
}

TEST(Fusion, KacWaltonMatchesVerlinde) {
  for (int h : {4, 5, 6, 7, 8}) {
    std::vector<Weight> alc;
    for (int a = 0; a <= h - 3; ++a)
      for (int b = 0; a + b <= h - 3; ++b) alc.push_back({a, b});
    for (Weight lam : alc)
      for (Weight mu : alc)
        for (Weight nu : alc)
          EXPECT_EQ(integrable_fusion(lam, mu, nu, h), oracle::verlinde(lam, mu, nu, h))
              << "h=" << h << " " << lam << mu << nu;
  }
}

TEST(Fusion, SymmetryIdentityDuality) {
  const int h = 9;
  std::vector<Weight> alc;
  for (int a = 0; a <= h - 3; ++a)
    for (int b = 0; a + b <= h - 3; ++b) alc.push_back({a, b});
  for (Weight lam : alc) {
    for (Weight mu : alc) {
      EXPECT_EQ(integrable_fusion({0, 0}, lam, mu, h), lam == mu ? 1 : 0);
      EXPECT_EQ(integrable_fusion(lam, mu, {0, 0}, h), mu == conjugate(lam) ? 1 : 0);
      for (Weight nu : alc) {
        const long long n = integrable_fusion(lam, mu, nu, h);
        EXPECT_GE(n, 0);
        EXPECT_EQ(n, integrable_fusion(mu, lam, nu, h));
        EXPECT_EQ(n, integrable_fusion(lam, conjugate(nu), conjugate(mu), h));
      }
    }
  }
}

TEST(QCharacter, TrivialAndSkew) {
  for (int h : {4, 6, 9})
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) EXPECT_NEAR(std::abs(q_character_eval({0, 0}, {a, b}, h) - 1.0), 0.0, 1e-12);
  const Weight mu{1, 2};
  for (Wbar w : kAllWbar)
    EXPECT_NEAR(std::abs(q_character_eval(shifted(w, {2, 1}), mu, 7) -
                         static_cast<double>(det(w)) * q_character_eval({2, 1}, mu, 7)),
                0.0, 1e-12);
  EXPECT_EQ(q_character_eval({-1, 3}, mu, 7), Complex(0.0));
}

TEST(QCharacter, KacPetersonRatio) {
  for (int h : {5, 6, 8})
    for (int a = 0; a <= h - 3; ++a)
      for (int b = 0; a + b <= h - 3; ++b)
        for (int c = 0; c <= h - 3; ++c)
          for (int d = 0; c + d <= h - 3; ++d) {
            const Weight lam{a, b}, mu{c, d};
            const Complex ratio = modular_s(lam, mu, h) / modular_s({0, 0}, mu, h);
            EXPECT_NEAR(std::abs(q_character_eval(lam, mu, h) - ratio), 0.0, 1e-10);
          }
}

TEST(QCharacter, SimpleCurrentPhase) {
  // sigma_{[h-3]}(lam) = (h-3-a-b, a) rotates the alcove.
  for (int h : {5, 7, 9})
    for (int a = 0; a <= h - 3; ++a)
      for (int b = 0; a + b <= h - 3; ++b)
        for (int c = 0; c <= h - 3; ++c)
          for (int d = 0; c + d <= h - 3; ++d) {
            const Weight lam{a, b}, mu{c, d}, s{h - 3 - a - b, a};
            const Complex ph = std::polar(1.0, 2.0 * std::numbers::pi * triality(mu) / 3.0);
            EXPECT_NEAR(std::abs(q_character_eval(s, mu, h) - ph * q_character_eval(lam, mu, h)), 0.0,
                        1e-10);
            // Same phase in the other index, through the S-matrix.
            const Complex ph2 = std::polar(1.0, 2.0 * std::numbers::pi * triality(lam) / 3.0);
            const Weight smu{h - 3 - c - d, c};
            EXPECT_NEAR(std::abs(modular_s(lam, smu, h) - ph2 * modular_s(lam, mu, h)), 0.0, 1e-10);
          }
}

TEST(SMatrix, SymmetricAndUnitary) {
  for (int h : {4, 6, 7}) {
    std::vector<Weight> alc;
    for (int a = 0; a <= h - 3; ++a)
      for (int b = 0; a + b <= h - 3; ++b) alc.push_back({a, b});
    for (Weight l : alc)
      for (Weight m : alc) {
        EXPECT_NEAR(std::abs(modular_s(l, m, h) - modular_s(m, l, h)), 0.0, 1e-12);
        Complex s = 0.0;
        for (Weight n : alc) s += modular_s(l, n, h) * std::conj(modular_s(m, n, h));
        EXPECT_NEAR(std::abs(s - (l == m ? 1.0 : 0.0)), 0.0, 1e-9);
      }
  }
}

TEST(SMatrix, RootRelations) {
  for (int p : {4, 5, 7}) {
    const Complex i(0.0, 1.0);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        const Weight mu{a, b};
        const Complex r = r_eval(mu, p);
        const Complex lhs3p = i * (3.0 * p * std::sqrt(3.0)) * modular_s({0, 0}, mu, 3 * p);
        EXPECT_NEAR(std::abs(lhs3p - (r - std::conj(r))), 0.0, 1e-10);
        const Complex lhsp = i * (p * std::sqrt(3.0)) * modular_s({0, 0}, mu, p);
        EXPECT_NEAR(std::abs(lhsp - (r * r * r - std::pow(std::conj(r), 3))), 0.0, 1e-10);
        const double fr2 = 3.0 + (q_character_eval({1, 0}, mu, p) + q_character_eval({0, 1}, mu, p)).real();
        EXPECT_NEAR(std::norm(r), fr2, 1e-10);
      }
  }
}
