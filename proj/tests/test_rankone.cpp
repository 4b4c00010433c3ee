#include "support.hpp"

using namespace qgt;

namespace {

RatFunc vp(int k) { return RatFunc(LaurentHalf::vpow(k)); }

std::vector<LDomPair> dominant_pairs(int wmax) {
  std::vector<LDomPair> out;
  for (int w1 = 0; w1 <= wmax; ++w1)
    for (int w2 = 0; w2 <= wmax; ++w2)
      for (int v1 = 0; v1 <= std::min(w1, w2); ++v1)
        for (int v2 = 0; v1 + v2 <= std::min(w1, w2); ++v2)
          out.push_back({v1, v2, w1, w2});
  return out;
}

Element power(const AlgebraPtr &alg, Gen g, int k) {
  Element x = Element::one(alg);
  for (int j = 0; j < k; ++j)
    switch (g) {
    case Gen::E: x *= Element::E(alg, 0); break;
    case Gen::F: x *= Element::F(alg, 0); break;
    case Gen::K: x *= Element::K(alg, 0); break;
    case Gen::Kp: x *= Element::K(alg, 0, 1, true); break;
    }
  return x;
}

} // namespace

TEST(RankOne, Dominance) {
  EXPECT_TRUE(is_l_dominant({0, 0, 3, 1}));
  EXPECT_FALSE(is_l_dominant({1, 1, 1, 1}));
  EXPECT_TRUE(is_l_dominant({1, 0, 1, 1}));
  EXPECT_FALSE(is_l_dominant({0, 0, -1, 0}));
  EXPECT_THROW(L_closed_form({1, 1, 1, 1}), std::invalid_argument);
  // Count: pairs with v1 + v2 <= min(w1, w2).
  for (int m = 0; m <= 4; ++m) {
    std::size_t n = 0;
    for (const auto &p : dominant_pairs(4))
      n += p.w1 == m && p.w2 == m;
    EXPECT_EQ(n, static_cast<std::size_t>((m + 1) * (m + 2) / 2));
  }
}

TEST(RankOne, Dimensions) {
  EXPECT_EQ(dims({1, 0, 1, 1}).variety_dim, 1);
  EXPECT_EQ(dims({0, 0, 2, 3}).variety_dim, 0);
  const Dims d = dims({1, 0, 2, 1});
  ASSERT_EQ(d.strata.size(), 2u);
  EXPECT_EQ(d.strata[0].v1, 0);
  EXPECT_EQ(d.strata[0].defect, 0);
  for (const auto &p : dominant_pairs(4))
    for (const auto &s : dims(p).strata)
      EXPECT_LE(s.stratum_dim, dims(p).variety_dim);
}

TEST(RankOne, ImageSets) {
  using V = std::vector<std::pair<int, int>>;
  EXPECT_EQ(image_set({0, 0, 2, 2}), (V{{0, 0}}));
  EXPECT_EQ(image_set({1, 1, 2, 2}), (V{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(image_set({1, 0, 2, 1}), (V{{0, 0}, {1, 0}}));
}

TEST(RankOne, PiDecomposition) {
  EXPECT_EQ(pi_decompose({0, 0, 2, 1}), (DCBExpansion{{{0, 0, 2, 1}, LaurentHalf(1)}}));
  EXPECT_EQ(pi_decompose({1, 0, 2, 1}),
            (DCBExpansion{{{1, 0, 2, 1}, LaurentHalf(1)}, {{0, 0, 2, 1}, LaurentHalf(1)}}));
  EXPECT_EQ(pi_decompose({1, 1, 2, 2}),
            (DCBExpansion{{{1, 1, 2, 2}, LaurentHalf(1)}, {{0, 0, 2, 2}, LaurentHalf(1)}}));
  // Mirror symmetry in w.
  for (const auto &p : dominant_pairs(4)) {
    DCBExpansion m;
    for (const auto &[q, c] : pi_decompose({p.v2, p.v1, p.w2, p.w1}))
      m.emplace(LDomPair{q.v2, q.v1, q.w2, q.w1}, c);
    EXPECT_EQ(pi_decompose(p), m) << to_string(p);
  }
}

TEST(RankOne, ClosedFormExamples) {
  const AlgebraPtr alg = sl2_algebra();
  EXPECT_EQ(L_closed_form({0, 0, 1, 1}, alg), P("E1*F1 - v^-1*K1 - v*K1'", alg));
  EXPECT_EQ(L_closed_form({1, 0, 1, 1}, alg), P("K1", alg));
  EXPECT_EQ(L_closed_form({0, 1, 1, 1}, alg), P("K1'", alg));
  EXPECT_EQ(L_closed_form({0, 0, 1, 0}, alg), P("E1", alg));
  EXPECT_EQ(L_closed_form({0, 0, 0, 1}, alg), P("F1", alg));
  EXPECT_EQ(L_closed_form({0, 0, 0, 0}, alg), Element::one(alg));
}

// The closed form against the canonical-basis pipeline.
TEST(RankOne, ClosedFormMatchesPipeline) {
  const AlgebraPtr alg = sl2_algebra();
  for (const auto &p : dominant_pairs(3)) {
    const int l = p.v1 + p.v2;
    EXPECT_EQ(cb_element(alg, DCBIndex{{p.v1}, {p.v2}, {p.w2 - l}, {p.w1 - l}}), L_closed_form(p, alg))
        << to_string(p);
  }
}

TEST(RankOneProperty, SymmetriesOfL) {
  const AlgebraPtr alg = sl2_algebra();
  for (const auto &p : dominant_pairs(4)) {
    const Element x = L_closed_form(p, alg);
    EXPECT_EQ(bar(x), x);
    EXPECT_EQ(star(x), L_closed_form({p.v2, p.v1, p.w1, p.w2}, alg));
    EXPECT_EQ(involution(Involution::Chevalley, x), L_closed_form({p.v2, p.v1, p.w2, p.w1}, alg));
    EXPECT_EQ(involution(Involution::Transpose, x), L_closed_form({p.v1, p.v2, p.w2, p.w1}, alg));
  }
}

TEST(RankOne, ActExamples) {
  const LaurentHalf one(1);
  EXPECT_EQ(act(Gen::E, Side::Left, 1, {0, 0, 1, 1}), std::make_pair(one, LDomPair{0, 0, 2, 1}));
  EXPECT_EQ(act(Gen::K, Side::Left, 1, {0, 0, 2, 1}), std::make_pair(LaurentHalf::vpow(1), LDomPair{1, 0, 3, 2}));
  EXPECT_EQ(act(Gen::K, Side::Right, 1, {0, 0, 2, 1}), std::make_pair(LaurentHalf::vpow(-1), LDomPair{1, 0, 3, 2}));
  EXPECT_THROW(act(Gen::E, Side::Left, 1, {0, 0, 2, 1}), std::invalid_argument);
  EXPECT_THROW(act(Gen::K, Side::Left, 0, {0, 0, 2, 1}), std::invalid_argument);
  EXPECT_EQ(parse_gen("K'"), Gen::Kp);
  EXPECT_THROW(parse_gen("X"), std::invalid_argument);
}

// act against literal multiplication.
TEST(RankOneProperty, ActMatchesMultiplication) {
  const AlgebraPtr alg = sl2_algebra();
  for (const auto &p : dominant_pairs(3))
    for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kp})
      for (Side s : {Side::Left, Side::Right})
        for (int k = 1; k <= 2; ++k) {
          if ((g == Gen::E || g == Gen::F) && p.w1 != p.w2) {
            EXPECT_THROW(act(g, s, k, p), std::invalid_argument);
            continue;
          }
          const auto [c, q] = act(g, s, k, p);
          const Element x = L_closed_form(p, alg), y = power(alg, g, k);
          EXPECT_EQ(s == Side::Left ? y * x : x * y, L_closed_form(q, alg) * RatFunc(c))
              << to_string(p) << " k=" << k;
        }
}

TEST(RankOne, EfExpandExamples) {
  EXPECT_EQ(ef_expand(1, 1), (DCBExpansion{{{0, 0, 1, 1}, LaurentHalf(1)},
                                           {{1, 0, 1, 1}, LaurentHalf::vpow(-1)},
                                           {{0, 1, 1, 1}, LaurentHalf::vpow(1)}}));
  EXPECT_EQ(ef_expand(3, 0), (DCBExpansion{{{0, 0, 3, 0}, LaurentHalf(1)}}));
  // (2,2), v=(1,0): v^{-2} [3][1][2]/[3] = v^{-2}[2].
  EXPECT_EQ(ef_expand(2, 2).at({1, 0, 2, 2}), LaurentHalf::vpow(-2) * qint(2));
  EXPECT_THROW(ef_expand(-1, 0), std::invalid_argument);
}

TEST(RankOneProperty, EfExpandInvertsClosedForm) {
  const AlgebraPtr alg = sl2_algebra();
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      EXPECT_EQ(evaluate(ef_expand(a, b), alg), P("E1", alg).pow(static_cast<unsigned>(a)) *
                                                     P("F1", alg).pow(static_cast<unsigned>(b)))
          << a << "," << b;
      for (const auto &[p, c] : ef_expand(a, b)) {
        EXPECT_TRUE(c.nonnegative_coeffs());
        EXPECT_TRUE(is_l_dominant(p));
      }
    }
}

TEST(RankOne, CasimirRecursion) {
  const AlgebraPtr alg = sl2_algebra();
  EXPECT_EQ(casimir(0, alg), Element::one(alg));
  const Element C = casimir(1, alg);
  EXPECT_EQ(C, P("E1*F1 - v^-1*K1 - v*K1'", alg));
  EXPECT_EQ(casimir(2, alg), C * C - P("K1*K1'", alg));
  for (int m = 1; m <= 5; ++m)
    EXPECT_EQ(C * casimir(m, alg), casimir(m + 1, alg) + P("K1*K1'", alg) * casimir(m - 1, alg)) << m;
  EXPECT_THROW(casimir(-1, alg), std::invalid_argument);
}

TEST(RankOne, DForm) {
  const LDomPair p{0, 0, 1, 0}, q{1, 0, 0, 1};
  EXPECT_EQ(d_form(p, p), 0);
  EXPECT_EQ(d_form(p, q), 1);
  EXPECT_EQ(d_form(q, p), -1);
}

TEST(RankOneProperty, RestrictionCoefficients) {
  for (const auto &p : dominant_pairs(4)) {
    const DCBExpansion pi = pi_decompose(p);
    EXPECT_TRUE(pi.at(p).is_one()) << "leading coefficient at " << to_string(p);
    const int k = std::abs(p.w1 - p.w2);
    for (const auto &[a, b] : image_set(p)) {
      int t = tr(p, a, b);
      if (p.w1 < p.w2)
        t = -t;
      const LDomPair q{a, b, p.w1, p.w2};
      if (t >= 0 && t <= k)
        EXPECT_EQ(pi.at(q), qbinom(k, t)) << to_string(p) << " at " << to_string(q);
      else
        EXPECT_EQ(pi.count(q), 0u);
    }
  }
}

TEST(RankOneProperty, EfExpandIntegralPositive) {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      for (const auto &[p, c] : ef_expand(a, b))
        EXPECT_TRUE(c.integral_powers() && c.nonnegative_coeffs()) << a << "," << b;
}
