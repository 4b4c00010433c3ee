#include "support.hpp"

using namespace qgt;

namespace {

RatFunc vp(int k) { return RatFunc(LaurentHalf::vpow(k)); }
RatFunc vh(int half) { return RatFunc(LaurentHalf::monomial(half)); }
RatFunc vmv() { return vp(1) - vp(-1); }

} // namespace

TEST(Involutions, Examples) {
  const AlgebraPtr a1 = A(1);
  EXPECT_EQ(bar(P("E1*F1", a1)), P("F1*E1", a1));
  EXPECT_EQ(star(P("K1", a1)), P("K1'", a1));
  EXPECT_EQ(involution(Involution::Chevalley, P("E1", a1)), P("F1", a1));
  EXPECT_EQ(involution(Involution::Transpose, P("E1*K1", a1)), P("K1*F1", a1));
  EXPECT_EQ(bar(P("v*E1", a1)), P("v^-1*E1", a1));
  EXPECT_THROW(parse_involution("flip"), std::invalid_argument);
}

TEST(InvolutionsProperty, MultiplicativityAndOrderTwo) {
  Rand g(31);
  for (int r : {1, 2, 3}) {
    const AlgebraPtr alg = A(r);
    for (int k = 0; k < 60; ++k) {
      const Element x = g.element(alg, 4), y = g.element(alg, 4);
      for (Involution inv : {Involution::Bar, Involution::Star, Involution::Transpose, Involution::Chevalley}) {
        EXPECT_EQ(involution(inv, involution(inv, x)), x);
        const Element lhs = involution(inv, x * y);
        if (inv == Involution::Chevalley)
          EXPECT_EQ(lhs, involution(inv, x) * involution(inv, y));
        else
          EXPECT_EQ(lhs, involution(inv, y) * involution(inv, x));
      }
      EXPECT_EQ(bar(x * RatFunc(LaurentHalf::vpow(1))), bar(x) * vp(-1));
    }
  }
}

TEST(Involutions, HeisenbergTargets) {
  const AlgebraPtr hp = Algebra::get('A', 1, Variant::Hplus);
  const Element x = P("F1*E1 - v*K1", hp);
  const Element s = star(x);
  EXPECT_EQ(s.algebra()->variant(), Variant::Hminus);
  EXPECT_EQ(star(s), x);
}

TEST(Braid, Examples) {
  const AlgebraPtr a1 = A(1);
  EXPECT_EQ(braid(0, BraidDir::Fwd, P("E1", a1)), P("v*K1'^-1*F1", a1));
  EXPECT_EQ(braid(0, BraidDir::Fwd, P("F1", a1)), P("v^-1*E1*K1^-1", a1));
  const AlgebraPtr a2 = A(2);
  EXPECT_EQ(braid(0, BraidDir::Fwd, P("E2", a2)),
            P("(v^(1/2)*E1*E2 - v^(-1/2)*E2*E1)/(v - v^-1)", a2));
  EXPECT_EQ(braid(0, BraidDir::Fwd, P("K2", a2)), P("K1*K2", a2));
}

TEST(BraidProperty, HomomorphismAndInverse) {
  Rand g(32);
  for (int r : {2, 3}) {
    const AlgebraPtr alg = A(r);
    for (int k = 0; k < 40; ++k) {
      const Element x = g.element(alg, 4), y = g.element(alg, 4);
      for (int i = 0; i < r; ++i) {
        const Element tx = braid(i, BraidDir::Fwd, x);
        EXPECT_EQ(braid(i, BraidDir::Inv, tx), x);
        EXPECT_EQ(braid(i, BraidDir::Fwd, braid(i, BraidDir::Inv, x)), x);
        EXPECT_EQ(braid(i, BraidDir::Fwd, x * y), tx * braid(i, BraidDir::Fwd, y));
      }
    }
  }
}

TEST(Braid, BraidRelationsOnGenerators) {
  for (int r : {2, 3}) {
    const AlgebraPtr alg = A(r);
    const CartanDatum &cd = alg->cartan();
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        for (const char *gen : {"E", "F", "K", "K'"})
          for (int l = 1; l <= r; ++l) {
            std::string s = gen;
            s = s == "K'" ? "K" + std::to_string(l) + "'" : s + std::to_string(l);
            const Element x = P(s, alg);
            auto T = [&](int a, const Element &y) { return braid(a, BraidDir::Fwd, y); };
            if (cd.c(i, j) == 0)
              EXPECT_EQ(T(i, T(j, x)), T(j, T(i, x))) << s;
            else
              EXPECT_EQ(T(i, T(j, T(i, x))), T(j, T(i, T(j, x)))) << s;
          }
  }
}

TEST(SkewDerivation, Examples) {
  const AlgebraPtr a1 = A(1), a2 = A(2);
  EXPECT_EQ(skew_derivation(0, P("E1", a1)), Element::one(a1));
  EXPECT_TRUE(skew_derivation(0, Element::one(a1)).is_zero());
  EXPECT_EQ(skew_derivation(0, P("E1*E2", a2)), P("v^-1*E2", a2));
  EXPECT_THROW(skew_derivation(0, P("E1*F1", a1)), std::invalid_argument);
}

TEST(Pairing, Generators) {
  for (const std::string t : {"A1", "A2", "A3"}) {
    const AlgebraPtr alg = Algebra::get(parse_cartan(t), Variant::Utilde);
    for (int i = 0; i < alg->rank(); ++i)
      for (int j = 0; j < alg->rank(); ++j)
        EXPECT_EQ(hopf_pair(Element::F(alg, i), Element::E(alg, j)), i == j ? vmv() : RatFunc(0));
  }
  const AlgebraPtr a1 = A(1);
  EXPECT_TRUE(hopf_pair(P("F1", a1), P("E1*E1", a1)).is_zero());
  EXPECT_TRUE(hopf_pair(Element::one(a1), Element::one(a1)).is_one());
  EXPECT_THROW(hopf_pair(P("E1", a1), P("E1", a1)), std::invalid_argument);
}

// Oracle: dual of the divided-power basis after the v^{N/2} rescaling is
// E^n, which forces (F^n, E^n) = v^{N(n)/2} [n]! (v - v^{-1})^n.
TEST(Pairing, PowersAgainstRescalingOracle) {
  const AlgebraPtr a1 = A(1);
  for (int n = 0; n <= 5; ++n) {
    RatFunc want = vh(n * n - n) * RatFunc(qfactorial(n)) * vmv().pow(n);
    EXPECT_EQ(hopf_pair(P("F1", a1).pow(static_cast<unsigned>(n)), P("E1", a1).pow(static_cast<unsigned>(n))),
              want)
        << n;
  }
}

TEST(Diamond, Examples) {
  const AlgebraPtr a1 = A(1);
  EXPECT_EQ(diamond({1}, {0}, P("E1", a1)), P("v^-1*K1*E1", a1));
  EXPECT_EQ(diamond({1}, {0}, P("E1", a1)), P("v*E1*K1", a1));
  EXPECT_EQ(diamond({0}, {1}, P("E1", a1)), P("v*K1'*E1", a1));
  EXPECT_EQ(diamond({1}, {0}, Element::one(a1)), P("K1", a1));
  Rand g(33);
  const AlgebraPtr a2 = A(2);
  for (int k = 0; k < 50; ++k) {
    const Weight m1{g.uniform(-1, 2), g.uniform(-1, 2)}, n1{g.uniform(-1, 2), g.uniform(-1, 2)};
    const Weight m2{g.uniform(-1, 2), g.uniform(-1, 2)}, n2{g.uniform(-1, 2), g.uniform(-1, 2)};
    const Element x = g.word(a2, 4);
    EXPECT_EQ(diamond(m1, n1, diamond(m2, n2, x)), diamond(m1 + m2, n1 + n2, x));
  }
}

TEST(GammaDegree, Examples) {
  const AlgebraPtr a1 = A(1);
  EXPECT_EQ(gamma_degree(P("K1", a1)), (GammaDegree{{1}, {1}}));
  EXPECT_EQ(gamma_degree(P("E1*F1", a1)), (GammaDegree{{1}, {1}}));
  EXPECT_FALSE(gamma_degree(P("E1 + F1", a1)).has_value());
}

TEST(Heisenberg, ProjectionAndSplitting) {
  const AlgebraPtr hat = A(1, Variant::Uhat);
  EXPECT_TRUE(project_heisenberg(P("K1'", hat), 1).is_zero());
  EXPECT_EQ(project_heisenberg(P("K1", hat), 1), P("K1", Algebra::get('A', 1, Variant::Hplus)));
  EXPECT_EQ(project_heisenberg(P("E1*F1", hat), 1),
            P("F1*E1 + (v^-1 - v)*K1", Algebra::get('A', 1, Variant::Hplus)));
  const AlgebraPtr hp = Algebra::get('A', 1, Variant::Hplus);
  for (const char *s : {"F1*E1", "K1*F1*E1", "F1*E1 - v*K1"})
    EXPECT_EQ(iota_split(P(s, hp)), P(s, hat)) << s;
  EXPECT_THROW(project_heisenberg(P("K1", A(1)), 1), std::invalid_argument);
}

TEST(IotaHall, Examples) {
  const AlgebraPtr a1 = A(1, Variant::Uhat);
  const Element one = Element::one(a1);
  EXPECT_EQ(iota_hall(P("F1", a1), one), P("F1", a1));
  EXPECT_EQ(iota_hall(one, P("E1", a1)), P("E1", a1));
  EXPECT_EQ(iota_hall(P("F1", a1), P("E1", a1)), P("E1*F1 - (v - v^-1)*K1'", a1));
}

TEST(InvolutionsProperty, ChevalleyIsStarTranspose) {
  Rand g(34);
  for (int r : {1, 2}) {
    const AlgebraPtr alg = A(r);
    for (int k = 0; k < 50; ++k) {
      const Element x = g.element(alg, 4);
      EXPECT_EQ(involution(Involution::Chevalley, x), star(involution(Involution::Transpose, x)));
    }
  }
}

TEST(DiamondProperty, CommutesWithBar) {
  Rand g(35);
  const AlgebraPtr a2 = A(2);
  for (int k = 0; k < 60; ++k) {
    const Element x = g.word(a2, 5) * RatFunc(LaurentHalf::monomial(g.uniform(-3, 3)));
    const Weight mu{g.uniform(-1, 2), g.uniform(-1, 2)}, nu{g.uniform(-1, 2), g.uniform(-1, 2)};
    EXPECT_EQ(bar(diamond(mu, nu, x)), diamond(mu, nu, bar(x)));
  }
}

TEST(Pairing, DifferentWeightsPairToZero) {
  const AlgebraPtr a2 = A(2);
  const Weight top{2, 2};
  for (const Weight &wm : detail::boxes(top))
    for (const Weight &wp : detail::boxes(top)) {
      if (wm == wp)
        continue;
      for (const auto &a : a2->cartan().pbw_exponents(wm))
        for (const auto &c : a2->cartan().pbw_exponents(wp))
          EXPECT_TRUE(hopf_pair(pbw_half(a2, a, false), pbw_half(a2, c, true)).is_zero());
    }
}

// Both defining relations of iota, checked on PBW inputs.
TEST(IotaHall, DefiningRelations) {
  for (int r : {1, 2}) {
    const AlgebraPtr hat = A(r, Variant::Uhat);
    const CartanDatum &cd = hat->cartan();
    const Weight top(static_cast<std::size_t>(r), 2);
    for (const Weight &mu : detail::boxes(top))
      for (const Weight &nu : detail::boxes(top))
        for (const auto &a : cd.pbw_exponents(mu))
          for (const auto &c : cd.pbw_exponents(nu)) {
            const Element y = pbw_half(hat, a, false), x = pbw_half(hat, c, true);
            for (int i = 0; i < r; ++i) {
              const Weight ai = cd.simple(i);
              Element e_rhs = iota_hall(y, Element::E(hat, i) * x);
              if (!is_zero_weight(mu))
                e_rhs += Element::K(hat, i, 1, true) * iota_hall(skew_derivation(i, y), x) * vmv() *
                         vp(-cd.form(ai, mu - ai));
              EXPECT_EQ(Element::E(hat, i) * iota_hall(y, x), e_rhs);
              Element f_rhs = iota_hall(Element::F(hat, i) * y, x);
              if (!is_zero_weight(nu))
                f_rhs += Element::K(hat, i) * iota_hall(y, skew_derivation(i, x)) * vmv() *
                         vp(-cd.form(ai, nu - ai));
              EXPECT_EQ(Element::F(hat, i) * iota_hall(y, x), f_rhs);
            }
          }
  }
}
