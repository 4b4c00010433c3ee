#include "support.hpp"

using namespace qgt;

namespace {

Element E(const AlgebraPtr &a, int i) { return Element::E(a, i); }
Element F(const AlgebraPtr &a, int i) { return Element::F(a, i); }
Element K(const AlgebraPtr &a, int i, int p = 1) { return Element::K(a, i, p, false); }
Element Kp(const AlgebraPtr &a, int i, int p = 1) { return Element::K(a, i, p, true); }
RatFunc vp(int k) { return RatFunc(LaurentHalf::vpow(k)); }

std::vector<AlgebraPtr> all_types() {
  return {Algebra::get('A', 1, Variant::Utilde), Algebra::get('A', 2, Variant::Utilde),
          Algebra::get('A', 3, Variant::Utilde), Algebra::get('D', 4, Variant::Utilde)};
}

} // namespace

TEST(Parser, Words) {
  const AlgebraPtr a1 = A(1);
  const FreeElement w = parse("E1*F1", a1);
  EXPECT_EQ(normal_form(w), E(a1, 0) * F(a1, 0));
  EXPECT_EQ(P("(v - v^(-1))*K1", a1), K(a1, 0) * (vp(1) - vp(-1)));
  const AlgebraPtr a2 = A(2);
  EXPECT_EQ(P("E1^2*E2", a2), E(a2, 0) * E(a2, 0) * E(a2, 1));
  EXPECT_EQ(P("K1'^2", a2), Kp(a2, 0, 2));
  EXPECT_EQ(P("[3]*E1", a2), E(a2, 0) * RatFunc(qint(3)));
  EXPECT_EQ(P("v^(1/2)*E1/(v - v^-1)", a2),
            E(a2, 0) * RatFunc(LaurentHalf::monomial(1), LaurentHalf::vpow(1) - LaurentHalf::vpow(-1)));
}

TEST(Parser, Errors) {
  const AlgebraPtr a1 = A(1);
  try {
    P("E1*(F1", a1);
    FAIL() << "expected a parse error";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(P("E2", a1), std::invalid_argument);
  EXPECT_THROW(P("E1 +", a1), ParseError);
  EXPECT_THROW(P("E1 / F1", a1), std::invalid_argument);
  EXPECT_THROW(P("v^(1/3)", a1), std::invalid_argument);
  EXPECT_THROW(P("K1^-1", Algebra::get('A', 1, Variant::Uhat)), ParseError);
}

TEST(Algebra, CommutatorExample) {
  const AlgebraPtr a1 = A(1);
  const Element lhs = E(a1, 0) * F(a1, 0);
  const Element rhs = F(a1, 0) * E(a1, 0) + (vp(-1) - vp(1)) * (K(a1, 0) - Kp(a1, 0));
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lhs.to_string(), "F1*E1 + (v^-1 - v)*K1 - (v^-1 - v)*K1'");
}

TEST(Algebra, KCommutation) {
  const AlgebraPtr a1 = A(1);
  EXPECT_EQ(K(a1, 0) * E(a1, 0), vp(2) * (E(a1, 0) * K(a1, 0)));
  EXPECT_EQ(K(a1, 0) * K(a1, 0, -1), Element::one(a1));
  EXPECT_EQ(Element::one(a1) * E(a1, 0), E(a1, 0));
}

// Every defining relation, written out directly, on every pair of indices.
TEST(Algebra, DefiningRelationsAllTypes) {
  for (const AlgebraPtr &alg : all_types()) {
    const CartanDatum &cd = alg->cartan();
    const int r = cd.rank();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        const int c = cd.c(i, j);
        const Element delta =
            i == j ? (vp(-1) - vp(1)) * (K(alg, i) - Kp(alg, i)) : Element::zero(alg);
        EXPECT_EQ(E(alg, i) * F(alg, j) - F(alg, j) * E(alg, i), delta) << alg->description();
        EXPECT_EQ(K(alg, i) * E(alg, j), vp(c) * (E(alg, j) * K(alg, i)));
        EXPECT_EQ(K(alg, i) * F(alg, j), vp(-c) * (F(alg, j) * K(alg, i)));
        EXPECT_EQ(Kp(alg, i) * E(alg, j), vp(-c) * (E(alg, j) * Kp(alg, i)));
        EXPECT_EQ(Kp(alg, i) * F(alg, j), vp(c) * (F(alg, j) * Kp(alg, i)));
        EXPECT_EQ(K(alg, i) * Kp(alg, j), Kp(alg, j) * K(alg, i));
        if (i == j)
          continue;
        // Serre, with the binomials written by hand for c in {0, -1}.
        if (c == 0) {
          EXPECT_TRUE((E(alg, i) * E(alg, j) - E(alg, j) * E(alg, i)).is_zero());
          EXPECT_TRUE((F(alg, i) * F(alg, j) - F(alg, j) * F(alg, i)).is_zero());
        } else {
          const RatFunc two = vp(1) + vp(-1);
          const Element se = E(alg, i) * E(alg, i) * E(alg, j) - two * (E(alg, i) * E(alg, j) * E(alg, i)) +
                             E(alg, j) * E(alg, i) * E(alg, i);
          const Element sf = F(alg, i) * F(alg, i) * F(alg, j) - two * (F(alg, i) * F(alg, j) * F(alg, i)) +
                             F(alg, j) * F(alg, i) * F(alg, i);
          EXPECT_TRUE(se.is_zero()) << alg->description() << " " << i << j;
          EXPECT_TRUE(sf.is_zero());
        }
      }
  }
}

TEST(Algebra, SerreFromText) {
  EXPECT_TRUE(P("E1*E1*E2 - [2]*E1*E2*E1 + E2*E1*E1", A(2)).is_zero());
  EXPECT_FALSE(P("E1*E1*E2 - [2]*E1*E2*E1", A(2)).is_zero());
}

TEST(Algebra, D4HalfAlgebraIsComplete) {
  EXPECT_TRUE(HalfAlgebra::get(CartanDatum('D', 4))->is_complete());
  EXPECT_TRUE(HalfAlgebra::get(CartanDatum('A', 3))->is_complete());
}

TEST(Algebra, Variants) {
  const AlgebraPtr hat = Algebra::get('A', 1, Variant::Uhat);
  EXPECT_THROW(Element::K(hat, 0, -1, false), std::domain_error);
  const AlgebraPtr hp = Algebra::get('A', 1, Variant::Hplus);
  EXPECT_TRUE(Kp(hp, 0).is_zero());
  EXPECT_EQ(E(hp, 0) * F(hp, 0) - F(hp, 0) * E(hp, 0), (vp(-1) - vp(1)) * K(hp, 0));
  const AlgebraPtr hm = Algebra::get('A', 1, Variant::Hminus);
  EXPECT_TRUE(K(hm, 0).is_zero());
}

TEST(AlgebraProperty, Associativity) {
  Rand g(21);
  for (const AlgebraPtr &alg : all_types())
    for (int k = 0; k < 200; ++k) {
      const Element x = g.word(alg, 6), y = g.word(alg, 6), z = g.word(alg, 6);
      ASSERT_EQ((x * y) * z, x * (y * z)) << alg->description();
    }
}

TEST(AlgebraProperty, Distributivity) {
  Rand g(22);
  const AlgebraPtr alg = A(2);
  for (int k = 0; k < 100; ++k) {
    const Element x = g.element(alg, 4), y = g.element(alg, 4), z = g.element(alg, 4);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x + y) * z, x * z + y * z);
    EXPECT_TRUE((x - x).is_zero());
  }
}

TEST(AlgebraProperty, TextAndJsonRoundTrip) {
  Rand g(23);
  for (Variant var : {Variant::Utilde, Variant::Uhat})
    for (int r : {1, 2}) {
      const AlgebraPtr alg = A(r, var);
      for (int k = 0; k < 100; ++k) {
        const Element x = g.element(alg, 5);
        EXPECT_EQ(P(x.to_string(), alg), x) << x.to_string();
        EXPECT_EQ(element_from_json(element_to_json(x)), x);
        EXPECT_EQ(element_from_json(json::parse(element_to_json(x).dump())), x);
      }
    }
}

TEST(Algebra, JsonShape) {
  const json j = element_to_json(P("E1*F1", A(1)));
  EXPECT_EQ(j["presentation"], json::parse(R"({"type":"A","rank":1,"variant":"Utilde"})"));
  EXPECT_EQ(j["terms"].size(), 3u);
  EXPECT_THROW(element_from_json(json::parse(R"({"presentation":{"type":"A","rank":1,"variant":"Q"},"terms":[]})")),
               std::invalid_argument);
}

TEST(AlgebraProperty, GammaGradingAndHeisenbergProjection) {
  Rand g(24);
  for (int r : {1, 2}) {
    const AlgebraPtr hat = A(r, Variant::Uhat);
    for (int k = 0; k < 100; ++k) {
      const Element x = g.word(hat, 5) * RatFunc(g.laurent(2, 3) + LaurentHalf(1));
      const Element y = g.word(hat, 5);
      const auto dx = gamma_degree(x), dy = gamma_degree(y), dxy = gamma_degree(x * y);
      ASSERT_TRUE(dx && dy);
      if (!(x * y).is_zero())
        EXPECT_EQ(*dxy, *dx + *dy);
      for (int sign : {1, -1})
        EXPECT_EQ(project_heisenberg(x * y, sign), project_heisenberg(x, sign) * project_heisenberg(y, sign));
    }
  }
}
