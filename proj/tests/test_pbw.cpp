#include "support.hpp"

using namespace qgt;

namespace {

Element rebuild(const AlgebraPtr &alg, const std::map<PBWMonomial, RatFunc> &ex) {
  Element out(alg);
  for (const auto &[m, c] : ex)
    out += pbw_element(alg, m) * c;
  return out;
}

PBWMonomial random_monomial(Rand &g, const CartanDatum &cd, int degree) {
  const std::size_t n = cd.num_positive(), r = static_cast<std::size_t>(cd.rank());
  PBWMonomial m{std::vector<int>(n, 0), std::vector<int>(n, 0), Weight(r, 0), Weight(r, 0)};
  const int d = g.uniform(0, degree);
  for (int k = 0; k < d; ++k)
    (g.uniform(0, 1) ? m.a : m.c)[static_cast<std::size_t>(g.uniform(0, static_cast<int>(n) - 1))]++;
  for (std::size_t i = 0; i < r; ++i) {
    m.mu[i] = g.uniform(-2, 2);
    m.nu[i] = g.uniform(-2, 2);
  }
  return m;
}

} // namespace

TEST(Pbw, Examples) {
  const AlgebraPtr a1 = A(1), a2 = A(2);
  EXPECT_EQ(pbw_element(a1, PBWMonomial{{0}, {0}, {0}, {0}}), Element::one(a1));
  EXPECT_EQ(pbw_element(a1, PBWMonomial{{1}, {0}, {0}, {0}}), P("F1", a1));
  // Root vectors are T_{i1}^{-1} ... T_{i(k-1)}^{-1}(E_{ik}) along the word (1,2,1).
  const Element root = pbw_element(a2, PBWMonomial{{0, 0, 0}, {0, 1, 0}, {0, 0}, {0, 0}});
  EXPECT_EQ(root, P("(v^(1/2)*E2*E1 - v^(-1/2)*E1*E2)/(v - v^-1)", a2));
  EXPECT_EQ(root, braid(0, BraidDir::Inv, P("E2", a2)));
  EXPECT_EQ(braid(0, BraidDir::Fwd, root), P("E2", a2));
  EXPECT_EQ(pbw_element(a2, PBWMonomial{{0, 0, 0}, {0, 0, 1}, {0, 0}, {0, 0}}), P("E2", a2));
  // Twist v^{n_c/2} with n_c = 2 (alpha1, alpha2) = -2.
  EXPECT_EQ(pbw_element(a2, PBWMonomial{{0, 0, 0}, {2, 0, 1}, {1, 0}, {0, 1}}), P("v^-1*E1^2*E2*K1*K2'", a2));
}

TEST(Pbw, ExpandExamples) {
  const AlgebraPtr a1 = A(1);
  const auto ex = expand_pbw(P("E1*F1", a1));
  ASSERT_EQ(ex.size(), 3u);
  const RatFunc d = RatFunc(LaurentHalf::vpow(-1) - LaurentHalf::vpow(1));
  EXPECT_TRUE(ex.at(PBWMonomial{{1}, {1}, {0}, {0}}).is_one());
  EXPECT_EQ(ex.at(PBWMonomial{{0}, {0}, {1}, {0}}), d);
  EXPECT_EQ(ex.at(PBWMonomial{{0}, {0}, {0}, {1}}), -d);
  EXPECT_TRUE(expand_pbw(Element::zero(a1)).empty());
}

TEST(PbwProperty, RoundTripOnRandomMonomials) {
  Rand g(41);
  for (const char *t : {"A1", "A2", "A3"}) {
    const AlgebraPtr alg = Algebra::get(parse_cartan(t), Variant::Utilde);
    for (int k = 0; k < (t[1] == '3' ? 150 : 500); ++k) {
      const PBWMonomial m = random_monomial(g, alg->cartan(), 6);
      const auto ex = expand_pbw(pbw_element(alg, m));
      ASSERT_EQ(ex.size(), 1u) << t << " " << pbw_to_string(m);
      EXPECT_EQ(ex.begin()->first, m);
      EXPECT_TRUE(ex.begin()->second.is_one());
    }
  }
}

TEST(PbwProperty, ExpansionRebuildsElement) {
  Rand g(42);
  for (int r : {1, 2, 3}) {
    const AlgebraPtr alg = A(r);
    for (int k = 0; k < 60; ++k) {
      const Element x = g.element(alg, 5);
      EXPECT_EQ(rebuild(alg, expand_pbw(x)), x);
    }
  }
}

TEST(Pbw, BasisSizeMatchesKostant) {
  const AlgebraPtr a3 = A(3);
  const CartanDatum &cd = a3->cartan();
  for (const Weight &w : {Weight{1, 1, 1}, Weight{1, 2, 1}, Weight{2, 1, 0}}) {
    const auto ex = cd.pbw_exponents(w);
    EXPECT_EQ(ex.size(), cd.kostant(w));
    EXPECT_EQ(a3->half().normal_words(w).size(), ex.size());
  }
}
