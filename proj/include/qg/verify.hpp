#pragma once

// Invariant suites shared by the CLI and the acceptance runner.

#include "canonical.hpp"
#include "rankone.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace qg {

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string &what) {
    ++checks;
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
  void merge(const SuiteReport &o) {
    checks += o.checks;
    pass = pass && o.pass;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

namespace detail {

inline std::string gen_name(char kind, int i) {
  std::string s(1, kind == 'P' ? 'K' : kind);
  s += std::to_string(i + 1);
  if (kind == 'P')
    s += "'";
  return s;
}

inline Element generator(const AlgebraPtr &alg, char kind, int i) {
  switch (kind) {
  case 'E':
    return Element::E(alg, i);
  case 'F':
    return Element::F(alg, i);
  case 'K':
    return Element::K(alg, i);
  default:
    return Element::K(alg, i, 1, true);
  }
}

} // namespace detail

/// Defining relations evaluated through multiplication, and associativity
/// on random generator words.
inline SuiteReport verify_relations(const CartanDatum &cd, unsigned seed = 1, int samples = 200,
                                    int max_len = 6) {
  SuiteReport rep{"relations"};
  const AlgebraPtr alg = Algebra::get(cd, Variant::Utilde);
  const int n = cd.rank();
  const RatFunc vinv_minus_v(LaurentHalf::vpow(-1) - LaurentHalf::vpow(1));
  auto vp = [](int k) { return RatFunc(LaurentHalf::vpow(k)); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Element Ei = Element::E(alg, i), Ej = Element::E(alg, j);
      const Element Fi = Element::F(alg, i), Fj = Element::F(alg, j);
      const Element Ki = Element::K(alg, i), Kpi = Element::K(alg, i, 1, true);
      const Element Kj = Element::K(alg, j), Kpj = Element::K(alg, j, 1, true);
      const std::string tag = " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
      Element comm = Ei * Fj - Fj * Ei;
      if (i == j)
        comm -= (Ki - Kpi) * vinv_minus_v;
      rep.check(comm.is_zero(), "[E,F]" + tag);
      rep.check((Ki * Kj - Kj * Ki).is_zero(), "[K,K]" + tag);
      rep.check((Ki * Kpj - Kpj * Ki).is_zero(), "[K,K']" + tag);
      rep.check((Kpi * Kpj - Kpj * Kpi).is_zero(), "[K',K']" + tag);
      const int c = cd.c(i, j);
      rep.check((Ki * Ej - Ej * Ki * vp(c)).is_zero(), "KE" + tag);
      rep.check((Ki * Fj - Fj * Ki * vp(-c)).is_zero(), "KF" + tag);
      rep.check((Kpi * Ej - Ej * Kpi * vp(-c)).is_zero(), "K'E" + tag);
      rep.check((Kpi * Fj - Fj * Kpi * vp(c)).is_zero(), "K'F" + tag);
      if (i == j)
        continue;
      const int m = 1 - c;
      Element se(alg), sf(alg);
      for (int r = 0; r <= m; ++r) {
        RatFunc coef(qbinom(m, r));
        if (r % 2)
          coef = -coef;
        se += Ei.pow(static_cast<unsigned>(r)) * Ej * Ei.pow(static_cast<unsigned>(m - r)) * coef;
        sf += Fi.pow(static_cast<unsigned>(r)) * Fj * Fi.pow(static_cast<unsigned>(m - r)) * coef;
      }
      rep.check(se.is_zero(), "Serre E" + tag);
      rep.check(sf.is_zero(), "Serre F" + tag);
    }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len_d(1, max_len), idx_d(0, n - 1), kind_d(0, 5);
  for (int s = 0; s < samples; ++s) {
    const int len = len_d(rng);
    std::vector<Element> letters;
    std::string desc;
    for (int k = 0; k < len; ++k) {
      const int i = idx_d(rng);
      const int kd = kind_d(rng);
      const char kinds[] = {'E', 'F', 'K', 'P', 'E', 'F'};
      Element g = detail::generator(alg, kinds[kd], i);
      desc += detail::gen_name(kinds[kd], i);
      if (kinds[kd] == 'K' && rng() % 2) {
        g = Element::K(alg, i, -1);
        desc += "^-1";
      }
      desc += " ";
      letters.push_back(std::move(g));
    }
    std::uniform_int_distribution<int> cut_d(0, len);
    int a = cut_d(rng), b = cut_d(rng);
    if (a > b)
      std::swap(a, b);
    auto prod = [&](int lo, int hi) {
      Element x = Element::one(alg);
      for (int k = lo; k < hi; ++k)
        x = x * letters[static_cast<std::size_t>(k)];
      return x;
    };
    const Element x = prod(0, a), y = prod(a, b), z = prod(b, len);
    rep.check((x * y) * z == x * (y * z), "associativity on " + desc);
  }
  return rep;
}

/// Braid relations, T_i T_i^{-1} = id and bar T_i = T_i bar on generators.
inline SuiteReport verify_braid(const CartanDatum &cd) {
  SuiteReport rep{"braid"};
  const AlgebraPtr alg = Algebra::get(cd, Variant::Utilde);
  const int n = cd.rank();
  std::vector<std::pair<std::string, Element>> gens;
  for (int j = 0; j < n; ++j)
    for (char k : {'E', 'F', 'K', 'P'})
      gens.emplace_back(detail::gen_name(k, j), detail::generator(alg, k, j));
  auto T = [](int i, const Element &x) { return braid(i, BraidDir::Fwd, x); };
  auto Ti = [](int i, const Element &x) { return braid(i, BraidDir::Inv, x); };
  for (int i = 0; i < n; ++i)
    for (const auto &[name, g] : gens) {
      const std::string tag = " T" + std::to_string(i + 1) + " on " + name;
      rep.check(T(i, Ti(i, g)) == g, "T T^-1" + tag);
      rep.check(Ti(i, T(i, g)) == g, "T^-1 T" + tag);
      rep.check(bar(T(i, g)) == T(i, bar(g)), "bar T" + tag);
      rep.check(bar(Ti(i, g)) == Ti(i, bar(g)), "bar T^-1" + tag);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (const auto &[name, g] : gens) {
        const std::string tag = " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") on " + name;
        if (cd.c(i, j) == 0)
          rep.check(T(i, T(j, g)) == T(j, T(i, g)), "commuting braid" + tag);
        else
          rep.check(T(i, T(j, T(i, g))) == T(j, T(i, T(j, g))), "braid" + tag);
      }
  return rep;
}

inline SuiteReport verify_binomials(int bound) {
  SuiteReport rep{"binomials"};
  const BinomialIdentityReport r = verify_binomial_identities(bound, bound, bound);
  rep.checks = r.checked;
  rep.pass = r.pass;
  rep.failures = r.counterexamples;
  return rep;
}

/// L(v,w) from the closed formula against both canonical-basis pipelines.
inline SuiteReport verify_oracle(int bound) {
  SuiteReport rep{"oracle"};
  const AlgebraPtr alg = sl2_algebra();
  const CartanDatum &cd = alg->cartan();
  for (int w1 = 0; w1 <= bound; ++w1)
    for (int w2 = 0; w2 <= bound; ++w2)
      for (int v1 = 0; v1 <= std::min(w1, w2); ++v1)
        for (int v2 = 0; v1 + v2 <= std::min(w1, w2); ++v2) {
          const LDomPair p{v1, v2, w1, w2};
          const int l = v1 + v2;
          const Element L = L_closed_form(p, alg);
          const DCBIndex idx{{v1}, {v2}, {w2 - l}, {w1 - l}};
          rep.check(cb_element(alg, idx) == L, "C route at " + to_string(p));
          const GammaDegree d{{w1}, {w2}};
          for (int sign : {1, -1}) {
            const DCBFamily &fam = bullet_family(cd, d, sign);
            rep.check(fam.elements[fam.find(idx)] == L,
                      std::string(sign > 0 ? "bullet(+)" : "bullet(-)") + " route at " +
                          to_string(p));
          }
          const Element bm = Element::F(alg, 0).pow(static_cast<unsigned>(w2 - l));
          const Element bp = Element::E(alg, 0).pow(static_cast<unsigned>(w1 - l));
          rep.check(diamond({v1}, {v2}, double_cb(bm, bp)) == L,
                    "K<>(b_- . b_+) at " + to_string(p));
          rep.check(bar(L) == L, "bar-invariance at " + to_string(p));
        }
  return rep;
}

/// Double canonical basis elements of every Gamma-degree with entries <= bound.
inline std::vector<std::pair<DCBIndex, Element>> dcb_set(const CartanDatum &cd, int bound) {
  std::vector<std::pair<DCBIndex, Element>> out;
  const Weight top(static_cast<std::size_t>(cd.rank()), bound);
  for (const Weight &p : detail::boxes(top))
    for (const Weight &m : detail::boxes(top)) {
      const DCBFamily &fam = cb_family(cd, GammaDegree{p, m});
      for (std::size_t k = 0; k < fam.index.size(); ++k)
        out.emplace_back(fam.index[k], fam.elements[k]);
    }
  return out;
}

inline bool in_N_half(const RatFunc &c) { return c.is_laurent() && c.laurent().nonnegative_coeffs(); }

/// Structure constants, b_- b_+ transition coefficients and (rank one)
/// E^a F^b coefficients all lie in N[v^{1/2}, v^{-1/2}].
inline SuiteReport verify_positivity(const CartanDatum &cd, int bound) {
  SuiteReport rep{"positivity"};
  const auto set = dcb_set(cd, bound);
  for (const auto &[i, x] : set)
    for (const auto &[j, y] : set) {
      const Expansion e = expand_in_dcb(x * y);
      rep.check(e.positive, "structure constants of " + dcb_index_to_string(i) + " * " +
                                dcb_index_to_string(j));
    }
  const AlgebraPtr alg = Algebra::get(cd, Variant::Uhat);
  const Weight top(static_cast<std::size_t>(cd.rank()), bound);
  for (const Weight &wm : detail::boxes(top))
    for (const Weight &wp : detail::boxes(top)) {
      const LabelledBasis bm = dual_cb_half(false, wm, alg), bp = dual_cb_half(true, wp, alg);
      for (std::size_t a = 0; a < bm.elems.size(); ++a)
        for (std::size_t c = 0; c < bp.elems.size(); ++c)
          rep.check(expand_in_dcb(bm.elems[a] * bp.elems[c]).positive,
                    "b_- b_+ transition at " + dcb_index_to_string({{}, {}, bm.labels[a], bp.labels[c]}));
    }
  if (cd.rank() == 1 && cd.name() == "A1")
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (const auto &[p, c] : ef_expand(a, b))
          rep.check(c.integral_powers() && c.nonnegative_coeffs(),
                    "E^" + std::to_string(a) + "F^" + std::to_string(b) + " at " + to_string(p));
  return rep;
}

/// star and Chevalley permute the double canonical basis; transpose sends
/// b_- o b_+ to b_+^t o b_-^t.
inline SuiteReport verify_involutions(const CartanDatum &cd, int bound) {
  SuiteReport rep{"involutions"};
  const auto set = dcb_set(cd, bound);
  std::set<std::string> keys;
  for (const auto &[i, x] : set)
    keys.insert(x.to_string());
  for (Involution inv : {Involution::Star, Involution::Chevalley}) {
    std::set<std::string> image;
    const char *name = inv == Involution::Star ? "star" : "chevalley";
    for (const auto &[i, x] : set) {
      const std::string s = involution(inv, x).to_string();
      rep.check(keys.count(s) > 0, std::string(name) + " image of " + dcb_index_to_string(i));
      image.insert(s);
    }
    rep.check(image == keys, std::string(name) + " is a permutation");
  }

  const AlgebraPtr h = Algebra::get(cd, Variant::Hplus);
  const Weight top(static_cast<std::size_t>(cd.rank()), bound);
  auto label_t = [&](bool plus, const std::vector<int> &lab) {
    // label of the transpose of a half basis element
    const Weight wt = cd.pbw_weight(lab);
    const LabelledBasis src = dual_cb_half(plus, wt, h), dst = dual_cb_half(!plus, wt, h);
    for (std::size_t k = 0; k < src.labels.size(); ++k)
      if (src.labels[k] == lab) {
        const Element t = involution(Involution::Transpose, src.elems[k]);
        for (std::size_t q = 0; q < dst.elems.size(); ++q)
          if (dst.elems[q] == t)
            return std::optional<std::vector<int>>(dst.labels[q]);
      }
    return std::optional<std::vector<int>>();
  };
  for (const Weight &p : detail::boxes(top))
    for (const Weight &m : detail::boxes(top)) {
      const DCBFamily &fam = heis_family(cd, GammaDegree{p, m}, 1);
      const DCBFamily &swp = heis_family(cd, GammaDegree{m, p}, 1);
      for (std::size_t k = 0; k < fam.index.size(); ++k) {
        const DCBIndex &i = fam.index[k];
        const auto ta = label_t(false, i.a), tc = label_t(true, i.c);
        rep.check(ta && tc, "transpose preserves the half bases at " + dcb_index_to_string(i));
        if (!ta || !tc)
          continue;
        const DCBIndex j{i.alpha, i.beta, *tc, *ta};
        const Element t = involution(Involution::Transpose, fam.elements[k]);
        rep.check(t == swp.elements[swp.find(j)], "transpose of circle element " +
                                                      dcb_index_to_string(i));
      }
    }
  return rep;
}

/// (F_i, E_j) = delta_ij (v - v^{-1}); dual canonical bases by both routes.
inline SuiteReport verify_pairing(const CartanDatum &cd, int bound) {
  SuiteReport rep{"pairing"};
  const AlgebraPtr alg = Algebra::get(cd, Variant::Uhat);
  const RatFunc vv(LaurentHalf::vpow(1) - LaurentHalf::vpow(-1));
  for (int i = 0; i < cd.rank(); ++i)
    for (int j = 0; j < cd.rank(); ++j)
      rep.check(hopf_pair(Element::F(alg, i), Element::E(alg, j)) == (i == j ? vv : RatFunc()),
                "(F" + std::to_string(i + 1) + ",E" + std::to_string(j + 1) + ")");
  const Weight top(static_cast<std::size_t>(cd.rank()), bound);
  for (const Weight &wt : detail::boxes(top)) {
    const LabelledBasis a = dual_cb_half(true, wt, alg);
    const std::vector<Element> b = dual_cb_plus_via_pairing(wt, alg);
    std::set<std::string> sa, sb;
    for (const auto &x : a.elems)
      sa.insert(x.to_string());
    for (const auto &x : b)
      sb.insert(x.to_string());
    std::string w;
    for (int x : wt)
      w += std::to_string(x) + " ";
    rep.check(sa == sb, "dual canonical basis routes agree at weight " + w);
  }
  return rep;
}

/// expand_pbw(pbw_element(m)) = m on random monomials.
inline SuiteReport verify_pbw(const CartanDatum &cd, unsigned seed = 1, int samples = 500,
                              int max_degree = 6) {
  SuiteReport rep{"pbw"};
  const AlgebraPtr alg = Algebra::get(cd, Variant::Utilde);
  const std::size_t l = cd.num_positive();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> root_d(0, l - 1);
  std::uniform_int_distribution<int> deg_d(0, max_degree), k_d(-2, 2);
  for (int s = 0; s < samples; ++s) {
    PBWMonomial m{std::vector<int>(l, 0), std::vector<int>(l, 0), cd.zero(), cd.zero()};
    const int deg = deg_d(rng);
    for (int k = 0; k < deg; ++k) {
      if (rng() % 2)
        ++m.a[root_d(rng)];
      else
        ++m.c[root_d(rng)];
    }
    for (int i = 0; i < cd.rank(); ++i) {
      m.mu[static_cast<std::size_t>(i)] = k_d(rng);
      m.nu[static_cast<std::size_t>(i)] = k_d(rng);
    }
    const auto ex = expand_pbw(pbw_element(alg, m));
    rep.check(ex.size() == 1 && ex.begin()->first == m && ex.begin()->second.is_one(),
              "round trip of " + pbw_to_string(m));
  }
  return rep;
}

inline const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"relations", "braid",    "binomials", "oracle",
                                              "positivity", "involutions", "pairing", "pbw"};
  return names;
}

/// Runs a suite by name.  bound <= 0 selects the suite default.
inline SuiteReport run_suite(const std::string &name, const CartanDatum &cd, int bound,
                             unsigned seed) {
  if (name == "relations")
    return verify_relations(cd, seed);
  if (name == "braid")
    return verify_braid(cd);
  if (name == "binomials")
    return verify_binomials(bound > 0 ? bound : 6);
  if (name == "oracle")
    return verify_oracle(bound > 0 ? bound : 3);
  if (name == "positivity")
    return verify_positivity(cd, bound > 0 ? bound : 2);
  if (name == "involutions")
    return verify_involutions(cd, bound > 0 ? bound : 2);
  if (name == "pairing")
    return verify_pairing(cd, bound > 0 ? bound : 2);
  if (name == "pbw")
    return verify_pbw(cd, seed);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace qg
