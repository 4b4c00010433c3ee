#pragma once

// PBW root vectors, PBW monomials F^a E^c K_mu K'_nu, and coordinates of
// elements in the PBW basis.

#include "linalg.hpp"
#include "operators.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace qg {

struct PBWMonomial {
  std::vector<int> a; // F exponents along the convex order
  std::vector<int> c; // E exponents
  Weight mu;
  Weight nu;
  friend auto operator<=>(const PBWMonomial &, const PBWMonomial &) = default;
};

namespace detail {

struct RootVectors {
  std::vector<Element> e; // in Utilde
  std::vector<Element> f;
};

inline const RootVectors &root_vectors(const CartanDatum &cd) {
  static std::mutex mu;
  static std::map<std::string, RootVectors> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(cd.name());
    if (it != cache.end())
      return it->second;
  }
  const AlgebraPtr alg = Algebra::get(cd, Variant::Utilde);
  RootVectors rv;
  const auto &word = cd.longest_word();
  for (std::size_t k = 0; k < word.size(); ++k) {
    Element e = Element::E(alg, word[k]);
    Element f = Element::F(alg, word[k]);
    for (std::size_t j = k; j-- > 0;) {
      e = braid(word[j], BraidDir::Inv, e);
      f = braid(word[j], BraidDir::Inv, f);
    }
    rv.e.push_back(std::move(e));
    rv.f.push_back(std::move(f));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(cd.name(), std::move(rv)).first->second;
}

} // namespace detail

/// E_{beta_k} (plus = true) or F_{beta_k} in the given presentation.
inline Element root_vector(const AlgebraPtr &alg, std::size_t k, bool plus) {
  const auto &rv = detail::root_vectors(alg->cartan());
  const Element &x = plus ? rv.e.at(k) : rv.f.at(k);
  return x.reinterpret(alg);
}

/// v^{n_c/2} E_{beta_1}^{c_1} ... E_{beta_l}^{c_l} (or the F analogue).
inline Element pbw_half(const AlgebraPtr &alg, const std::vector<int> &c, bool plus) {
  const CartanDatum &cd = alg->cartan();
  if (c.size() != cd.num_positive())
    throw std::invalid_argument("PBW exponent vector has wrong length");
  Element x = Element::scalar(alg, RatFunc(LaurentHalf::monomial(cd.pbw_twist(c))));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] < 0)
      throw std::invalid_argument("negative PBW exponent");
    if (c[k] > 0)
      x = x * root_vector(alg, k, plus).pow(static_cast<unsigned>(c[k]));
  }
  return x;
}

inline Element pbw_element(const AlgebraPtr &alg, const PBWMonomial &m) {
  return pbw_half(alg, m.a, false) * pbw_half(alg, m.c, true) * Element::Kmono(alg, m.mu, m.nu);
}

namespace detail {

/// Coordinates of normal words of a weight in the PBW basis of U^+ or U^-.
struct PBWChart {
  std::vector<std::vector<int>> exps;
  std::map<Word, std::vector<RatFunc>> word_coords;
};

inline const PBWChart &pbw_chart(const CartanDatum &cd, const Weight &wt, bool plus) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, Weight, bool>, PBWChart> cache;
  const auto key = std::make_tuple(cd.name(), wt, plus);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end())
      return it->second;
  }
  const AlgebraPtr alg = Algebra::get(cd, Variant::Utilde);
  PBWChart chart;
  chart.exps = cd.pbw_exponents(wt);
  std::vector<SparseVec<Word>> basis;
  for (const auto &c : chart.exps) {
    SparseVec<Word> v;
    const Element el = pbw_half(alg, c, plus);
    for (const auto &[m, x] : el.terms())
      v.emplace(plus ? m.e : m.f, x);
    basis.push_back(std::move(v));
  }
  BasisCoordinates<Word> bc(basis);
  for (const Word &w : alg->half().normal_words(wt)) {
    auto co = bc.coordinates(SparseVec<Word>{{w, RatFunc(1)}});
    if (!co)
      throw InternalError("PBW monomials do not span the weight space " + cd.name());
    chart.word_coords.emplace(w, std::move(*co));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(chart)).first->second;
}

} // namespace detail

/// Coordinates in the PBW basis.
inline std::map<PBWMonomial, RatFunc> expand_pbw(const Element &x) {
  std::map<PBWMonomial, RatFunc> out;
  if (x.is_zero())
    return out;
  const AlgebraPtr &alg = x.algebra();
  const CartanDatum &cd = alg->cartan();
  for (const auto &[m, c] : x.terms()) {
    const auto &cf = detail::pbw_chart(cd, alg->weight(m.f), false);
    const auto &ce = detail::pbw_chart(cd, alg->weight(m.e), true);
    const auto &vf = cf.word_coords.at(m.f);
    const auto &ve = ce.word_coords.at(m.e);
    for (std::size_t p = 0; p < vf.size(); ++p) {
      if (vf[p].is_zero())
        continue;
      for (std::size_t q = 0; q < ve.size(); ++q) {
        if (ve[q].is_zero())
          continue;
        PBWMonomial key{cf.exps[p], ce.exps[q], m.mu, m.nu};
        auto [it, fresh] = out.emplace(key, c * vf[p] * ve[q]);
        if (!fresh) {
          it->second += c * vf[p] * ve[q];
          if (it->second.is_zero())
            out.erase(it);
        }
      }
    }
  }
  return out;
}

inline std::string pbw_to_string(const PBWMonomial &m) {
  auto vec = [](const std::vector<int> &v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
      s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
  };
  return "a=" + vec(m.a) + " c=" + vec(m.c) + " mu=" + vec(m.mu) + " nu=" + vec(m.nu);
}

} // namespace qg
