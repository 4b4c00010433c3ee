#pragma once

// Involutions, braid symmetries, skew derivations, the Hopf pairing, the
// diamond action, Heisenberg projections/splittings and the iota embedding.

#include "algebra.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qg {

// ---------------------------------------------------------------------------
// Gamma grading.

inline GammaDegree gamma_degree(const AlgebraPtr &alg, const Monomial &m) {
  const Weight kk = m.mu + m.nu;
  return {alg->weight(m.e) + kk, alg->weight(m.f) + kk};
}

/// Common Gamma-degree of all terms; nullopt if x is inhomogeneous.
/// The zero element has degree 0.
inline std::optional<GammaDegree> gamma_degree(const Element &x) {
  if (x.is_zero())
    return GammaDegree{};
  std::optional<GammaDegree> d;
  for (const auto &[m, c] : x.terms()) {
    GammaDegree g = gamma_degree(x.algebra(), m);
    if (d && *d != g)
      return std::nullopt;
    d = g;
  }
  return d;
}

/// Split into Gamma-homogeneous components.
inline std::map<GammaDegree, Element> gamma_components(const Element &x) {
  std::map<GammaDegree, Element> out;
  for (const auto &[m, c] : x.terms()) {
    auto [it, fresh] = out.try_emplace(gamma_degree(x.algebra(), m), Element(x.algebra()));
    it->second += Element(x.algebra(), Terms{{m, c}});
  }
  return out;
}

/// Z^I weight (E-content minus F-content).
inline Weight root_weight(const AlgebraPtr &alg, const Monomial &m) {
  return alg->weight(m.e) - alg->weight(m.f);
}

// ---------------------------------------------------------------------------
// Involutions.

enum class Involution { Bar, Star, Transpose, Chevalley };

inline Involution parse_involution(const std::string &s) {
  if (s == "bar")
    return Involution::Bar;
  if (s == "star")
    return Involution::Star;
  if (s == "transpose")
    return Involution::Transpose;
  if (s == "chevalley")
    return Involution::Chevalley;
  throw std::invalid_argument("unknown involution '" + s + "'");
}

namespace detail {

inline Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

inline Variant swapped_heisenberg(Variant v) {
  if (v == Variant::Hplus)
    return Variant::Hminus;
  if (v == Variant::Hminus)
    return Variant::Hplus;
  return v;
}

} // namespace detail

/// Presentation receiving the image of an involution (star and chevalley
/// exchange H+ and H-).
inline AlgebraPtr involution_target(Involution kind, const AlgebraPtr &alg) {
  if (kind == Involution::Star || kind == Involution::Chevalley)
    return alg->sibling(detail::swapped_heisenberg(alg->variant()));
  return alg;
}

inline Element involution(Involution kind, const Element &x) {
  if (x.is_zero())
    return x;
  const AlgebraPtr src = x.algebra();
  const AlgebraPtr dst = involution_target(kind, src);
  const Weight z = src->cartan().zero();
  Element out(dst);
  for (const auto &[m, c] : x.terms()) {
    Element img(dst);
    switch (kind) {
    case Involution::Bar:
      img = Element::monomial(dst, Monomial{"", "", m.mu, m.nu}) *
            Element::monomial(dst, Monomial{"", detail::reversed(m.e), z, z}) *
            Element::monomial(dst, Monomial{detail::reversed(m.f), "", z, z});
      img = img * c.bar();
      break;
    case Involution::Star:
      img = Element::monomial(dst, Monomial{"", "", m.nu, m.mu}) *
            Element::monomial(dst, Monomial{"", detail::reversed(m.e), z, z}) *
            Element::monomial(dst, Monomial{detail::reversed(m.f), "", z, z});
      img = img * c;
      break;
    case Involution::Transpose:
      img = Element::monomial(dst, Monomial{"", "", m.mu, m.nu}) *
            Element::monomial(dst, Monomial{detail::reversed(m.e), detail::reversed(m.f), z, z});
      img = img * c;
      break;
    case Involution::Chevalley:
      img = Element::monomial(dst, Monomial{"", m.f, z, z}) *
            Element::monomial(dst, Monomial{m.e, "", m.nu, m.mu});
      img = img * c;
      break;
    }
    out += img;
  }
  return out;
}

inline Element bar(const Element &x) { return involution(Involution::Bar, x); }
inline Element star(const Element &x) { return involution(Involution::Star, x); }

// ---------------------------------------------------------------------------
// Braid symmetries.

enum class BraidDir { Fwd, Inv };

namespace detail {

inline const Element &braid_letter(const AlgebraPtr &alg, int i, BraidDir dir, char kind, int j) {
  static std::mutex mu;
  static std::map<std::tuple<const Algebra *, int, int, char, int>, Element> cache;
  const auto key = std::make_tuple(alg.get(), i, static_cast<int>(dir), kind, j);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end())
      return it->second;
  }
  const CartanDatum &cd = alg->cartan();
  const RatFunc h = LaurentHalf::monomial(1), hinv = LaurentHalf::monomial(-1);
  const RatFunc denom = RatFunc(LaurentHalf::vpow(1) - LaurentHalf::vpow(-1));
  const RatFunc vv = LaurentHalf::vpow(1), vinv = LaurentHalf::vpow(-1);
  const bool fwd = dir == BraidDir::Fwd;
  Element r(alg);
  auto E = [&](int k) { return Element::E(alg, k); };
  auto F = [&](int k) { return Element::F(alg, k); };
  if (j == i) {
    if (kind == 'E')
      r = fwd ? vv * Element::K(alg, i, -1, true) * F(i) : vv * F(i) * Element::K(alg, i, -1);
    else
      r = fwd ? vinv * E(i) * Element::K(alg, i, -1) : vinv * Element::K(alg, i, -1, true) * E(i);
  } else if (cd.c(i, j) == 0) {
    r = kind == 'E' ? E(j) : F(j);
  } else {
    auto gen = [&](int k) { return kind == 'E' ? E(k) : F(k); };
    if (fwd)
      r = (h * gen(i) * gen(j) - hinv * gen(j) * gen(i)) * denom.inverse();
    else
      r = (h * gen(j) * gen(i) - hinv * gen(i) * gen(j)) * denom.inverse();
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(r)).first->second;
}

} // namespace detail

/// T_i (dir = Fwd) or T_i^{-1} (dir = Inv).  Needs invertible K.
inline Element braid(int i, BraidDir dir, const Element &x) {
  const AlgebraPtr &alg = x.algebra();
  if (!alg)
    return x;
  if (!alg->allows_inverse_k())
    throw std::domain_error("braid symmetries need invertible K (use the Utilde variant)");
  const CartanDatum &cd = alg->cartan();
  if (i < 0 || i >= cd.rank())
    throw std::out_of_range("braid: index out of range");
  Element out(alg);
  for (const auto &[m, c] : x.terms()) {
    Element img = Element::scalar(alg, c);
    for (char ch : m.f)
      img = img * detail::braid_letter(alg, i, dir, 'F', ch);
    for (char ch : m.e)
      img = img * detail::braid_letter(alg, i, dir, 'E', ch);
    img = img * Element::Kmono(alg, cd.reflect(i, m.mu), cd.reflect(i, m.nu));
    out += img;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Skew derivations on U^+ and U^-.

/// d_i on a word: sum over occurrences p of letter i of
/// v^{(alpha_i, weight of the letters after p)} times the word without p.
inline Poly skew_derivation_word(const CartanDatum &cd, int i, const Word &w) {
  Poly out;
  Weight tail = cd.zero();
  for (std::size_t p = w.size(); p-- > 0;) {
    if (w[p] == static_cast<char>(i))
      poly_add(out, w.substr(0, p) + w.substr(p + 1),
               RatFunc(LaurentHalf::vpow(cd.pair_simple(i, tail))));
    ++tail[static_cast<std::size_t>(w[p])];
  }
  return out;
}

inline Poly skew_derivation_poly(const CartanDatum &cd, int i, const Poly &p) {
  Poly out;
  for (const auto &[w, c] : p)
    for (const auto &[u, cu] : skew_derivation_word(cd, i, w))
      poly_add(out, u, c * cu);
  return out;
}

enum class Half { Plus, Minus, Scalar, Mixed };

/// Which half (U^+ or U^-) x lies in.
inline Half which_half(const Element &x) {
  bool has_e = false, has_f = false;
  for (const auto &[m, c] : x.terms()) {
    if (!is_zero_weight(m.mu) || !is_zero_weight(m.nu))
      return Half::Mixed;
    if (!m.e.empty() && !m.f.empty())
      return Half::Mixed;
    has_e |= !m.e.empty();
    has_f |= !m.f.empty();
  }
  if (has_e && has_f)
    return Half::Mixed;
  return has_e ? Half::Plus : has_f ? Half::Minus : Half::Scalar;
}

/// Word polynomial of an element of U^+ (E-words) or U^- (F-words).
inline Poly half_poly(const Element &x) {
  Poly p;
  for (const auto &[m, c] : x.terms()) {
    if (!is_zero_weight(m.mu) || !is_zero_weight(m.nu) || (!m.e.empty() && !m.f.empty()))
      throw std::invalid_argument("element is not in U^+ or U^-: " + x.to_string());
    poly_add(p, m.e.empty() ? m.f : m.e, c);
  }
  return p;
}

inline Element skew_derivation(int i, const Element &x) {
  const Half h = which_half(x);
  if (h == Half::Mixed)
    throw std::invalid_argument("skew derivation needs an element of U^+ or U^-");
  const AlgebraPtr &alg = x.algebra();
  if (!alg)
    return x;
  Poly d = skew_derivation_poly(alg->cartan(), i, half_poly(x));
  return h == Half::Minus ? Element::from_fpoly(alg, d) : Element::from_epoly(alg, d);
}

// ---------------------------------------------------------------------------
// Hopf pairing (F_i, E_j) = delta_ij (v - v^{-1}), extended by
// (y F_i, x) = (v - v^{-1}) (y, d_i x).

namespace detail {

inline RatFunc pair_words(const AlgebraPtr &alg, const Word &y, const Word &x) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, Word, Word>, RatFunc> cache;
  const auto key = std::make_tuple(alg->cartan().name(), y, x);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end())
      return it->second;
  }
  RatFunc r;
  if (y.size() != x.size()) {
    r = RatFunc();
  } else if (y.empty()) {
    r = 1;
  } else {
    const int i = y.back();
    const Word yp = y.substr(0, y.size() - 1);
    const RatFunc gen = RatFunc(LaurentHalf::vpow(1) - LaurentHalf::vpow(-1));
    for (const auto &[u, c] : skew_derivation_word(alg->cartan(), i, x))
      r += gen * c * pair_words(alg, yp, u);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, r);
  return r;
}

} // namespace detail

inline RatFunc hopf_pair(const Element &y, const Element &x) {
  const Half hy = which_half(y), hx = which_half(x);
  if (hy == Half::Mixed || hy == Half::Plus)
    throw std::invalid_argument("hopf_pair: first argument must lie in U^-");
  if (hx == Half::Mixed || hx == Half::Minus)
    throw std::invalid_argument("hopf_pair: second argument must lie in U^+");
  const AlgebraPtr alg = y.algebra() ? y.algebra() : x.algebra();
  if (!alg)
    return {};
  auto weight_of = [&](const Poly &p) -> std::optional<Weight> {
    std::optional<Weight> w;
    for (const auto &[word, c] : p) {
      Weight ww = alg->weight(word);
      if (w && *w != ww)
        throw std::invalid_argument("hopf_pair: inhomogeneous input");
      w = ww;
    }
    return w;
  };
  const Poly py = half_poly(y), px = half_poly(x);
  const auto wy = weight_of(py), wx = weight_of(px);
  if (!wy || !wx || *wy != *wx)
    return {};
  RatFunc r;
  for (const auto &[a, ca] : py)
    for (const auto &[b, cb] : px)
      r += ca * cb * detail::pair_words(alg, a, b);
  return r;
}

// ---------------------------------------------------------------------------
// Diamond action.

/// K_mu K'_nu <> x, componentwise on Gamma-homogeneous parts.
inline Element diamond(const Weight &mu, const Weight &nu, const Element &x) {
  const AlgebraPtr &alg = x.algebra();
  if (!alg || x.is_zero())
    return x;
  const CartanDatum &cd = alg->cartan();
  const Element k = Element::Kmono(alg, mu, nu);
  Element out(alg);
  for (const auto &[d, part] : gamma_components(x)) {
    int half = 0;
    for (int i = 0; i < cd.rank(); ++i) {
      const int a = cd.gamma_eval(i, d);
      half += -mu[static_cast<std::size_t>(i)] * a + nu[static_cast<std::size_t>(i)] * a;
    }
    out += (k * part) * RatFunc(LaurentHalf::monomial(half));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Heisenberg quotients.

inline Element project_heisenberg(const Element &x, int sign) {
  const AlgebraPtr &alg = x.algebra();
  if (alg->variant() != Variant::Uhat)
    throw std::invalid_argument("project_heisenberg expects an element of Uhat");
  return x.reinterpret(alg->sibling(sign > 0 ? Variant::Hplus : Variant::Hminus));
}

/// Section of the projection induced by the triangular decompositions
/// K^+ (x) U^- (x) U^+ (sign +) and K^- (x) U^+ (x) U^- (sign -).
inline Element iota_split(const Element &h) {
  const AlgebraPtr &alg = h.algebra();
  const AlgebraPtr uhat = alg->sibling(Variant::Uhat);
  if (alg->variant() == Variant::Hplus)
    return h.reinterpret(uhat);
  if (alg->variant() == Variant::Hminus)
    return star(star(h).reinterpret(uhat));
  throw std::invalid_argument("iota_split expects an element of H+ or H-");
}

// ---------------------------------------------------------------------------
// The iota embedding of U^- (x) U^+ into Uhat.

namespace detail {

inline Element iota_words(const AlgebraPtr &alg, const Word &y, const Word &x) {
  static std::mutex mu;
  static std::map<std::tuple<const Algebra *, Word, Word>, Element> cache;
  const auto key = std::make_tuple(alg.get(), y, x);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end())
      return it->second;
  }
  const CartanDatum &cd = alg->cartan();
  const Weight z = cd.zero();
  Element r(alg);
  if (x.empty()) {
    r = Element::monomial(alg, Monomial{y, "", z, z});
  } else if (y.empty()) {
    r = Element::monomial(alg, Monomial{"", x, z, z});
  } else {
    // iota(y (x) E_i x') = E_i iota(y (x) x')
    //   - (v - v^{-1}) v^{-(alpha_i, mu - alpha_i)} K_i' iota(d_i y (x) x')
    const int i = x[0];
    const Word xp = x.substr(1);
    r = Element::E(alg, i) * iota_words(alg, y, xp);
    const Weight mu_w = alg->weight(y);
    const int ex = -cd.pair_simple(i, mu_w - cd.simple(i));
    const RatFunc c = RatFunc(LaurentHalf::vpow(1) - LaurentHalf::vpow(-1)) *
                      RatFunc(LaurentHalf::vpow(ex));
    Element rest(alg);
    for (const auto &[u, cu] : skew_derivation_word(cd, i, y))
      rest += iota_words(alg, u, xp) * cu;
    if (!rest.is_zero())
      r -= (Element::K(alg, i, 1, true) * rest) * c;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, r);
  return r;
}

} // namespace detail

/// iota(y (x) x) for y in U^-, x in U^+; the result lives in Uhat (or
/// Utilde when the inputs do).
inline Element iota_hall(const Element &y, const Element &x) {
  const Half hy = which_half(y), hx = which_half(x);
  if (hy == Half::Mixed || hy == Half::Plus)
    throw std::invalid_argument("iota_hall: first argument must lie in U^-");
  if (hx == Half::Mixed || hx == Half::Minus)
    throw std::invalid_argument("iota_hall: second argument must lie in U^+");
  AlgebraPtr alg = y.algebra() ? y.algebra() : x.algebra();
  if (alg->variant() == Variant::Hplus || alg->variant() == Variant::Hminus)
    alg = alg->sibling(Variant::Uhat);
  Element out(alg);
  for (const auto &[a, ca] : half_poly(y))
    for (const auto &[b, cb] : half_poly(x))
      out += detail::iota_words(alg, a, b) * (ca * cb);
  return out;
}

} // namespace qg
