#pragma once

// Triangular bar-invariant solver and the canonical bases built on it:
// rescaled dual canonical bases of U^+/U^-, the circle bases of H^+/H^-, the
// bullet basis of Uhat and the C_{alpha,beta;a,c} family.

#include "linalg.hpp"
#include "pbw.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qg {

/// vZ[v] (PosV) or v^{-1}Z[v^{-1}] (NegV).
enum class Lattice { PosV, NegV };

class SolveError : public std::runtime_error {
public:
  SolveError(std::size_t index, const std::string &msg)
      : std::runtime_error("triangular solve failed at index " + std::to_string(index) + ": " +
                           msg),
        index_(index) {}
  std::size_t index() const { return index_; }

private:
  std::size_t index_;
};

using Column = std::map<std::size_t, RatFunc>;

/// bar(x_s) = sum_t bar_images[s][t] x_t.  When order is empty a linear
/// extension of the support order is used.
struct TriangularDatum {
  std::vector<Element> basis;
  std::vector<Column> bar_images;
  Lattice lattice = Lattice::NegV;
  std::optional<std::vector<std::size_t>> order;
};

inline SparseVec<Monomial, MonomialLess> to_sparse(const Element &x) {
  SparseVec<Monomial, MonomialLess> v;
  for (const auto &[m, c] : x.terms())
    v.emplace(m, c);
  return v;
}

/// Fills in bar images by expressing bar(x_s) in the basis.
inline TriangularDatum make_datum(std::vector<Element> basis, Lattice lattice,
                                  const std::function<Element(const Element &)> &barfn = bar) {
  TriangularDatum d;
  d.lattice = lattice;
  std::vector<SparseVec<Monomial, MonomialLess>> vecs;
  for (const auto &x : basis)
    vecs.push_back(to_sparse(x));
  BasisCoordinates<Monomial, MonomialLess> bc(vecs);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    auto co = bc.coordinates(to_sparse(barfn(basis[s])));
    if (!co)
      throw SolveError(s, "bar image leaves the span of the family");
    Column col;
    for (std::size_t t = 0; t < co->size(); ++t)
      if (!(*co)[t].is_zero())
        col.emplace(t, (*co)[t]);
    d.bar_images.push_back(std::move(col));
  }
  d.basis = std::move(basis);
  return d;
}

/// A linear extension of the order generated by t < s whenever x_t occurs
/// in bar(x_s).  Ties go to the smaller index, or the larger one when
/// prefer_high is set.
inline std::vector<std::size_t> linear_extension(const TriangularDatum &d,
                                                 bool prefer_high = false) {
  const std::size_t n = d.bar_images.size();
  std::vector<std::vector<std::size_t>> above(n);
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t s = 0; s < n; ++s)
    for (const auto &[t, c] : d.bar_images[s]) {
      if (t >= n)
        throw SolveError(s, "bar image names index " + std::to_string(t) + " out of range");
      if (t == s)
        continue;
      above[t].push_back(s);
      ++indeg[s];
    }
  std::vector<std::size_t> out;
  std::vector<std::size_t> ready;
  for (std::size_t s = 0; s < n; ++s)
    if (indeg[s] == 0)
      ready.push_back(s);
  while (!ready.empty()) {
    auto it = prefer_high ? std::max_element(ready.begin(), ready.end())
                          : std::min_element(ready.begin(), ready.end());
    const std::size_t s = *it;
    ready.erase(it);
    out.push_back(s);
    for (std::size_t u : above[s])
      if (--indeg[u] == 0)
        ready.push_back(u);
  }
  if (out.size() != n) {
    for (std::size_t s = 0; s < n; ++s)
      if (indeg[s] != 0)
        throw SolveError(s, "support order has a cycle");
  }
  return out;
}

namespace detail {

inline LaurentHalf lattice_part(const LaurentHalf &c, Lattice l) {
  return c.strict_part(l == Lattice::PosV);
}

inline void add_to(Column &col, std::size_t k, const RatFunc &c) {
  if (c.is_zero())
    return;
  auto [it, fresh] = col.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero())
      col.erase(it);
  }
}

} // namespace detail

/// Coordinates (in the x-basis) of the bar-invariant elements b_s.
inline std::vector<Column> lusztig_solve_coords(const TriangularDatum &d) {
  const std::size_t n = d.bar_images.size();
  const std::vector<std::size_t> order = d.order ? *d.order : linear_extension(d);
  if (order.size() != n)
    throw std::invalid_argument("lusztig_solve: order is not a permutation of the index set");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n || pos[order[k]] != n)
      throw std::invalid_argument("lusztig_solve: order is not a permutation of the index set");
    pos[order[k]] = k;
  }
  std::vector<Column> b(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t s = order[k];
    Column r = d.bar_images[s];
    detail::add_to(r, s, RatFunc(-1));
    for (const auto &[t, c] : r) {
      if (t == s)
        throw SolveError(s, "diagonal bar coefficient is not 1");
      if (pos[t] > k)
        throw SolveError(s, "bar image involves index " + std::to_string(t) +
                                " which is not below it");
    }
    // Rewrite r = sum_t c_t b_t, working down from the top.
    Column coef;
    for (std::size_t j = k; j-- > 0;) {
      const std::size_t t = order[j];
      auto it = r.find(t);
      if (it == r.end())
        continue;
      const RatFunc c = it->second;
      coef.emplace(t, c);
      for (const auto &[u, bu] : b[t])
        detail::add_to(r, u, -c * bu);
    }
    if (!r.empty())
      throw SolveError(s, "residual outside the lower interval");
    Column bs{{s, RatFunc(1)}};
    for (const auto &[t, c] : coef) {
      if (!c.is_laurent())
        throw SolveError(s, "non-Laurent correction against index " + std::to_string(t));
      const LaurentHalf &l = c.laurent();
      if (!(l.bar() + l).is_zero())
        throw SolveError(s, "bar is not an involution on the data (index " +
                                std::to_string(t) + ")");
      const LaurentHalf q = detail::lattice_part(l, d.lattice);
      if (q.is_zero())
        continue;
      for (const auto &[u, bu] : b[t])
        detail::add_to(bs, u, RatFunc(q) * bu);
    }
    b[s] = std::move(bs);
  }
  return b;
}

inline Element combine(const std::vector<Element> &basis, const Column &col) {
  Element out(basis.at(0).algebra());
  for (const auto &[t, c] : col)
    out += basis[t] * c;
  return out;
}

/// The bar-invariant elements b_s, in index order.
inline std::vector<Element> lusztig_solve(const TriangularDatum &d) {
  std::vector<Element> out;
  for (const auto &col : lusztig_solve_coords(d))
    out.push_back(combine(d.basis, col));
  return out;
}

// ---------------------------------------------------------------------------
// Rescaled dual canonical bases of U^+ and U^-.

/// Basis elements labelled by PBW exponent vectors.
struct LabelledBasis {
  std::vector<std::vector<int>> labels;
  std::vector<Element> elems; // in Uhat
};

inline Element phi_plus_to_minus(const Element &x) {
  return Element::from_fpoly(x.algebra(), half_poly(x));
}

namespace detail {

inline const LabelledBasis &dual_cb_plus(const CartanDatum &cd, const Weight &wt) {
  static std::mutex mu;
  static std::map<std::pair<std::string, Weight>, LabelledBasis> cache;
  const auto key = std::make_pair(cd.name(), wt);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end())
      return it->second;
  }
  const AlgebraPtr alg = Algebra::get(cd, Variant::Uhat);
  LabelledBasis lb;
  lb.labels = cd.pbw_exponents(wt);
  std::vector<Element> basis;
  for (const auto &c : lb.labels)
    basis.push_back(pbw_half(alg, c, true));
  lb.elems = lusztig_solve(make_datum(std::move(basis), Lattice::NegV));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(lb)).first->second;
}

} // namespace detail

/// Rescaled dual canonical basis of U^+ (plus) or U^- at a weight, labelled by
/// the PBW monomial it is congruent to.
inline LabelledBasis dual_cb_half(bool plus, const Weight &wt, const AlgebraPtr &alg) {
  if (!is_nonneg_weight(wt))
    throw std::invalid_argument("dual_cb_half: weight must be nonnegative");
  alg->cartan().pbw_exponents(wt);
  alg->half().check_capacity(static_cast<std::size_t>(height(wt)));
  LabelledBasis lb = detail::dual_cb_plus(alg->cartan(), wt);
  for (auto &x : lb.elems) {
    if (!plus)
      x = phi_plus_to_minus(x);
    x = x.reinterpret(alg);
  }
  return lb;
}

/// Independent construction: dual (under the Hopf pairing) of the
/// psi-invariant canonical basis of U^- in the generators F_i/(v-v^{-1}),
/// rescaled by v^{N/2}.
inline std::vector<Element> dual_cb_plus_via_pairing(const Weight &wt, const AlgebraPtr &alg) {
  const CartanDatum &cd = alg->cartan();
  const AlgebraPtr uhat = alg->sibling(Variant::Uhat);
  const RatFunc vv(LaurentHalf::vpow(1) - LaurentHalf::vpow(-1));
  std::vector<Element> ys;
  for (const auto &a : cd.pbw_exponents(wt)) {
    RatFunc scale(1);
    for (int ak : a) {
      scale = scale * vv.pow(ak) * qfactorial(ak);
    }
    ys.push_back(pbw_half(uhat, a, false) * scale.inverse());
  }
  // Lusztig's bar on U^-: algebra automorphism, F_i/(v-v^{-1}) fixed.
  auto psi = [](const Element &x) {
    Element out(x.algebra());
    for (const auto &[m, c] : x.terms()) {
      RatFunc cb = c.bar();
      if (m.f.size() % 2)
        cb = -cb;
      out += Element(x.algebra(), Terms{{m, cb}});
    }
    return out;
  };
  // Normalize diagonal entries: psi(y) = v^k y + lower forces y -> v^{k/2} y.
  {
    TriangularDatum probe = make_datum(ys, Lattice::NegV, psi);
    for (std::size_t s = 0; s < ys.size(); ++s) {
      const RatFunc dgl = probe.bar_images[s].at(s);
      if (!dgl.is_laurent() || !dgl.laurent().is_monomial() ||
          dgl.laurent().leading() != 1 || dgl.laurent().low() % 2 != 0)
        throw SolveError(s, "PBW element is not bar-invariant modulo lower terms");
      ys[s] = ys[s] * RatFunc(LaurentHalf::monomial(dgl.laurent().low() / 2));
    }
  }
  const std::vector<Element> cb = lusztig_solve(make_datum(ys, Lattice::NegV, psi));

  // Dual basis inside U^+ of the weight.
  const auto words = uhat->half().normal_words(wt);
  std::vector<SparseVec<std::size_t>> cols;
  const Weight z = cd.zero();
  std::vector<Element> ew;
  for (const auto &w : words) {
    ew.push_back(Element::monomial(uhat, Monomial{"", w, z, z}));
    SparseVec<std::size_t> col;
    for (std::size_t b = 0; b < cb.size(); ++b) {
      RatFunc p = hopf_pair(cb[b], ew.back());
      if (!p.is_zero())
        col.emplace(b, p);
    }
    cols.push_back(std::move(col));
  }
  BasisCoordinates<std::size_t> bc(cols);
  const RatFunc resc(LaurentHalf::monomial(cd.norm_N(wt)));
  std::vector<Element> out;
  for (std::size_t b = 0; b < cb.size(); ++b) {
    auto co = bc.coordinates(SparseVec<std::size_t>{{b, RatFunc(1)}});
    if (!co)
      throw InternalError("Hopf pairing is degenerate at weight");
    Element d(uhat);
    for (std::size_t w = 0; w < words.size(); ++w)
      d += ew[w] * (*co)[w];
    out.push_back((d * resc).reinterpret(alg));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Indices of the double canonical bases.

/// K_alpha K'_beta <> C_{0,0;a,c}, or K_alpha K'_beta <> (b_a * b_c) with
/// b_a in the minus basis and b_c in the plus basis.
struct DCBIndex {
  Weight alpha;
  Weight beta;
  std::vector<int> a;
  std::vector<int> c;
  friend auto operator<=>(const DCBIndex &, const DCBIndex &) = default;
};

inline std::string dcb_index_to_string(const DCBIndex &i) {
  auto vec = [](const std::vector<int> &v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
      s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
  };
  return "alpha=" + vec(i.alpha) + " beta=" + vec(i.beta) + " a=" + vec(i.a) + " c=" + vec(i.c);
}

/// Family of canonical elements of one Gamma-degree.
struct DCBFamily {
  std::vector<DCBIndex> index;
  std::vector<Element> basis;    // the x_s
  std::vector<Element> elements; // the b_s
  std::size_t find(const DCBIndex &i) const {
    auto it = std::find(index.begin(), index.end(), i);
    if (it == index.end())
      throw std::out_of_range("index not in family: " + dcb_index_to_string(i));
    return static_cast<std::size_t>(it - index.begin());
  }
};

namespace detail {

/// All kappa with 0 <= kappa <= bound componentwise.
inline std::vector<Weight> boxes(const Weight &bound) {
  std::vector<Weight> out{Weight(bound.size(), 0)};
  for (std::size_t i = 0; i < bound.size(); ++i) {
    std::vector<Weight> next;
    for (const auto &w : out)
      for (int k = 0; k <= bound[i]; ++k) {
        Weight u = w;
        u[i] = k;
        next.push_back(u);
      }
    out = std::move(next);
  }
  return out;
}

inline Weight wmin(const Weight &a, const Weight &b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = std::min(a[i], b[i]);
  return r;
}

inline void check_degree(const GammaDegree &d) {
  if (!is_nonneg_weight(d.plus) || !is_nonneg_weight(d.minus))
    throw std::invalid_argument("Gamma-degree must be nonnegative");
}

/// Orders solve indices by decreasing total K-degree, ties by index.
inline std::vector<std::size_t> k_degree_order(const std::vector<DCBIndex> &idx) {
  std::vector<std::size_t> ord(idx.size());
  for (std::size_t k = 0; k < ord.size(); ++k)
    ord[k] = k;
  std::stable_sort(ord.begin(), ord.end(), [&](std::size_t x, std::size_t y) {
    return height(idx[x].alpha) + height(idx[x].beta) > height(idx[y].alpha) + height(idx[y].beta);
  });
  return ord;
}

template <class Build>
const DCBFamily &cached_family(const std::string &tag, const CartanDatum &cd, const GammaDegree &d,
                               Build build) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, std::string, Weight, Weight>, DCBFamily> cache;
  const auto key = std::make_tuple(tag, cd.name(), d.plus, d.minus);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end())
      return it->second;
  }
  DCBFamily fam = build();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(fam)).first->second;
}

} // namespace detail

/// Circle basis of H^+ (sign > 0: b_- o b_+, K ranges over K^+) or H^-
/// (sign < 0: b_+ o b_-, K over K^-) at a Gamma-degree.  For sign < 0 the
/// K-exponent sits in beta.
inline const DCBFamily &heis_family(const CartanDatum &cd, const GammaDegree &d, int sign) {
  detail::check_degree(d);
  return detail::cached_family(sign > 0 ? "H+" : "H-", cd, d, [&] {
    const AlgebraPtr h = Algebra::get(cd, sign > 0 ? Variant::Hplus : Variant::Hminus);
    h->half().check_capacity(static_cast<std::size_t>(std::max(height(d.plus), height(d.minus))));
    DCBFamily fam;
    const Weight z = cd.zero();
    for (const Weight &kappa : detail::boxes(detail::wmin(d.plus, d.minus))) {
      const LabelledBasis bm = dual_cb_half(false, d.minus - kappa, h);
      const LabelledBasis bp = dual_cb_half(true, d.plus - kappa, h);
      for (std::size_t p = 0; p < bm.elems.size(); ++p)
        for (std::size_t q = 0; q < bp.elems.size(); ++q) {
          const Element prod = sign > 0 ? bm.elems[p] * bp.elems[q] : bp.elems[q] * bm.elems[p];
          fam.index.push_back(
              DCBIndex{sign > 0 ? kappa : z, sign > 0 ? z : kappa, bm.labels[p], bp.labels[q]});
          fam.basis.push_back(sign > 0 ? diamond(kappa, z, prod) : diamond(z, kappa, prod));
        }
    }
    TriangularDatum td = make_datum(fam.basis, Lattice::PosV);
    td.order = detail::k_degree_order(fam.index);
    fam.elements = lusztig_solve(td);
    return fam;
  });
}

/// Bullet basis of Uhat at a Gamma-degree.  sign > 0 lifts the H^+ circle
/// basis with iota_+, sign < 0 lifts the H^- one with iota_-.
inline const DCBFamily &bullet_family(const CartanDatum &cd, const GammaDegree &d, int sign = 1) {
  detail::check_degree(d);
  return detail::cached_family(sign > 0 ? "U+" : "U-", cd, d, [&] {
    DCBFamily fam;
    for (const Weight &kappa : detail::boxes(detail::wmin(d.plus, d.minus))) {
      const GammaDegree lower{d.plus - kappa, d.minus - kappa};
      const DCBFamily &hf = heis_family(cd, lower, sign);
      for (std::size_t s = 0; s < hf.index.size(); ++s) {
        const DCBIndex &hi = hf.index[s];
        // Only the K = 1 circle elements; the others are diamond shifts.
        if (!is_zero_weight(hi.alpha) || !is_zero_weight(hi.beta))
          continue;
        const Element lifted = iota_split(hf.elements[s]);
        for (const Weight &mu : detail::boxes(kappa)) {
          const Weight nu = kappa - mu;
          fam.index.push_back(DCBIndex{mu, nu, hi.a, hi.c});
          fam.basis.push_back(diamond(mu, nu, lifted));
        }
      }
    }
    TriangularDatum td = make_datum(fam.basis, Lattice::NegV);
    td.order = detail::k_degree_order(fam.index);
    fam.elements = lusztig_solve(td);
    return fam;
  });
}

/// The single-stage family C_{alpha,beta;a,c} of Uhat at a Gamma-degree.
inline const DCBFamily &cb_family(const CartanDatum &cd, const GammaDegree &d) {
  detail::check_degree(d);
  return detail::cached_family("C", cd, d, [&] {
    const AlgebraPtr uhat = Algebra::get(cd, Variant::Uhat);
    uhat->half().check_capacity(static_cast<std::size_t>(std::max(height(d.plus), height(d.minus))));
    DCBFamily fam;
    for (const Weight &kappa : detail::boxes(detail::wmin(d.plus, d.minus))) {
      const auto as = cd.pbw_exponents(d.minus - kappa);
      const auto cs = cd.pbw_exponents(d.plus - kappa);
      for (const auto &a : as)
        for (const auto &c : cs) {
          const Element io = iota_hall(pbw_half(uhat, a, false), pbw_half(uhat, c, true));
          for (const Weight &mu : detail::boxes(kappa)) {
            const Weight nu = kappa - mu;
            fam.index.push_back(DCBIndex{mu, nu, a, c});
            fam.basis.push_back(diamond(mu, nu, io));
          }
        }
    }
    TriangularDatum td = make_datum(fam.basis, Lattice::NegV);
    td.order = detail::k_degree_order(fam.index);
    fam.elements = lusztig_solve(td);
    return fam;
  });
}

namespace detail {

inline std::vector<int> label_of(const LabelledBasis &lb, const Element &x, const char *what) {
  for (std::size_t k = 0; k < lb.elems.size(); ++k)
    if (lb.elems[k] == x)
      return lb.labels[k];
  throw std::invalid_argument(std::string(what) + " is not a rescaled dual canonical basis element");
}

inline std::pair<std::vector<int>, std::vector<int>> labels(const Element &b_minus,
                                                            const Element &b_plus) {
  const AlgebraPtr &alg = b_minus.algebra();
  if (which_half(b_minus) == Half::Mixed || which_half(b_minus) == Half::Plus ||
      which_half(b_plus) == Half::Mixed || which_half(b_plus) == Half::Minus)
    throw std::invalid_argument("expected b_- in U^- and b_+ in U^+");
  const Weight wm = alg->weight(b_minus.terms().begin()->first.f);
  const Weight wp = alg->weight(b_plus.terms().begin()->first.e);
  return {label_of(dual_cb_half(false, wm, alg), b_minus, "b_-"),
          label_of(dual_cb_half(true, wp, alg), b_plus, "b_+")};
}

inline GammaDegree degree_of(const Element &b_minus, const Element &b_plus) {
  const AlgebraPtr &alg = b_minus.algebra();
  return GammaDegree{alg->weight(b_plus.terms().begin()->first.e),
                     alg->weight(b_minus.terms().begin()->first.f)};
}

} // namespace detail

/// b_- o b_+ in H^+ (sign > 0) or b_+ o b_- in H^- (sign < 0).
inline Element double_cb_heis(const Element &b_minus, const Element &b_plus, int sign) {
  const CartanDatum &cd = b_minus.algebra()->cartan();
  const auto [a, c] = detail::labels(b_minus, b_plus);
  const DCBFamily &fam = heis_family(cd, detail::degree_of(b_minus, b_plus), sign);
  const Weight z = cd.zero();
  return fam.elements[fam.find(DCBIndex{z, z, a, c})];
}

/// b_- . b_+ in Uhat, built from the H^+ circle basis.  With sign < 0 the
/// H^- route is used instead.
inline Element double_cb(const Element &b_minus, const Element &b_plus, int sign = 1) {
  const CartanDatum &cd = b_minus.algebra()->cartan();
  const auto [a, c] = detail::labels(b_minus, b_plus);
  const DCBFamily &fam = bullet_family(cd, detail::degree_of(b_minus, b_plus), sign);
  const Weight z = cd.zero();
  return fam.elements[fam.find(DCBIndex{z, z, a, c})];
}

/// C_{alpha,beta;a,c}.  Negative alpha/beta are allowed in Utilde and are
/// handled by the diamond shift.
inline Element cb_element(const AlgebraPtr &alg, const DCBIndex &idx) {
  const CartanDatum &cd = alg->cartan();
  const std::size_t r = static_cast<std::size_t>(cd.rank());
  if (idx.alpha.size() != r || idx.beta.size() != r)
    throw std::invalid_argument("cb_element: K exponents have wrong length");
  if (!alg->allows_inverse_k() && (!is_nonneg_weight(idx.alpha) || !is_nonneg_weight(idx.beta)))
    throw std::invalid_argument("cb_element: negative K exponent outside Utilde");
  const Weight z = cd.zero();
  const GammaDegree d{cd.pbw_weight(idx.c), cd.pbw_weight(idx.a)};
  const DCBFamily &fam = cb_family(cd, d);
  const Element c0 = fam.elements[fam.find(DCBIndex{z, z, idx.a, idx.c})].reinterpret(alg);
  return diamond(idx.alpha, idx.beta, c0);
}

struct Expansion {
  std::map<DCBIndex, RatFunc> coeffs;
  bool positive = true; // all coefficients in N[v^{1/2}, v^{-1/2}]
};

/// Coordinates of x in the double canonical basis.  x must lie in Uhat (or
/// have nonnegative K-exponents); bound caps the Gamma-degree entries.
inline Expansion expand_in_dcb(const Element &x, std::optional<int> bound = std::nullopt) {
  Expansion out;
  if (x.is_zero())
    return out;
  const AlgebraPtr &alg = x.algebra();
  const CartanDatum &cd = alg->cartan();
  for (const auto &[m, c] : x.terms())
    if (!is_nonneg_weight(m.mu) || !is_nonneg_weight(m.nu))
      throw std::invalid_argument("expand_in_dcb: element has negative K exponents");
  const AlgebraPtr uhat = alg->sibling(Variant::Uhat);
  const Element xh = x.reinterpret(uhat);
  for (const auto &[d, part] : gamma_components(xh)) {
    if (bound)
      for (std::size_t i = 0; i < d.plus.size(); ++i)
        if (d.plus[i] > *bound || d.minus[i] > *bound)
          throw CapacityError("expand_in_dcb: Gamma-degree exceeds the bound " +
                              std::to_string(*bound));
    const DCBFamily &fam = cb_family(cd, d);
    std::vector<SparseVec<Monomial, MonomialLess>> vecs;
    for (const auto &b : fam.elements)
      vecs.push_back(to_sparse(b));
    BasisCoordinates<Monomial, MonomialLess> bc(vecs);
    auto co = bc.coordinates(to_sparse(part));
    if (!co)
      throw InternalError("double canonical basis does not span a Gamma-degree");
    for (std::size_t k = 0; k < co->size(); ++k) {
      const RatFunc &q = (*co)[k];
      if (q.is_zero())
        continue;
      if (!q.is_laurent() || !q.laurent().nonnegative_coeffs())
        out.positive = false;
      out.coeffs.emplace(fam.index[k], q);
    }
  }
  return out;
}

} // namespace qg
