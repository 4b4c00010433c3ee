#pragma once

// Elements of the Drinfeld double in triangular normal form
// F-word * E-word * K_mu * K'_nu, and the four presentations
// (Utilde with invertible K, Uhat, and the Heisenberg quotients H+ and H-).

#include "cartan.hpp"
#include "coeff.hpp"
#include "halfalgebra.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qg {

enum class Variant { Utilde, Uhat, Hplus, Hminus };

inline std::string variant_name(Variant v) {
  switch (v) {
  case Variant::Utilde:
    return "Utilde";
  case Variant::Uhat:
    return "Uhat";
  case Variant::Hplus:
    return "Hplus";
  case Variant::Hminus:
    return "Hminus";
  }
  return "?";
}

inline Variant parse_variant(const std::string &s) {
  if (s == "Utilde" || s == "utilde" || s == "tilde")
    return Variant::Utilde;
  if (s == "Uhat" || s == "uhat" || s == "hat")
    return Variant::Uhat;
  if (s == "Hplus" || s == "hplus" || s == "H+")
    return Variant::Hplus;
  if (s == "Hminus" || s == "hminus" || s == "H-")
    return Variant::Hminus;
  throw std::invalid_argument("unknown presentation variant '" + s + "'");
}

/// F_f * E_e * K_mu * K'_nu with f, e normal words.
struct Monomial {
  Word f;
  Word e;
  Weight mu;
  Weight nu;

  friend bool operator==(const Monomial &, const Monomial &) = default;
  std::size_t word_length() const { return f.size() + e.size(); }
};

/// Display order: longer words first, then by words, then larger K-part.
struct MonomialLess {
  bool operator()(const Monomial &a, const Monomial &b) const {
    if (a.word_length() != b.word_length())
      return a.word_length() > b.word_length();
    if (a.f.size() != b.f.size())
      return a.f.size() > b.f.size();
    if (a.f != b.f)
      return a.f < b.f;
    if (a.e != b.e)
      return a.e < b.e;
    const int ha = height(a.mu) + height(a.nu), hb = height(b.mu) + height(b.nu);
    if (ha != hb)
      return ha > hb;
    if (a.mu != b.mu)
      return a.mu > b.mu;
    return a.nu < b.nu;
  }
};

using Terms = std::map<Monomial, RatFunc, MonomialLess>;

inline void terms_add(Terms &t, const Monomial &m, const RatFunc &c) {
  if (c.is_zero())
    return;
  auto [it, fresh] = t.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero())
      t.erase(it);
  }
}

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A presentation: Cartan datum, variant, and the shared rewriting data.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
  struct Key {
    std::string name;
    Variant variant;
    int cap;
    auto operator<=>(const Key &) const = default;
  };

  Algebra(const CartanDatum &cd, Variant variant, int cap)
      : cd_(cd), variant_(variant), cap_(cap), half_(HalfAlgebra::get(cd, cap)) {}

  /// Shared instance per (type, variant, cap).
  static AlgebraPtr get(const CartanDatum &cd, Variant variant,
                        int cap = HalfAlgebra::kDefaultCap) {
    static std::mutex reg_mu;
    static std::map<Key, AlgebraPtr> reg;
    std::lock_guard<std::mutex> lock(reg_mu);
    auto &slot = reg[Key{cd.name(), variant, cap}];
    if (!slot)
      slot = std::make_shared<const Algebra>(cd, variant, cap);
    return slot;
  }
  static AlgebraPtr get(char type, int rank, Variant variant) {
    return get(CartanDatum(type, rank), variant);
  }

  AlgebraPtr sibling(Variant v) const { return get(cd_, v, cap_); }

  const CartanDatum &cartan() const { return cd_; }
  int rank() const { return cd_.rank(); }
  Variant variant() const { return variant_; }
  int cap() const { return cap_; }
  const HalfAlgebra &half() const { return *half_; }
  bool allows_inverse_k() const { return variant_ == Variant::Utilde; }

  std::string description() const { return cd_.name() + "/" + variant_name(variant_); }

  /// True when the monomial survives in this presentation.
  bool admissible(const Monomial &m) const {
    switch (variant_) {
    case Variant::Utilde:
      return true;
    case Variant::Uhat:
      return is_nonneg_weight(m.mu) && is_nonneg_weight(m.nu);
    case Variant::Hplus:
      return is_nonneg_weight(m.mu) && is_zero_weight(m.nu);
    case Variant::Hminus:
      return is_zero_weight(m.mu) && is_nonneg_weight(m.nu);
    }
    return false;
  }

  Weight weight(const Word &w) const { return word_weight(w, rank()); }

  /// Normalize F_f E_e K_mu K'_nu for arbitrary (not necessarily normal) words.
  Terms from_words(const Word &f, const Word &e, const Weight &mu, const Weight &nu) const {
    Terms out;
    Monomial probe{"", "", mu, nu};
    if (!admissible(probe))
      return out;
    const Poly &pf = half_->reduce_word(f);
    const Poly &pe = half_->reduce_word(e);
    for (const auto &[fw, fc] : pf)
      for (const auto &[ew, ec] : pe)
        terms_add(out, Monomial{fw, ew, mu, nu}, fc * ec);
    return out;
  }

  /// Product of two normal monomials.
  Terms multiply(const Monomial &a, const Monomial &b) const {
    Terms out;
    const Weight kdiff = a.mu - a.nu;
    const Weight wf = weight(b.f), we = weight(b.e);
    const int base = cd_.form(kdiff, we) - cd_.form(kdiff, wf);
    const Weight mu0 = a.mu + b.mu, nu0 = a.nu + b.nu;
    for (const auto &st : straighten(a.e, b.f)) {
      const Weight mu = mu0 + st.kp, nu = nu0 + st.kpp;
      if (!admissible(Monomial{"", "", mu, nu}))
        continue;
      const int ex = base + cd_.form(st.kp - st.kpp, we);
      const LaurentHalf coeff = LaurentHalf::vpow(ex) * st.coeff;
      const Poly &pf = half_->reduce_word(a.f + st.f);
      const Poly &pe = half_->reduce_word(st.e + b.e);
      for (const auto &[fw, fc] : pf)
        for (const auto &[ew, ec] : pe)
          terms_add(out, Monomial{fw, ew, mu, nu}, RatFunc(coeff) * fc * ec);
    }
    return out;
  }

  struct StraightTerm {
    Word f;
    Word e;
    Weight kp;  // K exponents
    Weight kpp; // K' exponents
    LaurentHalf coeff;
  };

  /// e * f for an E-word e and F-word f, rewritten as a sum of
  /// F-word * E-word * K * K' using only the commutator and K-relations.
  const std::vector<StraightTerm> &straighten(const Word &e, const Word &f) const {
    const std::string key = e + '|' + f;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = straight_memo_.find(key);
      if (it != straight_memo_.end())
        return it->second;
    }
    std::map<std::tuple<Word, Word, Weight, Weight>, LaurentHalf> acc;
    auto add = [&](const Word &fw, const Word &ew, const Weight &a, const Weight &b,
                   const LaurentHalf &c) {
      if (c.is_zero())
        return;
      auto &slot = acc[{fw, ew, a, b}];
      slot += c;
    };
    const Weight z = cd_.zero();
    if (e.empty() || f.empty()) {
      add(f, e, z, z, LaurentHalf(1));
    } else {
      // e F_i f' = F_i e f' + (v^-1 - v) sum_p [ ... ] with K_i, K_i' moved right.
      const int i = f[0];
      const Word rest = f.substr(1);
      const Weight wrest = weight(rest);
      for (const auto &t : straighten(e, rest))
        add(Word(1, static_cast<char>(i)) + t.f, t.e, t.kp, t.kpp, t.coeff);
      const LaurentHalf comm = LaurentHalf::vpow(-1) - LaurentHalf::vpow(1);
      const int pr = cd_.pair_simple(i, wrest);
      Weight tailw = z;
      for (std::size_t p = e.size(); p-- > 0;) {
        if (e[p] == static_cast<char>(i)) {
          const int pt = cd_.pair_simple(i, tailw);
          const Word ep = e.substr(0, p) + e.substr(p + 1);
          const LaurentHalf ck = comm * LaurentHalf::vpow(pt - pr);
          const LaurentHalf ckp = -(comm * LaurentHalf::vpow(pr - pt));
          for (const auto &t : straighten(ep, rest)) {
            Weight kp = t.kp, kpp = t.kpp;
            ++kp[static_cast<std::size_t>(i)];
            add(t.f, t.e, kp, t.kpp, ck * t.coeff);
            ++kpp[static_cast<std::size_t>(i)];
            add(t.f, t.e, t.kp, kpp, ckp * t.coeff);
          }
        }
        ++tailw[static_cast<std::size_t>(e[p])];
      }
    }
    std::vector<StraightTerm> res;
    for (auto &[k, c] : acc)
      if (!c.is_zero())
        res.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k), c});
    std::lock_guard<std::mutex> lock(mu_);
    return straight_memo_.emplace(key, std::move(res)).first->second;
  }

private:
  CartanDatum cd_;
  Variant variant_;
  int cap_;
  std::shared_ptr<const HalfAlgebra> half_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, std::vector<StraightTerm>> straight_memo_;
};

class Element;
std::string element_to_string(const Element &x);

/// Q(v^{1/2})-linear combination of normal monomials.
class Element {
public:
  Element() = default;
  explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}
  Element(AlgebraPtr alg, Terms t) : alg_(std::move(alg)), terms_(std::move(t)) {}

  static Element zero(AlgebraPtr alg) { return Element(std::move(alg)); }
  static Element scalar(AlgebraPtr alg, const RatFunc &c) {
    Element x(alg);
    const Weight z = x.alg_->cartan().zero();
    terms_add(x.terms_, Monomial{"", "", z, z}, c);
    return x;
  }
  static Element one(AlgebraPtr alg) { return scalar(std::move(alg), 1); }
  static Element E(AlgebraPtr alg, int i) {
    const Weight z = alg->cartan().zero();
    return monomial(alg, Monomial{"", Word(1, static_cast<char>(i)), z, z});
  }
  static Element F(AlgebraPtr alg, int i) {
    const Weight z = alg->cartan().zero();
    return monomial(alg, Monomial{Word(1, static_cast<char>(i)), "", z, z});
  }
  /// K_i^p (prime=false) or K_i'^p (prime=true).
  static Element K(AlgebraPtr alg, int i, int p = 1, bool prime = false) {
    Weight w = alg->cartan().zero();
    w[static_cast<std::size_t>(i)] = p;
    return Kmono(alg, prime ? alg->cartan().zero() : w, prime ? w : alg->cartan().zero());
  }
  static Element Kmono(AlgebraPtr alg, const Weight &mu, const Weight &nu) {
    if (!alg->allows_inverse_k() && (!is_nonneg_weight(mu) || !is_nonneg_weight(nu)))
      throw std::domain_error("negative K exponent in " + alg->description());
    return monomial(alg, Monomial{"", "", mu, nu});
  }
  /// A single monomial (words are normalized).
  static Element monomial(AlgebraPtr alg, const Monomial &m, const RatFunc &c = 1) {
    Terms t = alg->from_words(m.f, m.e, m.mu, m.nu);
    Element x(alg, std::move(t));
    if (!c.is_one())
      x = x * c;
    return x;
  }
  /// Element of U^+ from a word polynomial.
  static Element from_epoly(AlgebraPtr alg, const Poly &p) {
    Element x(alg);
    const Weight z = alg->cartan().zero();
    for (const auto &[w, c] : p)
      x += monomial(alg, Monomial{"", w, z, z}, c);
    return x;
  }
  static Element from_fpoly(AlgebraPtr alg, const Poly &p) {
    Element x(alg);
    const Weight z = alg->cartan().zero();
    for (const auto &[w, c] : p)
      x += monomial(alg, Monomial{w, "", z, z}, c);
    return x;
  }

  const AlgebraPtr &algebra() const { return alg_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  RatFunc coeff(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFunc() : it->second;
  }

  /// True when every coefficient lies in Z[v^{1/2}, v^{-1/2}].
  bool integral() const {
    for (const auto &[m, c] : terms_)
      if (!c.is_laurent())
        return false;
    return true;
  }

  Element &operator+=(const Element &o) {
    adopt(o);
    for (const auto &[m, c] : o.terms_)
      terms_add(terms_, m, c);
    return *this;
  }
  Element &operator-=(const Element &o) {
    adopt(o);
    for (const auto &[m, c] : o.terms_)
      terms_add(terms_, m, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element &b) { return a += b; }
  friend Element operator-(Element a, const Element &b) { return a -= b; }
  Element operator-() const {
    Element r = *this;
    for (auto &[m, c] : r.terms_)
      c = -c;
    return r;
  }
  friend Element operator*(Element a, const RatFunc &c) {
    if (c.is_zero())
      return Element(a.alg_);
    for (auto &[m, x] : a.terms_)
      x *= c;
    return a;
  }
  friend Element operator*(const RatFunc &c, Element a) { return std::move(a) * c; }

  friend Element operator*(const Element &a, const Element &b) {
    Element r(a.alg_ ? a.alg_ : b.alg_);
    if (a.is_zero() || b.is_zero())
      return r;
    check_same(a, b);
    for (const auto &[ma, ca] : a.terms_)
      for (const auto &[mb, cb] : b.terms_) {
        const RatFunc cc = ca * cb;
        for (const auto &[m, c] : a.alg_->multiply(ma, mb))
          terms_add(r.terms_, m, cc * c);
      }
    return r;
  }
  Element &operator*=(const Element &o) { return *this = *this * o; }

  Element pow(unsigned n) const {
    Element r = one(alg_);
    for (unsigned k = 0; k < n; ++k)
      r = r * *this;
    return r;
  }

  friend bool operator==(const Element &a, const Element &b) {
    if (a.is_zero() && b.is_zero())
      return true;
    if (a.alg_ && b.alg_ && a.alg_ != b.alg_)
      return false;
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Element &a, const Element &b) { return !(a == b); }

  /// Same terms viewed in another presentation (monomials that do not
  /// survive there are dropped).
  Element reinterpret(AlgebraPtr target) const {
    Element r(target);
    for (const auto &[m, c] : terms_)
      if (target->admissible(m))
        terms_add(r.terms_, m, c);
    return r;
  }

  Element map_coeffs(const std::function<RatFunc(const RatFunc &)> &fn) const {
    Element r(alg_);
    for (const auto &[m, c] : terms_)
      terms_add(r.terms_, m, fn(c));
    return r;
  }

  std::string to_string() const { return element_to_string(*this); }

private:
  void adopt(const Element &o) {
    if (!alg_)
      alg_ = o.alg_;
    else if (o.alg_ && o.alg_ != alg_ && !o.is_zero())
      throw std::invalid_argument("elements from different presentations: " +
                                  alg_->description() + " vs " + o.alg_->description());
  }
  static void check_same(const Element &a, const Element &b) {
    if (a.alg_ != b.alg_)
      throw std::invalid_argument("elements from different presentations: " +
                                  a.alg_->description() + " vs " + b.alg_->description());
  }

  AlgebraPtr alg_;
  Terms terms_;
};

inline Element normal_form(const Element &x) { return x; }
inline Element multiply(const Element &x, const Element &y) { return x * y; }

// ---------------------------------------------------------------------------
// Printing.

namespace detail {

/// Coefficient text in ascending exponent order, v^-1 style.
inline std::string coeff_ascending(const LaurentHalf &p) {
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : p.terms()) {
    const Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    std::string vp;
    if (e == 2)
      vp = "v";
    else if (e != 0)
      vp = e % 2 == 0 ? "v^" + std::to_string(e / 2) : "v^(" + std::to_string(e) + "/2)";
    if (vp.empty())
      os << mag.get_str();
    else if (mag == 1)
      os << vp;
    else
      os << mag.get_str() << "*" << vp;
  }
  return os.str();
}

inline std::string power_run(char letter, int index, int count, const std::string &suffix = "") {
  std::string s = std::string(1, letter) + std::to_string(index + 1) + suffix;
  if (count != 1)
    s += "^" + std::to_string(count);
  return s;
}

} // namespace detail

inline std::string monomial_to_string(const Monomial &m) {
  std::vector<std::string> parts;
  auto runs = [&](const Word &w, char letter) {
    for (std::size_t p = 0; p < w.size();) {
      std::size_t q = p;
      while (q < w.size() && w[q] == w[p])
        ++q;
      parts.push_back(detail::power_run(letter, w[p], static_cast<int>(q - p)));
      p = q;
    }
  };
  runs(m.f, 'F');
  runs(m.e, 'E');
  for (std::size_t i = 0; i < m.mu.size(); ++i)
    if (m.mu[i] != 0)
      parts.push_back(detail::power_run('K', static_cast<int>(i), m.mu[i]));
  for (std::size_t i = 0; i < m.nu.size(); ++i)
    if (m.nu[i] != 0)
      parts.push_back(detail::power_run('K', static_cast<int>(i), m.nu[i], "'"));
  if (parts.empty())
    return "1";
  std::string s = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k)
    s += "*" + parts[k];
  return s;
}

/// Renders a coefficient; returns (negative, text) where text carries no
/// leading sign when `negative` is set.
inline std::pair<bool, std::string> render_coeff(const RatFunc &c) {
  if (c.is_laurent()) {
    LaurentHalf p = c.num();
    bool neg = p.trailing() < 0;
    if (neg)
      p = -p;
    return {neg, detail::coeff_ascending(p)};
  }
  LaurentHalf n = c.num();
  bool neg = n.trailing() < 0;
  if (neg)
    n = -n;
  const std::string num = n.is_monomial() ? detail::coeff_ascending(n)
                                          : "(" + detail::coeff_ascending(n) + ")";
  return {neg, num + "/(" + detail::coeff_ascending(c.den()) + ")"};
}

inline std::string element_to_string(const Element &x) {
  if (x.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : x.terms()) {
    auto [neg, text] = render_coeff(c);
    const std::string mono = monomial_to_string(m);
    std::string body;
    const bool simple_coeff = c.is_laurent() && c.num().is_monomial();
    if (mono == "1") {
      body = (simple_coeff || (first && !neg)) ? text : "(" + text + ")";
    } else if (text == "1") {
      body = mono;
    } else if (simple_coeff) {
      body = text + "*" + mono;
    } else {
      body = "(" + text + ")*" + mono;
    }
    if (first)
      out += (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

inline std::ostream &operator<<(std::ostream &os, const Element &x) { return os << x.to_string(); }

} // namespace qg
