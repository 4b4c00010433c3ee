#pragma once

// Closed formulas for the dual canonical basis L(v,w) of Utilde(sl_2) and the
// quiver-variety combinatorics behind them.

#include "operators.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qg {

struct LDomPair {
  int v1 = 0, v2 = 0, w1 = 0, w2 = 0;
  friend auto operator<=>(const LDomPair &, const LDomPair &) = default;
};

inline std::string to_string(const LDomPair &p) {
  return "(" + std::to_string(p.v1) + "," + std::to_string(p.v2) + ";" + std::to_string(p.w1) +
         "," + std::to_string(p.w2) + ")";
}

using DCBExpansion = std::map<LDomPair, LaurentHalf>;

inline bool is_l_dominant(const LDomPair &p) {
  return p.v1 >= 0 && p.v2 >= 0 && p.w1 >= 0 && p.w2 >= 0 && p.v1 + p.v2 <= std::min(p.w1, p.w2);
}

inline void require_dominant(const LDomPair &p) {
  if (!is_l_dominant(p))
    throw std::invalid_argument("pair " + to_string(p) + " is not l-dominant");
}

/// (v1 - v2) - (v1' - v2')
inline int tr(const LDomPair &p, int u1, int u2) { return (p.v1 - p.v2) - (u1 - u2); }

/// I_v(w): v'_1 <= min(v_1, w_2 - v'_2), v'_2 <= min(v_2, w_1 - v'_1).
inline std::vector<std::pair<int, int>> image_set(const LDomPair &p) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= p.v1; ++a)
    for (int b = 0; b <= p.v2; ++b)
      if (a <= p.w2 - b && b <= p.w1 - a)
        out.emplace_back(a, b);
  return out;
}

struct StratumData {
  int v1, v2;
  int stratum_dim;
  int defect;    // 2 dim F + dim stratum - dim variety
  int fiber_dim; // -1 when the parity does not allow a fiber
};

struct Dims {
  int variety_dim;
  std::vector<StratumData> strata;
};

inline int variety_dim(int v1, int v2, int w1, int w2) { return (v1 + v2) * (w1 + w2 - v1 - v2); }

inline Dims dims(const LDomPair &p) {
  require_dominant(p);
  Dims d{variety_dim(p.v1, p.v2, p.w1, p.w2), {}};
  for (const auto &[a, b] : image_set(p)) {
    const int t = tr(p, a, b);
    const int defect = t * (p.w1 - p.w2 - t);
    const int sd = variety_dim(a, b, p.w1, p.w2);
    const int twice = defect - sd + d.variety_dim;
    d.strata.push_back({a, b, sd, defect, twice % 2 == 0 && twice >= 0 ? twice / 2 : -1});
  }
  return d;
}

/// Multiplicities of L(v',w) in pi(v,w).
inline DCBExpansion pi_decompose(const LDomPair &p) {
  DCBExpansion out;
  const int k = p.w1 - p.w2;
  for (const auto &[a, b] : image_set(p)) {
    int t = tr(p, a, b);
    int kk = k;
    if (k < 0) {
      t = -t;
      kk = -k;
    }
    if (t < 0 || t > kk)
      continue;
    out.emplace(LDomPair{a, b, p.w1, p.w2}, qbinom(kk, t));
  }
  return out;
}

/// Default algebra for rank-one elements.
inline AlgebraPtr sl2_algebra(Variant var = Variant::Uhat) { return Algebra::get('A', 1, var); }

/// E^a F^b K^c K'^d as an element.
inline Element efkk(const AlgebraPtr &alg, int a, int b, int c, int d) {
  return Element::E(alg, 0).pow(static_cast<unsigned>(a)) *
         Element::F(alg, 0).pow(static_cast<unsigned>(b)) * Element::K(alg, 0, c, false) *
         Element::K(alg, 0, d, true);
}

/// The alternating closed formula for L(v,w).  It is valid as written for
/// w1 >= w2; the other case is the transpose of L(v; w2, w1).
inline Element L_closed_form(const LDomPair &p, AlgebraPtr alg = nullptr) {
  require_dominant(p);
  if (!alg)
    alg = sl2_algebra();
  if (p.w1 < p.w2)
    return involution(Involution::Transpose, L_closed_form(LDomPair{p.v1, p.v2, p.w2, p.w1}, alg));
  const int n = std::min(p.w1, p.w2);
  const int l = p.v1 + p.v2;
  Element out(alg);
  for (int k = l; k <= n; ++k)
    for (int u1 = p.v1; u1 <= k - p.v2; ++u1) {
      const int u2 = k - u1;
      const int f = (p.w1 - p.w2) * (p.v1 - p.v2) + (n + 1 - k) * tr(p, u1, u2);
      LaurentHalf c = LaurentHalf::vpow(f) * qbinom(n - u2 - p.v1, u1 - p.v1) *
                      qbinom(n - u1 - p.v2, u2 - p.v2);
      if ((k - l) % 2)
        c = -c;
      out += efkk(alg, p.w1 - k, p.w2 - k, u1, u2) * RatFunc(c);
    }
  return out;
}

enum class Gen { E, F, K, Kp };
enum class Side { Left, Right };

inline Gen parse_gen(const std::string &s) {
  if (s == "E")
    return Gen::E;
  if (s == "F")
    return Gen::F;
  if (s == "K")
    return Gen::K;
  if (s == "K'" || s == "Kp")
    return Gen::Kp;
  throw std::invalid_argument("unknown generator '" + s + "'");
}

/// gen^k * L(p) (Left) or L(p) * gen^k (Right) = scalar * L(result).
inline std::pair<LaurentHalf, LDomPair> act(Gen gen, Side side, int k, const LDomPair &p) {
  require_dominant(p);
  if (k < 1)
    throw std::invalid_argument("act: power must be positive");
  const int dv = p.v1 - p.v2, dw = p.w1 - p.w2;
  const int sgn = side == Side::Left ? 1 : -1;
  LDomPair q = p;
  int e = 0;
  switch (gen) {
  case Gen::E:
  case Gen::F:
    if (dw != 0)
      throw std::invalid_argument("act: E/F multiplication needs w1 = w2");
    if (gen == Gen::E) {
      e = -sgn * k * dv;
      q.w1 += k;
    } else {
      e = sgn * k * dv;
      q.w2 += k;
    }
    break;
  case Gen::K:
    e = sgn * k * dw;
    q.v1 += k;
    q.w1 += k;
    q.w2 += k;
    break;
  case Gen::Kp:
    e = -sgn * k * dw;
    q.v2 += k;
    q.w1 += k;
    q.w2 += k;
    break;
  }
  return {LaurentHalf::vpow(e), q};
}

/// E^a F^b expanded over L(v,(a,b)).
inline DCBExpansion ef_expand(int a, int b) {
  if (a < 0 || b < 0)
    throw std::invalid_argument("ef_expand: exponents must be nonnegative");
  const int m = std::min(a, b), big = std::max(a, b);
  DCBExpansion out;
  for (int v1 = 0; v1 <= m; ++v1)
    for (int v2 = 0; v1 + v2 <= m; ++v2) {
      const LaurentHalf num = qbinom(m + 1, v1) * qbinom(m + 1, v2) * qint(m + 1 - v1 - v2);
      LaurentHalf c = exact_div(num, qint(m + 1)) * LaurentHalf::vpow(big * (v2 - v1));
      if (!c.is_zero())
        out.emplace(LDomPair{v1, v2, a, b}, c);
    }
  return out;
}

/// Sum of coefficient * L_closed_form over an expansion.
inline Element evaluate(const DCBExpansion &x, AlgebraPtr alg = nullptr) {
  if (!alg)
    alg = sl2_algebra();
  Element out(alg);
  for (const auto &[p, c] : x)
    out += L_closed_form(p, alg) * RatFunc(c);
  return out;
}

/// C^{(m)} = L(0,0;m,m).
inline Element casimir(int m, AlgebraPtr alg = nullptr) {
  if (m < 0)
    throw std::invalid_argument("casimir: m must be nonnegative");
  return L_closed_form(LDomPair{0, 0, m, m}, std::move(alg));
}

inline int d_form(const LDomPair &p1, const LDomPair &p2) {
  return (p1.w1 - p1.w2) * (p2.v1 - p2.v2) - (p2.w1 - p2.w2) * (p1.v1 - p1.v2);
}

} // namespace qg
