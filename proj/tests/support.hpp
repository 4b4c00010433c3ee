#pragma once

#include <qg/io.hpp>
#include <qg/parser.hpp>
#include <qg/verify.hpp>

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <string>

namespace qgt {

using namespace qg;

inline AlgebraPtr A(int rank, Variant var = Variant::Utilde) { return Algebra::get('A', rank, var); }

inline Element P(const std::string &s, const AlgebraPtr &alg) { return parse_element(s, alg); }

/// Laurent polynomial from integer powers of v, lowest first.
inline LaurentHalf L(int low, std::vector<long> cs) {
  std::vector<std::pair<int, Integer>> t;
  for (std::size_t k = 0; k < cs.size(); ++k)
    t.emplace_back(2 * (low + static_cast<int>(k)), Integer(cs[k]));
  return LaurentHalf::from_terms(t);
}

class Rand {
public:
  explicit Rand(unsigned seed) : rng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  LaurentHalf laurent(int span = 4, int coeff = 5) {
    std::vector<std::pair<int, Integer>> t;
    const int n = uniform(0, 4);
    for (int k = 0; k < n; ++k)
      t.emplace_back(uniform(-2 * span, 2 * span), Integer(uniform(-coeff, coeff)));
    return LaurentHalf::from_terms(t);
  }

  /// Random word in E_i, F_i, K_i, K_i' of length <= len.
  Element word(const AlgebraPtr &alg, int len) {
    Element x = Element::one(alg);
    const int n = uniform(0, len);
    const int r = alg->rank();
    for (int k = 0; k < n; ++k) {
      const int i = uniform(0, r - 1);
      switch (uniform(0, 3)) {
      case 0: x *= Element::E(alg, i); break;
      case 1: x *= Element::F(alg, i); break;
      case 2: x *= Element::K(alg, i); break;
      default: x *= Element::K(alg, i, 1, true); break;
      }
    }
    return x;
  }

  Element element(const AlgebraPtr &alg, int len, int terms = 3) {
    Element x(alg);
    for (int k = 0; k < terms; ++k)
      x += word(alg, len) * RatFunc(laurent(2, 3));
    return x;
  }

  std::mt19937 &rng() { return rng_; }

private:
  std::mt19937 rng_;
};

} // namespace qgt
