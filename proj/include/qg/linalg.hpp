#pragma once

// Exact linear algebra over Q(v^{1/2}): coordinates of vectors in a basis.

#include "coeff.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qg {

/// Sparse vector keyed by Key.
template <class Key, class Cmp = std::less<Key>> using SparseVec = std::map<Key, RatFunc, Cmp>;

/// Echelonizes a family of vectors once; afterwards `coordinates` expresses
/// any vector in their span.
template <class Key, class Cmp = std::less<Key>> class BasisCoordinates {
public:
  using Vec = SparseVec<Key, Cmp>;

  explicit BasisCoordinates(const std::vector<Vec> &basis) : n_(basis.size()) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Vec r = basis[j];
      std::map<std::size_t, RatFunc> combo{{j, RatFunc(1)}};
      for (const auto &row : rows_) {
        auto it = r.find(row.pivot);
        if (it == r.end())
          continue;
        const RatFunc f = it->second / row.vec.at(row.pivot);
        axpy(r, row.vec, -f);
        for (const auto &[k, c] : row.combo)
          add(combo, k, -f * c);
      }
      if (r.empty())
        throw std::invalid_argument("BasisCoordinates: family is linearly dependent (vector " +
                                    std::to_string(j) + ")");
      Key pivot = r.begin()->first;
      rows_.push_back(Row{pivot, std::move(r), std::move(combo)});
    }
  }

  std::size_t size() const { return n_; }

  /// Coordinates of x, or nullopt when x is outside the span.
  std::optional<std::vector<RatFunc>> coordinates(Vec x) const {
    std::vector<RatFunc> out(n_);
    for (const auto &row : rows_) {
      auto it = x.find(row.pivot);
      if (it == x.end())
        continue;
      const RatFunc f = it->second / row.vec.at(row.pivot);
      axpy(x, row.vec, -f);
      for (const auto &[k, c] : row.combo)
        out[k] += f * c;
    }
    if (!x.empty())
      return std::nullopt;
    return out;
  }

private:
  struct Row {
    Key pivot;
    Vec vec;
    std::map<std::size_t, RatFunc> combo; // vec = sum combo[k] * basis[k]
  };

  static void add(std::map<std::size_t, RatFunc> &m, std::size_t k, const RatFunc &c) {
    if (c.is_zero())
      return;
    auto [it, fresh] = m.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero())
        m.erase(it);
    }
  }
  static void axpy(Vec &x, const Vec &y, const RatFunc &f) {
    for (const auto &[k, c] : y) {
      auto [it, fresh] = x.emplace(k, f * c);
      if (!fresh) {
        it->second += f * c;
        if (it->second.is_zero())
          x.erase(it);
      }
    }
  }

  std::size_t n_;
  std::vector<Row> rows_;
};

} // namespace qg
