#pragma once

// Simply-laced Cartan data, roots, Weyl group combinatorics and the
// Gamma-grading monoid.

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qg {

using Weight = std::vector<int>; // coordinates in the basis of simple roots

inline Weight operator+(Weight a, const Weight &b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    a[k] += b[k];
  return a;
}
inline Weight operator-(Weight a, const Weight &b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    a[k] -= b[k];
  return a;
}
inline Weight operator*(int s, Weight a) {
  for (auto &x : a)
    x *= s;
  return a;
}
inline bool is_zero_weight(const Weight &a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}
inline bool is_nonneg_weight(const Weight &a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}
inline int height(const Weight &a) { return std::accumulate(a.begin(), a.end(), 0); }

/// Degree in Gamma = N^I x N^I.  `plus` counts E-type and `minus` F-type
/// content; K_i and K_i' contribute to both.
struct GammaDegree {
  Weight plus;
  Weight minus;
  friend bool operator==(const GammaDegree &, const GammaDegree &) = default;
  friend auto operator<=>(const GammaDegree &, const GammaDegree &) = default;
  GammaDegree operator+(const GammaDegree &o) const { return {plus + o.plus, minus + o.minus}; }
  GammaDegree operator-(const GammaDegree &o) const { return {plus - o.plus, minus - o.minus}; }
  bool nonnegative() const { return is_nonneg_weight(plus) && is_nonneg_weight(minus); }
};

/// Cartan datum of a connected simply-laced Dynkin diagram.
///
/// Vertex numbering:
///   A_n: path 1 - 2 - ... - n
///   D_n: path 1 - ... - (n-2), with n-1 and n both attached to n-2
///   E_n: path 1 - 3 - 4 - ... - n, with 2 attached to 4
class CartanDatum {
public:
  CartanDatum(char type, int rank) : type_(type), rank_(rank) {
    const bool legal = (type == 'A' && rank >= 1) || (type == 'D' && rank >= 4) ||
                       (type == 'E' && rank >= 6 && rank <= 8);
    if (!legal)
      throw std::invalid_argument("build_cartan: illegal type " + std::string(1, type) +
                                  std::to_string(rank));
    c_.assign(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i)
      c_[i][i] = 2;
    auto edge = [&](int a, int b) { // 1-based
      c_[a - 1][b - 1] = c_[b - 1][a - 1] = -1;
    };
    if (type == 'A') {
      for (int i = 1; i < rank; ++i)
        edge(i, i + 1);
    } else if (type == 'D') {
      for (int i = 1; i < rank - 2; ++i)
        edge(i, i + 1);
      edge(rank - 2, rank - 1);
      edge(rank - 2, rank);
    } else {
      edge(1, 3);
      for (int i = 3; i < rank; ++i)
        edge(i, i + 1);
      edge(2, 4);
    }
    validate();
    build_roots();
  }

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }
  int c(int i, int j) const { return c_[i][j]; } // 0-based
  const std::vector<std::vector<int>> &matrix() const { return c_; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < rank_; ++i)
      for (int j = i + 1; j < rank_; ++j)
        if (c_[i][j] != 0)
          out.emplace_back(i + 1, j + 1);
    return out;
  }

  Weight zero() const { return Weight(static_cast<std::size_t>(rank_), 0); }
  Weight simple(int i) const {
    Weight a = zero();
    a[static_cast<std::size_t>(i)] = 1;
    return a;
  }

  /// Symmetric bilinear form (a, b) = a^T C b.
  int form(const Weight &a, const Weight &b) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) {
      if (a[i] == 0)
        continue;
      for (int j = 0; j < rank_; ++j)
        s += a[i] * c_[i][j] * b[j];
    }
    return s;
  }
  /// (alpha_i, a)
  int pair_simple(int i, const Weight &a) const {
    int s = 0;
    for (int j = 0; j < rank_; ++j)
      s += c_[i][j] * a[j];
    return s;
  }

  /// s_i(a) = a - (alpha_i, a) alpha_i
  Weight reflect(int i, Weight a) const {
    a[static_cast<std::size_t>(i)] -= pair_simple(i, a);
    return a;
  }

  /// N(a) = (a, a)/2 - height(a)
  int norm_N(const Weight &a) const { return form(a, a) / 2 - height(a); }

  const std::vector<Weight> &positive_roots() const { return positive_roots_; }
  /// Lexicographically smallest reduced word for w0 (0-based letters).
  const std::vector<int> &longest_word() const { return longest_word_; }
  /// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) in PBW order.
  const std::vector<Weight> &convex_roots() const { return convex_roots_; }
  std::size_t num_positive() const { return positive_roots_.size(); }

  /// n_a = sum_{k<l} (beta_k, beta_l) a_k a_l
  int pbw_twist(const std::vector<int> &a) const {
    if (a.size() != convex_roots_.size())
      throw std::invalid_argument("pbw_twist: exponent vector has length " +
                                  std::to_string(a.size()) + ", expected " +
                                  std::to_string(convex_roots_.size()));
    int s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t l = k + 1; l < a.size(); ++l)
        s += form(convex_roots_[k], convex_roots_[l]) * a[k] * a[l];
    return s;
  }

  /// Weight of a PBW exponent vector.
  Weight pbw_weight(const std::vector<int> &a) const {
    Weight w = zero();
    for (std::size_t k = 0; k < a.size(); ++k)
      w = w + a[k] * convex_roots_[k];
    return w;
  }

  /// Check(alpha_i) evaluated on d: sum_j c_ij (plus_j - minus_j).
  int gamma_eval(int i, const GammaDegree &d) const {
    return pair_simple(i, d.plus) - pair_simple(i, d.minus);
  }

  GammaDegree gamma_zero() const { return {zero(), zero()}; }

  /// All PBW exponent vectors of the given weight, in lexicographic order.
  std::vector<std::vector<int>> pbw_exponents(const Weight &wt) const {
    std::vector<std::vector<int>> out;
    std::vector<int> a(convex_roots_.size(), 0);
    enumerate_exponents(0, wt, a, out);
    return out;
  }

  /// Kostant partition function: number of PBW monomials of weight wt.
  std::size_t kostant(const Weight &wt) const { return pbw_exponents(wt).size(); }

  friend bool operator==(const CartanDatum &a, const CartanDatum &b) {
    return a.type_ == b.type_ && a.rank_ == b.rank_;
  }

private:
  void validate() const {
    // Connected tree with Dynkin valence pattern.
    const auto es = edges();
    if (static_cast<int>(es.size()) != rank_ - 1)
      throw std::logic_error("CartanDatum: diagram is not a tree");
    std::vector<int> seen(static_cast<std::size_t>(rank_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < rank_; ++w)
        if (c_[u][w] == -1 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::logic_error("CartanDatum: diagram is not connected");
    int branch = 0;
    for (int i = 0; i < rank_; ++i) {
      int deg = 0;
      for (int j = 0; j < rank_; ++j)
        deg += (i != j && c_[i][j] != 0);
      if (deg > 3)
        throw std::logic_error("CartanDatum: vertex of valence > 3");
      branch += (deg == 3);
    }
    if (branch > 1)
      throw std::logic_error("CartanDatum: more than one branch vertex");
  }

  void build_roots() {
    // Positive roots by closing the simple roots under reflections.
    std::set<Weight> roots;
    std::vector<Weight> frontier;
    for (int i = 0; i < rank_; ++i) {
      roots.insert(simple(i));
      frontier.push_back(simple(i));
    }
    while (!frontier.empty()) {
      std::vector<Weight> next;
      for (const auto &r : frontier)
        for (int i = 0; i < rank_; ++i) {
          Weight s = reflect(i, r);
          if (is_nonneg_weight(s) && !is_zero_weight(s) && roots.insert(s).second)
            next.push_back(s);
        }
      frontier = std::move(next);
    }
    positive_roots_.assign(roots.begin(), roots.end());
    std::sort(positive_roots_.begin(), positive_roots_.end(), [](const Weight &a, const Weight &b) {
      if (height(a) != height(b))
        return height(a) < height(b);
      return a > b;
    });

    // Greedy descent from rho in fundamental-weight coordinates: the smallest
    // index with positive coordinate always extends a reduced word of w0.
    std::vector<int> lambda(static_cast<std::size_t>(rank_), 1);
    for (;;) {
      int pick = -1;
      for (int i = 0; i < rank_; ++i)
        if (lambda[i] > 0) {
          pick = i;
          break;
        }
      if (pick < 0)
        break;
      const int m = lambda[pick];
      for (int j = 0; j < rank_; ++j)
        lambda[j] -= m * c_[pick][j];
      longest_word_.push_back(pick);
    }
    if (longest_word_.size() != positive_roots_.size())
      throw std::logic_error("CartanDatum: reduced word length mismatch");

    for (std::size_t k = 0; k < longest_word_.size(); ++k) {
      Weight b = simple(longest_word_[k]);
      for (std::size_t j = k; j-- > 0;)
        b = reflect(longest_word_[j], b);
      convex_roots_.push_back(b);
    }
    std::vector<Weight> a = convex_roots_, b = positive_roots_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw std::logic_error("CartanDatum: convex order does not exhaust positive roots");
  }

  void enumerate_exponents(std::size_t k, const Weight &rest, std::vector<int> &a,
                           std::vector<std::vector<int>> &out) const {
    if (k == convex_roots_.size()) {
      if (is_zero_weight(rest))
        out.push_back(a);
      return;
    }
    const Weight &b = convex_roots_[k];
    int maxm = 1 << 20;
    for (int i = 0; i < rank_; ++i)
      if (b[i] > 0)
        maxm = std::min(maxm, rest[i] / b[i]);
    for (int m = 0; m <= maxm; ++m) {
      a[k] = m;
      enumerate_exponents(k + 1, rest - m * b, a, out);
    }
    a[k] = 0;
  }

  char type_;
  int rank_;
  std::vector<std::vector<int>> c_;
  std::vector<Weight> positive_roots_;
  std::vector<int> longest_word_;
  std::vector<Weight> convex_roots_;
};

inline CartanDatum build_cartan(char type, int rank) { return CartanDatum(type, rank); }

/// Parse "A2", "D4", "E6" or a bare type letter combined with a rank.
inline CartanDatum parse_cartan(const std::string &type, int rank = 0) {
  if (type.empty())
    throw std::invalid_argument("empty Cartan type");
  const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  if (type.size() > 1) {
    int r = 0;
    try {
      std::size_t used = 0;
      r = std::stoi(type.substr(1), &used);
      if (used != type.size() - 1)
        throw std::invalid_argument("");
    } catch (const std::exception &) {
      throw std::invalid_argument("cannot parse Cartan type '" + type + "'");
    }
    if (rank != 0 && rank != r)
      throw std::invalid_argument("Cartan type " + type + " conflicts with rank " +
                                  std::to_string(rank));
    return CartanDatum(t, r);
  }
  return CartanDatum(t, rank);
}

} // namespace qg
