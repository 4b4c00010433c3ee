#pragma once

// Normal words for the positive half U^+ (and, via E_i -> F_i, for U^-):
// a homogeneous noncommutative Groebner basis of the quantum Serre ideal,
// computed degree by degree up to a cap.

#include "cartan.hpp"
#include "coeff.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qg {

/// Raised when a computation needs words longer than the certified degree.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A word in the letters 0..n-1 (one char per letter).
using Word = std::string;
using Poly = std::map<Word, RatFunc>;

inline Weight word_weight(const Word &w, int rank) {
  Weight a(static_cast<std::size_t>(rank), 0);
  for (char ch : w)
    ++a[static_cast<std::size_t>(ch)];
  return a;
}

/// Degree-lexicographic order; letter 0 is smallest.
inline bool deglex_less(const Word &a, const Word &b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

inline void poly_add(Poly &p, const Word &w, const RatFunc &c) {
  if (c.is_zero())
    return;
  auto [it, fresh] = p.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero())
      p.erase(it);
  }
}

class HalfAlgebra {
public:
  static constexpr int kDefaultCap = 12;

  HalfAlgebra(const CartanDatum &cd, int cap = kDefaultCap) : cd_(cd), cap_(cap) { complete(); }

  const CartanDatum &cartan() const { return cd_; }
  /// True when the rewriting system is confluent in every degree.
  bool is_complete() const { return complete_; }
  /// Largest word length for which normal forms are guaranteed.
  int certified_degree() const { return complete_ ? std::numeric_limits<int>::max() : cap_; }
  std::size_t num_rules() const { return rules_.size(); }
  const std::map<Word, Poly> &rules() const { return rules_; }

  /// Serre relators, as polynomials in words.
  std::vector<Poly> serre_relators() const {
    std::vector<Poly> out;
    const int n = cd_.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j)
          continue;
        const char a = static_cast<char>(i), b = static_cast<char>(j);
        Poly p;
        if (cd_.c(i, j) == 0) {
          if (i > j)
            continue;
          poly_add(p, Word{a, b}, 1);
          poly_add(p, Word{b, a}, -1);
        } else {
          poly_add(p, Word{a, a, b}, 1);
          poly_add(p, Word{a, b, a}, -RatFunc(qint(2)));
          poly_add(p, Word{b, a, a}, 1);
        }
        out.push_back(std::move(p));
      }
    return out;
  }

  bool is_normal(const Word &w) const { return find_match(w).second == nullptr; }

  /// Normal form of a single word (memoized).
  const Poly &reduce_word(const Word &w) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(w);
      if (it != memo_.end())
        return it->second;
    }
    check_capacity(w.size());
    Poly result;
    auto [pos, rule] = find_match(w);
    if (rule == nullptr) {
      result.emplace(w, RatFunc(1));
    } else {
      const std::size_t len = rule->first.size();
      const Word pre = w.substr(0, pos), post = w.substr(pos + len);
      for (const auto &[u, c] : rule->second)
        for (const auto &[nw, nc] : reduce_word(pre + u + post))
          poly_add(result, nw, c * nc);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(w, std::move(result)).first->second;
  }

  Poly reduce(const Poly &p) const {
    Poly out;
    for (const auto &[w, c] : p)
      for (const auto &[nw, nc] : reduce_word(w))
        poly_add(out, nw, c * nc);
    return out;
  }

  /// Normal words of the given weight, in deglex order.
  std::vector<Word> normal_words(const Weight &wt) const {
    const int deg = height(wt);
    check_capacity(static_cast<std::size_t>(deg));
    std::vector<Word> out;
    Word cur;
    Weight rest = wt;
    extend_normal(cur, rest, out);
    std::sort(out.begin(), out.end(), deglex_less);
    return out;
  }

  void check_capacity(std::size_t len) const {
    if (!complete_ && static_cast<int>(len) > cap_)
      throw CapacityError("word of length " + std::to_string(len) +
                          " exceeds the certified degree " + std::to_string(cap_) + " for " +
                          cd_.name());
  }

  /// Shared instance per (type, cap).
  static std::shared_ptr<const HalfAlgebra> get(const CartanDatum &cd, int cap = kDefaultCap) {
    static std::mutex reg_mu;
    static std::map<std::pair<std::string, int>, std::shared_ptr<const HalfAlgebra>> reg;
    std::lock_guard<std::mutex> lock(reg_mu);
    auto &slot = reg[{cd.name(), cap}];
    if (!slot)
      slot = std::make_shared<const HalfAlgebra>(cd, cap);
    return slot;
  }

private:
  using RuleIt = const std::pair<const Word, Poly> *;

  std::pair<std::size_t, RuleIt> find_match(const Word &w) const {
    for (std::size_t p = 0; p < w.size(); ++p)
      for (std::size_t len : lhs_lengths_) {
        if (p + len > w.size())
          break;
        auto it = rules_.find(w.substr(p, len));
        if (it != rules_.end())
          return {p, &*it};
      }
    return {0, nullptr};
  }

  // Full reduction without the memo (used while rules change).
  Poly reduce_uncached(Poly p) const {
    Poly out;
    auto cmp = [](const Word &a, const Word &b) { return deglex_less(b, a); };
    std::map<Word, RatFunc, decltype(cmp)> work(cmp);
    for (auto &[w, c] : p)
      work.emplace(w, c);
    while (!work.empty()) {
      auto it = work.begin();
      const Word w = it->first;
      const RatFunc c = it->second;
      work.erase(it);
      auto [pos, rule] = find_match(w);
      if (rule == nullptr) {
        poly_add(out, w, c);
        continue;
      }
      const std::size_t len = rule->first.size();
      for (const auto &[u, cu] : rule->second) {
        const Word nw = w.substr(0, pos) + u + w.substr(pos + len);
        const RatFunc add = c * cu;
        auto [jt, fresh] = work.emplace(nw, add);
        if (!fresh) {
          jt->second += add;
          if (jt->second.is_zero())
            work.erase(jt);
        }
      }
    }
    return out;
  }

  static Word leading(const Poly &p) {
    Word best = p.begin()->first;
    for (const auto &[w, c] : p)
      if (deglex_less(best, w))
        best = w;
    return best;
  }

  void add_rule(const Poly &p) {
    const Word lead = leading(p);
    const RatFunc lc = p.at(lead);
    Poly tail;
    for (const auto &[w, c] : p)
      if (w != lead)
        poly_add(tail, w, -c / lc);
    rules_.emplace(lead, std::move(tail));
    lhs_lengths_.insert(lead.size());
  }

  void complete() {
    std::map<int, std::vector<Poly>> pending;
    for (auto &p : serre_relators())
      pending[static_cast<int>(p.begin()->first.size())].push_back(std::move(p));

    std::set<std::pair<Word, Word>> done_pairs;
    for (int d = 2; d <= cap_; ++d) {
      std::vector<Poly> cands = std::move(pending[d]);
      // Overlaps l1 = p s, l2 = s q with |p s q| = d.
      for (const auto &[l1, t1] : rules_)
        for (const auto &[l2, t2] : rules_) {
          for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
            if (l1.size() + l2.size() - k != static_cast<std::size_t>(d))
              continue;
            if (l1.compare(l1.size() - k, k, l2, 0, k) != 0)
              continue;
            const Word p = l1.substr(0, l1.size() - k);
            const Word q = l2.substr(k);
            Poly s;
            for (const auto &[u, c] : t1)
              poly_add(s, u + q, c);
            for (const auto &[u, c] : t2)
              poly_add(s, p + u, -c);
            cands.push_back(std::move(s));
          }
        }
      for (auto &c : cands) {
        Poly r = reduce_uncached(c);
        if (!r.empty())
          add_rule(r);
      }
    }
    // Complete if no overlap exceeds the cap.
    complete_ = true;
    for (const auto &[l1, t1] : rules_)
      for (const auto &[l2, t2] : rules_)
        for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k)
          if (l1.size() + l2.size() - k > static_cast<std::size_t>(cap_) &&
              l1.compare(l1.size() - k, k, l2, 0, k) == 0)
            complete_ = false;
  }

  void extend_normal(Word &cur, Weight &rest, std::vector<Word> &out) const {
    if (is_zero_weight(rest)) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < cd_.rank(); ++i) {
      if (rest[static_cast<std::size_t>(i)] == 0)
        continue;
      cur.push_back(static_cast<char>(i));
      // Only suffixes can newly contain a leading word.
      bool ok = true;
      for (std::size_t len : lhs_lengths_) {
        if (len > cur.size())
          break;
        if (rules_.count(cur.substr(cur.size() - len))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        --rest[static_cast<std::size_t>(i)];
        extend_normal(cur, rest, out);
        ++rest[static_cast<std::size_t>(i)];
      }
      cur.pop_back();
    }
  }

  CartanDatum cd_;
  int cap_;
  bool complete_ = false;
  std::map<Word, Poly> rules_;
  std::set<std::size_t> lhs_lengths_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Word, Poly> memo_;
};

} // namespace qg
