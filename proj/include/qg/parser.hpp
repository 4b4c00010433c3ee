#pragma once

// Expression parser for elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' exponent)*
//   atom   := integer | 'v' | '[' integer ']' | gen | '(' expr ')'
//   gen    := ('E' | 'F' | 'K' | "K'") index | 'K' index "'"
//   exponent := ['-'] integer | '(' ['-'] integer ['/' integer] ')'
//
// Half-integer exponents are accepted on v only; division only by scalars.

#include "algebra.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qg {

class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string &msg, std::size_t pos)
      : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

/// One generator power in an unnormalized word.  kind is 'E', 'F', 'K' or
/// 'P' (for K').
struct Letter {
  char kind;
  int index; // 0-based
  int power;
  friend auto operator<=>(const Letter &, const Letter &) = default;
};

using FreeWord = std::vector<Letter>;

/// Unnormalized linear combination of generator words.
struct FreeElement {
  AlgebraPtr alg;
  std::map<FreeWord, RatFunc> terms;

  void add(const FreeWord &w, const RatFunc &c) {
    if (c.is_zero())
      return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero())
        terms.erase(it);
    }
  }
  bool is_scalar() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
  }
  RatFunc scalar_value() const { return terms.empty() ? RatFunc() : terms.begin()->second; }

  FreeElement operator+(const FreeElement &o) const {
    FreeElement r = *this;
    for (const auto &[w, c] : o.terms)
      r.add(w, c);
    return r;
  }
  FreeElement operator*(const FreeElement &o) const {
    FreeElement r{alg, {}};
    for (const auto &[w1, c1] : terms)
      for (const auto &[w2, c2] : o.terms) {
        FreeWord w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        r.add(w, c1 * c2);
      }
    return r;
  }
  FreeElement scaled(const RatFunc &c) const {
    FreeElement r{alg, {}};
    for (const auto &[w, x] : terms)
      r.add(w, x * c);
    return r;
  }
};

inline Element letter_element(const AlgebraPtr &alg, const Letter &l) {
  switch (l.kind) {
  case 'E':
    return Element::E(alg, l.index).pow(static_cast<unsigned>(l.power));
  case 'F':
    return Element::F(alg, l.index).pow(static_cast<unsigned>(l.power));
  case 'K':
    return Element::K(alg, l.index, l.power, false);
  default:
    return Element::K(alg, l.index, l.power, true);
  }
}

/// Normal form of an unnormalized expression.
inline Element normal_form(const FreeElement &x) {
  Element out(x.alg);
  for (const auto &[w, c] : x.terms) {
    Element prod = Element::scalar(x.alg, c);
    for (const auto &l : w)
      prod = prod * letter_element(x.alg, l);
    out += prod;
  }
  return out;
}

inline std::string free_word_to_string(const FreeWord &w) {
  if (w.empty())
    return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k)
      s += "*";
    const Letter &l = w[k];
    s += l.kind == 'P' ? std::string("K") : std::string(1, l.kind);
    s += std::to_string(l.index + 1);
    if (l.kind == 'P')
      s += "'";
    if (l.power != 1)
      s += "^" + std::to_string(l.power);
  }
  return s;
}

class Parser {
public:
  Parser(std::string text, AlgebraPtr alg) : s_(std::move(text)), alg_(std::move(alg)) {}

  FreeElement parse() {
    FreeElement r = expr();
    skip();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    if (pos_ - digits > 9) {
      pos_ = start;
      fail("integer too large");
    }
    const long v = std::stol(s_.substr(digits, pos_ - digits));
    return neg ? -v : v;
  }

  FreeElement constant(const RatFunc &c) {
    FreeElement r{alg_, {}};
    r.add({}, c);
    return r;
  }

  FreeElement expr() {
    FreeElement r = term();
    for (;;) {
      if (accept('+'))
        r = r + term();
      else if (accept('-'))
        r = r + term().scaled(-1);
      else
        return r;
    }
  }

  FreeElement term() {
    FreeElement r = unary();
    for (;;) {
      if (accept('*')) {
        r = r * unary();
      } else if (peek('/')) {
        const std::size_t at = pos_;
        ++pos_;
        FreeElement d = unary();
        if (!d.is_scalar()) {
          pos_ = at;
          fail("division by a non-scalar");
        }
        if (d.scalar_value().is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        r = r.scaled(d.scalar_value().inverse());
      } else {
        return r;
      }
    }
  }

  FreeElement unary() {
    if (accept('-'))
      return unary().scaled(-1);
    if (accept('+'))
      return unary();
    return factor();
  }

  // Exponent in units of 1/den_allowed.
  std::pair<long, long> exponent(bool allow_half) {
    skip();
    if (accept('(')) {
      long p = integer();
      long q = 1;
      if (accept('/')) {
        q = integer();
        if (q != 1 && q != 2)
          fail("only denominators 1 and 2 are supported in exponents");
        if (q == 2 && !allow_half)
          fail("half-integer exponent on a non-v factor");
      }
      expect(')');
      return {p, q};
    }
    return {integer(), 1};
  }

  FreeElement factor() {
    skip();
    const std::size_t start = pos_;
    if (pos_ >= s_.size())
      fail("unexpected end of input");
    const char ch = s_[pos_];
    FreeElement base{alg_, {}};
    bool is_v = false;
    std::optional<Letter> gen;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t digits = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      base = constant(RatFunc(Integer(s_.substr(digits, pos_ - digits))));
    } else if (ch == 'v') {
      ++pos_;
      is_v = true;
      base = constant(LaurentHalf::vpow(1));
    } else if (ch == '[') {
      ++pos_;
      const long r = integer();
      expect(']');
      base = constant(qint(static_cast<int>(r)));
    } else if (ch == '(') {
      ++pos_;
      base = expr();
      expect(')');
    } else if (ch == 'E' || ch == 'F' || ch == 'K') {
      ++pos_;
      char kind = ch;
      if (ch == 'K' && pos_ < s_.size() && s_[pos_] == '\'') {
        kind = 'P';
        ++pos_;
      }
      const std::size_t digits = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (pos_ == digits)
        fail("generator without index");
      const long idx = std::stol(s_.substr(digits, std::min<std::size_t>(pos_ - digits, 9)));
      if (idx < 1 || idx > alg_->rank()) {
        pos_ = digits;
        fail("unknown index " + s_.substr(digits, pos_ - digits) + " for " +
             alg_->cartan().name());
      }
      if (kind == 'K' && pos_ < s_.size() && s_[pos_] == '\'') {
        kind = 'P';
        ++pos_;
      }
      gen = Letter{kind, static_cast<int>(idx - 1), 1};
    } else {
      fail("unexpected '" + std::string(1, ch) + "'");
    }

    // Accumulated exponent (halves for v).
    long num = 1, den = 1;
    bool has_exp = false;
    while (accept('^')) {
      const std::size_t at = pos_;
      auto [p, q] = exponent(is_v);
      if (q == 2 && !is_v) {
        pos_ = at;
        fail("half-integer exponent on a non-v factor");
      }
      // (num/den)*(p/q)
      num *= p;
      den *= q;
      if (den == 4 || (den == 2 && num % 2 == 0)) {
        num /= 2;
        den /= 2;
      }
      if (den > 2) {
        pos_ = at;
        fail("exponent denominator too large");
      }
      has_exp = true;
    }
    if (!has_exp) {
      if (gen)
        return word_of(*gen);
      return base;
    }
    if (is_v) {
      const long half = den == 2 ? num : 2 * num;
      return constant(LaurentHalf::monomial(static_cast<int>(half)));
    }
    if (den != 1) {
      pos_ = start;
      fail("half-integer exponent on a non-v factor");
    }
    if (gen) {
      Letter l = *gen;
      if (num == 0)
        return constant(1);
      if (l.kind == 'E' || l.kind == 'F') {
        if (num < 0) {
          pos_ = start;
          fail("negative power of " + std::string(1, l.kind) + "-generator");
        }
      } else if (num < 0 && !alg_->allows_inverse_k()) {
        pos_ = start;
        fail("inverted K in " + alg_->description() + " (K is not invertible there)");
      }
      l.power = static_cast<int>(num);
      return word_of(l);
    }
    if (num < 0) {
      if (!base.is_scalar() || base.scalar_value().is_zero()) {
        pos_ = start;
        fail("negative power of a non-scalar");
      }
      return constant(base.scalar_value().pow(static_cast<int>(num)));
    }
    FreeElement r = constant(1);
    for (long k = 0; k < num; ++k)
      r = r * base;
    return r;
  }

  FreeElement word_of(const Letter &l) {
    FreeElement r{alg_, {}};
    if ((l.kind == 'K' || l.kind == 'P') && l.power < 0 && !alg_->allows_inverse_k())
      fail("inverted K in " + alg_->description());
    r.add(FreeWord{l}, 1);
    return r;
  }

  std::string s_;
  AlgebraPtr alg_;
  std::size_t pos_ = 0;
};

inline FreeElement parse(const std::string &text, const AlgebraPtr &alg) {
  return Parser(text, alg).parse();
}

/// Parse and normalize.
inline Element parse_element(const std::string &text, const AlgebraPtr &alg) {
  return normal_form(parse(text, alg));
}

/// Parse a scalar (coefficient) expression.
inline RatFunc parse_scalar(const std::string &text, const AlgebraPtr &alg) {
  FreeElement f = parse(text, alg);
  if (!f.is_scalar())
    throw ParseError("expected a scalar expression", 0);
  return f.scalar_value();
}

} // namespace qg
