#pragma once

// Exact coefficient arithmetic: Laurent polynomials in t = v^{1/2} with
// integer coefficients, their fraction field, and quantum integers.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qg {

using Integer = mpz_class;

/// Raised when an internal consistency check fails (a bug, never user error).
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Element of Z[v^{1/2}, v^{-1/2}].  Exponents are stored in units of v^{1/2}
/// so that v^k has exponent 2k.  Dense storage between the lowest and highest
/// nonzero exponents; the zero polynomial has no coefficients.
class LaurentHalf {
public:
  LaurentHalf() = default;
  LaurentHalf(long c) { // NOLINT(google-explicit-constructor)
    if (c != 0)
      coeffs_.emplace_back(c);
  }
  LaurentHalf(const Integer &c) { // NOLINT(google-explicit-constructor)
    if (c != 0)
      coeffs_.push_back(c);
  }

  /// c * v^{half/2}
  static LaurentHalf monomial(int half, const Integer &c = 1) {
    LaurentHalf p(c);
    p.low_ = c == 0 ? 0 : half;
    return p;
  }
  /// v^k for integer k.
  static LaurentHalf vpow(int k) { return monomial(2 * k); }

  /// Build from (half-exponent, coefficient) pairs; duplicates are summed.
  static LaurentHalf from_terms(const std::vector<std::pair<int, Integer>> &terms) {
    LaurentHalf p;
    for (const auto &[e, c] : terms)
      p += monomial(e, c);
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }
  bool is_monomial() const { return coeffs_.size() == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  Integer coeff(int half) const {
    if (half < low_ || half > high() || is_zero())
      return 0;
    return coeffs_[static_cast<std::size_t>(half - low_)];
  }
  const Integer &leading() const { return coeffs_.back(); }
  const Integer &trailing() const { return coeffs_.front(); }

  /// Nonzero terms in increasing exponent order.
  std::vector<std::pair<int, Integer>> terms() const {
    std::vector<std::pair<int, Integer>> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0)
        out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
    return out;
  }

  /// True when every exponent is even, i.e. the value lies in Z[v, v^{-1}].
  bool integral_powers() const {
    for (const auto &[e, c] : terms())
      if (e % 2 != 0)
        return false;
    return true;
  }

  bool nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Integer &c) { return c >= 0; });
  }

  LaurentHalf shifted(int half) const {
    LaurentHalf p = *this;
    if (!p.is_zero())
      p.low_ += half;
    return p;
  }

  /// v^{1/2} -> v^{-1/2}
  LaurentHalf bar() const {
    LaurentHalf p;
    if (is_zero())
      return p;
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    p.low_ = -high();
    return p;
  }

  LaurentHalf operator-() const {
    LaurentHalf p = *this;
    for (auto &c : p.coeffs_)
      c = -c;
    return p;
  }

  LaurentHalf &operator+=(const LaurentHalf &o) {
    if (o.is_zero())
      return *this;
    if (is_zero())
      return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      out[static_cast<std::size_t>(low_ - lo) + k] = coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
      out[static_cast<std::size_t>(o.low_ - lo) + k] += o.coeffs_[k];
    coeffs_ = std::move(out);
    low_ = lo;
    trim();
    return *this;
  }
  LaurentHalf &operator-=(const LaurentHalf &o) { return *this += -o; }

  LaurentHalf &operator*=(const LaurentHalf &o) { return *this = *this * o; }

  friend LaurentHalf operator+(LaurentHalf a, const LaurentHalf &b) { return a += b; }
  friend LaurentHalf operator-(LaurentHalf a, const LaurentHalf &b) { return a -= b; }
  friend LaurentHalf operator*(const LaurentHalf &a, const LaurentHalf &b) {
    LaurentHalf p;
    if (a.is_zero() || b.is_zero())
      return p;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    p.low_ = a.low_ + b.low_;
    p.trim();
    return p;
  }
  friend LaurentHalf operator*(const Integer &c, LaurentHalf p) {
    if (c == 0)
      return {};
    for (auto &x : p.coeffs_)
      x *= c;
    return p;
  }

  friend bool operator==(const LaurentHalf &a, const LaurentHalf &b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentHalf &a, const LaurentHalf &b) { return !(a == b); }
  /// Arbitrary total order (for use as a map key).
  friend bool operator<(const LaurentHalf &a, const LaurentHalf &b) {
    if (a.low_ != b.low_)
      return a.low_ < b.low_;
    if (a.coeffs_.size() != b.coeffs_.size())
      return a.coeffs_.size() < b.coeffs_.size();
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      if (a.coeffs_[k] != b.coeffs_[k])
        return a.coeffs_[k] < b.coeffs_[k];
    return false;
  }

  LaurentHalf pow(unsigned n) const {
    LaurentHalf r(1), base = *this;
    while (n) {
      if (n & 1U)
        r *= base;
      n >>= 1U;
      if (n)
        base *= base;
    }
    return r;
  }

  /// gcd of the integer coefficients (nonnegative; 0 for the zero polynomial).
  Integer content() const {
    Integer g = 0;
    for (const auto &c : coeffs_)
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
  }

  /// Divide every coefficient by c, which must divide all of them.
  LaurentHalf divided_exact(const Integer &c) const {
    LaurentHalf p = *this;
    for (auto &x : p.coeffs_) {
      if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
        throw InternalError("LaurentHalf::divided_exact: integer division with remainder");
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return p;
  }

  /// Part with exponents strictly above (positive=true) or below zero.
  LaurentHalf strict_part(bool positive) const {
    LaurentHalf p;
    for (const auto &[e, c] : terms())
      if (positive ? e > 0 : e < 0)
        p += monomial(e, c);
    return p;
  }

  std::string to_string() const;

private:
  friend class RatFunc;
  friend struct PolyDivision;

  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0)
      ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0)
      --last;
    if (first > 0 || last < coeffs_.size())
      coeffs_ = std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                     coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    low_ += static_cast<int>(first);
  }

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

/// Thrown by exact_div when the divisor does not divide the dividend.
class NonDivisible : public std::domain_error {
public:
  NonDivisible(LaurentHalf remainder)
      : std::domain_error("exact_div: divisor does not divide dividend, remainder " +
                          remainder.to_string()),
        remainder_(std::move(remainder)) {}
  const LaurentHalf &remainder() const { return remainder_; }

private:
  LaurentHalf remainder_;
};

struct PolyDivision {
  // Long division in Z[t^{±1}] from the top degree down.  Returns the
  // quotient; `rem` receives what is left when a step fails or the
  // dividend drops below the divisor's span.
  static LaurentHalf divide(const LaurentHalf &p, const LaurentHalf &q, LaurentHalf &rem) {
    if (q.is_zero())
      throw std::domain_error("exact_div: division by zero");
    LaurentHalf quot;
    rem = p;
    const int span = q.high() - q.low();
    while (!rem.is_zero() && rem.high() - rem.low() >= span) {
      const Integer &lc = rem.leading();
      if (!mpz_divisible_p(lc.get_mpz_t(), q.leading().get_mpz_t()))
        break;
      Integer c;
      mpz_divexact(c.get_mpz_t(), lc.get_mpz_t(), q.leading().get_mpz_t());
      const LaurentHalf step = LaurentHalf::monomial(rem.high() - q.high(), c);
      quot += step;
      rem -= step * q;
    }
    return quot;
  }
};

/// p / q in Z[v^{±1/2}]; throws NonDivisible carrying the remainder.
inline LaurentHalf exact_div(const LaurentHalf &p, const LaurentHalf &q) {
  LaurentHalf rem;
  LaurentHalf quot = PolyDivision::divide(p, q, rem);
  if (!rem.is_zero())
    throw NonDivisible(rem);
  return quot;
}

inline LaurentHalf bar_coeff(const LaurentHalf &p) { return p.bar(); }

namespace detail {

inline std::string format_vpow(int half) {
  if (half == 0)
    return "";
  if (half == 2)
    return "v";
  std::string e;
  if (half % 2 == 0)
    e = std::to_string(half / 2);
  else
    e = std::to_string(half) + "/2";
  if (half > 0 && half % 2 == 0)
    return "v^" + e;
  return "v^(" + e + ")";
}

// Signed univariate polynomial helpers over Z, used for gcds.  Vectors hold
// coefficients from degree 0 upwards with nonzero top coefficient.
using ZPoly = std::vector<Integer>;

inline void ztrim(ZPoly &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

inline Integer zcontent(const ZPoly &p) {
  Integer g = 0;
  for (const auto &c : p)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

inline ZPoly zprimitive(ZPoly p) {
  const Integer g = zcontent(p);
  if (g == 0)
    return p;
  for (auto &c : p)
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (p.back() < 0)
    for (auto &c : p)
      c = -c;
  return p;
}

// Pseudo-remainder of a by b (deg a >= deg b).
inline ZPoly zprem(ZPoly a, const ZPoly &b) {
  const std::size_t db = b.size() - 1;
  const Integer &lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto &c : a)
      c *= lb;
    for (std::size_t k = 0; k <= db; ++k)
      a[shift + k] -= la * b[k];
    ztrim(a);
  }
  return a;
}

/// Primitive gcd (positive leading coefficient) of two nonzero polynomials.
inline ZPoly zgcd_primitive(ZPoly a, ZPoly b) {
  a = zprimitive(std::move(a));
  b = zprimitive(std::move(b));
  if (a.size() < b.size())
    std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1)
      return ZPoly{Integer(1)};
    ZPoly r = zprem(a, b);
    a = std::move(b);
    b = r.empty() ? r : zprimitive(std::move(r));
  }
  return a;
}

} // namespace detail

inline std::string LaurentHalf::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  const auto ts = terms();
  bool first = true;
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    const auto &[e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0)
        os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::string vp = detail::format_vpow(e);
    if (vp.empty())
      os << mag.get_str();
    else if (mag == 1)
      os << vp;
    else
      os << mag.get_str() << "*" << vp;
  }
  return os.str();
}

inline std::ostream &operator<<(std::ostream &os, const LaurentHalf &p) {
  return os << p.to_string();
}

/// Element of the fraction field Q(v^{1/2}).  Stored reduced, with the
/// denominator having lowest exponent 0 and positive leading coefficient.
class RatFunc {
public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}                  // NOLINT
  RatFunc(const Integer &c) : num_(c), den_(1) {}        // NOLINT
  RatFunc(LaurentHalf p) : num_(std::move(p)), den_(1) {} // NOLINT
  RatFunc(LaurentHalf num, LaurentHalf den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
      throw std::domain_error("RatFunc: zero denominator");
    normalize();
  }

  const LaurentHalf &num() const { return num_; }
  const LaurentHalf &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  /// The value as a Laurent polynomial; throws if it is not one.
  const LaurentHalf &laurent() const {
    if (!is_laurent())
      throw InternalError("RatFunc::laurent: value " + to_string() + " is not integral");
    return num_;
  }

  RatFunc bar() const { return RatFunc(num_.bar(), den_.bar()); }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatFunc inverse() const {
    if (is_zero())
      throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
  }

  friend RatFunc operator+(const RatFunc &a, const RatFunc &b) {
    if (a.den_.is_one() && b.den_.is_one())
      return RatFunc(a.num_ + b.num_, Trusted{});
    if (a.den_ == b.den_)
      return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc &a, const RatFunc &b) {
    if (a.den_.is_one() && b.den_.is_one())
      return RatFunc(a.num_ * b.num_, Trusted{});
    if (a.is_zero() || b.is_zero())
      return {};
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc &a, const RatFunc &b) { return a * b.inverse(); }
  RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
  RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
  RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }
  RatFunc &operator/=(const RatFunc &o) { return *this = *this / o; }

  friend bool operator==(const RatFunc &a, const RatFunc &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc &a, const RatFunc &b) { return !(a == b); }

  RatFunc pow(int n) const {
    if (n < 0)
      return inverse().pow(-n);
    if (den_.is_one())
      return RatFunc(num_.pow(static_cast<unsigned>(n)), Trusted{});
    return RatFunc(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
  }

  std::string to_string() const {
    if (den_.is_one())
      return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

private:
  struct Trusted {};
  RatFunc(LaurentHalf num, Trusted) : num_(std::move(num)), den_(1) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    // Move the unit t^k of the denominator to the numerator.
    num_ = num_.shifted(-den_.low());
    den_ = den_.shifted(-den_.low());
    if (!den_.is_monomial()) {
      using detail::ZPoly;
      ZPoly a(num_.coeffs_.begin(), num_.coeffs_.end());
      ZPoly b(den_.coeffs_.begin(), den_.coeffs_.end());
      ZPoly g = detail::zgcd_primitive(a, b);
      if (g.size() > 1) {
        LaurentHalf gp;
        gp.coeffs_ = g;
        gp.low_ = 0;
        num_ = exact_div(num_, gp);
        den_ = exact_div(den_, gp);
        num_ = num_.shifted(-den_.low());
        den_ = den_.shifted(-den_.low());
      }
    }
    Integer cn = num_.content();
    Integer cd = den_.content();
    Integer g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.leading() < 0)
      g = -g;
    if (g != 1) {
      num_ = num_.divided_exact(g);
      den_ = den_.divided_exact(g);
    }
  }

  LaurentHalf num_;
  LaurentHalf den_;
};

inline std::ostream &operator<<(std::ostream &os, const RatFunc &r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------
// Quantum integers and binomials.

/// [r] = (v^r - v^{-r}) / (v - v^{-1}), extended to negative r by [-r] = -[r].
inline LaurentHalf qint(int r) {
  if (r == 0)
    return {};
  if (r < 0)
    return -qint(-r);
  LaurentHalf p;
  for (int e = r - 1; e >= -(r - 1); e -= 2)
    p += LaurentHalf::vpow(e);
  return p;
}

inline LaurentHalf qfactorial(int r) {
  LaurentHalf p(1);
  for (int j = 2; j <= r; ++j)
    p *= qint(j);
  return p;
}

/// [m][m-1]...[m-r+1]/[r]! for any integer m and r >= 0.
inline LaurentHalf qbinom(int m, int r) {
  if (r < 0)
    throw std::domain_error("qbinom: negative lower index");
  LaurentHalf p(1);
  for (int j = 1; j <= r; ++j) {
    try {
      p = exact_div(p * qint(m - j + 1), qint(j));
    } catch (const NonDivisible &e) {
      throw InternalError(std::string("qbinom: non-exact intermediate quotient: ") + e.what());
    }
  }
  return p;
}

struct BinomialIdentityReport {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
};

/// Exhaustively checks the reflection identity
///   qbinom(x, n) = (-1)^n qbinom(n - x - 1, n)
/// and the Vandermonde-type identity
///   sum_k v^{xk - y(n-k)} qbinom(x, n-k) qbinom(y, k) = qbinom(x + y, n)
/// for |x| <= x_bound, |y| <= y_bound, 0 <= n <= n_bound.
inline BinomialIdentityReport verify_binomial_identities(int x_bound, int y_bound, int n_bound) {
  if (x_bound < 0 || y_bound < 0 || n_bound < 0)
    throw std::invalid_argument("verify_binomial_identities: bounds must be nonnegative");
  BinomialIdentityReport rep;
  for (int x = -x_bound; x <= x_bound; ++x)
    for (int n = 0; n <= n_bound; ++n) {
      ++rep.checked;
      LaurentHalf rhs = qbinom(n - x - 1, n);
      if (n % 2 != 0)
        rhs = -rhs;
      if (qbinom(x, n) != rhs) {
        rep.pass = false;
        rep.counterexamples.push_back("reflection x=" + std::to_string(x) + " n=" +
                                      std::to_string(n));
      }
    }
  for (int x = -x_bound; x <= x_bound; ++x)
    for (int y = -y_bound; y <= y_bound; ++y)
      for (int n = 0; n <= n_bound; ++n) {
        ++rep.checked;
        LaurentHalf lhs;
        for (int k = 0; k <= n; ++k)
          lhs += LaurentHalf::vpow(x * k - y * (n - k)) * qbinom(x, n - k) * qbinom(y, k);
        if (lhs != qbinom(x + y, n)) {
          rep.pass = false;
          rep.counterexamples.push_back("vandermonde x=" + std::to_string(x) +
                                        " y=" + std::to_string(y) + " n=" + std::to_string(n));
        }
      }
  return rep;
}

} // namespace qg
