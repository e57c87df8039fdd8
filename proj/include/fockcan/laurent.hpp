#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace fockcan {

using Int = boost::multiprecision::cpp_int;

// Library error carrying a stable machine readable code next to the
// human readable detail. The code ends up in CLI error objects.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// Laurent polynomial in q with arbitrary precision integer coefficients.
// Stored sparsely as exponent -> coefficient with no zero entries, so
// equality is plain map equality.
class Laurent {
public:
  Laurent() = default;
  Laurent(long v) {
    if (v != 0) t_[0] = v;
  }
  Laurent(const Int& v) {
    if (v != 0) t_[0] = v;
  }

  static Laurent q(int e = 1) { return term(1, e); }

  static Laurent term(const Int& c, int e) {
    Laurent r;
    if (c != 0) r.t_[e] = c;
    return r;
  }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == 1; }

  const std::map<int, Int>& terms() const { return t_; }

  Int coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Int(0) : it->second;
  }

  int min_exp() const {
    if (t_.empty()) throw Error("Domain", "min_exp of zero polynomial");
    return t_.begin()->first;
  }
  int max_exp() const {
    if (t_.empty()) throw Error("Domain", "max_exp of zero polynomial");
    return t_.rbegin()->first;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  Laurent operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
  }
  Laurent operator-(const Laurent& o) const {
    Laurent r = *this;
    r -= o;
    return r;
  }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
  }
  Laurent operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : t_)
      for (const auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }

  bool operator==(const Laurent& o) const { return t_ == o.t_; }
  bool operator!=(const Laurent& o) const { return t_ != o.t_; }

  // The involution q -> q^{-1}.
  Laurent bar() const {
    Laurent r;
    for (const auto& [e, c] : t_) r.t_[-e] = c;
    return r;
  }

  // Substitution q -> -q^{-1}, used for sign alternation checks.
  Laurent subst_minus_inverse() const {
    Laurent r;
    for (const auto& [e, c] : t_) r.t_[-e] = (e % 2 == 0) ? c : -c;
    return r;
  }

  Laurent pow(unsigned k) const {
    Laurent r(1);
    Laurent b = *this;
    while (k) {
      if (k & 1u) r *= b;
      b *= b;
      k >>= 1u;
    }
    return r;
  }

  Int eval_one() const {
    Int s = 0;
    for (const auto& [e, c] : t_) {
      (void)e;
      s += c;
    }
    return s;
  }

  // Exact division; throws when the divisor does not divide exactly.
  Laurent div_exact(const Laurent& d) const {
    if (d.is_zero()) throw Error("Division", "division by zero");
    if (is_zero()) return Laurent();
    Laurent rem = *this;
    Laurent quo;
    const int de = d.max_exp();
    // An exact quotient cannot reach below this exponent; descending past it
    // means the division only closes as an infinite Laurent series.
    const int lo = min_exp() - d.min_exp();
    const Int& dc = d.t_.rbegin()->second;
    while (!rem.is_zero()) {
      const int re = rem.max_exp();
      if (re - de < lo) throw Error("Division", "inexact division");
      const Int rc = rem.t_.rbegin()->second;
      if (rc % dc != 0) throw Error("Division", "inexact coefficient division");
      Laurent t = term(rc / dc, re - de);
      quo += t;
      rem -= t * d;
      if (!rem.is_zero() && rem.max_exp() >= re)
        throw Error("Division", "division does not terminate");
    }
    return quo;
  }

  bool all_exponents_at_least(int lo) const {
    return t_.empty() || t_.begin()->first >= lo;
  }
  bool all_exponents_at_most(int hi) const {
    return t_.empty() || t_.rbegin()->first <= hi;
  }
  bool coefficients_nonnegative() const {
    for (const auto& [e, c] : t_) {
      (void)e;
      if (c < 0) return false;
    }
    return true;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      Int c = it->second;
      int e = it->first;
      if (!first) {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      } else if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
      if (e == 0) {
        os << c;
      } else {
        if (c != 1) os << c << "*";
        os << "q";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

  // [k] = (q^k - q^{-k})/(q - q^{-1}).
  static Laurent quantum_int(long k) {
    if (k == 0) return Laurent();
    if (k < 0) return -quantum_int(-k);
    Laurent r;
    for (long i = 0; i < k; ++i) r += q(static_cast<int>(k - 1 - 2 * i));
    return r;
  }

  static Laurent quantum_factorial(long k) {
    if (k < 0) throw Error("Domain", "factorial of negative integer");
    Laurent r(1);
    for (long i = 2; i <= k; ++i) r *= quantum_int(i);
    return r;
  }

private:
  void add_term(int e, const Int& c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  std::map<int, Int> t_;
};

}  // namespace fockcan
