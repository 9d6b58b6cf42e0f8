#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "anfield/rational.hpp"

namespace anfield {

// Laurent polynomial over Q in one formal variable.  Stored densely as a
// coefficient block starting at min_exp; leading/trailing zeros are trimmed
// so the representation is canonical and equality is coefficient equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::string var) : var_(std::move(var)) {}

  static LaurentPoly constant(const Rational& r, std::string var = "x") {
    LaurentPoly p(std::move(var));
    if (r != 0) {
      p.min_exp_ = 0;
      p.c_ = {r};
    }
    return p;
  }

  static LaurentPoly monomial(const Rational& r, long exp, std::string var = "x") {
    LaurentPoly p(std::move(var));
    if (r != 0) {
      p.min_exp_ = exp;
      p.c_ = {r};
    }
    return p;
  }

  static LaurentPoly variable(std::string var = "x") {
    return monomial(1, 1, std::move(var));
  }

  const std::string& var() const { return var_; }
  bool is_zero() const { return c_.empty(); }
  long low() const { return min_exp_; }                       // undefined on zero
  long degree() const { return min_exp_ + (long)c_.size() - 1; }

  const Rational& coeff(long exp) const {
    static const Rational zero{0};
    if (c_.empty() || exp < min_exp_ || exp > degree()) return zero;
    return c_[exp - min_exp_];
  }

  std::map<long, Rational> coeff_map() const {
    std::map<long, Rational> m;
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) m[min_exp_ + (long)i] = c_[i];
    return m;
  }

  void set_coeff(long exp, const Rational& r) {
    if (c_.empty()) {
      if (r == 0) return;
      min_exp_ = exp;
      c_ = {r};
      return;
    }
    if (exp < min_exp_) {
      c_.insert(c_.begin(), min_exp_ - exp, Rational(0));
      min_exp_ = exp;
    } else if (exp > degree()) {
      c_.resize(exp - min_exp_ + 1, Rational(0));
    }
    c_[exp - min_exp_] = r;
    trim();
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.min_exp_, b.min_exp_);
    long hi = std::max(a.degree(), b.degree());
    LaurentPoly out(a.var_);
    out.min_exp_ = lo;
    out.c_.assign(hi - lo + 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out.c_[a.min_exp_ - lo + i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out.c_[b.min_exp_ - lo + i] += b.c_[i];
    out.trim();
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out = a;
    for (auto& x : out.c_) x = -x;
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly(a.var_);
    LaurentPoly out(a.var_);
    out.min_exp_ = a.min_exp_ + b.min_exp_;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        out.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    out.trim();
    return out;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const Rational& r) {
    if (r == 0) return LaurentPoly(a.var_);
    LaurentPoly out = a;
    for (auto& x : out.c_) x *= r;
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_exp_ == b.min_exp_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Substitute var -> var^e (e != 0; negative e reverses the polynomial).
  LaurentPoly substitute_power(long e) const {
    LaurentPoly out(var_);
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) out.set_coeff((min_exp_ + (long)i) * e, c_[i]);
    return out;
  }

  Rational eval_rational(const Rational& x) const {
    if (c_.empty()) return 0;
    if (x == 0) {
      if (min_exp_ < 0) throw PoleError("LaurentPoly: evaluating negative power at 0");
      return coeff(0);
    }
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    Rational shift = 1;
    if (min_exp_ >= 0) {
      for (long i = 0; i < min_exp_; ++i) shift *= x;
    } else {
      for (long i = 0; i < -min_exp_; ++i) shift /= x;
    }
    return acc * shift;
  }

  // Quotient when b divides a exactly in Q[x, x^{-1}]; nullopt otherwise.
  friend std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw PoleError("LaurentPoly: division by zero polynomial");
    if (a.is_zero()) return LaurentPoly(a.var_);
    // shift both to ordinary polynomials
    std::vector<Rational> r = a.c_;
    const std::vector<Rational>& d = b.c_;
    if (r.size() < d.size()) return std::nullopt;
    std::vector<Rational> q(r.size() - d.size() + 1, Rational(0));
    const Rational& lead = d.back();
    for (long i = (long)r.size() - 1; i >= (long)d.size() - 1; --i) {
      if (r[i] == 0) continue;
      Rational f = r[i] / lead;
      q[i - (d.size() - 1)] = f;
      for (size_t j = 0; j < d.size(); ++j) r[i - (d.size() - 1) + j] -= f * d[j];
    }
    for (const auto& x : r)
      if (x != 0) return std::nullopt;
    LaurentPoly out(a.var_);
    out.min_exp_ = a.min_exp_ - b.min_exp_;
    out.c_ = std::move(q);
    out.trim();
    return out;
  }

  // Monic gcd of the ordinary-polynomial parts (monomial factors dropped,
  // so gcd(x^a p, x^b q) is reported with lowest exponent 0).  Computed over
  // Z with a primitive pseudo-remainder sequence to avoid the coefficient
  // blowup of rational Euclid.
  friend LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return normalized_monic(b.c_, a.var_);
    if (b.is_zero()) return normalized_monic(a.c_, a.var_);
    std::vector<BigInt> u = to_int_primitive(a.c_);
    std::vector<BigInt> v = to_int_primitive(b.c_);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
      u = pseudo_mod(u, v);
      make_primitive(u);
      std::swap(u, v);
    }
    std::vector<Rational> g(u.size());
    for (size_t i = 0; i < u.size(); ++i) g[i] = Rational(u[i]);
    return normalized_monic(g, a.var_);
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = (long)c_.size() - 1; i >= 0; --i) {
      if (c_[i] == 0) continue;
      long e = min_exp_ + i;
      Rational coef = c_[i];
      if (!first) os << (coef > 0 ? " + " : " - ");
      else if (coef < 0) os << "-";
      first = false;
      Rational mag = coef > 0 ? coef : Rational(-coef);
      if (mag != 1 || e == 0) os << mag.str();
      if (e != 0) {
        if (mag != 1) os << "*";
        os << var_;
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    size_t lead = c_.size();
    while (lead > 0 && c_[lead - 1] == 0) --lead;
    c_.resize(lead);
    size_t skip = 0;
    while (skip < c_.size() && c_[skip] == 0) ++skip;
    if (skip > 0) {
      c_.erase(c_.begin(), c_.begin() + skip);
      min_exp_ += (long)skip;
    }
    if (c_.empty()) min_exp_ = 0;
  }

  static std::vector<BigInt> to_int_primitive(const std::vector<Rational>& c) {
    BigInt l = 1;
    for (const auto& x : c)
      if (x != 0) l = boost::multiprecision::lcm(l, rat_den(x));
    std::vector<BigInt> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) out[i] = rat_num(c[i]) * (l / rat_den(c[i]));
    make_primitive(out);
    return out;
  }

  static void make_primitive(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) return;
    BigInt g = 0;
    for (const auto& x : c) {
      g = boost::multiprecision::gcd(g, x);
      if (g == 1) break;
    }
    if (g > 1)
      for (auto& x : c) x /= g;
    if (c.back() < 0)
      for (auto& x : c) x = -x;
  }

  // remainder of lc(d)^(deg r - deg d + 1) * r under d, over Z
  static std::vector<BigInt> pseudo_mod(std::vector<BigInt> r, const std::vector<BigInt>& d) {
    while (!r.empty() && r.size() >= d.size()) {
      if (r.back() == 0) {
        r.pop_back();
        continue;
      }
      BigInt lead = r.back();
      size_t off = r.size() - d.size();
      for (auto& x : r) x *= d.back();
      for (size_t j = 0; j < d.size(); ++j) r[off + j] -= lead * d[j];
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return r;
  }

  static std::vector<Rational> poly_mod(std::vector<Rational> r, const std::vector<Rational>& d) {
    while (r.size() >= d.size()) {
      if (r.back() == 0) {
        r.pop_back();
        continue;
      }
      Rational f = r.back() / d.back();
      size_t off = r.size() - d.size();
      for (size_t j = 0; j < d.size(); ++j) r[off + j] -= f * d[j];
      r.pop_back();
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static LaurentPoly normalized_monic(std::vector<Rational> c, const std::string& var) {
    LaurentPoly out(var);
    while (!c.empty() && c.back() == 0) c.pop_back();
    size_t skip = 0;
    while (skip < c.size() && c[skip] == 0) ++skip;
    c.erase(c.begin(), c.begin() + skip);
    if (c.empty()) return out;
    Rational lead = c.back();
    for (auto& x : c) x /= lead;
    out.min_exp_ = 0;
    out.c_ = std::move(c);
    return out;
  }

  std::string var_ = "x";
  long min_exp_ = 0;
  std::vector<Rational> c_;
};

}  // namespace anfield
