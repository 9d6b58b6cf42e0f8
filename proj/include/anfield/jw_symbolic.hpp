#pragma once

#include <vector>

#include "anfield/laurent.hpp"
#include "anfield/tl.hpp"

namespace anfield {

// Dense integer-coefficient polynomial in the formal loop value; the scalar
// ring for denominator-cleared Jones-Wenzl computations, where rational
// normalization overhead would dominate.
struct IntPoly {
  std::vector<BigInt> c;  // c[i] is the coefficient of d^i; trimmed

  IntPoly() = default;
  explicit IntPoly(long v) {
    if (v != 0) c.assign(1, BigInt(v));
  }

  static IntPoly variable() {
    IntPoly p;
    p.c = {BigInt(0), BigInt(1)};
    return p;
  }

  bool is_zero() const { return c.empty(); }
  long degree() const { return (long)c.size() - 1; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly out = a;
    if (out.c.size() < b.c.size()) out.c.resize(b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
    out.trim();
    return out;
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly out = a;
    if (out.c.size() < b.c.size()) out.c.resize(b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
    out.trim();
    return out;
  }

  friend IntPoly operator-(const IntPoly& a) {
    IntPoly out = a;
    for (auto& x : out.c) x = -x;
    return out;
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    if (a.c.empty() || b.c.empty()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (size_t j = 0; j < b.c.size(); ++j) {
        if (b.c[j] == 0) continue;
        out.c[i + j] += a.c[i] * b.c[j];
      }
    }
    out.trim();
    return out;
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  void make_primitive() {
    trim();
    if (c.empty()) return;
    BigInt g = 0;
    for (const auto& x : c) {
      g = boost::multiprecision::gcd(g, x);
      if (g == 1) return;
    }
    for (auto& x : c) x /= g;
  }

  // primitive-PRS gcd, result primitive with positive leading coefficient
  friend IntPoly int_gcd(IntPoly a, IntPoly b) {
    a.make_primitive();
    b.make_primitive();
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    if (a.c.size() < b.c.size()) std::swap(a, b);
    while (!b.is_zero()) {
      IntPoly r = pseudo_mod(a, b);
      r.make_primitive();
      a = std::move(b);
      b = std::move(r);
    }
    return normalize_sign(a);
  }

  // exact quotient (throws if division is inexact)
  friend IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw PoleError("IntPoly: division by zero");
    IntPoly r = a, q;
    if (a.is_zero()) return q;
    if (a.c.size() < b.c.size()) throw AnfieldError("IntPoly: inexact division");
    q.c.assign(a.c.size() - b.c.size() + 1, BigInt(0));
    for (long i = (long)r.c.size() - 1; i >= (long)b.c.size() - 1; --i) {
      if (r.c[i] == 0) continue;
      BigInt f = r.c[i] / b.c.back();
      if (f * b.c.back() != r.c[i]) throw AnfieldError("IntPoly: inexact division");
      size_t off = i - (b.c.size() - 1);
      q.c[off] = f;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[off + j] -= f * b.c[j];
    }
    r.trim();
    if (!r.is_zero()) throw AnfieldError("IntPoly: inexact division");
    q.trim();
    return q;
  }

  LaurentPoly to_laurent(const std::string& var = "d") const {
    LaurentPoly out(var);
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) out.set_coeff((long)i, Rational(c[i]));
    return out;
  }

 private:
  static IntPoly normalize_sign(IntPoly p) {
    if (!p.c.empty() && p.c.back() < 0)
      for (auto& x : p.c) x = -x;
    return p;
  }

  static IntPoly pseudo_mod(IntPoly r, const IntPoly& d) {
    while (!r.c.empty() && r.c.size() >= d.c.size()) {
      if (r.c.back() == 0) {
        r.c.pop_back();
        continue;
      }
      BigInt lead = r.c.back();
      size_t off = r.c.size() - d.c.size();
      for (auto& x : r.c) x *= d.c.back();
      for (size_t j = 0; j < d.c.size(); ++j) r.c[off + j] -= lead * d.c[j];
      r.trim();
    }
    return r;
  }
};

template <>
struct ScalarOps<IntPoly> {
  static IntPoly zero(const IntPoly&) { return IntPoly(); }
  static IntPoly one(const IntPoly&) { return IntPoly(1); }
  static bool is_zero(const IntPoly& x) { return x.is_zero(); }
};

// Jones-Wenzl projector with denominators cleared: value = num / den with
// integer-polynomial coefficients in the formal loop value.
struct ClearedJW {
  TLMorphism<IntPoly> num;
  IntPoly den;
};

inline ClearedJW cleared_jones_wenzl(int n) {
  IntPoly delta = IntPoly::variable();
  IntPoly one(1);
  std::vector<IntPoly> br{IntPoly(), one};  // Chebyshev brackets
  auto bracket = [&](int t) -> const IntPoly& {
    while ((int)br.size() <= t) br.push_back(delta * br[br.size() - 1] - br[br.size() - 2]);
    return br[t];
  };
  if (n == 0) return {TLMorphism<IntPoly>::identity(0, delta), one};
  ClearedJW f{TLMorphism<IntPoly>::identity(1, delta), one};
  for (int m = 1; m < n; ++m) {
    TLMorphism<IntPoly> ext = tensor(f.num, TLMorphism<IntPoly>::identity(1, delta));
    auto em = TLMorphism<IntPoly>::e_generator(m + 1, m, delta);
    TLMorphism<IntPoly> corr = compose(compose(ext, em), ext);
    // f_{m+1} = ext/den - [m]/[m+1] * corr/den^2, over den^2 [m+1]
    TLMorphism<IntPoly> num = ext * (f.den * bracket(m + 1)) - corr * bracket(m);
    IntPoly den = f.den * f.den * bracket(m + 1);
    IntPoly g = den;
    for (const auto& [d, c] : num.terms()) {
      if (g.degree() == 0) break;
      g = int_gcd(g, c);
    }
    if (g.degree() > 0 || (!g.is_zero() && g.c[0] != 1)) {
      TLMorphism<IntPoly> reduced(num.bottom_points(), num.top_points(), delta);
      for (const auto& [d, c] : num.terms()) reduced.add_term(d, exact_divide(c, g));
      num = reduced;
      den = exact_divide(den, g);
    }
    f = ClearedJW{num, den};
  }
  return f;
}

// Exact symbolic check of f o f == f, computed by expanding the right factor
// termwise over its diagrams: f o f = sum_D c_D (f o D).
inline bool jw_idempotent(const ClearedJW& f) {
  int n = f.num.bottom_points();
  IntPoly delta = IntPoly::variable();
  TLMorphism<IntPoly> acc(n, n, delta);
  for (const auto& [d, c] : f.num.terms()) {
    TLMorphism<IntPoly> fd = compose(f.num, TLMorphism<IntPoly>::from_diagram(d, delta));
    if (fd.is_zero()) continue;
    for (const auto& [dd, cc] : fd.terms()) acc.add_term(dd, cc * c);
  }
  // acc/den^2 must equal num/den, i.e. acc == num * den
  TLMorphism<IntPoly> target(n, n, delta);
  for (const auto& [d, c] : f.num.terms()) target.add_term(d, c * f.den);
  return acc == target;
}

}  // namespace anfield
