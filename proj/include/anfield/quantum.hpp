#pragma once

#include <map>
#include <vector>

#include "anfield/cyclotomic.hpp"
#include "anfield/laurent.hpp"
#include "anfield/rational.hpp"

namespace anfield {

// [n] as a Laurent polynomial in v, where v specializes to s^2 for the
// s-convention [n] = (s^{2n} - s^{-2n})/(s^2 - s^{-2}), and to q for the
// q-convention bracket with [2] = q + q^{-1}.
inline LaurentPoly bracket_poly(long n) {
  if (n < 0) return -bracket_poly(-n);
  LaurentPoly p("v");
  for (long j = 0; j < n; ++j) p.set_coeff(n - 1 - 2 * j, 1);
  return p;
}

// [n]_q as a polynomial in the loop value d = q + q^{-1} (Chebyshev-type
// recursion [n+1] = d[n] - [n-1]).
inline LaurentPoly bracket_delta_poly(long n) {
  if (n < 0) throw DomainError("bracket_delta_poly: n must be nonnegative");
  static std::vector<LaurentPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    cache.push_back(LaurentPoly("d"));                 // [0] = 0
    cache.push_back(LaurentPoly::constant(1, "d"));    // [1] = 1
  }
  while ((long)cache.size() <= n) {
    long m = (long)cache.size();
    cache.push_back(LaurentPoly::variable("d") * cache[m - 1] - cache[m - 2]);
  }
  return cache[n];
}

// sign of [n]_s! relative to [n]_q!: [m]_s = (-1)^{m+1} [m]_q
inline int s_factorial_sign(long n) {
  return (n * (n + 3) / 2) % 2 == 0 ? 1 : -1;
}

inline int s_bracket_sign(long n) { return n % 2 == 0 ? -1 : 1; }  // (-1)^{n+1}

// [n] in the s-convention at an exact root of unity s.
inline CyclotomicNumber quantum_integer(long n, const CyclotomicNumber& s) {
  CyclotomicNumber v = s * s;
  CyclotomicNumber v2 = v * v;
  if (v2 == CyclotomicNumber::one(s.order()))
    throw PoleError("quantum_integer: degenerate s with s^4 = 1");
  return eval_at(bracket_poly(n), v);
}

// [n] in the s-convention computed from delta = -s^2 - s^{-2} alone.
inline CyclotomicNumber quantum_integer_from_delta(long n, const CyclotomicNumber& delta) {
  bool neg = n < 0;
  long m = neg ? -n : n;
  CyclotomicNumber val = eval_at(bracket_delta_poly(m), delta);
  if (s_bracket_sign(m) < 0) val = -val;
  if (neg) val = -val;
  return val;
}

namespace detail {

// Multiset of bracket factors of a factorial ratio prod [n_i]! / prod [d_j]!
// after cancelling identical brackets.
inline std::map<long, long> factorial_bracket_multiset(const std::vector<long>& nums,
                                                       const std::vector<long>& dens) {
  std::map<long, long> mult;
  for (long n : nums) {
    if (n < 0) throw DomainError("quantum_factorial_ratio: negative factorial index");
    for (long t = 2; t <= n; ++t) ++mult[t];  // [1] = 1 contributes nothing
  }
  for (long d : dens) {
    if (d < 0) throw DomainError("quantum_factorial_ratio: negative factorial index");
    for (long t = 2; t <= d; ++t) --mult[t];
  }
  return mult;
}

}  // namespace detail

// (prod [n_i]!) / (prod [d_j]!) evaluated at s, with symbolic cancellation:
// leftover brackets are multiplied out as Laurent polynomials in v = s^2 and
// the fraction is reduced by a polynomial gcd before specializing, so zeros
// at roots of unity cancel whenever the ratio is finite.
inline CyclotomicNumber quantum_factorial_ratio(const std::vector<long>& nums,
                                                const std::vector<long>& dens,
                                                const CyclotomicNumber& s) {
  auto mult = detail::factorial_bracket_multiset(nums, dens);
  LaurentPoly num = LaurentPoly::constant(1, "v");
  LaurentPoly den = LaurentPoly::constant(1, "v");
  for (const auto& [t, e] : mult) {
    LaurentPoly b = bracket_poly(t);
    for (long r = 0; r < (e > 0 ? e : -e); ++r) {
      if (e > 0) num = num * b;
      else den = den * b;
    }
  }
  LaurentPoly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = *try_divide(num, g);
    den = *try_divide(den, g);
  }
  CyclotomicNumber v = s * s;
  CyclotomicNumber den_val = eval_at(den, v);
  if (den_val.is_zero())
    throw PoleError("quantum_factorial_ratio: genuine pole at the given s");
  return eval_at(num, v) * den_val.inverse();
}

// Same ratio in the s-convention, computed from delta alone via the
// q-convention magnitude and an explicit sign transport.
inline CyclotomicNumber quantum_factorial_ratio_from_delta(const std::vector<long>& nums,
                                                           const std::vector<long>& dens,
                                                           const CyclotomicNumber& delta) {
  auto mult = detail::factorial_bracket_multiset(nums, dens);
  LaurentPoly num = LaurentPoly::constant(1, "d");
  LaurentPoly den = LaurentPoly::constant(1, "d");
  for (const auto& [t, e] : mult) {
    LaurentPoly b = bracket_delta_poly(t);
    for (long r = 0; r < (e > 0 ? e : -e); ++r) {
      if (e > 0) num = num * b;
      else den = den * b;
    }
  }
  LaurentPoly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = *try_divide(num, g);
    den = *try_divide(den, g);
  }
  CyclotomicNumber den_val = eval_at(den, delta);
  if (den_val.is_zero())
    throw PoleError("quantum_factorial_ratio: genuine pole at the given delta");
  CyclotomicNumber val = eval_at(num, delta) * den_val.inverse();
  int sign = 1;
  for (long n : nums) sign *= s_factorial_sign(n);
  for (long d : dens) sign *= s_factorial_sign(d);
  return sign < 0 ? -val : val;
}

}  // namespace anfield
