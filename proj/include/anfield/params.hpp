#pragma once

#include <numeric>
#include <string>

#include "anfield/cyclotomic.hpp"
#include "anfield/quantum.hpp"

namespace anfield {

enum class PivotalSign { plus, minus };

inline std::string to_string(PivotalSign s) { return s == PivotalSign::plus ? "+" : "-"; }

// Monoidal category parameters (k, m) with gcd(m, k+2) = 1; q is a primitive
// 2(k+2)-th root of unity and delta = q + q^{-1} is the complete invariant.
struct CategoryParams {
  long k = 1;
  long m = 1;
  PivotalSign pivotal = PivotalSign::plus;
  CyclotomicNumber q;
  CyclotomicNumber delta;

  static CategoryParams make(long k, long m, PivotalSign pivotal = PivotalSign::plus) {
    if (k < 1) throw DomainError("CategoryParams: k must be >= 1");
    m = mod_pos(m, k + 2);
    if (std::gcd(m, k + 2) != 1)
      throw DomainError("CategoryParams: gcd(m, k+2) must be 1");
    CategoryParams p;
    p.k = k;
    p.m = m;
    p.pivotal = pivotal;
    long n = 2 * (k + 2);
    p.q = root_of_unity(n, m);
    p.delta = p.q + p.q.inverse();
    return p;
  }

  long order() const { return 2 * (k + 2); }
};

// Braided category parameters (k, ell) with gcd(ell, k+2) = 1; s is the
// complete invariant exp(2 pi i (ell+k+2)/(4(k+2))) and delta = -s^2 - s^{-2}.
// The underlying monoidal parameter m is derived from delta exactly, since
// the naive residue ell mod (k+2) lands on the wrong sign branch for half
// the values of ell.
struct BraidingParams {
  long k = 1;
  long ell = 1;
  PivotalSign pivotal = PivotalSign::plus;
  CyclotomicNumber s;
  CyclotomicNumber delta;
  long m = 1;          // derived: the unique unit with q_m + q_m^{-1} == delta
  int s2_sign = -1;    // s^2 == s2_sign * q_naive, where q_naive uses ell mod (k+2)

  static BraidingParams make(long k, long ell, PivotalSign pivotal = PivotalSign::plus) {
    if (k < 1) throw DomainError("BraidingParams: k must be >= 1");
    long big = 4 * (k + 2);
    ell = mod_pos(ell, big);
    if (std::gcd(ell, k + 2) != 1)
      throw DomainError("BraidingParams: gcd(ell, k+2) must be 1");
    BraidingParams p;
    p.k = k;
    p.ell = ell;
    p.pivotal = pivotal;
    p.s = root_of_unity(big, ell + k + 2);
    CyclotomicNumber s2 = p.s * p.s;
    p.delta = -(s2 + s2.inverse());
    bool found = false;
    for (long mm : units_mod(k + 2)) {
      if (mm == 0) continue;
      CyclotomicNumber q = root_of_unity(2 * (k + 2), mm);
      CyclotomicNumber dd = q + q.inverse();
      if (dd.embedded(big) == p.delta) {
        p.m = mm;
        found = true;
        break;
      }
    }
    if (!found) throw AnfieldError("BraidingParams: no monoidal parameter matches delta");
    CyclotomicNumber q_naive = root_of_unity(2 * (k + 2), mod_pos(ell, k + 2)).embedded(big);
    if (s2 == q_naive) p.s2_sign = 1;
    else if (s2 == -q_naive) p.s2_sign = -1;
    else throw AnfieldError("BraidingParams: s^2 is not +-q_naive");
    return p;
  }

  long order() const { return 4 * (k + 2); }
  long naive_m() const { return mod_pos(ell, k + 2); }

  CategoryParams monoidal() const { return CategoryParams::make(k, m, pivotal); }
};

inline CyclotomicNumber s_param(long k, long ell) { return BraidingParams::make(k, ell).s; }

}  // namespace anfield
