#pragma once

#include <deque>
#include <map>
#include <numeric>
#include <vector>

#include "anfield/fusion.hpp"
#include "anfield/params.hpp"

namespace anfield {

using CycloMatrix = std::vector<std::vector<CyclotomicNumber>>;

// Braiding-dependent data of C^br_{k,ell,+/-}: R coefficients, S and T
// matrices, twists, modularity rank, conductor.
class ModularData {
 public:
  explicit ModularData(BraidingParams bp) : bp_(std::move(bp)) {}

  const BraidingParams& params() const { return bp_; }

  // s^e for arbitrary integer e, via exponent arithmetic on the root of unity
  CyclotomicNumber s_power(long e) const {
    long big = 4 * (bp_.k + 2);
    return root_of_unity(big, (bp_.ell + bp_.k + 2) * e);
  }

  // [n] in the s-convention evaluated by exponent arithmetic (valid for the
  // large indices (a+1)(b+1) in the S matrix)
  CyclotomicNumber bracket(long n) const {
    CyclotomicNumber num = s_power(2 * n) - s_power(-2 * n);
    CyclotomicNumber den = s_power(2) - s_power(-2);
    return num * den.inverse();
  }

  CyclotomicNumber qdim(long n) const {
    CyclotomicNumber v = bracket(n + 1);
    bool neg = (n % 2 == 1) && bp_.pivotal == PivotalSign::plus;
    return neg ? -v : v;
  }

  CyclotomicNumber global_dim() const {
    CyclotomicNumber num(Rational(2 * (bp_.k + 2)), bp_.order());
    CyclotomicNumber two(Rational(2), bp_.order());
    return num * (two - s_power(4) - s_power(-4)).inverse();
  }

  // braiding eigenvalue on the channel c of a ox b
  CyclotomicNumber r_coeff(long a, long b, long c) const {
    if (!admissible(bp_.k, a, b, c)) throw DomainError("r_coeff: inadmissible triple");
    long num = c * (c + 2) - a * (a + 2) - b * (b + 2);
    if (num % 2 != 0 || (a + b + c) % 2 != 0)
      throw AnfieldError("r_coeff: half-integer exponent");  // cannot happen when admissible
    CyclotomicNumber v = s_power(num / 2);
    return ((a + b + c) / 2) % 2 == 1 ? -v : v;
  }

  CyclotomicNumber twist(long a) const {
    CyclotomicNumber v = s_power(a * (a + 2));
    bool neg = (a % 2 == 1) && bp_.pivotal == PivotalSign::plus;
    return neg ? -v : v;
  }

  CycloMatrix s_matrix() const {
    long k = bp_.k;
    CycloMatrix m(k + 1, std::vector<CyclotomicNumber>(k + 1));
    for (long a = 0; a <= k; ++a)
      for (long b = 0; b <= a; ++b) {
        CyclotomicNumber v = bracket((a + 1) * (b + 1));
        if (bp_.pivotal == PivotalSign::plus && (a + b) % 2 == 1) v = -v;
        m[a][b] = v;
        m[b][a] = m[a][b];
      }
    return m;
  }

  CycloMatrix t_matrix() const {
    long k = bp_.k;
    CycloMatrix m(k + 1, std::vector<CyclotomicNumber>(k + 1, CyclotomicNumber::zero(bp_.order())));
    for (long a = 0; a <= k; ++a) m[a][a] = twist(a);
    return m;
  }

  // exact rank by Gaussian elimination over the cyclotomic field
  long modularity_rank() const {
    CycloMatrix m = s_matrix();
    long n = (long)m.size();
    long rank = 0;
    for (long col = 0; col < n && rank < n; ++col) {
      long piv = -1;
      for (long r = rank; r < n; ++r)
        if (!m[r][col].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[piv], m[rank]);
      CyclotomicNumber inv = m[rank][col].inverse();
      for (long j = col; j < n; ++j) m[rank][j] = m[rank][j] * inv;
      for (long r = 0; r < n; ++r) {
        if (r == rank || m[r][col].is_zero()) continue;
        CyclotomicNumber f = m[r][col];
        for (long j = col; j < n; ++j) m[r][j] = m[r][j] - f * m[rank][j];
      }
      ++rank;
    }
    return rank;
  }

  bool is_modular() const { return modularity_rank() == bp_.k + 1; }

  // order of the T matrix via the multiplicative orders of its diagonal
  long conductor() const {
    long big = 4 * (bp_.k + 2);
    long g = big;  // gcd of all exponents with big; conductor = big / g
    for (long a = 0; a <= bp_.k; ++a) {
      long e = mod_pos(a * (a + 2) * (bp_.ell + bp_.k + 2), big);
      if ((a % 2 == 1) && bp_.pivotal == PivotalSign::plus)
        e = mod_pos(e + big / 2, big);  // the (-1)^a sign is zeta^{big/2}
      g = std::gcd(g, e);
    }
    return big / g;
  }

  // Verlinde: N_ab^c = (1/D^2) sum_x S_ax S_bx conj(S_cx) / S_0x must equal
  // the fusion multiplicities.  `s_override` supports fault injection.
  CheckReport verlinde_check(const CycloMatrix* s_override = nullptr) const {
    CheckReport rep;
    long k = bp_.k;
    if (!is_modular()) {
      rep.fail("verlinde_check requires a modular category");
      return rep;
    }
    CycloMatrix s = s_override ? *s_override : s_matrix();
    CyclotomicNumber d2 = global_dim();
    std::vector<CyclotomicNumber> inv0(k + 1);
    for (long x = 0; x <= k; ++x) {
      if (s[0][x].is_zero()) {
        rep.fail("vanishing S_{0x}");
        return rep;
      }
      inv0[x] = s[0][x].inverse();
    }
    CyclotomicNumber d2inv = d2.inverse();
    for (long a = 0; a <= k; ++a)
      for (long b = 0; b <= k; ++b) {
        std::vector<long> channels = fuse(k, a, b);
        for (long c = 0; c <= k; ++c) {
          CyclotomicNumber acc = CyclotomicNumber::zero(bp_.order());
          for (long x = 0; x <= k; ++x)
            acc = acc + s[a][x] * s[b][x] * s[c][x].conjugate() * inv0[x];
          acc = acc * d2inv;
          long mult = std::count(channels.begin(), channels.end(), c) ? 1 : 0;
          ++rep.checked;
          if (!(acc == CyclotomicNumber(Rational(mult), bp_.order()))) {
            std::ostringstream os;
            os << "verlinde fails at k=" << k << " ell=" << bp_.ell << " (a,b,c)=(" << a << ","
               << b << "," << c << ")";
            rep.fail(os.str());
          }
        }
      }
    return rep;
  }

  // the braided category whose s is the Galois image s^j
  BraidingParams galois_conjugate(long j) const {
    long big = 4 * (bp_.k + 2);
    if (std::gcd(mod_pos(j, big), big) != 1)
      throw DomainError("galois_conjugate: j not coprime to 4(k+2)");
    long ell2 = mod_pos(j * (bp_.ell + bp_.k + 2) - (bp_.k + 2), big);
    return BraidingParams::make(bp_.k, ell2, bp_.pivotal);
  }

 private:
  BraidingParams bp_;
};

// all valid ell in Z/4(k+2)Z
inline std::vector<long> valid_ells(long k) {
  std::vector<long> out;
  for (long ell = 0; ell < 4 * (k + 2); ++ell)
    if (std::gcd(ell, k + 2) == 1) out.push_back(ell);
  return out;
}

// partition of valid ell into Galois orbits
inline std::vector<std::vector<long>> galois_orbits(long k) {
  std::vector<long> ells = valid_ells(k);
  long big = 4 * (k + 2);
  std::map<long, long> orbit_of;
  std::vector<std::vector<long>> orbits;
  for (long ell : ells) {
    if (orbit_of.count(ell)) continue;
    std::vector<long> orbit;
    for (long j : units_mod(big)) {
      long ell2 = mod_pos(j * (ell + k + 2) - (k + 2), big);
      if (!orbit_of.count(ell2)) {
        orbit_of[ell2] = (long)orbits.size();
        orbit.push_back(ell2);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace anfield
