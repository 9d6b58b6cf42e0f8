#pragma once

#include <array>
#include <deque>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "anfield/params.hpp"
#include "anfield/quantum.hpp"

namespace anfield {

// X_i ox X_j decomposed into simples: |i-j|, |i-j|+2, ..., min(i+j, 2k-i-j).
inline std::vector<long> fuse(long k, long i, long j) {
  if (i < 0 || i > k || j < 0 || j > k) throw DomainError("fuse: index out of range");
  std::vector<long> out;
  long lo = i > j ? i - j : j - i;
  long hi = std::min(i + j, 2 * k - i - j);
  for (long c = lo; c <= hi; c += 2) out.push_back(c);
  return out;
}

// parity + triangle + level cutoff a+b+c <= 2k, with labels in 0..k
inline bool admissible(long k, long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0 || a > k || b > k || c > k) return false;
  if ((a + b + c) % 2 != 0) return false;
  if (a + b < c || b + c < a || a + c < b) return false;
  return a + b + c <= 2 * k;
}

struct AdmissibleTriple {
  long a, b, c;
  long u, v, w;  // u = (b+c-a)/2, v = (a+c-b)/2, w = (a+b-c)/2

  static AdmissibleTriple make(long k, long a, long b, long c) {
    if (!admissible(k, a, b, c)) throw DomainError("AdmissibleTriple: not admissible");
    return {a, b, c, (b + c - a) / 2, (a + c - b) / 2, (a + b - c) / 2};
  }
};

struct SixJLabels {
  long a, b, e, c, d, f;
  std::array<long, 4> ai;  // (a+d+e)/2, (b+c+e)/2, (a+b+f)/2, (c+d+f)/2
  std::array<long, 3> bj;  // (b+d+e+f)/2, (a+c+e+f)/2, (a+b+c+d)/2
  long n, N;               // max a_i, min b_j

  static SixJLabels make(long a, long b, long e, long c, long d, long f) {
    SixJLabels L;
    L.a = a; L.b = b; L.e = e; L.c = c; L.d = d; L.f = f;
    L.ai = {(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2};
    L.bj = {(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2};
    L.n = *std::max_element(L.ai.begin(), L.ai.end());
    L.N = *std::min_element(L.bj.begin(), L.bj.end());
    return L;
  }

  std::array<long, 6> key() const { return {a, b, e, c, d, f}; }

  bool vertices_admissible(long k) const {
    return admissible(k, a, d, e) && admissible(k, b, c, e) && admissible(k, a, b, f) &&
           admissible(k, c, d, f);
  }

  std::string str() const {
    std::ostringstream os;
    os << "{" << a << " " << b << " " << e << "; " << c << " " << d << " " << f << "}";
    return os.str();
  }
};

struct CheckReport {
  bool pass = true;
  long checked = 0;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 32) failures.push_back(what);
  }
};

// Fusion-level data of C_{k,m,+/-}: dimensions, theta symbols, 6j symbols.
// Tables are cached per instance; construction is single-writer, reads after
// materialization are safe to share.
class FusionData {
 public:
  explicit FusionData(CategoryParams p) : p_(std::move(p)) {
    brackets_.push_back(CyclotomicNumber::zero(p_.order()));
    brackets_.push_back(CyclotomicNumber::one(p_.order()));
  }

  const CategoryParams& params() const { return p_; }

  // [t] in the s-convention, computed from delta
  const CyclotomicNumber& bracket(long t) {
    while ((long)brackets_.size() <= t) {
      long m = (long)brackets_.size();
      // s-convention recurrence [m] = -delta [m-1] - [m-2]
      brackets_.push_back(-(p_.delta * brackets_[m - 1]) - brackets_[m - 2]);
    }
    return brackets_[t];
  }

  CyclotomicNumber qdim(long n) {
    if (n < 0 || n > p_.k) throw DomainError("qdim: index out of range");
    CyclotomicNumber v = bracket(n + 1);
    if (n % 2 == 1) v = -v;  // (-1)^n [n+1]
    if (p_.pivotal == PivotalSign::minus && n % 2 == 1) v = -v;
    return v;
  }

  // 2(k+2) / (2 - s^4 - s^{-4}) = 2(k+2) / (4 - delta^2)
  CyclotomicNumber global_dim() {
    CyclotomicNumber four(Rational(4), p_.order());
    CyclotomicNumber num(Rational(2 * (p_.k + 2)), p_.order());
    return num * (four - p_.delta * p_.delta).inverse();
  }

  // theta symbol; returns 0 on non-admissible triples (strict mode throws on
  // triples failing only the level cutoff)
  CyclotomicNumber theta(long a, long b, long c, bool strict = false) {
    if (!admissible(p_.k, a, b, c)) {
      if (strict && a >= 0 && b >= 0 && c >= 0 && a <= p_.k && b <= p_.k && c <= p_.k &&
          (a + b + c) % 2 == 0 && a + b >= c && b + c >= a && a + c >= b)
        throw DomainError("theta: triple exceeds the level cutoff");
      return CyclotomicNumber::zero(p_.order());
    }
    auto t = AdmissibleTriple::make(p_.k, a, b, c);
    CyclotomicNumber val = quantum_factorial_ratio_from_delta(
        {t.u + t.v + t.w + 1, t.u, t.v, t.w}, {t.u + t.v, t.v + t.w, t.u + t.w}, p_.delta);
    if ((t.u + t.v + t.w) % 2 == 1) val = -val;
    if (p_.pivotal == PivotalSign::minus && (t.u + t.v + t.w) % 2 == 1) val = -val;
    return val;
  }

  // 6j symbol in the Jones-Wenzl vertex basis.  Depends only on the
  // underlying monoidal category, not the pivotal choice.
  const CyclotomicNumber& six_j(const SixJLabels& L) {
    auto it = sixj_.find(L.key());
    if (it != sixj_.end()) return it->second;
    CyclotomicNumber v = compute_six_j(L);
    return sixj_.emplace(L.key(), std::move(v)).first->second;
  }

  CyclotomicNumber six_j(long a, long b, long e, long c, long d, long f) {
    return six_j(SixJLabels::make(a, b, e, c, d, f));
  }

  // every admissible label tuple at this level
  std::vector<SixJLabels> all_six_j_labels() const {
    std::vector<SixJLabels> out;
    long k = p_.k;
    for (long a = 0; a <= k; ++a)
      for (long b = 0; b <= k; ++b)
        for (long c = 0; c <= k; ++c)
          for (long d = 0; d <= k; ++d)
            for (long e : fuse(k, a, d))
              if (admissible(k, b, c, e))
                for (long f : fuse(k, a, b))
                  if (admissible(k, c, d, f)) out.push_back(SixJLabels::make(a, b, e, c, d, f));
    return out;
  }

  void materialize_six_j_table() {
    for (const auto& L : all_six_j_labels()) six_j(L);
  }

  const std::map<std::array<long, 6>, CyclotomicNumber>& table() const { return sixj_; }

 private:
  CyclotomicNumber compute_six_j(const SixJLabels& L) {
    if (!L.vertices_admissible(p_.k)) return CyclotomicNumber::zero(p_.order());
    // prefactor I! / (E! theta(a,d,e) theta(b,c,e)) with the loop value
    // Delta_e = (-1)^e [e+1] of the middle strand
    std::vector<long> inums;
    for (long bb : L.bj)
      for (long aa : L.ai) inums.push_back(bb - aa);
    CyclotomicNumber pref = quantum_factorial_ratio_from_delta(
        inums, {L.a, L.b, L.c, L.d, L.e, L.f}, p_.delta);
    CyclotomicNumber loop_e = bracket(L.e + 1);
    if (L.e % 2 == 1) loop_e = -loop_e;
    pref = pref * loop_e;
    CyclotomicNumber th = theta_plus(L.a, L.d, L.e) * theta_plus(L.b, L.c, L.e);
    if (th.is_zero()) throw PoleError("six_j: vanishing theta for admissible triple");
    pref = pref * th.inverse();
    CyclotomicNumber sum = CyclotomicNumber::zero(p_.order());
    for (long t = L.n; t <= L.N; ++t) {
      std::vector<long> dens;
      for (long aa : L.ai) dens.push_back(t - aa);
      for (long bb : L.bj) dens.push_back(bb - t);
      CyclotomicNumber term = quantum_factorial_ratio_from_delta({t + 1}, dens, p_.delta);
      if (t % 2 == 1) term = -term;
      sum = sum + term;
    }
    return pref * sum;
  }

  // theta in the + convention regardless of this instance's pivotal flag
  CyclotomicNumber theta_plus(long a, long b, long c) {
    auto t = AdmissibleTriple::make(p_.k, a, b, c);
    CyclotomicNumber val = quantum_factorial_ratio_from_delta(
        {t.u + t.v + t.w + 1, t.u, t.v, t.w}, {t.u + t.v, t.v + t.w, t.u + t.w}, p_.delta);
    if ((t.u + t.v + t.w) % 2 == 1) val = -val;
    return val;
  }

  CategoryParams p_;
  std::deque<CyclotomicNumber> brackets_;
  std::map<std::array<long, 6>, CyclotomicNumber> sixj_;
};

// Biedenharn-Elliott coherence of the 6j table: composing the three-move
// and two-move recoupling paths between the two extreme parenthesizations
// of four strands must give identical coefficients.  `overrides` substitutes
// table entries, which the fault-injection test uses.
inline CheckReport pentagon_check(
    FusionData& fd,
    const std::map<std::array<long, 6>, CyclotomicNumber>* overrides = nullptr) {
  long k = fd.params().k;
  auto S = [&](long a, long b, long e, long c, long d, long f) -> CyclotomicNumber {
    if (overrides) {
      auto it = overrides->find(std::array<long, 6>{a, b, e, c, d, f});
      if (it != overrides->end()) return it->second;
    }
    return fd.six_j(a, b, e, c, d, f);
  };
  CheckReport rep;
  for (long y1 = 0; y1 <= k; ++y1)
    for (long y2 = 0; y2 <= k; ++y2)
      for (long y3 = 0; y3 <= k; ++y3)
        for (long y4 = 0; y4 <= k; ++y4)
          for (long y5 = 0; y5 <= k; ++y5) {
            for (long x12 : fuse(k, y1, y2))
              for (long x123 : fuse(k, x12, y3)) {
                if (!admissible(k, x123, y4, y5)) continue;
                for (long x34 : fuse(k, y3, y4))
                  for (long x234 : fuse(k, y2, x34)) {
                    if (!admissible(k, y1, x234, y5)) continue;
                    // path A: three moves via x23
                    CyclotomicNumber lhs =
                        CyclotomicNumber::zero(fd.params().order());
                    for (long x23 : fuse(k, y2, y3)) {
                      lhs = lhs + S(y2, x234, x23, y4, y3, x34) *
                                      S(y1, y5, x123, y4, x23, x234) *
                                      S(y1, x123, x12, y3, y2, x23);
                    }
                    // path B: two moves via x12/x34
                    CyclotomicNumber rhs = S(y1, y5, x12, x34, y2, x234) *
                                           S(x12, y5, x123, y4, y3, x34);
                    ++rep.checked;
                    if (!(lhs == rhs)) {
                      std::ostringstream os;
                      os << "pentagon fails at k=" << k << " m=" << fd.params().m << " y=("
                         << y1 << "," << y2 << "," << y3 << "," << y4 << "," << y5
                         << ") x12=" << x12 << " x123=" << x123 << " x34=" << x34
                         << " x234=" << x234;
                      rep.fail(os.str());
                    }
                  }
              }
          }
  return rep;
}

}  // namespace anfield
