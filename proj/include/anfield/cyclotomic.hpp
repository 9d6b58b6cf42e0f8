#pragma once

#include <mpfr.h>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "anfield/laurent.hpp"
#include "anfield/rational.hpp"

namespace anfield {

// Phi_N as exact division of x^N - 1 by the product of Phi_d over proper
// divisors d | N.  Cached; coefficients are integers (stored as Rational).
inline const LaurentPoly& cyclotomic_polynomial(long n) {
  if (n < 1) throw DomainError("cyclotomic_polynomial: N must be positive");
  static std::map<long, LaurentPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // divisors come in ascending order, so every proper divisor of d is done
  // before d itself
  for (long d : divisors(n)) {
    if (cache.count(d)) continue;
    LaurentPoly num("x");
    num.set_coeff(d, 1);
    num.set_coeff(0, -1);  // x^d - 1
    LaurentPoly den = LaurentPoly::constant(1, "x");
    for (long e : divisors(d))
      if (e != d) den = den * cache.at(e);
    auto q = try_divide(num, den);
    if (!q) throw AnfieldError("cyclotomic_polynomial: inexact division");
    cache.emplace(d, *q);
  }
  return cache.at(n);
}

namespace detail {

// Cached per-order arithmetic tables for Q(zeta_N) in the power basis
// 1, z, ..., z^{deg-1} modulo Phi_N.
struct CycloOrder {
  long n = 1;
  long deg = 1;
  std::vector<Rational> phi;                     // Phi_N coefficients, monic
  std::vector<std::vector<Rational>> pow_rows;   // x^t mod Phi_N, t = 0..max_t

  explicit CycloOrder(long order) : n(order) {
    const LaurentPoly& p = cyclotomic_polynomial(order);
    deg = p.degree();
    phi.assign(deg + 1, Rational(0));
    for (long i = 0; i <= deg; ++i) phi[i] = p.coeff(i);
    long max_t = std::max<long>(2 * deg - 1, order);
    pow_rows.assign(max_t + 1, {});
    for (long t = 0; t <= max_t; ++t) {
      std::vector<Rational> row(deg, Rational(0));
      if (t < deg) {
        row[t] = 1;
      } else {
        // x^t = x * x^{t-1} reduced by the monic Phi
        const auto& prev = pow_rows[t - 1];
        std::vector<Rational> shifted(deg + 1, Rational(0));
        for (long i = 0; i < deg; ++i) shifted[i + 1] = prev[i];
        Rational lead = shifted[deg];
        for (long i = 0; i < deg; ++i) row[i] = shifted[i] - lead * phi[i];
      }
      pow_rows[t] = std::move(row);
    }
  }
};

inline const CycloOrder& cyclo_order(long n) {
  static std::map<long, std::unique_ptr<CycloOrder>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<CycloOrder>(n)).first;
  return *it->second;
}

}  // namespace detail

// Exact element of Q(zeta_N), coefficients in the power basis modulo Phi_N.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : order_(1), c_(1, Rational(0)) {}

  explicit CyclotomicNumber(const Rational& r, long order = 1)
      : order_(order), c_(detail::cyclo_order(order).deg, Rational(0)) {
    c_[0] = r;
  }

  static CyclotomicNumber zero(long order) { return CyclotomicNumber(Rational(0), order); }
  static CyclotomicNumber one(long order) { return CyclotomicNumber(Rational(1), order); }

  // coefficients in the power basis, already reduced (size = deg Phi_N)
  static CyclotomicNumber from_coeffs(long order, std::vector<Rational> coeffs) {
    CyclotomicNumber out = zero(order);
    if (coeffs.size() != out.c_.size())
      throw DomainError("CyclotomicNumber: wrong coefficient count");
    out.c_ = std::move(coeffs);
    return out;
  }

  long order() const { return order_; }
  long degree() const { return (long)c_.size(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  Rational rational_part() const { return c_[0]; }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    auto [x, y] = aligned(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return !(a == b);
  }

  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [x, y] = same_order(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }

  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [x, y] = same_order(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }

  friend CyclotomicNumber operator-(const CyclotomicNumber& a) {
    CyclotomicNumber out = a;
    for (auto& x : out.c_) x = -x;
    return out;
  }

  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [x, y] = same_order(a, b);
    const auto& ord = detail::cyclo_order(x.order_);
    long deg = ord.deg;
    std::vector<Rational> conv(2 * deg - 1, Rational(0));
    for (long i = 0; i < deg; ++i) {
      if (x.c_[i] == 0) continue;
      for (long j = 0; j < deg; ++j) {
        if (y.c_[j] == 0) continue;
        conv[i + j] += x.c_[i] * y.c_[j];
      }
    }
    CyclotomicNumber out = zero(x.order_);
    for (long t = 0; t < (long)conv.size(); ++t) {
      if (conv[t] == 0) continue;
      if (t < deg) {
        out.c_[t] += conv[t];
      } else {
        const auto& row = ord.pow_rows[t];
        for (long i = 0; i < deg; ++i)
          if (row[i] != 0) out.c_[i] += conv[t] * row[i];
      }
    }
    return out;
  }

  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const Rational& r) {
    CyclotomicNumber out = a;
    for (auto& x : out.c_) x *= r;
    return out;
  }

  CyclotomicNumber inverse() const {
    if (is_zero()) throw PoleError("CyclotomicNumber: division by zero");
    if (is_rational()) {
      CyclotomicNumber out = zero(order_);
      out.c_[0] = Rational(1) / c_[0];
      return out;
    }
    // extended Euclid in Q[x] against the irreducible Phi_N
    const auto& ord = detail::cyclo_order(order_);
    std::vector<Rational> r0 = ord.phi;
    std::vector<Rational> r1 = c_;
    trim(r1);
    std::vector<Rational> s0{}, s1{Rational(1)};
    while (!r1.empty()) {
      auto [q, rem] = divmod(r0, r1);
      std::vector<Rational> s2 = sub(s0, mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 = gcd, a nonzero constant since Phi_N is irreducible and c_ != 0;
    // the Bezout coefficient s0 has degree < deg(Phi_N)
    if (r0.size() != 1 || s0.size() > c_.size())
      throw AnfieldError("CyclotomicNumber: inverse failed");
    CyclotomicNumber out = zero(order_);
    for (size_t i = 0; i < s0.size(); ++i) out.c_[i] = s0[i] / r0[0];
    return out;
  }

  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [x, y] = same_order(a, b);
    return x * y.inverse();
  }

  // zeta_N^t reduced into the basis (t arbitrary integer)
  static CyclotomicNumber power_of_zeta(long order, long t) {
    const auto& ord = detail::cyclo_order(order);
    CyclotomicNumber out = zero(order);
    long e = mod_pos(t, order);
    const auto& row = ord.pow_rows[e];
    for (long i = 0; i < ord.deg; ++i) out.c_[i] = row[i];
    return out;
  }

  // Apply the field automorphism zeta -> zeta^j, gcd(j, N) = 1.
  CyclotomicNumber galois_apply(long j) const {
    long jj = mod_pos(j, order_);
    if (order_ == 1) return *this;
    if (std::gcd(jj, order_) != 1)
      throw DomainError("galois_apply: exponent not coprime to the order");
    const auto& ord = detail::cyclo_order(order_);
    CyclotomicNumber out = zero(order_);
    for (long i = 0; i < (long)c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const auto& row = ord.pow_rows[mod_pos(i * jj, order_)];
      for (long t = 0; t < ord.deg; ++t)
        if (row[t] != 0) out.c_[t] += c_[i] * row[t];
    }
    return out;
  }

  CyclotomicNumber conjugate() const { return galois_apply(order_ - 1); }

  // Embed into Q(zeta_M) for N | M via zeta_N -> zeta_M^{M/N}.
  CyclotomicNumber embedded(long m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw DomainError("embedded: target order not a multiple");
    long step = m / order_;
    const auto& ord = detail::cyclo_order(m);
    CyclotomicNumber out = zero(m);
    for (long i = 0; i < (long)c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const auto& row = ord.pow_rows[mod_pos(i * step, m)];
      for (long t = 0; t < ord.deg; ++t)
        if (row[t] != 0) out.c_[t] += c_[i] * row[t];
    }
    return out;
  }

  static std::pair<CyclotomicNumber, CyclotomicNumber> aligned(const CyclotomicNumber& a,
                                                               const CyclotomicNumber& b) {
    long l = std::lcm(a.order_, b.order_);
    return {a.embedded(l), b.embedded(l)};
  }

  CyclotomicNumber pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CyclotomicNumber acc = one(order_);
    CyclotomicNumber base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // Least n in [1, max_n] with x^n = 1, or 0 if none found.
  long multiplicative_order(long max_n) const {
    CyclotomicNumber acc = *this;
    CyclotomicNumber id = one(order_);
    for (long n = 1; n <= max_n; ++n) {
      if (acc == id) return n;
      acc = acc * *this;
    }
    return 0;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < (long)c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!first) os << (c_[i] > 0 ? " + " : " - ");
      else if (c_[i] < 0) os << "-";
      first = false;
      Rational mag = c_[i] > 0 ? c_[i] : Rational(-c_[i]);
      if (mag != 1 || i == 0) os << mag.str();
      if (i != 0) {
        if (mag != 1) os << "*";
        os << "z" << order_;
        if (i != 1) os << "^" << i;
      }
    }
    if (first) return "0";
    return os.str();
  }

 private:
  static void trim(std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  static std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
  }

  static std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out = a;
    if (out.size() < b.size()) out.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
  }

  static std::pair<std::vector<Rational>, std::vector<Rational>> divmod(
      std::vector<Rational> r, const std::vector<Rational>& d) {
    std::vector<Rational> q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, Rational(0));
    while (r.size() >= d.size()) {
      if (r.back() == 0) {
        r.pop_back();
        continue;
      }
      Rational f = r.back() / d.back();
      size_t off = r.size() - d.size();
      q[off] = f;
      for (size_t j = 0; j < d.size(); ++j) r[off + j] -= f * d[j];
      r.pop_back();
    }
    trim(r);
    return {q, r};
  }

  static std::pair<CyclotomicNumber, CyclotomicNumber> same_order(const CyclotomicNumber& a,
                                                                  const CyclotomicNumber& b) {
    if (a.order_ == b.order_) return {a, b};
    if (a.order_ == 1) return {a.embedded(b.order_), b};
    if (b.order_ == 1) return {a, b.embedded(a.order_)};
    throw DomainError("CyclotomicNumber: mixed orders; promote explicitly with embedded()");
  }

  long order_;
  std::vector<Rational> c_;
};

inline CyclotomicNumber root_of_unity(long n, long j) {
  if (n < 1) throw DomainError("root_of_unity: N must be positive");
  return CyclotomicNumber::power_of_zeta(n, j);
}

// Evaluate a Laurent polynomial at an exact cyclotomic point.
inline CyclotomicNumber eval_at(const LaurentPoly& p, const CyclotomicNumber& x) {
  CyclotomicNumber acc = CyclotomicNumber::zero(x.order());
  if (p.is_zero()) return acc;
  for (long e = p.degree(); e >= p.low(); --e) {
    acc = acc * x;
    const Rational& c = p.coeff(e);
    if (c != 0) acc = acc + CyclotomicNumber(c, x.order());
  }
  if (p.low() != 0) acc = acc * x.pow(p.low());
  return acc;
}

namespace detail {

struct MpfrReal {
  mpfr_t v;
  explicit MpfrReal(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~MpfrReal() { mpfr_clear(v); }
  MpfrReal(const MpfrReal&) = delete;
  MpfrReal& operator=(const MpfrReal&) = delete;
};

inline void mpfr_from_rational(mpfr_t out, const Rational& r, mpfr_rnd_t rnd) {
  std::string ns = rat_num(r).str();
  std::string ds = rat_den(r).str();
  mpfr_prec_t p = mpfr_get_prec(out);
  MpfrReal num(p), den(p);
  mpfr_set_str(num.v, ns.c_str(), 10, rnd);
  mpfr_set_str(den.v, ds.c_str(), 10, rnd);
  mpfr_div(out, num.v, den.v, rnd);
}

}  // namespace detail

// Decimal approximation of the standard embedding zeta_N -> e^{2*pi*i/N}.
// Working precision is chosen with a forward-error margin well beyond the
// requested digits, so the printed digits are reliable; used for display
// and sanity tests only, never in exact logic.
inline std::pair<std::string, std::string> approx_complex(const CyclotomicNumber& a, int digits) {
  if (digits < 1) throw DomainError("approx_complex: digits must be >= 1");
  mpfr_prec_t prec = (mpfr_prec_t)(digits * 4 + 96);
  detail::MpfrReal re(prec), im(prec), two_pi(prec), angle(prec), c(prec), s(prec), coef(prec),
      t(prec);
  mpfr_set_zero(re.v, 1);
  mpfr_set_zero(im.v, 1);
  mpfr_const_pi(two_pi.v, MPFR_RNDN);
  mpfr_mul_ui(two_pi.v, two_pi.v, 2, MPFR_RNDN);
  const auto& coeffs = a.coeffs();
  for (long i = 0; i < (long)coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    detail::mpfr_from_rational(coef.v, coeffs[i], MPFR_RNDN);
    mpfr_mul_si(angle.v, two_pi.v, i, MPFR_RNDN);
    mpfr_div_si(angle.v, angle.v, a.order(), MPFR_RNDN);
    mpfr_cos(c.v, angle.v, MPFR_RNDN);
    mpfr_sin(s.v, angle.v, MPFR_RNDN);
    mpfr_mul(t.v, coef.v, c.v, MPFR_RNDN);
    mpfr_add(re.v, re.v, t.v, MPFR_RNDN);
    mpfr_mul(t.v, coef.v, s.v, MPFR_RNDN);
    mpfr_add(im.v, im.v, t.v, MPFR_RNDN);
  }
  auto fmt = [&](mpfr_t x) {
    char buf[512];
    std::string format = "%." + std::to_string(digits) + "Rg";
    mpfr_snprintf(buf, sizeof(buf), format.c_str(), x);
    return std::string(buf);
  };
  // snap tiny residues of exactly-zero parts to zero
  detail::MpfrReal eps(prec);
  mpfr_set_ui(eps.v, 10, MPFR_RNDN);
  mpfr_pow_si(eps.v, eps.v, -(digits + 12), MPFR_RNDN);
  for (mpfr_ptr x : {re.v, im.v}) {
    detail::MpfrReal mag(prec);
    mpfr_abs(mag.v, x, MPFR_RNDN);
    if (mpfr_cmp(mag.v, eps.v) < 0) mpfr_set_zero(x, 1);
  }
  return {fmt(re.v), fmt(im.v)};
}

inline std::pair<double, double> approx_double(const CyclotomicNumber& a) {
  auto [r, i] = approx_complex(a, 17);
  return {std::stod(r), std::stod(i)};
}

}  // namespace anfield
