#pragma once

#include <array>
#include <cstdint>
#include <numeric>

#include "anfield/cyclotomic.hpp"

namespace anfield {

struct OverflowError : AnfieldError {
  using AnfieldError::AnfieldError;
};

namespace detail {

// Integer reduction tables for Z[zeta_N]: x^t mod Phi_N has integer
// coefficients since Phi_N is monic over Z.
struct CycloIntOrder {
  long n = 1;
  long deg = 1;
  std::vector<std::array<int64_t, 24>> rows;  // t = 0 .. 2*deg-2

  explicit CycloIntOrder(long order) : n(order) {
    const CycloOrder& base = cyclo_order(order);
    deg = base.deg;
    if (deg > 24) throw DomainError("CycloIntOrder: order too large");
    rows.assign(2 * deg - 1, {});
    for (long t = 0; t < 2 * deg - 1; ++t) {
      rows[t].fill(0);
      for (long i = 0; i < deg; ++i) {
        const Rational& r = base.pow_rows[t][i];
        if (rat_den(r) != 1) throw AnfieldError("CycloIntOrder: non-integer row");
        BigInt num = rat_num(r);
        if (num > 0x7fffffff || num < -0x7fffffff)
          throw AnfieldError("CycloIntOrder: row entry too large");
        rows[t][i] = (int64_t)num.convert_to<long long>();
      }
    }
  }
};

inline const CycloIntOrder& cyclo_int_order(long n) {
  static std::map<long, std::unique_ptr<CycloIntOrder>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<CycloIntOrder>(n)).first;
  return *it->second;
}

inline void checked_add(int64_t& a, int64_t b) {
  if (__builtin_add_overflow(a, b, &a)) throw OverflowError("cyclotomic int64 overflow");
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("cyclotomic int64 overflow");
  return r;
}

}  // namespace detail

// Element of Z[zeta_N] with machine-integer coordinates in the power basis;
// the hot scalar of the diagrammatic oracle.  Arithmetic throws
// OverflowError when a coordinate leaves the int64 range, and callers retry
// in exact rational arithmetic.
class CycInt {
 public:
  CycInt() : ord_(&detail::cyclo_int_order(1)) { c_.fill(0); }

  explicit CycInt(const detail::CycloIntOrder& ord) : ord_(&ord) { c_.fill(0); }

  static CycInt from_int(long v, long order) {
    CycInt out(detail::cyclo_int_order(order));
    out.c_[0] = v;
    return out;
  }

  // requires integral coordinates
  static CycInt from_exact(const CyclotomicNumber& x) {
    CycInt out(detail::cyclo_int_order(x.order()));
    for (long i = 0; i < (long)x.coeffs().size(); ++i) {
      const Rational& r = x.coeffs()[i];
      if (rat_den(r) != 1) throw DomainError("CycInt: non-integral coordinate");
      BigInt num = rat_num(r);
      if (num > INT64_MAX / 4 || num < INT64_MIN / 4)
        throw OverflowError("CycInt: coordinate too large");
      out.c_[i] = (int64_t)num.convert_to<long long>();
    }
    return out;
  }

  CyclotomicNumber to_exact() const {
    std::vector<Rational> coeffs(ord_->deg);
    for (long i = 0; i < ord_->deg; ++i) coeffs[i] = Rational(c_[i]);
    return CyclotomicNumber::from_coeffs(ord_->n, std::move(coeffs));
  }

  long order() const { return ord_->n; }
  const detail::CycloIntOrder& ord() const { return *ord_; }
  int64_t coord(long i) const { return c_[i]; }

  bool is_zero() const {
    for (long i = 0; i < ord_->deg; ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const CycInt& a, const CycInt& b) {
    for (long i = 0; i < a.ord_->deg; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

  friend CycInt operator+(const CycInt& a, const CycInt& b) {
    CycInt out = a;
    for (long i = 0; i < a.ord_->deg; ++i) detail::checked_add(out.c_[i], b.c_[i]);
    return out;
  }

  friend CycInt operator-(const CycInt& a, const CycInt& b) {
    CycInt out = a;
    for (long i = 0; i < a.ord_->deg; ++i) detail::checked_add(out.c_[i], -b.c_[i]);
    return out;
  }

  friend CycInt operator-(const CycInt& a) {
    CycInt out = a;
    for (long i = 0; i < a.ord_->deg; ++i) out.c_[i] = -out.c_[i];
    return out;
  }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    long deg = a.ord_->deg;
    std::array<int64_t, 47> conv;
    conv.fill(0);
    for (long i = 0; i < deg; ++i) {
      if (a.c_[i] == 0) continue;
      for (long j = 0; j < deg; ++j) {
        if (b.c_[j] == 0) continue;
        detail::checked_add(conv[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
      }
    }
    CycInt out(*a.ord_);
    for (long t = 0; t < 2 * deg - 1; ++t) {
      if (conv[t] == 0) continue;
      if (t < deg) {
        detail::checked_add(out.c_[t], conv[t]);
      } else {
        const auto& row = a.ord_->rows[t];
        for (long i = 0; i < deg; ++i)
          if (row[i] != 0) detail::checked_add(out.c_[i], detail::checked_mul(conv[t], row[i]));
      }
    }
    return out;
  }

  void divide_coords(int64_t g) {
    for (long i = 0; i < ord_->deg; ++i) c_[i] /= g;
  }

  int64_t coord_gcd(int64_t acc) const {
    for (long i = 0; i < ord_->deg; ++i) {
      int64_t v = c_[i] < 0 ? -c_[i] : c_[i];
      acc = (int64_t)std::gcd((uint64_t)acc, (uint64_t)v);
      if (acc == 1) return 1;
    }
    return acc;
  }

 private:
  const detail::CycloIntOrder* ord_;
  std::array<int64_t, 24> c_;
};

}  // namespace anfield
