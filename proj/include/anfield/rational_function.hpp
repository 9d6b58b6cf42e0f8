#pragma once

#include <string>

#include "anfield/cyclotomic.hpp"
#include "anfield/laurent.hpp"

namespace anfield {

// Fraction of Laurent polynomials over Q, the scalar ring for the symbolic
// Temperley-Lieb instantiation (formal loop value).  Canonical form: the
// denominator is an ordinary monic polynomial with nonzero constant term;
// monomial units are pushed into the numerator.
class RationalFunction {
 public:
  RationalFunction() : num_("d"), den_(LaurentPoly::constant(1, "d")) {}

  explicit RationalFunction(LaurentPoly p)
      : num_(std::move(p)), den_(LaurentPoly::constant(1, num_.var())) {}

  RationalFunction(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  static RationalFunction constant(const Rational& r, const std::string& var = "d") {
    return RationalFunction(LaurentPoly::constant(r, var));
  }

  static RationalFunction variable(const std::string& var = "d") {
    return RationalFunction(LaurentPoly::variable(var));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction out = a;
    out.num_ = -out.num_;
    return out;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw PoleError("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  CyclotomicNumber eval(const CyclotomicNumber& x) const {
    CyclotomicNumber d = eval_at(den_, x);
    if (d.is_zero()) throw PoleError("RationalFunction: pole at evaluation point");
    return eval_at(num_, x) * d.inverse();
  }

  std::string str() const {
    if (den_ == LaurentPoly::constant(1, den_.var())) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw PoleError("RationalFunction: zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentPoly::constant(1, num_.var());
      return;
    }
    LaurentPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = *try_divide(num_, g);
      den_ = *try_divide(den_, g);
    }
    // strip the denominator's monomial unit and leading coefficient
    long shift = den_.low();
    Rational lead = den_.coeff(den_.degree());
    LaurentPoly unit = LaurentPoly::monomial(Rational(1) / lead, -shift, den_.var());
    den_ = den_ * unit;
    num_ = num_ * unit;
  }

  LaurentPoly num_, den_;
};

}  // namespace anfield
