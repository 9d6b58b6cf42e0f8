#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace anfield {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct AnfieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// invalid parameters, arity mismatches, unsupported orders
struct DomainError : AnfieldError {
  using AnfieldError::AnfieldError;
};

// division by zero, vanishing denominator bracket, singular Gram matrix
struct PoleError : AnfieldError {
  using AnfieldError::AnfieldError;
};

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline long euler_phi(long n) {
  if (n < 1) throw DomainError("euler_phi: n must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

// residues in [0, n) coprime to n
inline std::vector<long> units_mod(long n) {
  std::vector<long> out;
  for (long r = 0; r < n; ++r)
    if (std::gcd(r, n) == 1) out.push_back(r);
  return out;
}

inline long mod_pos(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace anfield
