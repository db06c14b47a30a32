#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "spectre/types.hpp"

namespace spectre {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline long mod_pow(long base, long exp, long mod) {
  long result = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

/// Legendre symbol by Euler's criterion; p must be an odd prime.
inline int legendre(long a, long p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("legendre: p must be an odd prime");
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// GF(p^e) with elements encoded as integers in [0, q): the digits of the
/// encoding base p are the polynomial coefficients (constant term least
/// significant). The modulus is the lexicographically smallest monic
/// irreducible polynomial of degree e, found by exhaustive search.
class Field {
 public:
  using Elem = long;

  Field(long p, int e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("field: characteristic must be prime");
    if (e < 1 || e > 4) throw std::invalid_argument("field: extension degree must be in [1,4]");
    q_ = 1;
    for (int i = 0; i < e; ++i) q_ *= p;
    if (e_ > 1) find_modulus();
  }

  long p() const { return p_; }
  int degree() const { return e_; }
  long order() const { return q_; }
  const std::vector<long>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % q_; }
  Elem from_int(long v) const {
    if (e_ == 1) {
      v %= p_;
      return v < 0 ? v + p_ : v;
    }
    if (v < 0 || v >= q_) throw std::invalid_argument("field: encoding out of range");
    return v;
  }

  Elem add(Elem a, Elem b) const {
    if (e_ == 1) return (a + b) % p_;
    Elem r = 0, base = 1;
    for (int i = 0; i < e_; ++i) {
      r += (a % p_ + b % p_) % p_ * base;
      a /= p_;
      b /= p_;
      base *= p_;
    }
    return r;
  }

  Elem neg(Elem a) const {
    if (e_ == 1) return (p_ - a) % p_;
    Elem r = 0, base = 1;
    for (int i = 0; i < e_; ++i) {
      r += (p_ - a % p_) % p_ * base;
      a /= p_;
      base *= p_;
    }
    return r;
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (e_ == 1) return a * b % p_;
    std::array<long, 8> prod{};  // schoolbook product, degree < 2e-1
    for (int i = 0; i < e_; ++i) {
      const long ai = a / pow_p(i) % p_;
      if (ai == 0) continue;
      for (int j = 0; j < e_; ++j) {
        const long bj = b / pow_p(j) % p_;
        prod[i + j] = (prod[i + j] + ai * bj) % p_;
      }
    }
    // reduce by the monic modulus: x^e = -(lower modulus coefficients)
    for (int d = 2 * e_ - 2; d >= e_; --d) {
      const long c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (int j = 0; j < e_; ++j)
        prod[d - e_ + j] = (prod[d - e_ + j] + c * (p_ - modulus_[j])) % p_;
    }
    Elem r = 0;
    for (int i = e_ - 1; i >= 0; --i) r = r * p_ + prod[i];
    return r;
  }

  Elem pow(Elem a, long n) const {
    Elem r = one();
    while (n > 0) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }

  long element_order(Elem a) const {
    if (a == 0) throw std::invalid_argument("field: zero has no multiplicative order");
    long ord = 1;
    Elem x = a;
    while (x != one()) {
      x = mul(x, a);
      ++ord;
    }
    return ord;
  }

 private:
  long pow_p(int i) const {
    long r = 1;
    while (i-- > 0) r *= p_;
    return r;
  }

  // Trial division by every monic polynomial of degree 1..e/2 suffices for
  // irreducibility at these degrees.
  void find_modulus() {
    for (long low = 0; low < q_; ++low) {
      std::vector<long> cand(e_ + 1);
      long v = low;
      for (int i = 0; i < e_; ++i) {
        cand[i] = v % p_;
        v /= p_;
      }
      cand[e_] = 1;
      if (poly_irreducible(cand)) {
        modulus_.assign(cand.begin(), cand.begin() + e_);
        return;
      }
    }
    throw std::runtime_error("field: no irreducible modulus found");
  }

  bool poly_irreducible(const std::vector<long>& poly) const {
    const int deg = e_;
    for (int fd = 1; fd <= deg / 2; ++fd) {
      long count = 1;
      for (int i = 0; i < fd; ++i) count *= p_;
      for (long low = 0; low < count; ++low) {
        std::vector<long> factor(fd + 1);
        long v = low;
        for (int i = 0; i < fd; ++i) {
          factor[i] = v % p_;
          v /= p_;
        }
        factor[fd] = 1;
        if (poly_divides(factor, poly)) return false;
      }
    }
    return true;
  }

  bool poly_divides(const std::vector<long>& divisor, std::vector<long> rem) const {
    const int dd = static_cast<int>(divisor.size()) - 1;
    for (int d = static_cast<int>(rem.size()) - 1; d >= dd; --d) {
      const long c = rem[d];
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j)
        rem[d - dd + j] = ((rem[d - dd + j] - c * divisor[j]) % p_ + p_) % p_;
    }
    for (int i = 0; i < dd; ++i)
      if (rem[i] != 0) return false;
    return true;
  }

  long p_;
  int e_;
  long q_;
  std::vector<long> modulus_;  // coefficients of the non-leading terms
};

/// Smallest element (integer encoding order) generating the multiplicative
/// group.
inline Field::Elem primitive_element(const Field& f) {
  if (f.order() == 2) return 1;
  for (long v = 2; v < f.order(); ++v) {
    if (f.element_order(v) == f.order() - 1) return v;
  }
  throw std::runtime_error("primitive_element: none found");
}

}  // namespace spectre
