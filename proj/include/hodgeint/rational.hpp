#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodgeint {

// Exact scalar domain. Rat is always canonical (gcd(num,den)=1, den>0) —
// gmp guarantees this for every arithmetic result.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Serialization is always "num/den", including integers ("1/1") and negatives
// ("-7/5760" — sign on the numerator).
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);  // 0 when k > n
// (sum k_i)! / prod k_i!
Int multinomial(const std::vector<unsigned long>& ks);
Rat harmonic(unsigned long n);  // H_n = sum_{a=1..n} 1/a, H_0 = 0
Rat rat_pow(const Rat& base, long e);  // e < 0 requires base != 0

// Rational with an exact square root of -1 adjoined. Enough structure for
// every coefficient this engine touches.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(const Rat& r) : re(r), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long r) : re(r), im(0) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussRat conj() const { return GaussRat(re, Rat(-im)); }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re + b.re, a.im + b.im);
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re - b.re, a.im - b.im);
  }
  friend GaussRat operator-(const GaussRat& a) { return GaussRat(Rat(-a.re), Rat(-a.im)); }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    // Purely real operands dominate in practice; skip the dead cross terms.
    if (sgn(a.im) == 0) {
      if (sgn(a.re) == 0) return GaussRat();
      return GaussRat(a.re * b.re, a.re * b.im);
    }
    if (sgn(b.im) == 0) {
      if (sgn(b.re) == 0) return GaussRat();
      return GaussRat(a.re * b.re, a.im * b.re);
    }
    return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b);

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

// i^k for any integer k (k may be negative).
GaussRat i_pow(long k);

std::string gauss_to_string(const GaussRat& z);

}  // namespace hodgeint
