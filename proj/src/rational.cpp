#include "hodgeint/rational.hpp"

namespace hodgeint {

std::string rat_to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (sgn(q.get_den()) == 0) throw std::domain_error("rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int multinomial(const std::vector<unsigned long>& ks) {
  unsigned long n = 0;
  for (unsigned long k : ks) n += k;
  Int r = factorial(n);
  for (unsigned long k : ks) r /= factorial(k);
  return r;
}

Rat harmonic(unsigned long n) {
  Rat h(0);
  for (unsigned long a = 1; a <= n; ++a) h += Rat(1, a);
  return h;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (sgn(base) == 0) {
    if (e < 0) throw std::domain_error("0 raised to a negative power");
    return Rat(0);
  }
  Rat b = e < 0 ? Rat(base.get_den(), base.get_num()) : base;
  b.canonicalize();
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Gaussian rational");
  if (sgn(b.im) == 0) return GaussRat(a.re / b.re, a.im / b.re);
  Rat n = b.re * b.re + b.im * b.im;
  GaussRat c = a * b.conj();
  return GaussRat(c.re / n, c.im / n);
}

GaussRat i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GaussRat(rat(1));
    case 1: return GaussRat(rat(0), rat(1));
    case 2: return GaussRat(rat(-1));
    default: return GaussRat(rat(0), rat(-1));
  }
}

std::string gauss_to_string(const GaussRat& z) {
  return rat_to_string(z.re) + (sgn(z.im) < 0 ? "" : "+") + rat_to_string(z.im) + "i";
}

}  // namespace hodgeint
