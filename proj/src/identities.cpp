#include "hodgeint/identities.hpp"

#include <stdexcept>

#include "hodgeint/bernoulli.hpp"

namespace hodgeint {

namespace {

Rat int_pow(long base, unsigned e) {
  Rat out(1);
  for (unsigned i = 0; i < e; ++i) out *= Rat(base);
  return out;
}

std::string join_rats(const std::vector<Rat>& vs) {
  std::string out;
  for (const Rat& v : vs) {
    if (!out.empty()) out += ",";
    out += rat_to_string(v);
  }
  return out;
}

IdentityReport make_report(
    std::string name, std::vector<std::pair<std::string, std::string>> params,
    const Rat& left, const Rat& right, std::string lp, std::string rp) {
  IdentityReport r;
  r.identity = std::move(name);
  r.parameters = std::move(params);
  r.pass = (left == right);
  r.left = rat_to_string(left);
  r.right = rat_to_string(right);
  r.left_provenance = std::move(lp);
  r.right_provenance = std::move(rp);
  return r;
}

}  // namespace

Rat abs_bernoulli(int m) {
  if (m < 0) throw std::invalid_argument("abs_bernoulli: negative index");
  if (m == 0) return Rat(1);
  Rat v = bernoulli(static_cast<unsigned>(2 * m));
  return (m % 2 == 1) ? v : Rat(-v);
}

Rat b_g(int g) {
  if (g < 0) throw std::invalid_argument("b_g: negative genus");
  if (g == 0) return Rat(1);
  Rat pow = int_pow(2, static_cast<unsigned>(2 * g - 1));
  Rat prefactor = (pow - 1) / pow;
  return prefactor * abs_bernoulli(g) /
         Rat(factorial(static_cast<unsigned long>(2 * g)));
}

Rat lambda_g_value(int g, const std::vector<int>& k) {
  if (g < 0 || k.empty())
    throw std::invalid_argument("lambda_g_value: need g >= 0 and n >= 1");
  int n = static_cast<int>(k.size());
  if (g == 0 && n <= 2)
    throw std::invalid_argument("lambda_g_value: no stable moduli");
  long total = 0;
  std::vector<unsigned long> ks;
  ks.reserve(k.size());
  for (int ki : k) {
    if (ki < 0)
      throw std::invalid_argument("lambda_g_value: negative psi power");
    total += ki;
    ks.push_back(static_cast<unsigned long>(ki));
  }
  if (total != 2L * g - 3 + n)
    throw std::invalid_argument("dimension constraint violated");
  return Rat(multinomial(ks)) * b_g(g);
}

Rat cubic_lambda(int g) {
  if (g < 2) throw std::invalid_argument("cubic_lambda: need g >= 2");
  return Rat(1, 2) / Rat(factorial(static_cast<unsigned long>(2 * g - 2))) *
         (abs_bernoulli(g - 1) / rat(2 * g - 2)) *
         (abs_bernoulli(g) / rat(2 * g));
}

Rat g_minus_1_value(int g) {
  if (g < 1) throw std::invalid_argument("g_minus_1_value: need g >= 1");
  Rat out = b_g(g) * harmonic(static_cast<unsigned long>(2 * g - 1));
  Rat fac_g = Rat(factorial(static_cast<unsigned long>(2 * g - 1)));
  for (int g1 = 1; g1 < g; ++g1) {
    int g2 = g - g1;
    Rat w = Rat(factorial(static_cast<unsigned long>(2 * g1 - 1))) *
            Rat(factorial(static_cast<unsigned long>(2 * g2 - 1))) / fac_g;
    out -= Rat(1, 2) * w * b_g(g1) * b_g(g2);
  }
  return out;
}

PowerConvolution power_convolution_polynomial(int g1, int g2) {
  if (g1 < 0 || g2 < 0 || g1 + g2 < 1)
    throw std::invalid_argument("power_convolution: need g1+g2 >= 1");
  // The binomial expansion runs over the second factor, so it must carry a
  // nonnegative exponent; F is symmetric in (g1, g2).
  if (g2 == 0) std::swap(g1, g2);
  int g = g1 + g2;
  PowerConvolution p;
  p.g1 = g1;
  p.g2 = g2;
  p.coeffs.assign(static_cast<size_t>(2 * g), Rat(0));
  p.harmonic_coeff = Rat(0);
  for (int k = 0; k <= 2 * g2 - 1; ++k) {
    Rat c = Rat(binomial(static_cast<unsigned long>(2 * g2 - 1),
                         static_cast<unsigned long>(k)));
    if ((2 * g2 - 1 - k) % 2 == 1) c = -c;
    int m = 2 * g - 2 - k;  // power-sum exponent sum_{i<d} i^m
    if (m == -1) {
      p.harmonic_coeff += c;  // sum 1/i: the non-polynomial piece
    } else if (m == 0) {
      // sum_{i=1}^{d-1} 1 = d - 1 (the closed Bernoulli form would give d).
      p.coeffs[static_cast<size_t>(k) + 1] += c;
      p.coeffs[static_cast<size_t>(k)] -= c;
    } else {
      Rat denom = rat(m + 1);
      for (int l = 0; l <= m; ++l) {
        Rat w = Rat(binomial(static_cast<unsigned long>(m + 1),
                             static_cast<unsigned long>(l))) *
                bernoulli(static_cast<unsigned>(l)) / denom;
        p.coeffs[static_cast<size_t>(k + m + 1 - l)] += c * w;
      }
    }
  }
  return p;
}

Rat power_convolution_direct(int g1, int g2, int d) {
  Rat out(0);
  for (int i = 1; i < d; ++i)
    out += rat_pow(rat(i), 2L * g1 - 1) * rat_pow(rat(d - i), 2L * g2 - 1);
  return out;
}

Rat power_convolution_eval(const PowerConvolution& p, int d) {
  Rat out(0);
  Rat dpow(1);
  for (const Rat& c : p.coeffs) {
    out += c * dpow;
    dpow *= rat(d);
  }
  int top = static_cast<int>(p.coeffs.size()) - 1;
  out += p.harmonic_coeff * rat_pow(rat(d), top) *
         harmonic(static_cast<unsigned long>(d - 1));
  return out;
}

IdentityReport power_sum_check(int m, int d) {
  if (m < 1 || d < 2)
    throw std::invalid_argument("power_sum_check: need m >= 1, d >= 2");
  Rat left(0);
  for (int i = 1; i < d; ++i) left += int_pow(i, static_cast<unsigned>(m));
  Rat right(0);
  for (int k = 0; k <= m; ++k)
    right += Rat(binomial(static_cast<unsigned long>(m + 1),
                          static_cast<unsigned long>(k))) /
             rat(m + 1) * bernoulli(static_cast<unsigned>(k)) *
             int_pow(d, static_cast<unsigned>(m + 1 - k));
  return make_report("power-sum-formula",
                     {{"m", std::to_string(m)}, {"d", std::to_string(d)}},
                     left, right, "directSum", "closedForm");
}

std::vector<IdentityReport> binomial_sum_lemmas(int g1, int g2) {
  if (g1 < 1 || g2 < 1)
    throw std::invalid_argument("binomial_sum_lemmas: need g1, g2 >= 1");
  int g = g1 + g2;
  std::vector<IdentityReport> out;

  Rat left(0);
  for (int k = 0; k <= 2 * g2 - 1; ++k) {
    Rat term = Rat(binomial(static_cast<unsigned long>(2 * g2 - 1),
                            static_cast<unsigned long>(k))) /
               rat(2 * g - 1 - k);
    left += ((2 * g2 - 1 - k) % 2 == 1) ? Rat(-term) : term;
  }
  Rat right = Rat(factorial(static_cast<unsigned long>(2 * g1 - 1))) *
              Rat(factorial(static_cast<unsigned long>(2 * g2 - 1))) /
              Rat(factorial(static_cast<unsigned long>(2 * g - 1)));
  out.push_back(make_report(
      "beta-binomial-sum",
      {{"g1", std::to_string(g1)}, {"g2", std::to_string(g2)}}, left, right,
      "directSum", "closedForm"));

  Rat alt(0);
  for (int i = 1; i <= 2 * g - 1; ++i) {
    Rat term = Rat(binomial(static_cast<unsigned long>(2 * g - 1),
                            static_cast<unsigned long>(i))) /
               rat(i);
    alt += (i % 2 == 1) ? Rat(-term) : term;
  }
  out.push_back(make_report(
      "alternating-binomial-harmonic", {{"g", std::to_string(g)}}, alt,
      Rat(-harmonic(static_cast<unsigned long>(2 * g - 1))), "directSum",
      "closedForm"));
  return out;
}

IdentityReport bernoulli_convolution_report(int g) {
  if (g < 1)
    throw std::invalid_argument("bernoulli_convolution: need g >= 1");
  Rat left(0);
  for (int g1 = 0; g1 <= g; ++g1) left += b_g(g1) * b_g(g - g1);
  Rat right = abs_bernoulli(g) / rat(2 * g) /
              Rat(factorial(static_cast<unsigned long>(2 * g - 2)));
  return make_report("bernoulli-convolution", {{"g", std::to_string(g)}},
                     left, right, "directSum", "closedForm");
}

std::vector<IdentityReport> power_convolution_reports(int g1, int g2,
                                                      int d_max) {
  PowerConvolution p = power_convolution_polynomial(g1, g2);
  int g = p.g1 + p.g2;
  std::vector<std::pair<std::string, std::string>> params = {
      {"g1", std::to_string(g1)}, {"g2", std::to_string(g2)}};
  std::vector<IdentityReport> out;

  out.push_back(make_report("power-convolution-linear-coefficient", params,
                            p.coeffs[1], Rat(-bernoulli(static_cast<unsigned>(
                                            2 * g - 2))),
                            "closedForm", "closedForm"));

  Rat top = p.coeffs.back();
  Rat expected_top;
  if (p.g1 >= 1) {
    expected_top = Rat(0);
    for (int k = 0; k <= 2 * p.g2 - 1; ++k) {
      Rat term = Rat(binomial(static_cast<unsigned long>(2 * p.g2 - 1),
                              static_cast<unsigned long>(k))) /
                 rat(2 * g - 1 - k);
      expected_top += ((2 * p.g2 - 1 - k) % 2 == 1) ? Rat(-term) : term;
    }
  } else {
    expected_top = -harmonic(static_cast<unsigned long>(2 * g - 1));
  }
  out.push_back(make_report("power-convolution-top-coefficient", params, top,
                            expected_top, "closedForm", "directSum"));

  std::vector<Rat> lefts, rights;
  bool all = true;
  for (int d = 2; d <= d_max; ++d) {
    Rat l = power_convolution_eval(p, d);
    Rat r = power_convolution_direct(g1, g2, d);
    all = all && (l == r);
    lefts.push_back(l);
    rights.push_back(r);
  }
  IdentityReport brute;
  brute.identity = "power-convolution-brute-force";
  brute.parameters = params;
  brute.parameters.push_back({"d", "2.." + std::to_string(d_max)});
  brute.left = join_rats(lefts);
  brute.right = join_rats(rights);
  brute.left_provenance = "closedForm";
  brute.right_provenance = "directSum";
  brute.pass = all;
  out.push_back(std::move(brute));
  return out;
}

}  // namespace hodgeint
