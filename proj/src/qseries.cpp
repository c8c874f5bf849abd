#include "qrank/qseries.hpp"

#include <chrono>
#include <cstdlib>
#include <string>
#include <utility>

namespace qrank {

namespace {

void validate_factor(const PochhammerFactor& f) {
  if (f.sign != 1 && f.sign != -1)
    throw Error(ErrorKind::invalid_parameter, "Pochhammer sign must be +1 or -1");
  if (f.a < 0) throw Error(ErrorKind::invalid_parameter, "Pochhammer argument exponent a < 0");
  if (f.b < 1) throw Error(ErrorKind::invalid_parameter, "Pochhammer base exponent b < 1");
  if (f.count && *f.count < 0) throw Error(ErrorKind::invalid_parameter, "Pochhammer count < 0");
  if (f.exponent == 0)
    throw Error(ErrorKind::invalid_parameter, "Pochhammer exponent must be nonzero");
}

// In-place multiply of a power-series coefficient vector by (1 - c*q^d).
void mul_two_term(std::vector<Rational>& v, int c, exp_t d) {
  if (d >= static_cast<exp_t>(v.size())) return;
  for (std::size_t e = v.size(); e-- > static_cast<std::size_t>(d);) {
    const Rational& lower = v[e - static_cast<std::size_t>(d)];
    if (lower.is_zero()) continue;
    if (c > 0)
      v[e] -= lower;
    else
      v[e] += lower;
  }
}

// (sign*q^a; q^b)_count as a dense coefficient vector to `order`.
// Empty result encodes the identically-zero symbol (a = 0, sign = +1).
std::vector<Rational> symbol_coeffs(const PochhammerFactor& f, exp_t order) {
  std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
  v[0] = Rational(1);
  if (f.count && *f.count == 0) return v;  // empty product is 1
  if (f.a == 0 && f.sign == 1) return {};  // first factor is 1 - q^0 = 0
  for (exp_t i = 0;; ++i) {
    if (f.count && i >= *f.count) break;
    const exp_t d = f.a + f.b * i;
    if (d > order) break;  // remaining factors are 1 + O(q^{order+1})
    mul_two_term(v, f.sign, d);
  }
  return v;
}

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

}  // namespace

ProductSpec& ProductSpec::j2(exp_t a, exp_t b, int exponent) {
  if (!(a > 0 && a < b))
    throw Error(ErrorKind::invalid_parameter, "J_{a,b} requires 0 < a < b, got a=" +
                                                  std::to_string(a) + " b=" + std::to_string(b));
  pochhammer(1, a, b, exponent);
  pochhammer(1, b - a, b, exponent);
  pochhammer(1, b, b, exponent);
  return *this;
}

LaurentSeries pochhammer_series(int sign, exp_t a, exp_t b, std::optional<exp_t> count,
                                exp_t order) {
  ProductSpec spec;
  if (count)
    spec.pochhammer_finite(sign, a, b, *count);
  else
    spec.pochhammer(sign, a, b);
  return eval_product(spec, order);
}

LaurentSeries eval_product(const ProductSpec& spec, exp_t order) {
  if (order < 0) throw Error(ErrorKind::invalid_parameter, "eval_product requires order >= 0");
  LaurentSeries numerator = LaurentSeries::one(order);
  LaurentSeries denominator = LaurentSeries::one(order);
  bool numerator_zero = false;
  bool have_denominator = false;
  for (const PochhammerFactor& f : spec.factors) {
    validate_factor(f);
    std::vector<Rational> sym = symbol_coeffs(f, order);
    if (sym.empty()) {
      if (f.exponent < 0) {
        throw Error(ErrorKind::degenerate_factor,
                    "cannot invert (q^0; q^" + std::to_string(f.b) + ") with zero constant term");
      }
      numerator_zero = true;
      continue;
    }
    const LaurentSeries s = LaurentSeries::from_coefficients(0, order, std::move(sym));
    const int reps = std::abs(f.exponent);
    if (f.exponent > 0) {
      for (int i = 0; i < reps; ++i) numerator = mul(numerator, s);
    } else {
      for (int i = 0; i < reps; ++i) denominator = mul(denominator, s);
      have_denominator = true;
    }
  }
  if (numerator_zero) return LaurentSeries::zero(order);
  if (!have_denominator) return numerator;
  return mul(numerator, inverse(denominator));  // all symbols here have constant term 1
}

LaurentSeries J(exp_t b, exp_t order) {
  if (b < 1) throw Error(ErrorKind::invalid_parameter, "J_b requires b >= 1");
  ProductSpec spec;
  spec.j(b);
  return eval_product(spec, order);
}

LaurentSeries J2(exp_t a, exp_t b, exp_t order) {
  ProductSpec spec;
  spec.j2(a, b);
  return eval_product(spec, order);
}

LaurentSeries theta_f(int s1, exp_t k1, int s2, exp_t k2, exp_t order) {
  if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1))
    throw Error(ErrorKind::invalid_parameter, "theta_f signs must be +1 or -1");
  if (k1 < 0 || k2 < 0) throw Error(ErrorKind::invalid_parameter, "theta_f exponents must be >= 0");
  if (k1 + k2 < 1)
    throw Error(ErrorKind::divergent_spec, "theta_f(q^0, q^0) does not converge formally");
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  auto accumulate = [&](exp_t n) -> bool {
    const exp_t tri1 = n * (n + 1) / 2;  // >= 0 for every integer n
    const exp_t tri2 = n * (n - 1) / 2;
    const exp_t e = k1 * tri1 + k2 * tri2;
    if (e > order) return false;
    int sign = 1;
    if (s1 < 0 && (tri1 & 1)) sign = -sign;
    if (s2 < 0 && (tri2 & 1)) sign = -sign;
    coeffs[static_cast<std::size_t>(e)] += Rational(sign);
    return true;
  };
  // the exponent is quadratic in n with vertex inside [-1, 1], hence
  // monotone on each side beyond |n| = 1
  for (exp_t n = 0;; ++n)
    if (!accumulate(n) && n >= 1) break;
  for (exp_t n = -1;; --n)
    if (!accumulate(n) && n <= -1) break;
  return LaurentSeries::from_coefficients(0, order, std::move(coeffs));
}

LaurentSeries phi(int sign, exp_t k, exp_t order) {
  if (k < 1) throw Error(ErrorKind::invalid_parameter, "phi requires k >= 1");
  return theta_f(sign, k, sign, k, order);
}

LaurentSeries psi(int sign, exp_t k, exp_t order) {
  if (k < 1) throw Error(ErrorKind::invalid_parameter, "psi requires k >= 1");
  // x = sign*q^k gives x^3 = sign*q^{3k}
  return theta_f(sign, k, sign, 3 * k, order);
}

LaurentSeries phi_product(int sign, exp_t k, exp_t order) {
  if (k < 1) throw Error(ErrorKind::invalid_parameter, "phi requires k >= 1");
  ProductSpec spec;
  spec.pochhammer(-sign, k, 2 * k, 2).pochhammer(1, 2 * k, 2 * k, 1);
  return eval_product(spec, order);
}

LaurentSeries psi_product(int sign, exp_t k, exp_t order) {
  if (k < 1) throw Error(ErrorKind::invalid_parameter, "psi requires k >= 1");
  ProductSpec spec;
  spec.pochhammer(1, 2 * k, 2 * k, 1).pochhammer(sign, k, 2 * k, -1);
  return eval_product(spec, order);
}

LaurentSeries chi(int sign, exp_t k, exp_t order) {
  if (k < 1) throw Error(ErrorKind::invalid_parameter, "chi requires k >= 1");
  ProductSpec spec;
  spec.pochhammer(-sign, k, 2 * k, 1);
  return eval_product(spec, order);
}

LaurentSeries lambert_sum(const LambertSpec& spec, exp_t order, int extra_range) {
  if (spec.quad_a <= 0)
    throw Error(ErrorKind::invalid_parameter, "Lambert sum requires A > 0 for convergence");
  if (spec.denom_sign != 1 && spec.denom_sign != -1)
    throw Error(ErrorKind::invalid_parameter, "Lambert denom_sign must be +1 or -1");
  if (extra_range < 0) throw Error(ErrorKind::invalid_parameter, "extra_range must be >= 0");

  struct Term {
    int sign;         // numerator sign after canonicalization
    exp_t start;      // lowest exponent contributed
    exp_t denom_exp;  // positive denominator exponent; 0 means constant denominator 2
    int denom_sign;
  };
  auto make_term = [&](exp_t n) -> Term {
    const exp_t numer = spec.quad_a * n * n + spec.quad_b * n + spec.quad_c;
    const exp_t m = spec.lin_d * n + spec.lin_e;
    int sign = (spec.alternating && (n & 1)) ? -1 : 1;
    if (m == 0) {
      if (spec.denom_sign < 0) {
        throw Error(ErrorKind::degenerate_term,
                    "denominator 1 - q^0 vanishes at n = " + std::to_string(n));
      }
      return {sign, numer, 0, 1};
    }
    if (m > 0) return {sign, numer, m, spec.denom_sign};
    // negative denominator exponent: 1/(1 - q^m) = -q^{-m}/(1 - q^{-m}),
    //                                1/(1 + q^m) =  q^{-m}/(1 + q^{-m})
    if (spec.denom_sign < 0) sign = -sign;
    return {sign, numer - m, -m, spec.denom_sign};
  };

  // minimum term exponents are monotone outside this window
  const exp_t thresh = (std::llabs(spec.quad_b) + std::llabs(spec.lin_d)) / (2 * spec.quad_a) + 1;
  std::vector<Term> terms;
  exp_t lo = 0;
  auto consider = [&](exp_t n) -> bool {
    Term t = make_term(n);
    if (t.start > order) return false;
    if (t.start < lo) lo = t.start;
    terms.push_back(t);
    return true;
  };
  for (exp_t n = 0, misses = 0;; ++n) {
    if (!consider(n) && n >= thresh && ++misses > extra_range) break;
  }
  for (exp_t n = -1, misses = 0;; --n) {
    if (!consider(n) && -n >= thresh && ++misses > extra_range) break;
  }
  if (terms.empty()) return LaurentSeries::zero(order);

  std::vector<Rational> acc(static_cast<std::size_t>(order - lo) + 1);
  for (const Term& t : terms) {
    if (t.denom_exp == 0) {
      acc[static_cast<std::size_t>(t.start - lo)] += Rational(t.sign, 2);
      continue;
    }
    int term_sign = t.sign;
    for (exp_t e = t.start; e <= order; e += t.denom_exp) {
      acc[static_cast<std::size_t>(e - lo)] += Rational(term_sign);
      if (t.denom_sign > 0) term_sign = -term_sign;  // 1/(1+x) = 1 - x + x^2 - ...
    }
  }
  return LaurentSeries::from_coefficients(lo, order, std::move(acc));
}

CheckReport check_elementary_identities(exp_t order) {
  if (order < 1) throw Error(ErrorKind::invalid_parameter, "order must be >= 1");
  const auto start = Clock::now();
  CheckReport report;
  report.check_id = "elementary";
  report.order = order;

  auto fail = [&](const std::string& where, const Discrepancy& d) {
    report.check_id = "elementary[" + where + "]";
    report.status = CheckStatus::fail;
    report.first_discrepancy = d;
    report.runtime_ms = elapsed_ms(start);
    return report;
  };

  // (-q;q)(q;q^2) = 1
  {
    ProductSpec spec;
    spec.pochhammer(-1, 1, 1).pochhammer(1, 1, 2);
    if (auto d = first_discrepancy(eval_product(spec, order), LaurentSeries::one(order), order))
      return fail("oddunique", *d);
  }
  // (q^a;q^b)(-q^a;q^b) = (q^{2a};q^{2b})
  for (exp_t a = 1; a <= 4; ++a) {
    for (exp_t b = 1; b <= 4; ++b) {
      ProductSpec lhs;
      lhs.pochhammer(1, a, b).pochhammer(-1, a, b);
      ProductSpec rhs;
      rhs.pochhammer(1, 2 * a, 2 * b);
      if (auto d = first_discrepancy(eval_product(lhs, order), eval_product(rhs, order), order))
        return fail("squares,a=" + std::to_string(a) + ",b=" + std::to_string(b), *d);
    }
  }
  // c = c_sign * q^{c_exp} ranges over {+1, -1, +q, -q}
  const std::pair<int, exp_t> c_grid[] = {{1, 0}, {-1, 0}, {1, 1}, {-1, 1}};
  auto c_label = [](int cs, exp_t ce) {
    return (cs > 0 ? std::string("+") : std::string("-")) + "q^" + std::to_string(ce);
  };
  // (cq^a;q^{2b})(cq^{a+b};q^{2b}) = (cq^a;q^b)
  for (auto [cs, ce] : c_grid) {
    for (exp_t a = 1; a <= 4; ++a) {
      for (exp_t b = 1; b <= 4; ++b) {
        ProductSpec lhs;
        lhs.pochhammer(cs, ce + a, 2 * b).pochhammer(cs, ce + a + b, 2 * b);
        ProductSpec rhs;
        rhs.pochhammer(cs, ce + a, b);
        if (auto d = first_discrepancy(eval_product(lhs, order), eval_product(rhs, order), order))
          return fail("bisection,a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                          ",c=" + c_label(cs, ce),
                      *d);
      }
    }
  }
  // (cq^a;q^{kb}) ... (cq^{a+(k-1)b};q^{kb}) = (cq^a;q^b)
  for (exp_t k = 2; k <= 4; ++k) {
    for (auto [cs, ce] : c_grid) {
      for (exp_t a = 1; a <= 4; ++a) {
        for (exp_t b = 1; b <= 4; ++b) {
          ProductSpec lhs;
          for (exp_t j = 0; j < k; ++j) lhs.pochhammer(cs, ce + a + j * b, k * b);
          ProductSpec rhs;
          rhs.pochhammer(cs, ce + a, b);
          if (auto d = first_discrepancy(eval_product(lhs, order), eval_product(rhs, order), order))
            return fail("ksection,k=" + std::to_string(k) + ",a=" + std::to_string(a) +
                            ",b=" + std::to_string(b) + ",c=" + c_label(cs, ce),
                        *d);
        }
      }
    }
  }
  report.runtime_ms = elapsed_ms(start);
  return report;
}

}  // namespace qrank
