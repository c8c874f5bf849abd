#pragma once

#include <optional>
#include <vector>

#include "qrank/check_report.hpp"
#include "qrank/laurent_series.hpp"

namespace qrank {

/// One q-Pochhammer symbol (sign*q^a; q^b)_count raised to an integer power.
/// count = nullopt denotes the infinite product.
struct PochhammerFactor {
  int sign = 1;
  exp_t a = 1;
  exp_t b = 1;
  std::optional<exp_t> count;  // nullopt: infinite
  int exponent = 1;
};

/// Symbolic product of Pochhammer symbols; evaluated lazily by eval_product.
/// The fluent appenders cover the shorthands J_b = (q^b;q^b)_inf and
/// J_{a,b} = (q^a, q^{b-a}, q^b; q^b)_inf.
struct ProductSpec {
  std::vector<PochhammerFactor> factors;

  ProductSpec& pochhammer(int sign, exp_t a, exp_t b, int exponent = 1) {
    factors.push_back({sign, a, b, std::nullopt, exponent});
    return *this;
  }
  ProductSpec& pochhammer_finite(int sign, exp_t a, exp_t b, exp_t count, int exponent = 1) {
    factors.push_back({sign, a, b, count, exponent});
    return *this;
  }
  ProductSpec& j(exp_t b, int exponent = 1) { return pochhammer(1, b, b, exponent); }
  ProductSpec& j2(exp_t a, exp_t b, int exponent = 1);
};

/// Exact truncated expansion of the product. Infinite products stop at the
/// first factor whose lowest exponent exceeds the order. Inverting a factor
/// with zero constant term (a = 0, sign = +1) is a degenerate-factor error.
LaurentSeries eval_product(const ProductSpec& spec, exp_t order);

/// Single symbol (sign*q^a; q^b)_count; count = nullopt for infinite.
LaurentSeries pochhammer_series(int sign, exp_t a, exp_t b, std::optional<exp_t> count,
                                exp_t order);

LaurentSeries J(exp_t b, exp_t order);
LaurentSeries J2(exp_t a, exp_t b, exp_t order);

/// Ramanujan theta f(a,b) = sum_n a^{n(n+1)/2} b^{n(n-1)/2} for monomial
/// arguments a = s1*q^k1, b = s2*q^k2, k1 + k2 >= 1.
LaurentSeries theta_f(int s1, exp_t k1, int s2, exp_t k2, exp_t order);

// phi/psi evaluate the bilateral theta sums at sign*q^k; the _product
// variants expand the equivalent infinite products instead. Keeping both
// routes disjoint lets identity checks compare them rather than confirm
// themselves.
LaurentSeries phi(int sign, exp_t k, exp_t order);           // f(x, x)
LaurentSeries psi(int sign, exp_t k, exp_t order);           // f(x, x^3)
LaurentSeries phi_product(int sign, exp_t k, exp_t order);   // (-x,-x,x^2;x^2)_inf
LaurentSeries psi_product(int sign, exp_t k, exp_t order);   // (x^2;x^2)_inf/(x;x^2)_inf
LaurentSeries chi(int sign, exp_t k, exp_t order);           // (-x;x^2)_inf

/// Bilateral Lambert-type sum
///   sum_{n=-inf}^{inf} (-1)^{n?} q^{A n^2 + B n + C} / (1 + denom_sign q^{D n + E}).
/// A > 0 so the sum converges as a formal series. Terms whose denominator
/// exponent m = D n + E is negative are canonicalized before expansion:
///   1/(1 - q^m) = -q^{-m}/(1 - q^{-m}),   1/(1 + q^m) = q^{-m}/(1 + q^{-m}).
/// A term with denominator identically zero (m = 0, denom_sign = -1) is a
/// degenerate-term error.
struct LambertSpec {
  exp_t quad_a = 1;    // A
  exp_t quad_b = 0;    // B
  exp_t quad_c = 0;    // C
  exp_t lin_d = 1;     // D
  exp_t lin_e = 0;     // E
  int denom_sign = 1;  // denominator 1 + denom_sign*q^{Dn+E}
  bool alternating = false;
};

/// extra_range widens the summation window past the dynamic cutoff; the
/// result must not change, which the property suite exercises.
LaurentSeries lambert_sum(const LambertSpec& spec, exp_t order, int extra_range = 0);

/// Verifies the elementary product identities
///   (-q;q)(q;q^2) = 1
///   (q^a;q^b)(-q^a;q^b) = (q^{2a};q^{2b})
///   (cq^a;q^{2b})(cq^{a+b};q^{2b}) = (cq^a;q^b)
///   (cq^a;q^{kb})...(cq^{a+(k-1)b};q^{kb}) = (cq^a;q^b)
/// over the grid a,b in 1..4, c in {+-1, +-q}, k in 2..4, all to `order`.
/// On failure the offending parameter set is folded into check_id.
CheckReport check_elementary_identities(exp_t order);

}  // namespace qrank
