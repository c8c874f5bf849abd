#pragma once

#include <optional>
#include <vector>

#include "qrank/error.hpp"
#include "qrank/rational.hpp"

namespace qrank {

using exp_t = long long;

/// Truncated formal Laurent series in q with exact rational coefficients.
///
/// A series stores one dense coefficient per exponent in [min_exp, order].
/// Coefficients below min_exp are exactly zero; coefficients above order are
/// *unknown*, never implicitly zero — asking for one is an error. Every
/// arithmetic operation propagates the truncation order conservatively so
/// that each reported coefficient is exact:
///
///   add/sub:  order = min(a.order, b.order)
///   mul:      order = min(a.order + b.min_exp, b.order + a.min_exp)
///   inverse:  order = a.order - 2*a.min_exp
///   q -> q^k: order = k*a.order + (k-1)
///
/// Normal form: a nonzero series has a nonzero coefficient at min_exp; the
/// zero series has min_exp = 0. Values are immutable after construction and
/// all operations are pure, so independent evaluations can run in parallel.
class LaurentSeries {
 public:
  /// Zero series: nothing but zeros known up to `order`.
  LaurentSeries() : min_exp_(0), order_(-1) {}
  static LaurentSeries zero(exp_t order);

  /// Single term c*q^k, truncated at `order`. Requires order >= k.
  static LaurentSeries monomial(const Rational& c, exp_t k, exp_t order);
  static LaurentSeries one(exp_t order) { return monomial(Rational(1), 0, order); }

  /// Adopts a dense coefficient vector (coeffs[i] belongs to q^{min_exp+i})
  /// of exactly order - min_exp + 1 entries; normalizes to canonical form.
  static LaurentSeries from_coefficients(exp_t min_exp, exp_t order, std::vector<Rational> coeffs);

  exp_t min_exp() const { return min_exp_; }
  exp_t order() const { return order_; }

  bool is_zero() const { return coeffs_.empty() || coeffs_.front().is_zero(); }
  /// True when every stored coefficient has denominator 1.
  bool is_integral() const;

  /// Exact coefficient of q^k. Zero below min_exp; throws beyond-truncation
  /// for k > order.
  const Rational& coefficient(exp_t k) const;

  const std::vector<Rational>& raw_coefficients() const { return coeffs_; }

 private:
  LaurentSeries(exp_t min_exp, exp_t order, std::vector<Rational> coeffs)
      : min_exp_(min_exp), order_(order), coeffs_(std::move(coeffs)) {
    normalize();
  }

  void normalize();

  exp_t min_exp_;
  exp_t order_;
  std::vector<Rational> coeffs_;  // exponent min_exp_ + i, i = 0..order_-min_exp_

  friend LaurentSeries add(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries sub(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries mul(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries scale(const LaurentSeries&, const Rational&);
  friend LaurentSeries inverse(const LaurentSeries&);
  friend LaurentSeries compose_power(const LaurentSeries&, exp_t);
  friend LaurentSeries extract_progression(const LaurentSeries&, exp_t, exp_t);
  friend LaurentSeries truncated(const LaurentSeries&, exp_t);
  friend LaurentSeries shifted(const LaurentSeries&, exp_t);
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries scale(const LaurentSeries& a, const Rational& c);

/// Multiplicative inverse. Requires a nonzero leading coefficient.
LaurentSeries inverse(const LaurentSeries& a);

/// Substitutes q -> q^k (k >= 1); exponent e becomes k*e.
LaurentSeries compose_power(const LaurentSeries& a, exp_t k);

/// m-dissection component: sum of coeff(m*n + r) q^n over stored exponents
/// congruent to r mod m, 0 <= r < m.
LaurentSeries extract_progression(const LaurentSeries& a, exp_t r, exp_t m);

/// Repeated multiplication; k >= 0.
LaurentSeries pow(const LaurentSeries& a, unsigned k);

/// Same coefficients with order lowered to new_order (<= a.order).
LaurentSeries truncated(const LaurentSeries& a, exp_t new_order);

/// Exact multiplication by q^k: shifts min_exp and order alike.
LaurentSeries shifted(const LaurentSeries& a, exp_t k);

struct Discrepancy {
  exp_t exponent = 0;
  Rational lhs;
  Rational rhs;
};

/// Compares every exponent <= n; returns the smallest differing exponent
/// with both values, or nullopt when equal. Throws insufficient-precision
/// when n exceeds either tracked order.
std::optional<Discrepancy> first_discrepancy(const LaurentSeries& a,
                                             const LaurentSeries& b, exp_t n);
bool equal_to_order(const LaurentSeries& a, const LaurentSeries& b, exp_t n);

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return sub(a, b); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }
inline LaurentSeries operator*(const LaurentSeries& a, const Rational& c) { return scale(a, c); }
inline LaurentSeries operator*(const Rational& c, const LaurentSeries& a) { return scale(a, c); }

}  // namespace qrank
