#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "qrank/laurent_series.hpp"

using namespace qrank;

namespace {

template <typename Fn>
std::optional<ErrorKind> error_kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

LaurentSeries geometric(exp_t order) {  // sum q^n
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(1));
  return LaurentSeries::from_coefficients(0, order, std::move(c));
}

LaurentSeries random_series(std::mt19937& rng, exp_t order, bool invertible = false) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<long long> lo_dist(-3, 3);
  const exp_t lo = lo_dist(rng);
  std::vector<Rational> c(static_cast<std::size_t>(order - lo) + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  if (invertible && c[0].is_zero()) c[0] = Rational(1, 2);
  return LaurentSeries::from_coefficients(lo, order, std::move(c));
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(3, -4) == Rational(-3, 4));
  CHECK(Rational(3, -4).denominator() == 4);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(5).is_integer());
  CHECK(!Rational(1, 2).is_integer());
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-7).str() == "-7");
  CHECK(error_kind_of([] { Rational(1, 0); }) == ErrorKind::invalid_parameter);
  CHECK(error_kind_of([] { Rational r = Rational(1) / Rational(0); (void)r; }) ==
        ErrorKind::invalid_parameter);
}

TEST_CASE("monomial construction") {
  const LaurentSeries one = LaurentSeries::monomial(Rational(1), 0, 10);
  CHECK(one.min_exp() == 0);
  CHECK(one.order() == 10);
  CHECK(one.coefficient(0) == Rational(1));
  CHECK(one.coefficient(10) == Rational(0));

  const LaurentSeries half_inv_q = LaurentSeries::monomial(Rational(1, 2), -1, 10);
  CHECK(half_inv_q.min_exp() == -1);
  CHECK(half_inv_q.coefficient(-1) == Rational(1, 2));
  CHECK(half_inv_q.coefficient(-5) == Rational(0));  // below min_exp: exactly zero

  CHECK(error_kind_of([] { LaurentSeries::monomial(Rational(-3), 2, 1); }) ==
        ErrorKind::invalid_truncation);
}

TEST_CASE("add and cancellation normal form") {
  const LaurentSeries a = LaurentSeries::monomial(Rational(1, 2), -1, 10);
  const LaurentSeries b = LaurentSeries::monomial(Rational(-1, 2), -1, 10);
  const LaurentSeries sum = add(a, b);
  CHECK(sum.is_zero());
  CHECK(sum.min_exp() == 0);  // canonical zero
  CHECK(sum.order() == 10);
}

TEST_CASE("telescoping product (1-q) * geometric = 1") {
  const exp_t n = 40;
  const LaurentSeries one_minus_q =
      sub(LaurentSeries::one(n), LaurentSeries::monomial(Rational(1), 1, n));
  const LaurentSeries prod = mul(one_minus_q, geometric(n));
  CHECK(equal_to_order(prod, LaurentSeries::one(n), n));
}

TEST_CASE("inverse") {
  const exp_t n = 30;
  const LaurentSeries one_minus_q =
      sub(LaurentSeries::one(n), LaurentSeries::monomial(Rational(1), 1, n));
  CHECK(equal_to_order(inverse(one_minus_q), geometric(n), n));

  const LaurentSeries two = LaurentSeries::monomial(Rational(2), 0, n);
  CHECK(inverse(two).coefficient(0) == Rational(1, 2));

  // q(1-q) inverts to q^{-1} * geometric
  const LaurentSeries shifted_factor = shifted(one_minus_q, 1);
  const LaurentSeries inv = inverse(shifted_factor);
  CHECK(inv.min_exp() == -1);
  CHECK(inv.coefficient(-1) == Rational(1));
  CHECK(inv.coefficient(5) == Rational(1));

  CHECK(error_kind_of([&] { inverse(LaurentSeries::zero(5)); }) == ErrorKind::non_invertible);
}

TEST_CASE("compose_power") {
  const LaurentSeries one_plus_q =
      add(LaurentSeries::one(3), LaurentSeries::monomial(Rational(1), 1, 3));
  const LaurentSeries squared = compose_power(one_plus_q, 2);
  CHECK(squared.order() == 7);  // 2*3 + 1
  CHECK(squared.coefficient(0) == Rational(1));
  CHECK(squared.coefficient(1) == Rational(0));
  CHECK(squared.coefficient(2) == Rational(1));

  const LaurentSeries q_inv = LaurentSeries::monomial(Rational(1), -1, 5);
  const LaurentSeries cubed = compose_power(q_inv, 3);
  CHECK(cubed.min_exp() == -3);
  CHECK(cubed.coefficient(-3) == Rational(1));

  CHECK(error_kind_of([&] { compose_power(one_plus_q, 0); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("extract_progression") {
  const LaurentSeries ones = geometric(30);
  const LaurentSeries every_third = extract_progression(ones, 0, 3);
  CHECK(every_third.order() == 10);
  for (exp_t e = 0; e <= 10; ++e) CHECK(every_third.coefficient(e) == Rational(1));

  // 1 + 4q + 4q^2, residue 2 mod 3 -> constant 4
  LaurentSeries s = LaurentSeries::from_coefficients(0, 2, {Rational(1), Rational(4), Rational(4)});
  const LaurentSeries picked = extract_progression(s, 2, 3);
  CHECK(picked.order() == 0);
  CHECK(picked.coefficient(0) == Rational(4));

  CHECK(error_kind_of([&] { extract_progression(s, 3, 3); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("coefficient and equality errors") {
  const LaurentSeries s = LaurentSeries::monomial(Rational(1), 0, 5);
  CHECK(error_kind_of([&] { s.coefficient(6); }) == ErrorKind::beyond_truncation);
  const LaurentSeries t = LaurentSeries::monomial(Rational(1), 0, 3);
  CHECK(error_kind_of([&] { equal_to_order(s, t, 5); }) == ErrorKind::insufficient_precision);
  CHECK(equal_to_order(s, t, 3));
}

TEST_CASE("first_discrepancy locates the smallest differing exponent") {
  const LaurentSeries a = geometric(10);
  LaurentSeries b = add(geometric(10), LaurentSeries::monomial(Rational(1, 3), 4, 10));
  const auto d = first_discrepancy(a, b, 10);
  REQUIRE(d.has_value());
  CHECK(d->exponent == 4);
  CHECK(d->lhs == Rational(1));
  CHECK(d->rhs == Rational(4, 3));
}

TEST_CASE("truncated and shifted") {
  const LaurentSeries g = geometric(20);
  const LaurentSeries t = truncated(g, 7);
  CHECK(t.order() == 7);
  CHECK(error_kind_of([&] { truncated(t, 9); }) == ErrorKind::insufficient_precision);
  const LaurentSeries sh = shifted(g, -2);
  CHECK(sh.min_exp() == -2);
  CHECK(sh.order() == 18);
  CHECK(sh.coefficient(-2) == Rational(1));
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(20240511);
  for (int trial = 0; trial < 40; ++trial) {
    const LaurentSeries a = random_series(rng, 50);
    const LaurentSeries b = random_series(rng, 50);
    const LaurentSeries c = random_series(rng, 50);

    {
      const LaurentSeries lhs = add(a, b);
      const LaurentSeries rhs = add(b, a);
      CHECK(equal_to_order(lhs, rhs, std::min(lhs.order(), rhs.order())));
    }
    {
      const LaurentSeries lhs = add(add(a, b), c);
      const LaurentSeries rhs = add(a, add(b, c));
      CHECK(equal_to_order(lhs, rhs, std::min(lhs.order(), rhs.order())));
    }
    {
      const LaurentSeries lhs = mul(a, b);
      const LaurentSeries rhs = mul(b, a);
      CHECK(equal_to_order(lhs, rhs, std::min(lhs.order(), rhs.order())));
    }
    {
      const LaurentSeries lhs = mul(mul(a, b), c);
      const LaurentSeries rhs = mul(a, mul(b, c));
      CHECK(equal_to_order(lhs, rhs, std::min(lhs.order(), rhs.order())));
    }
    {
      const LaurentSeries lhs = mul(a, add(b, c));
      const LaurentSeries rhs = add(mul(a, b), mul(a, c));
      CHECK(equal_to_order(lhs, rhs, std::min(lhs.order(), rhs.order())));
    }
  }
}

TEST_CASE("inverse is a two-sided inverse to full tracked order") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    const LaurentSeries a = random_series(rng, 40, true);
    const LaurentSeries inv = inverse(a);
    const LaurentSeries prod = mul(a, inv);
    CHECK(equal_to_order(prod, LaurentSeries::one(prod.order()), prod.order()));
  }
}

TEST_CASE("dissection round-trip") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    const LaurentSeries a = random_series(rng, 30);
    for (exp_t m = 2; m <= 5; ++m) {
      for (exp_t r = 0; r < m; ++r) {
        const LaurentSeries up = compose_power(a, m);
        const LaurentSeries shifted_up =
            mul(up, LaurentSeries::monomial(Rational(1), r, up.order() + r - up.min_exp() + 1));
        const LaurentSeries back = extract_progression(shifted_up, r, m);
        CHECK(back.order() >= a.order());
        CHECK(equal_to_order(back, a, a.order()));
      }
    }
  }
}
