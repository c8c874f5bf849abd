#include "qrank/verify.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>

namespace qrank {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void require_order(exp_t order) {
  if (order < 0) throw Error(ErrorKind::invalid_parameter, "order must be >= 0");
}

void require_integral(const LaurentSeries& s, const std::string& what) {
  if (!s.is_integral())
    throw Error(ErrorKind::assembly, what + " has a non-integer coefficient");
}

CheckReport make_report(std::string check_id, exp_t order) {
  CheckReport report;
  report.check_id = std::move(check_id);
  report.order = order;
  return report;
}

CheckReport finish_pass(CheckReport report, Clock::time_point start) {
  report.runtime_ms = elapsed_ms(start);
  return report;
}

CheckReport finish_fail(CheckReport report, Clock::time_point start, Discrepancy d) {
  report.status = CheckStatus::fail;
  report.first_discrepancy = std::move(d);
  report.runtime_ms = elapsed_ms(start);
  return report;
}

// The two bilateral sums of the mod-6 M2 generating function.
const LambertSpec kMaoSumOdd{18, 9, 0, 18, 3, -1, true};    // (-1)^n q^{18n^2+9n}/(1-q^{18n+3})
const LambertSpec kMaoSumEven{18, 9, -1, 18, 0, 1, true};   // (-1)^n q^{18n^2+9n-1}/(1+q^{18n})
const LambertSpec kGfpropSum{6, 3, 0, 6, 0, 1, true};       // (-1)^n q^{6n^2+3n}/(1+q^{6n})

// The two J-quotients of the four-term generating function share a
// denominator but weight J_{6,36} and J_{18,36} differently.
LaurentSeries mao_j_quotient_q(exp_t order) {  // carries the q prefactor
  ProductSpec spec;
  spec.j2(6, 36, 2).j2(18, 36, 1).j(36, 3).j2(3, 36, -2).j2(9, 36, -1).j2(15, 36, -2);
  return eval_product(spec, order);
}

LaurentSeries mao_j_quotient_half_q_inv(exp_t order) {  // carries the 1/(2q) prefactor
  ProductSpec spec;
  spec.j2(6, 36, 1).j2(18, 36, 2).j(36, 3).j2(3, 36, -2).j2(9, 36, -1).j2(15, 36, -2);
  return eval_product(spec, order);
}

LaurentSeries gfprop_j_quotient_half(exp_t order) {
  ProductSpec spec;
  spec.j2(2, 12, 1).j2(6, 12, 2).j(12, 3).j2(1, 12, -2).j2(5, 12, -2);
  return scale(eval_product(spec, order), Rational(1, 2));
}

}  // namespace

LaurentSeries mao_gf_rhs(exp_t order) {
  require_order(order);
  const exp_t inner = order + 2;  // absorbs the 1/(2q) shift
  const LaurentSeries inv_j936 = inverse(J2(9, 36, inner));
  const LaurentSeries t1 = mul(inv_j936, lambert_sum(kMaoSumOdd, inner));
  const LaurentSeries t2 = shifted(mao_j_quotient_q(inner), 1);
  const LaurentSeries t3 = scale(shifted(mao_j_quotient_half_q_inv(inner), -1), Rational(1, 2));
  const LaurentSeries t4 = mul(inv_j936, lambert_sum(kMaoSumEven, inner));
  const LaurentSeries rhs = sub(add(add(t1, t2), t3), t4);
  if (rhs.min_exp() < 0)
    throw Error(ErrorKind::assembly, "q^{-1} terms of the rank-difference RHS did not cancel");
  require_integral(rhs, "rank-difference generating function");
  return truncated(rhs, order);
}

LaurentSeries gfprop_inner(exp_t order) {
  require_order(order);
  return sub(gfprop_j_quotient_half(order), lambert_sum(kGfpropSum, order));
}

LaurentSeries gfprop_rhs(exp_t order) {
  require_order(order);
  const LaurentSeries inner = gfprop_inner(order + 1);
  if (!inner.coefficient(0).is_zero())
    throw Error(ErrorKind::assembly, "constant term inside the d(3n+2) parentheses is nonzero");
  const LaurentSeries rhs = mul(shifted(inner, -1), inverse(J2(3, 12, order)));
  require_integral(rhs, "d(3n+2) generating function");
  return rhs;
}

LaurentSeries phi2_sum(exp_t order) {
  return add(pow(phi(1, 1, order), 2), pow(phi(1, 3, order), 2));
}

LaurentSeries phi2_ratio(exp_t order) {
  const LaurentSeries ratio = mul(phi2_sum(order), inverse(J2(3, 12, order)));
  require_integral(ratio, "(phi^2(q) + phi^2(q^3)) / J_{3,12}");
  return ratio;
}

CheckReport check_maogf(exp_t order) {
  const auto start = Clock::now();
  CheckReport report = make_report("maogf", order);
  const LaurentSeries rhs = mao_gf_rhs(order);
  const LaurentSeries oracle = d_series(static_cast<int>(order));
  if (auto d = first_discrepancy(rhs, oracle, order)) return finish_fail(report, start, *d);
  return finish_pass(report, start);
}

CheckReport check_gfprop(exp_t order) {
  const auto start = Clock::now();
  CheckReport report = make_report("gfprop", order);
  const LaurentSeries rhs = gfprop_rhs(order);  // asserts the vanishing constant term
  const exp_t arg_order = 3 * order + 2;
  const LaurentSeries oracle = extract_progression(d_series(static_cast<int>(arg_order)), 2, 3);
  if (auto d = first_discrepancy(rhs, oracle, order)) return finish_fail(report, start, *d);
  const LaurentSeries dissected = extract_progression(mao_gf_rhs(arg_order), 2, 3);
  if (auto d = first_discrepancy(rhs, dissected, order)) return finish_fail(report, start, *d);
  return finish_pass(report, start);
}

CheckReport check_phiid(exp_t order) {
  const auto start = Clock::now();
  CheckReport report = make_report("phiid", order);
  ProductSpec lhs_spec;
  lhs_spec.j2(2, 12, 1).j2(6, 12, 2).j(12, 3).j2(1, 12, -2).j2(5, 12, -2);
  const LaurentSeries lhs = eval_product(lhs_spec, order);
  const LaurentSeries rhs = scale(phi2_sum(order), Rational(1, 2));
  if (auto d = first_discrepancy(lhs, rhs, order)) return finish_fail(report, start, *d);
  // the intermediate form phi^2(-q^6) (-q,-q^5;q^6) / (q,q^5;q^6) must agree
  // with both sides
  ProductSpec ratio_spec;
  ratio_spec.pochhammer(-1, 1, 6).pochhammer(-1, 5, 6).pochhammer(1, 1, 6, -1).pochhammer(1, 5, 6, -1);
  const LaurentSeries middle =
      mul(pow(theta_f(-1, 6, -1, 6, order), 2), eval_product(ratio_spec, order));
  if (auto d = first_discrepancy(middle, lhs, order)) return finish_fail(report, start, *d);
  return finish_pass(report, start);
}

CheckReport check_baruah_barman(exp_t order) {
  const auto start = Clock::now();
  CheckReport report = make_report("baruah-barman", order);
  const LaurentSeries lhs = phi2_sum(order);
  const LaurentSeries numerator = mul(
      scale(pow(theta_f(-1, 6, -1, 6, order), 2), Rational(2)),
      mul(chi(1, 1, order), theta_f(-1, 3, -1, 9, order)));  // 2 phi^2(-q^6) chi(q) psi(-q^3)
  const LaurentSeries denominator = mul(chi(-1, 1, order), psi(1, 3, order));
  const LaurentSeries rhs = mul(numerator, inverse(denominator));
  if (auto d = first_discrepancy(lhs, rhs, order)) return finish_fail(report, start, *d);
  return finish_pass(report, start);
}

CheckReport check_main_theorem(exp_t order) {
  const auto start = Clock::now();
  CheckReport report = make_report("main-theorem", order);
  const Rational one(1);

  // (i) positivity of d(9n+2), d(9n+5) through the generating function
  const LaurentSeries gf = mao_gf_rhs(order);
  for (exp_t n = 0;; ++n) {
    const exp_t a2 = 9 * n + 2;
    const exp_t a5 = 9 * n + 5;
    if (a2 > order) break;
    if (gf.coefficient(a2) < one)
      return finish_fail(report, start, {a2, gf.coefficient(a2), one});
    if (a5 <= order && gf.coefficient(a5) < one)
      return finish_fail(report, start, {a5, gf.coefficient(a5), one});
  }

  // (ii) the same through the enumeration oracle, up to its feasible bound
  const exp_t oracle_bound = std::min<exp_t>(order, 100);
  const LaurentSeries oracle = d_series(static_cast<int>(oracle_bound));
  for (exp_t n = 0; 9 * n + 2 <= oracle_bound; ++n) {
    const exp_t a2 = 9 * n + 2;
    const exp_t a5 = 9 * n + 5;
    if (oracle.coefficient(a2) < one)
      return finish_fail(report, start, {a2, oracle.coefficient(a2), one});
    if (a5 <= oracle_bound && oracle.coefficient(a5) < one)
      return finish_fail(report, start, {a5, oracle.coefficient(a5), one});
  }

  // (iii) strict positivity of (phi^2(q) + phi^2(q^3)) / J_{3,12}
  const LaurentSeries ratio = phi2_ratio(order);
  for (exp_t e = 0; e <= order; ++e)
    if (ratio.coefficient(e) < one) return finish_fail(report, start, {e, ratio.coefficient(e), one});

  // structural decomposition: numerator (2 + 4q + 4q^2 + ...) with
  // non-negative coefficients, times sum q^{3n}, times the non-negative
  // expansion of 1/(q^9,q^9,q^12;q^12)
  const LaurentSeries numerator = phi2_sum(order);
  const Rational expected_head[] = {Rational(2), Rational(4), Rational(4)};
  for (exp_t e = 0; e <= std::min<exp_t>(order, 2); ++e)
    if (numerator.coefficient(e) != expected_head[e])
      return finish_fail(report, start, {e, numerator.coefficient(e), expected_head[e]});
  for (exp_t e = 0; e <= order; ++e)
    if (numerator.coefficient(e).sign() < 0)
      return finish_fail(report, start, {e, numerator.coefficient(e), Rational(0)});
  ProductSpec tail_spec;
  tail_spec.pochhammer(1, 9, 12, 2).pochhammer(1, 12, 12, 1);
  const LaurentSeries tail = inverse(eval_product(tail_spec, order));
  if (tail.coefficient(0) != one) return finish_fail(report, start, {0, tail.coefficient(0), one});
  for (exp_t e = 0; e <= order; ++e)
    if (tail.coefficient(e).sign() < 0)
      return finish_fail(report, start, {e, tail.coefficient(e), Rational(0)});
  ProductSpec geometric_spec;
  geometric_spec.pochhammer_finite(1, 3, 3, 1, -1);  // 1/(1 - q^3)
  const LaurentSeries assembled =
      mul(mul(numerator, eval_product(geometric_spec, order)), tail);
  for (exp_t e = 0; e <= order; ++e)
    if (assembled.coefficient(e) < one)
      return finish_fail(report, start, {e, assembled.coefficient(e), one});

  return finish_pass(report, start);
}

CheckReport conjecture_scan(int id, int max_n) {
  if (max_n < 0) throw Error(ErrorKind::invalid_parameter, "max_n must be >= 0");
  struct Scan {
    RankFlavor flavor;
    int modulus;
    int step, offset;      // scanned argument step*n + offset
    int lhs[2], rhs[2];    // residue groups
    bool strict;
    int n_start;
  };
  static const Scan scans[] = {
      {RankFlavor::dyson, 10, 5, 0, {0, 1}, {4, 5}, true, 0},   // 1
      {RankFlavor::dyson, 10, 5, 0, {1, 2}, {3, 4}, false, 1},  // 2
      {RankFlavor::m2, 10, 5, 0, {0, 1}, {4, 5}, true, 0},      // 3
      {RankFlavor::m2, 10, 5, 4, {0, 1}, {4, 5}, true, 0},      // 4
      {RankFlavor::m2, 10, 5, 0, {1, 2}, {3, 4}, true, 1},      // 5
      {RankFlavor::m2, 10, 5, 2, {1, 2}, {3, 4}, true, 1},      // 6
      {RankFlavor::m2, 6, 3, 2, {0, 1}, {2, 3}, true, 0},       // 7
  };
  if (id < 1 || id > 7)
    throw Error(ErrorKind::invalid_parameter, "conjecture id must be in 1..7");
  const Scan& scan = scans[id - 1];

  const auto start = Clock::now();
  CheckReport report = make_report("conjecture-" + std::to_string(id), max_n);
  report.status = CheckStatus::holds_to_order;
  const RankTable table = rank_table(scan.flavor, scan.modulus, max_n);
  for (int n = scan.n_start;; ++n) {
    const long long arg = static_cast<long long>(scan.step) * n + scan.offset;
    if (arg > max_n) break;
    const Integer lhs = table.at(scan.lhs[0], static_cast<int>(arg)) +
                        table.at(scan.lhs[1], static_cast<int>(arg));
    const Integer rhs = table.at(scan.rhs[0], static_cast<int>(arg)) +
                        table.at(scan.rhs[1], static_cast<int>(arg));
    const bool ok = scan.strict ? lhs > rhs : lhs >= rhs;
    if (!ok) {
      report.status = CheckStatus::counterexample;
      report.witnesses = std::vector<exp_t>{n};
      break;
    }
  }
  return finish_pass(report, start);
}

std::vector<CheckReport> conclusion_checks(exp_t order) {
  require_order(order);
  const auto start = Clock::now();
  const LaurentSeries inner = gfprop_inner(order);

  CheckReport negatives = make_report("conclusion-negative-coeffs", order);
  std::vector<exp_t> found;
  for (exp_t e = inner.min_exp(); e <= order && found.size() < 32; ++e)
    if (inner.coefficient(e).sign() < 0) found.push_back(e);
  if (found.empty()) {
    negatives.status = CheckStatus::fail;
    negatives.first_discrepancy = Discrepancy{order, Rational(0), Rational(1)};
  } else {
    negatives.witnesses = std::move(found);
  }
  negatives.runtime_ms = elapsed_ms(start);

  const auto start2 = Clock::now();
  CheckReport nonneg = make_report("conclusion-nonneg-q12", order);
  nonneg.status = CheckStatus::holds_to_order;
  ProductSpec geo12;
  geo12.pochhammer_finite(1, 12, 12, 1, -1);  // 1/(1 - q^12)
  const LaurentSeries damped = mul(inner, eval_product(geo12, order));
  for (exp_t e = damped.min_exp(); e <= order; ++e) {
    if (damped.coefficient(e).sign() < 0) {
      nonneg.status = CheckStatus::counterexample;
      nonneg.witnesses = std::vector<exp_t>{e};
      break;
    }
  }
  nonneg.runtime_ms = elapsed_ms(start2);
  return {std::move(negatives), std::move(nonneg)};
}

std::vector<CheckReport> check_dyson_equidistribution(int max_k) {
  if (max_k < 0) throw Error(ErrorKind::invalid_parameter, "max_k must be >= 0");
  std::vector<CheckReport> out;

  const auto start5 = Clock::now();
  CheckReport mod5 = make_report("dyson-equidistribution-mod5", max_k);
  {
    const int top = 5 * max_k + 4;
    const RankTable table = rank_table(RankFlavor::dyson, 5, top);
    const std::vector<Integer> p = partition_counts(top);
    for (int k = 0; k <= max_k && mod5.status == CheckStatus::pass; ++k) {
      const int arg = 5 * k + 4;
      const Integer expected = p[static_cast<std::size_t>(arg)] / 5;
      for (int s = 0; s < 5; ++s) {
        if (table.at(s, arg) != expected) {
          mod5 = finish_fail(std::move(mod5), start5,
                             {arg, Rational(table.at(s, arg)), Rational(expected)});
          break;
        }
      }
    }
  }
  if (mod5.status == CheckStatus::pass) mod5.runtime_ms = elapsed_ms(start5);
  out.push_back(std::move(mod5));

  // Resolve which mod-7 equidistribution statement actually holds: the
  // argument of N and the argument of p are tried over the 7k+4 / 7k+5 /
  // 7k+6 variants, including the mismatched printed combination.
  const auto start7 = Clock::now();
  const int top = 7 * max_k + 6;
  const RankTable table = rank_table(RankFlavor::dyson, 7, top);
  const std::vector<Integer> p = partition_counts(top);
  const std::pair<int, int> variants[] = {{4, 6}, {4, 4}, {5, 5}, {6, 6}};
  auto holds = [&](int d_arg, int d_p) {
    for (int k = 0; k <= max_k; ++k) {
      const int arg = 7 * k + d_arg;
      const int parg = 7 * k + d_p;
      if (p[static_cast<std::size_t>(parg)] % 7 != 0) return false;
      const Integer expected = p[static_cast<std::size_t>(parg)] / 7;
      for (int s = 0; s < 7; ++s)
        if (table.at(s, arg) != expected) return false;
    }
    return true;
  };
  CheckReport mod7;
  mod7.order = max_k;
  mod7.status = CheckStatus::fail;
  for (auto [d_arg, d_p] : variants) {
    if (holds(d_arg, d_p)) {
      mod7.check_id = "dyson-equidistribution-mod7[N(t,7,7k+" + std::to_string(d_arg) +
                      ")=p(7k+" + std::to_string(d_p) + ")/7]";
      mod7.status = CheckStatus::pass;
      break;
    }
  }
  if (mod7.status == CheckStatus::fail) {
    mod7.check_id = "dyson-equidistribution-mod7[unresolved]";
    mod7.first_discrepancy = Discrepancy{4, Rational(table.at(0, 4)), Rational(p[4] / 7)};
  }
  mod7.runtime_ms = elapsed_ms(start7);
  out.push_back(std::move(mod7));
  return out;
}

CheckReport check_ramanujan_congruences(int max_argument) {
  if (max_argument < 0) throw Error(ErrorKind::invalid_parameter, "max_argument must be >= 0");
  const auto start = Clock::now();
  CheckReport report = make_report("ramanujan", max_argument);
  const std::vector<Integer> p = partition_counts(max_argument);
  const std::pair<int, int> families[] = {{5, 4}, {7, 5}, {11, 6}};
  for (auto [m, r] : families) {
    for (int arg = r; arg <= max_argument; arg += m) {
      const Integer residue = p[static_cast<std::size_t>(arg)] % m;
      if (residue != 0)
        return finish_fail(report, start, {arg, Rational(residue), Rational(0)});
    }
  }
  return finish_pass(report, start);
}

}  // namespace qrank
