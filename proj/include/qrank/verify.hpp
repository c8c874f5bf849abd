#pragma once

#include <vector>

#include "qrank/check_report.hpp"
#include "qrank/partitions.hpp"
#include "qrank/qseries.hpp"

namespace qrank {

// Assemblies of the named generating functions. Each throws an assembly
// error if a structural invariant fails (q^{-1} terms that must cancel,
// constant terms that must vanish, coefficients that must be integers),
// since any of those signals an implementation bug rather than a refuted
// identity.

/// Four-term right-hand side of the M2 rank-difference generating function
/// mod 6: two bilateral Lambert sums against 1/J_{9,36} plus a pair of
/// J-quotients carrying q and 1/(2q) prefactors. Power series with integer
/// coefficients; equals sum d(n) q^n.
LaurentSeries mao_gf_rhs(exp_t order);

/// The parenthesized expression of the d(3n+2) generating function:
/// J_{2,12} J_{6,12}^2 J_{12}^3 / (2 J_{1,12}^2 J_{5,12}^2) minus the
/// Lambert sum over (-1)^n q^{6n^2+3n}/(1+q^{6n}). Constant term is zero.
LaurentSeries gfprop_inner(exp_t order);

/// Full right-hand side 1/(q J_{3,12}) * gfprop_inner; equals sum d(3n+2) q^n.
LaurentSeries gfprop_rhs(exp_t order);

LaurentSeries phi2_sum(exp_t order);    // phi^2(q) + phi^2(q^3), via theta sums
LaurentSeries phi2_ratio(exp_t order);  // (phi^2(q) + phi^2(q^3)) / J_{3,12}

// Checks. Theorem checks report pass/fail; conjecture scans report
// holds-to-order/counterexample.

/// mao_gf_rhs against the enumeration oracle d_series, coefficientwise.
CheckReport check_maogf(exp_t order);

/// gfprop_rhs against extract_progression(d_series, 2, 3) and against the
/// 3-dissection of mao_gf_rhs; also pins the vanishing constant term.
CheckReport check_gfprop(exp_t order);

/// J_{2,12} J_{6,12}^2 J_{12}^3 / (J_{1,12}^2 J_{5,12}^2) =
/// (phi^2(q) + phi^2(q^3)) / 2, with the phi^2(-q^6) product intermediate
/// checked against both sides. LHS from products, RHS from theta sums.
CheckReport check_phiid(exp_t order);

/// phi^2(q) + phi^2(q^3) = 2 phi^2(-q^6) chi(q) psi(-q^3) / (chi(-q) psi(q^3)).
CheckReport check_baruah_barman(exp_t order);

/// d(9n+2) >= 1 and d(9n+5) >= 1 through the generating function and the
/// enumeration oracle, plus strict positivity of (phi^2(q)+phi^2(q^3))/J_{3,12}
/// and the three-factor positivity decomposition behind it.
CheckReport check_main_theorem(exp_t order);

/// Oracle scan of one of the seven conjectured rank-difference inequalities:
///   1: N(0,10,5n)+N(1,10,5n)     >  N(4,10,5n)+N(5,10,5n)        n >= 0
///   2: N(1,10,5n)+N(2,10,5n)     >= N(3,10,5n)+N(4,10,5n)        n >= 1
///   3: N2(0,10,5n)+N2(1,10,5n)   >  N2(4,10,5n)+N2(5,10,5n)      n >= 0
///   4: N2(0,10,5n+4)+N2(1,10,5n+4) > N2(4,10,5n+4)+N2(5,10,5n+4) n >= 0
///   5: N2(1,10,5n)+N2(2,10,5n)   >  N2(3,10,5n)+N2(4,10,5n)      n >= 1
///   6: N2(1,10,5n+2)+N2(2,10,5n+2) > N2(3,10,5n+2)+N2(4,10,5n+2) n >= 1
///   7: N2(0,6,3n+2)+N2(1,6,3n+2) >  N2(2,6,3n+2)+N2(3,6,3n+2)    n >= 0
/// Arguments range up to max_n. A failing n is returned as the witness.
CheckReport conjecture_scan(int id, int max_n);

/// Two follow-up observations on gfprop_inner: (i) it has negative
/// coefficients (witness exponents reported), (ii) divided by (1 - q^12)
/// every coefficient up to `order` is non-negative (conjecture scan).
std::vector<CheckReport> conclusion_checks(exp_t order);

/// N(s,5,5k+4) = p(5k+4)/5 for k <= max_k, plus resolution of the mod-7
/// equidistribution variant that actually holds; the resolved variant is
/// named in the returned check_id.
std::vector<CheckReport> check_dyson_equidistribution(int max_k);

/// p(5k+4) = 0 mod 5, p(7k+5) = 0 mod 7, p(11k+6) = 0 mod 11 for all
/// arguments <= max_argument.
CheckReport check_ramanujan_congruences(int max_argument);

}  // namespace qrank
