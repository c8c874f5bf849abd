#include "qrank/laurent_series.hpp"

#include <algorithm>
#include <ostream>

namespace qrank {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

exp_t floor_div(exp_t x, exp_t m) {
  // m > 0
  exp_t q = x / m;
  if ((x % m) != 0 && x < 0) --q;
  return q;
}

exp_t ceil_div(exp_t x, exp_t m) { return floor_div(x + m - 1, m); }

const Rational kZero{};

}  // namespace

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    // canonical zero: base exponent 0, zeros kept up to order
    min_exp_ = 0;
    coeffs_.assign(order_ >= 0 ? static_cast<std::size_t>(order_) + 1 : 0, Rational());
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_exp_ += static_cast<exp_t>(lead);
  }
}

LaurentSeries LaurentSeries::zero(exp_t order) {
  return LaurentSeries(0, order, {});
}

LaurentSeries LaurentSeries::from_coefficients(exp_t min_exp, exp_t order,
                                               std::vector<Rational> coeffs) {
  const exp_t expected = order >= min_exp ? order - min_exp + 1 : 0;
  if (static_cast<exp_t>(coeffs.size()) != expected) {
    throw Error(ErrorKind::invalid_parameter,
                "coefficient count " + std::to_string(coeffs.size()) + " does not match range [" +
                    std::to_string(min_exp) + ", " + std::to_string(order) + "]");
  }
  return LaurentSeries(min_exp, order, std::move(coeffs));
}

LaurentSeries LaurentSeries::monomial(const Rational& c, exp_t k, exp_t order) {
  if (order < k) {
    throw Error(ErrorKind::invalid_truncation,
                "monomial exponent " + std::to_string(k) + " above order " + std::to_string(order));
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(order - k) + 1);
  coeffs[0] = c;
  return LaurentSeries(k, order, std::move(coeffs));
}

bool LaurentSeries::is_integral() const {
  for (const Rational& c : coeffs_)
    if (!c.is_integer()) return false;
  return true;
}

const Rational& LaurentSeries::coefficient(exp_t k) const {
  if (k > order_) {
    throw Error(ErrorKind::beyond_truncation,
                "coefficient of q^" + std::to_string(k) + " unknown beyond order " +
                    std::to_string(order_));
  }
  if (k < min_exp_) return kZero;
  return coeffs_[static_cast<std::size_t>(k - min_exp_)];
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
  const exp_t order = std::min(a.order_, b.order_);
  const exp_t lo = std::min(a.min_exp_, b.min_exp_);
  std::vector<Rational> coeffs(order >= lo ? static_cast<std::size_t>(order - lo) + 1 : 0);
  for (exp_t e = lo; e <= order; ++e) {
    Rational v;
    if (e >= a.min_exp_ && e <= a.order_) v += a.coeffs_[static_cast<std::size_t>(e - a.min_exp_)];
    if (e >= b.min_exp_ && e <= b.order_) v += b.coeffs_[static_cast<std::size_t>(e - b.min_exp_)];
    coeffs[static_cast<std::size_t>(e - lo)] = std::move(v);
  }
  return LaurentSeries(lo, order, std::move(coeffs));
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) {
  const exp_t order = std::min(a.order_, b.order_);
  const exp_t lo = std::min(a.min_exp_, b.min_exp_);
  std::vector<Rational> coeffs(order >= lo ? static_cast<std::size_t>(order - lo) + 1 : 0);
  for (exp_t e = lo; e <= order; ++e) {
    Rational v;
    if (e >= a.min_exp_ && e <= a.order_) v += a.coeffs_[static_cast<std::size_t>(e - a.min_exp_)];
    if (e >= b.min_exp_ && e <= b.order_) v -= b.coeffs_[static_cast<std::size_t>(e - b.min_exp_)];
    coeffs[static_cast<std::size_t>(e - lo)] = std::move(v);
  }
  return LaurentSeries(lo, order, std::move(coeffs));
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
  const exp_t order = std::min(a.order_ + b.min_exp_, b.order_ + a.min_exp_);
  if (a.is_zero() || b.is_zero()) return LaurentSeries(0, order, {});
  const exp_t lo = a.min_exp_ + b.min_exp_;
  const std::size_t n = order >= lo ? static_cast<std::size_t>(order - lo) + 1 : 0;
  std::vector<Rational> coeffs(n);
  const std::size_t na = a.coeffs_.size();
  const std::size_t nb = b.coeffs_.size();
  for (std::size_t i = 0; i < na && i < n; ++i) {
    const Rational& ai = a.coeffs_[i];
    if (ai.is_zero()) continue;
    const std::size_t jmax = std::min(nb, n - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      const Rational& bj = b.coeffs_[j];
      if (bj.is_zero()) continue;
      coeffs[i + j] += ai * bj;
    }
  }
  return LaurentSeries(lo, order, std::move(coeffs));
}

LaurentSeries scale(const LaurentSeries& a, const Rational& c) {
  if (c.is_zero()) return LaurentSeries(0, a.order_, {});
  std::vector<Rational> coeffs(a.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) coeffs[i] = a.coeffs_[i] * c;
  return LaurentSeries(a.min_exp_, a.order_, std::move(coeffs));
}

LaurentSeries inverse(const LaurentSeries& a) {
  if (a.is_zero()) {
    throw Error(ErrorKind::non_invertible, "zero series has no inverse");
  }
  // normal form guarantees coeffs_[0] is the nonzero leading coefficient
  const Rational lead_inv = Rational(1) / a.raw_coefficients().front();
  const std::size_t n = a.raw_coefficients().size();  // relative order K + 1
  std::vector<Rational> out(n);
  out[0] = lead_inv;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      const Rational& aj = a.raw_coefficients()[j];
      if (aj.is_zero()) continue;
      acc += aj * out[k - j];
    }
    out[k] = -(acc * lead_inv);
  }
  const exp_t m = a.min_exp();
  return LaurentSeries(-m, a.order() - 2 * m, std::move(out));
}

LaurentSeries compose_power(const LaurentSeries& a, exp_t k) {
  if (k < 1) throw Error(ErrorKind::invalid_parameter, "compose_power requires k >= 1");
  const exp_t order = k * a.order_ + (k - 1);
  if (a.is_zero()) return LaurentSeries(0, order, {});
  const exp_t lo = k * a.min_exp_;
  std::vector<Rational> coeffs(static_cast<std::size_t>(order - lo) + 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    coeffs[i * static_cast<std::size_t>(k)] = a.coeffs_[i];
  return LaurentSeries(lo, order, std::move(coeffs));
}

LaurentSeries extract_progression(const LaurentSeries& a, exp_t r, exp_t m) {
  if (m < 1 || r < 0 || r >= m) {
    throw Error(ErrorKind::invalid_parameter, "extract_progression requires 0 <= r < m");
  }
  const exp_t n_hi = floor_div(a.order_ - r, m);
  const exp_t n_lo = ceil_div(a.min_exp_ - r, m);
  if (n_hi < n_lo) return LaurentSeries(0, n_hi, {});
  std::vector<Rational> coeffs(static_cast<std::size_t>(n_hi - n_lo) + 1);
  for (exp_t n = n_lo; n <= n_hi; ++n) {
    const exp_t e = m * n + r;
    if (e < a.min_exp_) continue;
    coeffs[static_cast<std::size_t>(n - n_lo)] = a.coeffs_[static_cast<std::size_t>(e - a.min_exp_)];
  }
  return LaurentSeries(n_lo, n_hi, std::move(coeffs));
}

LaurentSeries pow(const LaurentSeries& a, unsigned k) {
  if (k == 0) return LaurentSeries::one(a.order());
  LaurentSeries r = a;
  for (unsigned i = 1; i < k; ++i) r = mul(r, a);
  return r;
}

LaurentSeries truncated(const LaurentSeries& a, exp_t new_order) {
  if (new_order > a.order_) {
    throw Error(ErrorKind::insufficient_precision,
                "cannot extend order " + std::to_string(a.order_) + " to " + std::to_string(new_order));
  }
  if (new_order == a.order_) return a;
  std::vector<Rational> coeffs;
  if (new_order >= a.min_exp_) {
    coeffs.assign(a.coeffs_.begin(),
                  a.coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order - a.min_exp_ + 1));
  }
  return LaurentSeries(a.min_exp_, new_order, std::move(coeffs));
}

LaurentSeries shifted(const LaurentSeries& a, exp_t k) {
  return LaurentSeries(a.min_exp_ + k, a.order_ + k, a.coeffs_);
}

std::optional<Discrepancy> first_discrepancy(const LaurentSeries& a, const LaurentSeries& b,
                                             exp_t n) {
  if (n > a.order() || n > b.order()) {
    throw Error(ErrorKind::insufficient_precision,
                "comparison to order " + std::to_string(n) + " exceeds tracked orders " +
                    std::to_string(a.order()) + ", " + std::to_string(b.order()));
  }
  for (exp_t e = std::min(a.min_exp(), b.min_exp()); e <= n; ++e) {
    const Rational& ca = a.coefficient(e);
    const Rational& cb = b.coefficient(e);
    if (ca != cb) return Discrepancy{e, ca, cb};
  }
  return std::nullopt;
}

bool equal_to_order(const LaurentSeries& a, const LaurentSeries& b, exp_t n) {
  return !first_discrepancy(a, b, n).has_value();
}

}  // namespace qrank
