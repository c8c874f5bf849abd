#include "qrank/partitions.hpp"

#include <string>

namespace qrank {

int dyson_rank(const Partition& p) { return p.largest() - p.part_count(); }

int m2_rank(const Partition& p) { return (p.largest() + 1) / 2 - p.part_count(); }

std::vector<Partition> enumerate(int n, bool distinct_odd_only) {
  std::vector<Partition> out;
  for_each_partition(n, distinct_odd_only, [&out](const Partition& p) { out.push_back(p); });
  return out;
}

const Integer& RankTable::at(int s, int n) const {
  if (s < 0 || s >= modulus || n < 0 || n > max_n)
    throw Error(ErrorKind::invalid_parameter,
                "rank table index (" + std::to_string(s) + ", " + std::to_string(n) + ") out of range");
  return counts[static_cast<std::size_t>(s) * static_cast<std::size_t>(max_n + 1) +
                static_cast<std::size_t>(n)];
}

Integer RankTable::class_total(int n) const {
  Integer total = 0;
  for (int s = 0; s < modulus; ++s) total += at(s, n);
  return total;
}

namespace {

// Thresholds where full enumeration stops being cheap: the Dyson table walks
// all p(n) partitions, the m2 table only those with distinct odd parts.
constexpr int kDysonEnumerationLimit = 64;
constexpr int kM2EnumerationLimit = 100;

int canonical_residue(long long rank, int m) {
  return static_cast<int>(((rank % m) + m) % m);
}

RankTable table_by_enumeration(RankFlavor flavor, int m, int max_n) {
  RankTable table{flavor, m, max_n, {}};
  table.counts.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(max_n + 1), Integer(0));
  const bool dop = flavor == RankFlavor::m2;
  const std::size_t stride = static_cast<std::size_t>(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    for_each_partition_shape(n, dop, [&](int largest, int count) {
      const long long rank =
          flavor == RankFlavor::dyson ? static_cast<long long>(largest) - count
                                      : static_cast<long long>((largest + 1) / 2) - count;
      const int s = canonical_residue(rank, m);
      table.counts[static_cast<std::size_t>(s) * stride + static_cast<std::size_t>(n)] += 1;
    });
  }
  return table;
}

// Largest-part recurrence. T[sum][c] counts partitions of `sum` into the
// parts admitted so far whose part count is congruent to c mod m. A
// partition of n with largest part l contributes rank const(l) - 1 - c,
// where const(l) is l for Dyson rank and ceil(l/2) for the m2 rank. For the
// m2 flavor an odd largest part may not reappear below, so its contribution
// is taken before part l is admitted; even parts are admitted first.
RankTable table_by_recurrence(RankFlavor flavor, int m, int max_n) {
  RankTable table{flavor, m, max_n, {}};
  table.counts.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(max_n + 1), Integer(0));
  const std::size_t stride = static_cast<std::size_t>(max_n + 1);
  auto cell = [&](int s, int n) -> Integer& {
    return table.counts[static_cast<std::size_t>(s) * stride + static_cast<std::size_t>(n)];
  };
  cell(0, 0) = 1;  // empty partition, rank 0

  const bool dop = flavor == RankFlavor::m2;
  std::vector<Integer> t(static_cast<std::size_t>(max_n + 1) * static_cast<std::size_t>(m));
  auto tcell = [&](int sum, int c) -> Integer& {
    return t[static_cast<std::size_t>(sum) * static_cast<std::size_t>(m) +
             static_cast<std::size_t>(c)];
  };
  tcell(0, 0) = 1;

  auto admit_unbounded = [&](int p) {
    for (int sum = p; sum <= max_n; ++sum)
      for (int c = 0; c < m; ++c) {
        const Integer& from = tcell(sum - p, (c + m - 1) % m);
        if (from != 0) tcell(sum, c) += from;
      }
  };
  auto admit_once = [&](int p) {
    for (int sum = max_n; sum >= p; --sum)
      for (int c = 0; c < m; ++c) {
        const Integer& from = tcell(sum - p, (c + m - 1) % m);
        if (from != 0) tcell(sum, c) += from;
      }
  };
  auto contribute = [&](int l) {
    const long long base =
        flavor == RankFlavor::dyson ? static_cast<long long>(l) : static_cast<long long>((l + 1) / 2);
    for (int rem = 0; rem + l <= max_n; ++rem)
      for (int c = 0; c < m; ++c) {
        const Integer& from = tcell(rem, c);
        if (from == 0) continue;
        const int s = canonical_residue(base - 1 - c, m);
        cell(s, rem + l) += from;
      }
  };

  for (int l = 1; l <= max_n; ++l) {
    const bool odd = (l & 1) != 0;
    if (dop && odd) {
      contribute(l);   // the rest of the partition cannot reuse the odd l
      admit_once(l);
    } else {
      admit_unbounded(l);
      contribute(l);
    }
  }
  return table;
}

}  // namespace

RankTable rank_table(RankFlavor flavor, int modulus, int max_n, TableMethod method) {
  if (modulus < 1) throw Error(ErrorKind::invalid_parameter, "modulus must be >= 1");
  if (max_n < 0) throw Error(ErrorKind::invalid_parameter, "max_n must be >= 0");
  if (method == TableMethod::automatic) {
    const int limit = flavor == RankFlavor::dyson ? kDysonEnumerationLimit : kM2EnumerationLimit;
    method = max_n <= limit ? TableMethod::enumeration : TableMethod::recurrence;
  }
  return method == TableMethod::enumeration ? table_by_enumeration(flavor, modulus, max_n)
                                            : table_by_recurrence(flavor, modulus, max_n);
}

std::vector<Integer> partition_counts(int max_n) {
  if (max_n < 0) throw Error(ErrorKind::invalid_parameter, "max_n must be >= 0");
  std::vector<Integer> p(static_cast<std::size_t>(max_n) + 1);
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    Integer acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const int g2 = k * (3 * k + 1) / 2;
      Integer term = p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) term += p[static_cast<std::size_t>(n - g2)];
      if (k & 1)
        acc += term;
      else
        acc -= term;
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

Integer p_of(int n) {
  if (n < 0) throw Error(ErrorKind::invalid_parameter, "n must be >= 0");
  return partition_counts(n).back();
}

std::vector<Integer> distinct_odd_part_counts(int max_n) {
  if (max_n < 0) throw Error(ErrorKind::invalid_parameter, "max_n must be >= 0");
  std::vector<Integer> ways(static_cast<std::size_t>(max_n) + 1);
  ways[0] = 1;
  for (int p = 1; p <= max_n; ++p) {
    if (p & 1) {
      for (int n = max_n; n >= p; --n) ways[static_cast<std::size_t>(n)] += ways[static_cast<std::size_t>(n - p)];
    } else {
      for (int n = p; n <= max_n; ++n) ways[static_cast<std::size_t>(n)] += ways[static_cast<std::size_t>(n - p)];
    }
  }
  return ways;
}

LaurentSeries d_series(int max_n, TableMethod method) {
  const RankTable table = rank_table(RankFlavor::m2, 6, max_n, method);
  std::vector<Rational> coeffs(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    Integer d = table.at(0, n) + table.at(1, n) - table.at(2, n) - table.at(3, n);
    coeffs[static_cast<std::size_t>(n)] = Rational(d);
  }
  return LaurentSeries::from_coefficients(0, max_n, std::move(coeffs));
}

}  // namespace qrank
