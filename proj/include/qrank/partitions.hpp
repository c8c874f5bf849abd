#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "qrank/error.hpp"
#include "qrank/laurent_series.hpp"

namespace qrank {

/// Integer partition: non-increasing positive parts. The empty partition
/// (of 0) has largest part 0, zero parts, and rank 0 for both flavors.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw Error(ErrorKind::invalid_parameter, "parts must be non-increasing and positive");
    }
  }

  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int part_count() const { return static_cast<int>(parts_.size()); }
  int sum() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  /// True when no odd value occurs twice.
  bool has_distinct_odd_parts() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] == parts_[i - 1] && (parts_[i] & 1)) return false;
    return true;
  }
  const std::vector<int>& parts() const { return parts_; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
};

int dyson_rank(const Partition& p);  // l - n
int m2_rank(const Partition& p);     // ceil(l/2) - n; contract: distinct odd parts

namespace detail {

// Visits (largest, part_count) once per partition; parts never materialized.
// The distinct-odd constraint is enforced by capping the next part below an
// odd choice at p - 1.
template <typename Fn>
void shape_rec(int remaining, int max_part, int count, int largest, bool distinct_odd, Fn&& fn) {
  if (remaining == 0) {
    fn(largest, count);
    return;
  }
  const int top = std::min(max_part, remaining);
  for (int p = top; p >= 1; --p) {
    const int next_max = (distinct_odd && (p & 1)) ? p - 1 : p;
    shape_rec(remaining - p, next_max, count + 1, count == 0 ? p : largest, distinct_odd, fn);
  }
}

template <typename Fn>
void parts_rec(int remaining, int max_part, std::vector<int>& buf, bool distinct_odd, Fn&& fn) {
  if (remaining == 0) {
    fn(static_cast<const std::vector<int>&>(buf));
    return;
  }
  const int top = std::min(max_part, remaining);
  for (int p = top; p >= 1; --p) {
    const int next_max = (distinct_odd && (p & 1)) ? p - 1 : p;
    buf.push_back(p);
    parts_rec(remaining - p, next_max, buf, distinct_odd, fn);
    buf.pop_back();
  }
}

}  // namespace detail

/// Streams every partition of n exactly once (each exactly once; order
/// unspecified). n = 0 yields just the empty partition.
template <typename Fn>
void for_each_partition(int n, bool distinct_odd_only, Fn&& fn) {
  if (n < 0) throw Error(ErrorKind::invalid_parameter, "n must be >= 0");
  std::vector<int> buf;
  detail::parts_rec(n, n, buf, distinct_odd_only,
                    [&fn](const std::vector<int>& parts) { fn(Partition(parts)); });
}

/// Shape-only stream: fn(largest, part_count) once per partition. This is
/// the hot path behind the rank tables.
template <typename Fn>
void for_each_partition_shape(int n, bool distinct_odd_only, Fn&& fn) {
  if (n < 0) throw Error(ErrorKind::invalid_parameter, "n must be >= 0");
  detail::shape_rec(n, n, 0, 0, distinct_odd_only, std::forward<Fn>(fn));
}

std::vector<Partition> enumerate(int n, bool distinct_odd_only);

enum class RankFlavor { dyson, m2 };
enum class TableMethod {
  automatic,    // enumeration while cheap, recurrence beyond
  enumeration,  // visit every partition
  recurrence,   // largest-part count table, no partition lists
};

/// Counts N(s, m, n) (dyson) or N2(s, m, n) (m2) for every residue s of the
/// modulus and every n <= max_n. Negative ranks reduce to 0..m-1.
struct RankTable {
  RankFlavor flavor = RankFlavor::dyson;
  int modulus = 1;
  int max_n = -1;
  std::vector<Integer> counts;  // counts[s * (max_n+1) + n]

  const Integer& at(int s, int n) const;
  Integer class_total(int n) const;  // sum over residues = p(n) or #DOP(n)
};

RankTable rank_table(RankFlavor flavor, int modulus, int max_n,
                     TableMethod method = TableMethod::automatic);

/// p(0..max_n) by the pentagonal-number recurrence.
std::vector<Integer> partition_counts(int max_n);
Integer p_of(int n);

/// Count of partitions of 0..max_n with no repeated odd part, by a direct
/// knapsack recurrence (odd parts 0/1, even parts unbounded). Independent of
/// both the enumerator and the q-series engine.
std::vector<Integer> distinct_odd_part_counts(int max_n);

/// d(n) = N2(0,6,n) + N2(1,6,n) - N2(2,6,n) - N2(3,6,n) as a power series.
LaurentSeries d_series(int max_n, TableMethod method = TableMethod::automatic);

}  // namespace qrank
