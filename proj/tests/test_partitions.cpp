#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <set>

#include "qrank/partitions.hpp"
#include "qrank/qseries.hpp"

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

std::set<std::vector<int>> as_set(const std::vector<Partition>& ps) {
  std::set<std::vector<int>> out;
  for (const Partition& p : ps) out.insert(p.parts());
  return out;
}

}  // namespace

TEST_CASE("partition validation and predicates") {
  CHECK(error_kind_of([] { Partition({1, 2}); }) == ErrorKind::invalid_parameter);
  CHECK(error_kind_of([] { Partition({0}); }) == ErrorKind::invalid_parameter);
  CHECK(Partition({3, 2, 2}).has_distinct_odd_parts());
  CHECK(!Partition({3, 3}).has_distinct_odd_parts());
  CHECK(Partition().has_distinct_odd_parts());
  CHECK(Partition().largest() == 0);
  CHECK(Partition().part_count() == 0);
}

TEST_CASE("enumeration") {
  CHECK(error_kind_of([] { enumerate(-1, false); }) == ErrorKind::invalid_parameter);
  CHECK(enumerate(4, false).size() == 5);
  CHECK(as_set(enumerate(4, false)) ==
        std::set<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});

  CHECK(as_set(enumerate(5, true)) ==
        std::set<std::vector<int>>{{5}, {4, 1}, {3, 2}, {2, 2, 1}});

  const auto empty_case = enumerate(0, true);
  REQUIRE(empty_case.size() == 1);
  CHECK(empty_case[0] == Partition());

  // each exactly once, and the distinct-odd filter agrees with the predicate
  for (int n = 0; n <= 14; ++n) {
    const auto all = enumerate(n, false);
    const auto dop = enumerate(n, true);
    CHECK(as_set(all).size() == all.size());
    std::set<std::vector<int>> filtered;
    for (const Partition& p : all)
      if (p.has_distinct_odd_parts()) filtered.insert(p.parts());
    CHECK(filtered == as_set(dop));
  }
}

TEST_CASE("shape stream agrees with materialized enumeration") {
  for (int n = 0; n <= 16; ++n) {
    for (bool dop : {false, true}) {
      std::multiset<std::pair<int, int>> shapes;
      for_each_partition_shape(n, dop, [&](int l, int c) { shapes.insert({l, c}); });
      std::multiset<std::pair<int, int>> expected;
      for_each_partition(n, dop,
                         [&](const Partition& p) { expected.insert({p.largest(), p.part_count()}); });
      CHECK(shapes == expected);
    }
  }
}

TEST_CASE("ranks") {
  CHECK(dyson_rank(Partition({4})) == 3);
  CHECK(dyson_rank(Partition({1, 1, 1, 1})) == -3);
  CHECK(dyson_rank(Partition()) == 0);
  CHECK(m2_rank(Partition({5})) == 2);
  CHECK(m2_rank(Partition({2, 2, 1})) == -2);
  CHECK(m2_rank(Partition()) == 0);
}

TEST_CASE("rank table basics") {
  const RankTable t5 = rank_table(RankFlavor::dyson, 5, 8);
  for (int s = 0; s < 5; ++s) CHECK(t5.at(s, 4) == 1);

  const RankTable t6 = rank_table(RankFlavor::m2, 6, 4);
  CHECK(t6.at(0, 2) == 1);
  for (int s = 1; s < 6; ++s) CHECK(t6.at(s, 2) == 0);

  CHECK(error_kind_of([&] { t6.at(6, 0); }) == ErrorKind::invalid_parameter);
  CHECK(error_kind_of([] { rank_table(RankFlavor::m2, 0, 4); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("table totals match the count oracles") {
  const int top = 40;
  const std::vector<Integer> p = partition_counts(top);
  const std::vector<Integer> dop = distinct_odd_part_counts(top);
  const RankTable dyson = rank_table(RankFlavor::dyson, 5, top);
  const RankTable m2 = rank_table(RankFlavor::m2, 6, top);
  for (int n = 0; n <= top; ++n) {
    CHECK(dyson.class_total(n) == p[static_cast<std::size_t>(n)]);
    CHECK(m2.class_total(n) == dop[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("recurrence tables equal enumeration tables") {
  for (int modulus : {5, 6, 7, 10}) {
    for (RankFlavor flavor : {RankFlavor::dyson, RankFlavor::m2}) {
      const int top = 48;
      const RankTable by_enum = rank_table(flavor, modulus, top, TableMethod::enumeration);
      const RankTable by_rec = rank_table(flavor, modulus, top, TableMethod::recurrence);
      for (int s = 0; s < modulus; ++s)
        for (int n = 0; n <= top; ++n) {
          CAPTURE(modulus);
          CAPTURE(static_cast<int>(flavor));
          CAPTURE(s);
          CAPTURE(n);
          CHECK(by_enum.at(s, n) == by_rec.at(s, n));
        }
    }
  }
}

TEST_CASE("rank symmetry observed empirically") {
  const int top = 60;
  const RankTable dyson5 = rank_table(RankFlavor::dyson, 5, top);
  const RankTable m2_6 = rank_table(RankFlavor::m2, 6, top);
  for (int n = 0; n <= top; ++n) {
    for (int s = 1; s < 5; ++s) CHECK(dyson5.at(s, n) == dyson5.at(5 - s, n));
    for (int s = 1; s < 6; ++s) CHECK(m2_6.at(s, n) == m2_6.at(6 - s, n));
  }
}

TEST_CASE("p_of via the pentagonal recurrence") {
  CHECK(p_of(0) == 1);
  CHECK(p_of(4) == 5);
  CHECK(p_of(5) == 7);
  CHECK(p_of(100) == Integer("190569292"));
  // cross-check against raw enumeration
  for (int n = 0; n <= 25; ++n) {
    long seen = 0;
    for_each_partition_shape(n, false, [&](int, int) { ++seen; });
    CHECK(p_of(n) == Integer(seen));
  }
}

TEST_CASE("ramanujan congruences over the reachable range") {
  const std::vector<Integer> p = partition_counts(100);
  for (int arg = 4; arg <= 100; arg += 5) CHECK(p[static_cast<std::size_t>(arg)] % 5 == 0);
  for (int arg = 5; arg <= 100; arg += 7) CHECK(p[static_cast<std::size_t>(arg)] % 7 == 0);
  for (int arg = 6; arg <= 100; arg += 11) CHECK(p[static_cast<std::size_t>(arg)] % 11 == 0);
}

TEST_CASE("distinct-odd-parts counts match the product generating function") {
  const int top = 60;
  const std::vector<Integer> dop = distinct_odd_part_counts(top);
  ProductSpec spec;
  spec.pochhammer(-1, 1, 2, 1).pochhammer(1, 2, 2, -1);  // (-q;q^2) / (q^2;q^2)
  const LaurentSeries gf = eval_product(spec, top);
  for (int n = 0; n <= top; ++n)
    CHECK(Rational(dop[static_cast<std::size_t>(n)]) == gf.coefficient(n));
}

TEST_CASE("recurrence table totals stay honest at dissection scale") {
  const RankTable table = rank_table(RankFlavor::m2, 6, 242, TableMethod::recurrence);
  const std::vector<Integer> dop = distinct_odd_part_counts(242);
  for (int n = 0; n <= 242; ++n) CHECK(table.class_total(n) == dop[static_cast<std::size_t>(n)]);
  for (int s = 1; s < 6; ++s)
    for (int n = 0; n <= 242; ++n) CHECK(table.at(s, n) == table.at(6 - s, n));
}

TEST_CASE("d series") {
  const LaurentSeries d = d_series(12);
  CHECK(d.coefficient(0) == Rational(1));
  CHECK(d.coefficient(1) == Rational(1));
  CHECK(d.coefficient(2) == Rational(1));
  CHECK(d.coefficient(4) == Rational(2));
  CHECK(d.coefficient(5) == Rational(1));
  CHECK(d.is_integral());
  // methods agree
  const LaurentSeries d_rec = d_series(40, TableMethod::recurrence);
  const LaurentSeries d_enum = d_series(40, TableMethod::enumeration);
  CHECK(equal_to_order(d_rec, d_enum, 40));
}
