#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

#include "genbern/combinatorics.hpp"
#include "genbern/series.hpp"

using genbern::BigInt;
using genbern::PartitionVector;
using genbern::Rational;

namespace {

// n! [x^n] (e^x - 1)^k / k!, by series arithmetic only.
BigInt stirling_from_gf(unsigned n, unsigned k) {
  const auto power = genbern::pow(genbern::expm1_series(n), k);
  const Rational v = genbern::egf_coeff(power, n) / Rational(genbern::factorial(k));
  REQUIRE(v.is_integer());
  return v.num();
}

// Brute force: every composition of n into k positive parts, sorted into a
// canonical multiplicity vector.
std::set<std::vector<unsigned>> partitions_by_compositions(unsigned n, unsigned k) {
  std::set<std::vector<unsigned>> out;
  std::vector<unsigned> parts;
  std::function<void(unsigned)> go = [&](unsigned remaining) {
    if (parts.size() == k) {
      if (remaining == 0) {
        std::vector<unsigned> mult(n - k + 1, 0);
        for (unsigned p : parts) ++mult[p - 1];
        out.insert(mult);
      }
      return;
    }
    for (unsigned p = 1; p <= remaining; ++p) {
      parts.push_back(p);
      go(remaining - p);
      parts.pop_back();
    }
  };
  go(n);
  return out;
}

}  // namespace

TEST_CASE("Stirling conventions and named values") {
  const genbern::StirlingTable table(40);
  CHECK(table(0, 0) == 1);
  CHECK(table(4, 2) == 7);
  CHECK(table(5, 3) == 25);
  CHECK(stirling_from_gf(4, 2) == 7);
  CHECK(stirling_from_gf(5, 3) == 25);
  for (unsigned n = 1; n <= 40; ++n) {
    CHECK(table(n, 0) == 0);
    CHECK(table(n, n) == 1);
    CHECK(table(n, 1) == 1);
    CHECK(table(n, n + 3) == 0);
  }
  CHECK(table(0, 5) == 0);
  CHECK_THROWS_AS(table(41, 1), std::out_of_range);
  CHECK(genbern::stirling2(10, 4) == 34105);
}

TEST_CASE("Stirling recurrence and the S(a+1, a) identity") {
  const genbern::StirlingTable table(40);
  for (unsigned n = 1; n <= 40; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      CHECK(table(n, k) == k * table(n - 1, k) + table(n - 1, k - 1));
    }
  }
  for (unsigned a = 1; a <= 20; ++a) CHECK(table(a + 1, a) == genbern::binomial(a + 1, 2));
}

TEST_CASE("Stirling table matches the generating function for n <= 20") {
  const genbern::StirlingTable table(20);
  for (unsigned n = 1; n <= 20; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      CHECK(table(n, k) == stirling_from_gf(n, k));
      CHECK(genbern::stirling2_gf_check(n, k, table));
    }
  }
  CHECK(genbern::stirling2_gf_check(4, 2));
  CHECK(genbern::stirling2_gf_check(3, 1));
  for (unsigned k = 1; k <= 10; ++k) CHECK(genbern::stirling2_gf_check(k, k));
  CHECK_THROWS_AS(genbern::stirling2_gf_check(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(genbern::stirling2_gf_check(3, 4), std::invalid_argument);
}

TEST_CASE("corrupted table is caught by the generating-function check") {
  const genbern::StirlingTable table(10);
  const genbern::StirlingTable bad = table.with_entry(5, 3, 26);
  CHECK(bad(5, 3) == 26);
  CHECK(table(5, 3) == 25);
  CHECK_FALSE(genbern::stirling2_gf_check(5, 3, bad));
  CHECK(genbern::stirling2_gf_check(5, 2, bad));
  CHECK_THROWS_AS(table.with_entry(3, 4, 1), std::out_of_range);
}

TEST_CASE("shared table grows and stays consistent across threads") {
  const auto small = genbern::shared_stirling_table(10);
  CHECK(small->cap() >= 10);
  std::vector<std::thread> threads;
  std::vector<int> ok(6, 0);
  for (int t = 0; t < 6; ++t) {
    threads.emplace_back([t, &ok] {
      bool good = true;
      for (unsigned cap = 50; cap <= 300; cap += 50) {
        const auto table = genbern::shared_stirling_table(cap + static_cast<unsigned>(t));
        good = good && table->cap() >= cap && (*table)(cap, 1) == 1 && (*table)(12, 4) == 611501;
      }
      ok[t] = good ? 1 : 0;
    });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) CHECK(v == 1);
  CHECK((*small)(10, 4) == 34105);  // old handle still valid
}

TEST_CASE("partition enumeration examples") {
  const auto p32 = genbern::enumerate_partitions(3, 2);
  REQUIRE(p32.size() == 1);
  CHECK(p32[0].multiplicity == std::vector<unsigned>{1, 1});
  for (unsigned n = 1; n <= 8; ++n) {
    const auto all_ones = genbern::enumerate_partitions(n, n);
    REQUIRE(all_ones.size() == 1);
    CHECK(all_ones[0].multiplicity == std::vector<unsigned>{n});
    const auto single = genbern::enumerate_partitions(n, 1);
    REQUIRE(single.size() == 1);
    std::vector<unsigned> expected(n, 0);
    expected[n - 1] = 1;
    CHECK(single[0].multiplicity == expected);
  }
  CHECK(genbern::enumerate_partitions(3, 0).empty());
  CHECK(genbern::enumerate_partitions(3, 4).empty());
  CHECK(genbern::enumerate_partitions(0, 0).empty());
}

TEST_CASE("partition enumeration matches brute-force compositions for n <= 12") {
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const auto got = genbern::enumerate_partitions(n, k);
      const auto oracle = partitions_by_compositions(n, k);
      std::set<std::vector<unsigned>> seen;
      for (const PartitionVector& p : got) {
        REQUIRE(p.multiplicity.size() == n - k + 1);
        unsigned weight = 0;
        unsigned count = 0;
        for (unsigned i = 0; i < p.multiplicity.size(); ++i) {
          weight += (i + 1) * p.multiplicity[i];
          count += p.multiplicity[i];
        }
        CHECK(weight == n);
        CHECK(count == k);
        CHECK(seen.insert(p.multiplicity).second);
      }
      CHECK(seen == oracle);
      CHECK(genbern::enumerate_partitions(n, k) == got);  // deterministic
    }
  }
}
