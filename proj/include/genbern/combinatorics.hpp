#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <vector>

#include "genbern/exact.hpp"

namespace genbern {

/// Triangle of Stirling numbers of the second kind S(n, k), 0 <= k <= n <= cap,
/// built by S(n,k) = k S(n-1,k) + S(n-1,k-1).
///
/// Conventions: S(0,0) = 1, S(n,0) = 0 for n > 0, S(n,k) = 0 for k > n.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned cap);

  unsigned cap() const { return cap_; }

  /// Throws std::out_of_range when n > cap().
  const BigInt& operator()(unsigned n, unsigned k) const;

  /// Copy of this table with one entry overwritten. Only used to inject
  /// faults into the verification suite.
  StirlingTable with_entry(unsigned n, unsigned k, const BigInt& value) const;

 private:
  static std::size_t index(unsigned n, unsigned k) {
    return static_cast<std::size_t>(n) * (n + 1) / 2 + k;
  }

  unsigned cap_;
  std::vector<BigInt> entries_;
};

/// Process-wide table with cap >= min_cap. Growing replaces the shared table
/// with a larger one; tables already handed out stay valid and unchanged.
std::shared_ptr<const StirlingTable> shared_stirling_table(unsigned min_cap);

BigInt stirling2(unsigned n, unsigned k);

/// Compares table(n, k) against n! [x^n] (e^x - 1)^k / k!, the latter expanded
/// with truncated power series. Requires n >= k >= 1.
bool stirling2_gf_check(unsigned n, unsigned k, const StirlingTable& table);
bool stirling2_gf_check(unsigned n, unsigned k);

/// Multiplicities l_1..l_{n-k+1} of a partition of n into exactly k parts:
/// sum i*l_i = n and sum l_i = k. multiplicity[i - 1] holds l_i.
struct PartitionVector {
  std::vector<unsigned> multiplicity;

  friend bool operator==(const PartitionVector&, const PartitionVector&) = default;
};

namespace detail {

template <class Visit>
void partition_descent(unsigned remaining, unsigned parts_left, unsigned max_part,
                       PartitionVector& current, Visit& visit) {
  if (parts_left == 0) {
    if (remaining == 0) visit(static_cast<const PartitionVector&>(current));
    return;
  }
  // Each of the parts_left parts is at least 1 and at most `part`.
  const unsigned hi = std::min(max_part, remaining - (parts_left - 1));
  for (unsigned part = hi; part >= 1; --part) {
    if (static_cast<unsigned long>(part) * parts_left < remaining) break;
    ++current.multiplicity[part - 1];
    partition_descent(remaining - part, parts_left - 1, part, current, visit);
    --current.multiplicity[part - 1];
  }
}

}  // namespace detail

/// Calls visit(const PartitionVector&) once per partition of n into exactly k
/// parts, largest parts chosen first. Nothing is visited unless 1 <= k <= n.
template <class Visit>
void for_each_partition(unsigned n, unsigned k, Visit&& visit) {
  if (k == 0 || k > n) return;
  PartitionVector current{std::vector<unsigned>(n - k + 1, 0)};
  detail::partition_descent(n, k, n - k + 1, current, visit);
}

std::vector<PartitionVector> enumerate_partitions(unsigned n, unsigned k);

}  // namespace genbern
