#include "genbern/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "genbern/series.hpp"

namespace genbern {

StirlingTable::StirlingTable(unsigned cap) : cap_(cap) {
  entries_.resize(index(cap + 1, 0));
  entries_[index(0, 0)] = 1;
  for (unsigned n = 1; n <= cap; ++n) {
    entries_[index(n, 0)] = 0;
    for (unsigned k = 1; k <= n; ++k) {
      const BigInt& same = k < n ? entries_[index(n - 1, k)] : BigInt(0);
      entries_[index(n, k)] = k * same + entries_[index(n - 1, k - 1)];
    }
  }
}

const BigInt& StirlingTable::operator()(unsigned n, unsigned k) const {
  static const BigInt zero(0);
  if (n > cap_) throw std::out_of_range("Stirling table too small for n = " + std::to_string(n));
  if (k > n) return zero;
  return entries_[index(n, k)];
}

StirlingTable StirlingTable::with_entry(unsigned n, unsigned k, const BigInt& value) const {
  if (n > cap_ || k > n) throw std::out_of_range("no such Stirling table entry");
  StirlingTable out = *this;
  out.entries_[index(n, k)] = value;
  return out;
}

std::shared_ptr<const StirlingTable> shared_stirling_table(unsigned min_cap) {
  static std::mutex mutex;
  static std::shared_ptr<const StirlingTable> table;
  std::lock_guard lock(mutex);
  if (!table || table->cap() < min_cap) {
    const unsigned cap = std::max({min_cap, 64U, table ? 2 * table->cap() : 0U});
    table = std::make_shared<const StirlingTable>(cap);
  }
  return table;
}

BigInt stirling2(unsigned n, unsigned k) { return (*shared_stirling_table(n))(n, k); }

bool stirling2_gf_check(unsigned n, unsigned k, const StirlingTable& table) {
  if (k == 0 || k > n) throw std::invalid_argument("stirling2_gf_check needs n >= k >= 1");
  const Series<Rational> power = pow(expm1_series(n), k);
  const Rational expected = egf_coeff(power, n) / Rational(factorial(k));
  return expected == Rational(table(n, k));
}

bool stirling2_gf_check(unsigned n, unsigned k) {
  return stirling2_gf_check(n, k, *shared_stirling_table(n));
}

std::vector<PartitionVector> enumerate_partitions(unsigned n, unsigned k) {
  std::vector<PartitionVector> out;
  for_each_partition(n, k, [&out](const PartitionVector& p) { out.push_back(p); });
  return out;
}

}  // namespace genbern
