#pragma once

// Partition counts over the positive integers. These are the per-section
// counters that the sectional factorization multiplies together.

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "tpart/classes.hpp"

namespace tpart {

// p(n) by the pentagonal number recurrence; p(0) = 1.
std::int64_t partition_count(std::int64_t n);

// Visits every partition of n (parts nonincreasing), largest first part first.
void for_each_integer_partition(std::int64_t n, const std::function<void(const std::vector<std::int64_t>&)>& visit);

// A_k(n): partitions of n into odd parts with exactly k distinct part sizes.
std::int64_t sylvester_a_count(std::int64_t n, int k);
// B_k(n): partitions of n into distinct parts forming exactly k maximal runs
// of consecutive integers.
std::int64_t sylvester_b_count(std::int64_t n, int k);
// A_{k,i}(n): partitions of n into parts not congruent to 0, i, -i mod 2k+1.
std::int64_t gordon_a_count(std::int64_t n, int k, int i);
// B_{k,i}(n): partitions b_1 >= b_2 >= ... with b_j - b_{j+k-1} >= 2 and at
// most i-1 parts equal to 1.
std::int64_t gordon_b_count(std::int64_t n, int k, int i);

// Partitions of n into parts s with (s * rho mod 5) in the residue mask.
std::int64_t residue_restricted_count(std::int64_t n, int rho, std::uint8_t residue_mask);

// Count of a modp class inside one section whose generator has residue rho.
std::int64_t modp_section_count(std::int64_t n, int rho, const ClassSpec& spec);

// Per-section counter for a Sylvester or Gordon class. For Sylvester classes
// k is taken from the argument, not from the ClassSpec.
std::int64_t classical_count(std::int64_t n, const ClassSpec& spec);
std::int64_t classical_count(std::int64_t n, const ClassSpec& spec, int k);

// Memo for classical counters, safe to share between threads. Each entry is
// computed at most once per key; concurrent readers see the final value.
class ClassicalCache {
 public:
  std::int64_t sylvester(Side side, std::int64_t n, int k);
  std::int64_t gordon(Side side, std::int64_t n, int k, int i);
  std::int64_t modp(std::int64_t n, int rho, const ClassSpec& spec);
  std::int64_t partitions(std::int64_t n);

  static ClassicalCache& shared();

 private:
  using Key = std::tuple<int, std::int64_t, int, int>;
  std::int64_t lookup(const Key& key, const std::function<std::int64_t()>& compute);

  std::mutex mutex_;
  std::map<Key, std::int64_t> values_;
};

}  // namespace tpart
