#pragma once

// Enumeration and counting of partitions of a totally positive integer, both
// directly and through the sectional factorization over primitive partitions.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tpart/classes.hpp"
#include "tpart/partition.hpp"
#include "tpart/quadfield.hpp"

namespace tpart {

using PartitionVisitor = std::function<void(const Partition&)>;
using PartFilter = std::function<bool(const QuadInt&)>;

// Visits each partition of delta in the class exactly once, in strictly
// decreasing lexicographic order of canonical forms. Parts are drawn from
// downset(delta) restricted by part_admissible and by the optional filter.
void for_each_partition(const QuadInt& delta, const ClassSpec& spec, const PartitionVisitor& visit,
                        const std::optional<PrimeAbove5>& prime = std::nullopt, const PartFilter& filter = {});

std::vector<Partition> enumerate_partitions(const QuadInt& delta, const ClassSpec& spec = ClassSpec::all(),
                                            const std::optional<PrimeAbove5>& prime = std::nullopt);

// Partitions of n*gamma whose parts all lie in the gamma-section.
std::vector<Partition> enumerate_sectional_partitions(const QuadInt& gamma, std::int64_t n,
                                                      const ClassSpec& spec = ClassSpec::all(),
                                                      const std::optional<PrimeAbove5>& prime = std::nullopt);

// Partitions of delta into primitive parts.
void for_each_primitive_partition(const QuadInt& delta, const PartitionVisitor& visit);
std::vector<Partition> enumerate_primitive_partitions(const QuadInt& delta);

// p(delta), by a coin-change table over downset(delta).
std::int64_t count_partitions(const QuadInt& delta);

// Sum over primitive partitions (g_1^n_1 ... g_l^n_l) of prod p(n_h).
std::int64_t count_via_factorization(const QuadInt& delta);

// Number of class members, by enumeration.
std::int64_t count_class(const QuadInt& delta, const ClassSpec& spec,
                         const std::optional<PrimeAbove5>& prime = std::nullopt);

// The same number through primitive partitions and per-section classical
// counters. Sylvester classes distribute k over the sections.
std::int64_t count_class_via_sections(const QuadInt& delta, const ClassSpec& spec,
                                      const std::optional<PrimeAbove5>& prime = std::nullopt);

// Number of ways to pick one class member per section of a fixed primitive
// partition, given as (gamma, n) pairs.
std::int64_t sectional_product(const std::vector<std::pair<QuadInt, std::int64_t>>& sections, const ClassSpec& spec,
                               const std::optional<PrimeAbove5>& prime = std::nullopt);

struct IdentityReport {
  ClassSpec a_side;
  ClassSpec b_side;
  std::int64_t a_count;
  std::int64_t b_count;
  std::int64_t a_sectional;
  std::int64_t b_sectional;

  bool equal() const noexcept {
    return a_count == b_count && a_count == a_sectional && b_count == b_sectional;
  }
};

// A/B pairs for the three identity families.
std::pair<ClassSpec, ClassSpec> sylvester_pair(int k);
std::pair<ClassSpec, ClassSpec> gordon_pair(int k, int i);
// variant 1 pairs parts {1,4} with shape 1; variant 2 pairs {2,3} with shape 2.
std::pair<ClassSpec, ClassSpec> modp_pair(int variant);

IdentityReport verify_identity(const QuadInt& delta, const std::pair<ClassSpec, ClassSpec>& sides,
                               const std::optional<PrimeAbove5>& prime = std::nullopt);

}  // namespace tpart
