#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tpart/quadfield.hpp"

namespace tpart {

// A multiset of totally positive parts, kept in canonical nonincreasing order.
class Partition {
 public:
  // Sorts the parts; throws if the list is empty, mixes fields, or contains a
  // part that is not totally positive.
  static Partition from_parts(std::vector<QuadInt> parts);

  std::span<const QuadInt> parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  const Field& field() const noexcept { return parts_.front().field(); }
  QuadInt target() const;
  std::size_t distinct_parts() const;

  // (part, multiplicity) pairs in ascending canonical order.
  std::vector<std::pair<QuadInt, std::int64_t>> exponent_view() const;

  // Concatenation of the two part lists.
  friend Partition operator+(const Partition& a, const Partition& b);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  explicit Partition(std::vector<QuadInt> parts) : parts_(std::move(parts)) {}

  std::vector<QuadInt> parts_;
};

struct SectionBlock {
  QuadInt gamma;
  std::vector<std::int64_t> scales;  // nonincreasing

  friend bool operator==(const SectionBlock&, const SectionBlock&) = default;
};

// Parts grouped by primitive factor; blocks in ascending canonical order of gamma.
std::vector<SectionBlock> sectional_decomposition(const Partition& lambda);

// Every part n*gamma replaced by n copies of gamma.
Partition primitive_refinement(const Partition& lambda);

bool is_primitive_partition(const Partition& lambda);

}  // namespace tpart
