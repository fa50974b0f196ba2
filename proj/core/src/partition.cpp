#include "tpart/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tpart/error.hpp"

namespace tpart {

Partition Partition::from_parts(std::vector<QuadInt> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidParameter, "a partition needs at least one part");
  for (const QuadInt& part : parts) {
    require_same_field(parts.front(), part);
    require_totally_positive(part, "partition part");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  return Partition(std::move(parts));
}

QuadInt Partition::target() const {
  QuadInt sum = field().zero();
  for (const QuadInt& part : parts_) sum += part;
  return sum;
}

std::size_t Partition::distinct_parts() const {
  std::size_t n = 0;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j == 0 || parts_[j] != parts_[j - 1]) ++n;
  }
  return n;
}

std::vector<std::pair<QuadInt, std::int64_t>> Partition::exponent_view() const {
  std::vector<std::pair<QuadInt, std::int64_t>> out;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (!out.empty() && out.back().first == *it) {
      ++out.back().second;
    } else {
      out.emplace_back(*it, 1);
    }
  }
  return out;
}

Partition operator+(const Partition& a, const Partition& b) {
  std::vector<QuadInt> parts(a.parts_);
  parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
  return Partition::from_parts(std::move(parts));
}

std::vector<SectionBlock> sectional_decomposition(const Partition& lambda) {
  std::map<QuadInt, std::vector<std::int64_t>> blocks;
  for (const QuadInt& part : lambda.parts()) {
    const auto [scale, gamma] = radial_decompose(part);
    blocks[gamma].push_back(scale);
  }
  std::vector<SectionBlock> out;
  out.reserve(blocks.size());
  for (auto& [gamma, scales] : blocks) {
    std::sort(scales.begin(), scales.end(), std::greater<>{});
    out.push_back({gamma, std::move(scales)});
  }
  return out;
}

Partition primitive_refinement(const Partition& lambda) {
  std::vector<QuadInt> parts;
  for (const QuadInt& part : lambda.parts()) {
    const auto [scale, gamma] = radial_decompose(part);
    parts.insert(parts.end(), static_cast<std::size_t>(scale), gamma);
  }
  return Partition::from_parts(std::move(parts));
}

bool is_primitive_partition(const Partition& lambda) {
  return std::all_of(lambda.parts().begin(), lambda.parts().end(),
                     [](const QuadInt& part) { return part.content() == 1; });
}

}  // namespace tpart
