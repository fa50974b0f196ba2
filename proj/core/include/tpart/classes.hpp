#pragma once

// Partition classes: the Sylvester pair (odd scales with k distinct parts /
// k maximal runs of consecutive scales), the Gordon pair (scale residues mod
// 2k+1 / difference conditions inside each section), and the two classes
// defined through a degree-one prime above 5.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tpart/partition.hpp"
#include "tpart/quadfield.hpp"

namespace tpart {

enum class Side { A, B };

class ClassSpec {
 public:
  enum class Kind { All, SylvesterA, SylvesterB, GordonA, GordonB, ModPParts, ModPShape };

  static ClassSpec all();
  static ClassSpec sylvester(Side side, int k);
  static ClassSpec gordon(Side side, int k, int i);
  // residues must be {1, 4} or {2, 3}, passed as a 5-bit mask.
  static ClassSpec modp_parts(std::uint8_t residue_mask);
  static ClassSpec modp_shape(int variant);

  Kind kind() const noexcept { return kind_; }
  int k() const noexcept { return k_; }
  int i() const noexcept { return i_; }
  std::uint8_t residue_mask() const noexcept { return residues_; }
  int shape_variant() const noexcept { return shape_; }

  bool is_sylvester() const noexcept { return kind_ == Kind::SylvesterA || kind_ == Kind::SylvesterB; }
  bool is_gordon() const noexcept { return kind_ == Kind::GordonA || kind_ == Kind::GordonB; }
  bool is_modp() const noexcept { return kind_ == Kind::ModPParts || kind_ == Kind::ModPShape; }
  // Classes in which no part may repeat.
  bool requires_distinct_parts() const noexcept;

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;

 private:
  ClassSpec(Kind kind, int k, int i, std::uint8_t residues, int shape)
      : kind_(kind), k_(k), i_(i), residues_(residues), shape_(shape) {}

  Kind kind_;
  int k_;
  int i_;
  std::uint8_t residues_;
  int shape_;
};

constexpr std::uint8_t residue_bit(int r) { return static_cast<std::uint8_t>(1u << r); }
constexpr std::uint8_t kResidues14 = residue_bit(1) | residue_bit(4);
constexpr std::uint8_t kResidues23 = residue_bit(2) | residue_bit(3);

// Text form: "all", "sylA:k=3", "sylB:k=3", "gorA:k=2,i=1", "gorB:k=2,i=1",
// "modp:parts=14", "modp:parts=23", "modp:shape=1", "modp:shape=2".
std::string to_string(const ClassSpec& spec);
ClassSpec parse_class_spec(std::string_view text);

bool sylvester_membership(const Partition& lambda, Side side, int k);
bool gordon_membership(const Partition& lambda, Side side, int k, int i);
bool modp_membership(const Partition& lambda, const PrimeAbove5& prime, const ClassSpec& spec);

// Membership for any class; modp classes need the prime.
bool in_class(const Partition& lambda, const ClassSpec& spec,
              const std::optional<PrimeAbove5>& prime = std::nullopt);

// Part-level condition implied by the class: every part of a member satisfies
// it. Used to shrink the ground set before enumeration.
bool part_admissible(const QuadInt& part, const ClassSpec& spec,
                     const std::optional<PrimeAbove5>& prime = std::nullopt);

// Number of maximal runs of consecutive integers in a set of distinct scales.
int consecutive_runs(std::vector<std::int64_t> scales);

}  // namespace tpart
