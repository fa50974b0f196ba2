#include "tpart/classes.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "tpart/error.hpp"

namespace tpart {

namespace {

[[noreturn]] void bad_parameter(const std::string& message) {
  throw Error(ErrorCode::InvalidParameter, message);
}

void check_gordon(int k, int i) {
  if (k < 2 || i < 1 || i > k) {
    bad_parameter("Gordon class needs k >= 2 and 1 <= i <= k (got k=" + std::to_string(k) +
                  ", i=" + std::to_string(i) + ")");
  }
}

bool gordon_b_block(const std::vector<std::int64_t>& desc, int k, int i) {
  const auto m = static_cast<std::ptrdiff_t>(desc.size());
  for (std::ptrdiff_t j = 0; j + k - 1 < m; ++j) {
    if (desc[j] - desc[j + k - 1] < 2) return false;
  }
  const auto ones = std::count(desc.begin(), desc.end(), 1);
  return ones <= i - 1;
}

bool gap_two_block(const std::vector<std::int64_t>& desc) {
  for (std::size_t j = 1; j < desc.size(); ++j) {
    if (desc[j - 1] - desc[j] < 2) return false;
  }
  return true;
}

std::uint8_t shape_forbidden(int variant) { return variant == 1 ? kResidues23 : kResidues14; }

const PrimeAbove5& need_prime(const std::optional<PrimeAbove5>& prime) {
  if (!prime) bad_parameter("modp class requires a prime above 5");
  return *prime;
}

}  // namespace

ClassSpec ClassSpec::all() { return ClassSpec(Kind::All, 0, 0, 0, 0); }

ClassSpec ClassSpec::sylvester(Side side, int k) {
  if (k < 1) bad_parameter("Sylvester class needs k >= 1");
  return ClassSpec(side == Side::A ? Kind::SylvesterA : Kind::SylvesterB, k, 0, 0, 0);
}

ClassSpec ClassSpec::gordon(Side side, int k, int i) {
  check_gordon(k, i);
  return ClassSpec(side == Side::A ? Kind::GordonA : Kind::GordonB, k, i, 0, 0);
}

ClassSpec ClassSpec::modp_parts(std::uint8_t residue_mask) {
  if (residue_mask != kResidues14 && residue_mask != kResidues23) {
    bad_parameter("modp parts class takes the residue set {1,4} or {2,3}");
  }
  return ClassSpec(Kind::ModPParts, 0, 0, residue_mask, 0);
}

ClassSpec ClassSpec::modp_shape(int variant) {
  if (variant != 1 && variant != 2) bad_parameter("modp shape variant must be 1 or 2");
  return ClassSpec(Kind::ModPShape, 0, 0, 0, variant);
}

bool ClassSpec::requires_distinct_parts() const noexcept {
  return kind_ == Kind::SylvesterB || kind_ == Kind::ModPShape || (kind_ == Kind::GordonB && k_ == 2);
}

std::string to_string(const ClassSpec& spec) {
  using Kind = ClassSpec::Kind;
  switch (spec.kind()) {
    case Kind::All: return "all";
    case Kind::SylvesterA: return "sylA:k=" + std::to_string(spec.k());
    case Kind::SylvesterB: return "sylB:k=" + std::to_string(spec.k());
    case Kind::GordonA:
      return "gorA:k=" + std::to_string(spec.k()) + ",i=" + std::to_string(spec.i());
    case Kind::GordonB:
      return "gorB:k=" + std::to_string(spec.k()) + ",i=" + std::to_string(spec.i());
    case Kind::ModPParts: return spec.residue_mask() == kResidues14 ? "modp:parts=14" : "modp:parts=23";
    case Kind::ModPShape: return "modp:shape=" + std::to_string(spec.shape_variant());
  }
  return "?";
}

ClassSpec parse_class_spec(std::string_view text) {
  const auto fail = [&]() -> ClassSpec {
    throw Error(ErrorCode::Parse, "cannot parse class spec '" + std::string(text) + "'");
  };
  if (text == "all") return ClassSpec::all();

  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return fail();
  const std::string_view name = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);

  std::map<std::string, std::string, std::less<>> params;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) return fail();
    params.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  const auto integer = [&](std::string_view key) -> int {
    auto it = params.find(key);
    if (it == params.end()) fail();
    int value = 0;
    const auto& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) fail();
    return value;
  };

  if (name == "sylA" || name == "sylB") {
    if (params.size() != 1) return fail();
    return ClassSpec::sylvester(name == "sylA" ? Side::A : Side::B, integer("k"));
  }
  if (name == "gorA" || name == "gorB") {
    if (params.size() != 2) return fail();
    return ClassSpec::gordon(name == "gorA" ? Side::A : Side::B, integer("k"), integer("i"));
  }
  if (name == "modp" && params.size() == 1) {
    if (auto it = params.find("parts"); it != params.end()) {
      if (it->second == "14") return ClassSpec::modp_parts(kResidues14);
      if (it->second == "23") return ClassSpec::modp_parts(kResidues23);
      return fail();
    }
    if (params.count("shape")) return ClassSpec::modp_shape(integer("shape"));
  }
  return fail();
}

int consecutive_runs(std::vector<std::int64_t> scales) {
  std::sort(scales.begin(), scales.end());
  int runs = 0;
  for (std::size_t j = 0; j < scales.size(); ++j) {
    if (j == 0 || scales[j] != scales[j - 1] + 1) ++runs;
  }
  return runs;
}

bool sylvester_membership(const Partition& lambda, Side side, int k) {
  if (k < 1) bad_parameter("Sylvester class needs k >= 1");
  if (side == Side::A) {
    for (const QuadInt& part : lambda.parts()) {
      if (part.content() % 2 == 0) return false;
    }
    return lambda.distinct_parts() == static_cast<std::size_t>(k);
  }
  if (lambda.distinct_parts() != lambda.size()) return false;
  int runs = 0;
  for (const SectionBlock& block : sectional_decomposition(lambda)) {
    runs += consecutive_runs(block.scales);
  }
  return runs == k;
}

bool gordon_membership(const Partition& lambda, Side side, int k, int i) {
  check_gordon(k, i);
  if (side == Side::A) {
    const std::int64_t modulus = 2 * k + 1;
    for (const QuadInt& part : lambda.parts()) {
      const std::int64_t r = part.content() % modulus;
      if (r == 0 || r == i || r == modulus - i) return false;
    }
    return true;
  }
  for (const SectionBlock& block : sectional_decomposition(lambda)) {
    if (!gordon_b_block(block.scales, k, i)) return false;
  }
  return true;
}

bool modp_membership(const Partition& lambda, const PrimeAbove5& prime, const ClassSpec& spec) {
  if (spec.kind() == ClassSpec::Kind::ModPParts) {
    for (const QuadInt& part : lambda.parts()) {
      if (!(spec.residue_mask() & residue_bit(residue_mod_p5(part, prime)))) return false;
    }
    return true;
  }
  if (spec.kind() != ClassSpec::Kind::ModPShape) bad_parameter("not a modp class: " + to_string(spec));

  const std::uint8_t forbidden = shape_forbidden(spec.shape_variant());
  for (const SectionBlock& block : sectional_decomposition(lambda)) {
    const int rho = residue_mod_p5(block.gamma, prime);
    if (rho == 0) return false;
    if (!gap_two_block(block.scales)) return false;
    if ((forbidden & residue_bit(rho)) && block.scales.back() == 1) return false;
  }
  return true;
}

bool in_class(const Partition& lambda, const ClassSpec& spec, const std::optional<PrimeAbove5>& prime) {
  using Kind = ClassSpec::Kind;
  switch (spec.kind()) {
    case Kind::All: return true;
    case Kind::SylvesterA: return sylvester_membership(lambda, Side::A, spec.k());
    case Kind::SylvesterB: return sylvester_membership(lambda, Side::B, spec.k());
    case Kind::GordonA: return gordon_membership(lambda, Side::A, spec.k(), spec.i());
    case Kind::GordonB: return gordon_membership(lambda, Side::B, spec.k(), spec.i());
    case Kind::ModPParts:
    case Kind::ModPShape: return modp_membership(lambda, need_prime(prime), spec);
  }
  return false;
}

bool part_admissible(const QuadInt& part, const ClassSpec& spec, const std::optional<PrimeAbove5>& prime) {
  using Kind = ClassSpec::Kind;
  switch (spec.kind()) {
    case Kind::All:
    case Kind::SylvesterB: return true;
    case Kind::SylvesterA: return part.content() % 2 == 1;
    case Kind::GordonA: {
      const std::int64_t modulus = 2 * spec.k() + 1;
      const std::int64_t r = part.content() % modulus;
      return r != 0 && r != spec.i() && r != modulus - spec.i();
    }
    case Kind::GordonB:
      // A scale-1 part is impossible when i = 1.
      return !(spec.i() == 1 && part.content() == 1);
    case Kind::ModPParts:
      return (spec.residue_mask() & residue_bit(residue_mod_p5(part, need_prime(prime)))) != 0;
    case Kind::ModPShape: {
      const auto [scale, gamma] = radial_decompose(part);
      const int rho = residue_mod_p5(gamma, need_prime(prime));
      if (rho == 0) return false;
      return !(scale == 1 && (shape_forbidden(spec.shape_variant()) & residue_bit(rho)));
    }
  }
  return true;
}

}  // namespace tpart
