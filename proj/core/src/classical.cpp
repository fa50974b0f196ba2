#include "tpart/classical.hpp"

#include <algorithm>

#include "tpart/error.hpp"

namespace tpart {

using detail::checked_add;
using detail::checked_sub;

namespace {

void require_nonnegative(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "classical counter needs n >= 0");
}

void visit_partitions(std::int64_t remaining, std::int64_t max_part, std::vector<std::int64_t>& parts,
                      const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    visit_partitions(remaining - part, part, parts, visit);
    parts.pop_back();
  }
}

// Unrestricted-multiplicity count over an allowed part set.
std::int64_t coin_count(std::int64_t n, const std::function<bool(std::int64_t)>& allowed) {
  std::vector<std::int64_t> dp(static_cast<std::size_t>(n + 1), 0);
  dp[0] = 1;
  for (std::int64_t part = 1; part <= n; ++part) {
    if (!allowed(part)) continue;
    for (std::int64_t m = part; m <= n; ++m) dp[m] = checked_add(dp[m], dp[m - part]);
  }
  return dp[n];
}

std::int64_t count_distinct_runs(std::int64_t remaining, std::int64_t max_part, int runs_left,
                                 std::int64_t previous) {
  if (remaining == 0) return runs_left == 0 ? 1 : 0;
  std::int64_t total = 0;
  for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
    // Parts are chosen decreasing, so part extends the current run iff it is
    // exactly one below the previous part.
    const int left = (part + 1 == previous) ? runs_left : runs_left - 1;
    if (left < 0) continue;
    total = checked_add(total, count_distinct_runs(remaining - part, part - 1, left, part));
  }
  return total;
}

std::int64_t count_gordon_b(std::int64_t remaining, std::int64_t max_part, std::vector<std::int64_t>& parts,
                            int k, int ones_left) {
  if (remaining == 0) return 1;
  std::int64_t total = 0;
  for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
    if (part == 1 && ones_left == 0) continue;
    const auto size = static_cast<std::ptrdiff_t>(parts.size());
    if (size >= k - 1 && parts[size - (k - 1)] - part < 2) continue;
    parts.push_back(part);
    total = checked_add(total, count_gordon_b(remaining - part, part, parts, k, ones_left - (part == 1)));
    parts.pop_back();
  }
  return total;
}

void check_gordon_params(int k, int i) {
  if (k < 2 || i < 1 || i > k) throw Error(ErrorCode::InvalidParameter, "Gordon counter needs k >= 2, 1 <= i <= k");
}

}  // namespace

std::int64_t partition_count(std::int64_t n) {
  require_nonnegative(n);
  std::vector<std::int64_t> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (std::int64_t m = 1; m <= n; ++m) {
    std::int64_t total = 0;
    for (std::int64_t j = 1;; ++j) {
      const std::int64_t g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      const std::int64_t g2 = j * (3 * j + 1) / 2;
      std::int64_t term = p[m - g1];
      if (g2 <= m) term = checked_add(term, p[m - g2]);
      total = (j % 2 == 1) ? checked_add(total, term) : checked_sub(total, term);
    }
    p[m] = total;
  }
  return p[n];
}

void for_each_integer_partition(std::int64_t n,
                                const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  require_nonnegative(n);
  std::vector<std::int64_t> parts;
  visit_partitions(n, n, parts, visit);
}

std::int64_t sylvester_a_count(std::int64_t n, int k) {
  require_nonnegative(n);
  if (k < 0) return 0;
  const auto K = static_cast<std::size_t>(k);
  // dp[m][j]: partitions of m into the odd sizes seen so far, j distinct sizes.
  std::vector<std::vector<std::int64_t>> dp(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(K + 1, 0));
  dp[0][0] = 1;
  for (std::int64_t v = 1; v <= n; v += 2) {
    auto next = dp;
    for (std::int64_t m = 0; m <= n; ++m) {
      for (std::size_t j = 0; j < K; ++j) {
        if (dp[m][j] == 0) continue;
        for (std::int64_t t = m + v; t <= n; t += v) next[t][j + 1] = checked_add(next[t][j + 1], dp[m][j]);
      }
    }
    dp = std::move(next);
  }
  return dp[n][K];
}

std::int64_t sylvester_b_count(std::int64_t n, int k) {
  require_nonnegative(n);
  if (k < 0) return 0;
  return count_distinct_runs(n, n, k, 0);
}

std::int64_t gordon_a_count(std::int64_t n, int k, int i) {
  require_nonnegative(n);
  check_gordon_params(k, i);
  const std::int64_t modulus = 2 * k + 1;
  return coin_count(n, [&](std::int64_t s) {
    const std::int64_t r = s % modulus;
    return r != 0 && r != i && r != modulus - i;
  });
}

std::int64_t gordon_b_count(std::int64_t n, int k, int i) {
  require_nonnegative(n);
  check_gordon_params(k, i);
  std::vector<std::int64_t> parts;
  return count_gordon_b(n, n, parts, k, i - 1);
}

std::int64_t residue_restricted_count(std::int64_t n, int rho, std::uint8_t residue_mask) {
  require_nonnegative(n);
  return coin_count(n, [&](std::int64_t s) { return (residue_mask & residue_bit(static_cast<int>((s * rho) % 5))) != 0; });
}

std::int64_t modp_section_count(std::int64_t n, int rho, const ClassSpec& spec) {
  require_nonnegative(n);
  if (spec.kind() == ClassSpec::Kind::ModPParts) return residue_restricted_count(n, rho, spec.residue_mask());
  if (spec.kind() != ClassSpec::Kind::ModPShape) {
    throw Error(ErrorCode::InvalidParameter, "not a modp class: " + to_string(spec));
  }
  if (n == 0) return 1;
  if (rho == 0) return 0;
  const std::uint8_t forbidden = spec.shape_variant() == 1 ? kResidues23 : kResidues14;
  // Distinct scales with gaps >= 2 is the k = 2 Gordon shape; a forbidden
  // residue additionally rules out scale 1.
  return gordon_b_count(n, 2, (forbidden & residue_bit(rho)) ? 1 : 2);
}

std::int64_t classical_count(std::int64_t n, const ClassSpec& spec) { return classical_count(n, spec, spec.k()); }

std::int64_t classical_count(std::int64_t n, const ClassSpec& spec, int k) {
  using Kind = ClassSpec::Kind;
  switch (spec.kind()) {
    case Kind::All: return partition_count(n);
    case Kind::SylvesterA: return sylvester_a_count(n, k);
    case Kind::SylvesterB: return sylvester_b_count(n, k);
    case Kind::GordonA: return gordon_a_count(n, spec.k(), spec.i());
    case Kind::GordonB: return gordon_b_count(n, spec.k(), spec.i());
    default: break;
  }
  throw Error(ErrorCode::InvalidParameter, "modp classes need a residue: use modp_section_count");
}

std::int64_t ClassicalCache::lookup(const Key& key, const std::function<std::int64_t()>& compute) {
  std::lock_guard lock(mutex_);
  if (auto it = values_.find(key); it != values_.end()) return it->second;
  // Computing under the lock keeps every entry single-assignment.
  const std::int64_t value = compute();
  values_.emplace(key, value);
  return value;
}

std::int64_t ClassicalCache::sylvester(Side side, std::int64_t n, int k) {
  return lookup({side == Side::A ? 0 : 1, n, k, 0},
                [&] { return side == Side::A ? sylvester_a_count(n, k) : sylvester_b_count(n, k); });
}

std::int64_t ClassicalCache::gordon(Side side, std::int64_t n, int k, int i) {
  return lookup({side == Side::A ? 2 : 3, n, k, i},
                [&] { return side == Side::A ? gordon_a_count(n, k, i) : gordon_b_count(n, k, i); });
}

std::int64_t ClassicalCache::modp(std::int64_t n, int rho, const ClassSpec& spec) {
  const int tag = spec.kind() == ClassSpec::Kind::ModPParts ? 4 : 5;
  const int param = tag == 4 ? spec.residue_mask() : spec.shape_variant();
  return lookup({tag, n, rho, param}, [&] { return modp_section_count(n, rho, spec); });
}

std::int64_t ClassicalCache::partitions(std::int64_t n) {
  return lookup({6, n, 0, 0}, [&] { return partition_count(n); });
}

ClassicalCache& ClassicalCache::shared() {
  static ClassicalCache cache;
  return cache;
}

}  // namespace tpart
