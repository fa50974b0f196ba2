#include "tpart/counting.hpp"

#include <unordered_map>

#include "tpart/classical.hpp"
#include "tpart/error.hpp"

namespace tpart {

using detail::checked_add;
using detail::checked_mul;

namespace {

struct GroundPart {
  QuadInt value;
  Embedding emb;
};

bool fits(const Embedding& part, const Embedding& remaining, std::int64_t d) {
  const std::int64_t p = remaining.p - part.p;
  const std::int64_t q = remaining.q - part.q;
  if (p == 0 && q == 0) return true;
  if (p <= 0) return false;
  return static_cast<__int128>(p) * p > static_cast<__int128>(q) * q * d;
}

class Enumerator {
 public:
  Enumerator(const QuadInt& delta, const ClassSpec& spec, const std::optional<PrimeAbove5>& prime,
             const PartFilter& filter, const PartitionVisitor& visit)
      : spec_(spec), prime_(prime), visit_(visit), d_(delta.field().d()) {
    for (const QuadInt& part : downset(delta)) {
      if (!part_admissible(part, spec, prime)) continue;
      if (filter && !filter(part)) continue;
      ground_.push_back({part, part.embedding()});
    }
    distinct_ = spec.requires_distinct_parts();
    // Sylvester A allows at most k distinct part values.
    max_distinct_ = spec.kind() == ClassSpec::Kind::SylvesterA ? spec.k() : -1;
  }

  void run(const Embedding& target) {
    if (ground_.empty()) return;
    recurse(target, static_cast<std::ptrdiff_t>(ground_.size()) - 1, 0);
  }

 private:
  void recurse(const Embedding& remaining, std::ptrdiff_t top, int distinct_used) {
    for (std::ptrdiff_t idx = top; idx >= 0; --idx) {
      const GroundPart& part = ground_[static_cast<std::size_t>(idx)];
      if (part.emb.p > remaining.p) continue;
      if (!fits(part.emb, remaining, d_)) continue;
      const bool fresh = current_.empty() || current_.back() != part.value;
      const int used = distinct_used + (fresh ? 1 : 0);
      if (max_distinct_ >= 0 && used > max_distinct_) continue;

      current_.push_back(part.value);
      const Embedding rest{remaining.p - part.emb.p, remaining.q - part.emb.q};
      if (rest.p == 0 && rest.q == 0) {
        Partition lambda = Partition::from_parts(current_);
        if (in_class(lambda, spec_, prime_)) visit_(lambda);
      } else {
        recurse(rest, distinct_ ? idx - 1 : idx, used);
      }
      current_.pop_back();
    }
  }

  const ClassSpec& spec_;
  const std::optional<PrimeAbove5>& prime_;
  const PartitionVisitor& visit_;
  std::int64_t d_;
  std::vector<GroundPart> ground_;
  std::vector<QuadInt> current_;
  bool distinct_ = false;
  int max_distinct_ = -1;
};

const PrimeAbove5& need_prime(const std::optional<PrimeAbove5>& prime) {
  if (!prime) throw Error(ErrorCode::InvalidParameter, "modp class requires a prime above 5");
  return *prime;
}

// Coefficient of x^k in prod_h (sum_{j >= 1} c_j(n_h) x^j).
std::int64_t sylvester_sectional(const std::vector<std::pair<QuadInt, std::int64_t>>& sections, Side side, int k) {
  auto& cache = ClassicalCache::shared();
  const auto K = static_cast<std::size_t>(k);
  std::vector<std::int64_t> poly(K + 1, 0);
  poly[0] = 1;
  for (const auto& [gamma, n] : sections) {
    std::vector<std::int64_t> next(K + 1, 0);
    for (std::size_t have = 0; have < K; ++have) {
      if (poly[have] == 0) continue;
      for (std::size_t j = 1; have + j <= K; ++j) {
        const std::int64_t c = cache.sylvester(side, n, static_cast<int>(j));
        if (c == 0) continue;
        next[have + j] = checked_add(next[have + j], checked_mul(poly[have], c));
      }
    }
    poly = std::move(next);
  }
  return poly[K];
}

}  // namespace

void for_each_partition(const QuadInt& delta, const ClassSpec& spec, const PartitionVisitor& visit,
                        const std::optional<PrimeAbove5>& prime, const PartFilter& filter) {
  require_totally_positive(delta, "partition target");
  if (spec.is_modp()) need_prime(prime);
  Enumerator enumerator(delta, spec, prime, filter, visit);
  enumerator.run(delta.embedding());
}

std::vector<Partition> enumerate_partitions(const QuadInt& delta, const ClassSpec& spec,
                                            const std::optional<PrimeAbove5>& prime) {
  std::vector<Partition> out;
  for_each_partition(delta, spec, [&](const Partition& lambda) { out.push_back(lambda); }, prime);
  return out;
}

std::vector<Partition> enumerate_sectional_partitions(const QuadInt& gamma, std::int64_t n, const ClassSpec& spec,
                                                      const std::optional<PrimeAbove5>& prime) {
  if (!is_primitive(gamma)) throw Error(ErrorCode::InvalidParameter, "section generator must be primitive");
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "section multiple must be positive");
  std::vector<Partition> out;
  for_each_partition(
      gamma * n, spec, [&](const Partition& lambda) { out.push_back(lambda); }, prime,
      [&](const QuadInt& part) { return radial_decompose(part).primitive_factor == gamma; });
  return out;
}

void for_each_primitive_partition(const QuadInt& delta, const PartitionVisitor& visit) {
  for_each_partition(delta, ClassSpec::all(), visit, std::nullopt,
                     [](const QuadInt& part) { return part.content() == 1; });
}

std::vector<Partition> enumerate_primitive_partitions(const QuadInt& delta) {
  std::vector<Partition> out;
  for_each_primitive_partition(delta, [&](const Partition& lambda) { out.push_back(lambda); });
  return out;
}

std::int64_t count_partitions(const QuadInt& delta) {
  const std::vector<QuadInt> elements = downset(delta);
  std::unordered_map<QuadInt, std::size_t, QuadIntHash> index;
  for (std::size_t j = 0; j < elements.size(); ++j) index.emplace(elements[j], j + 1);

  // Slot 0 is the zero element; slot j+1 is elements[j].
  std::vector<std::int64_t> ways(elements.size() + 1, 0);
  ways[0] = 1;
  for (const QuadInt& coin : elements) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const QuadInt& e = elements[j];
      if (!precedes_or_equal(coin, e)) continue;
      const QuadInt rest = e - coin;
      const std::size_t from = rest.is_zero() ? 0 : index.at(rest);
      ways[j + 1] = checked_add(ways[j + 1], ways[from]);
    }
  }
  return ways[index.at(delta)];
}

std::int64_t count_via_factorization(const QuadInt& delta) {
  auto& cache = ClassicalCache::shared();
  std::int64_t total = 0;
  for_each_primitive_partition(delta, [&](const Partition& mu) {
    std::int64_t product = 1;
    for (const auto& [gamma, n] : mu.exponent_view()) product = checked_mul(product, cache.partitions(n));
    total = checked_add(total, product);
  });
  return total;
}

std::int64_t count_class(const QuadInt& delta, const ClassSpec& spec, const std::optional<PrimeAbove5>& prime) {
  std::int64_t count = 0;
  for_each_partition(delta, spec, [&](const Partition&) { ++count; }, prime);
  return count;
}

std::int64_t sectional_product(const std::vector<std::pair<QuadInt, std::int64_t>>& sections, const ClassSpec& spec,
                               const std::optional<PrimeAbove5>& prime) {
  using Kind = ClassSpec::Kind;
  auto& cache = ClassicalCache::shared();
  switch (spec.kind()) {
    case Kind::SylvesterA: return sylvester_sectional(sections, Side::A, spec.k());
    case Kind::SylvesterB: return sylvester_sectional(sections, Side::B, spec.k());
    default: break;
  }
  std::int64_t product = 1;
  for (const auto& [gamma, n] : sections) {
    std::int64_t c = 0;
    switch (spec.kind()) {
      case Kind::All: c = cache.partitions(n); break;
      case Kind::GordonA: c = cache.gordon(Side::A, n, spec.k(), spec.i()); break;
      case Kind::GordonB: c = cache.gordon(Side::B, n, spec.k(), spec.i()); break;
      case Kind::ModPParts:
      case Kind::ModPShape: c = cache.modp(n, residue_mod_p5(gamma, need_prime(prime)), spec); break;
      default: break;
    }
    if (c == 0) return 0;
    product = checked_mul(product, c);
  }
  return product;
}

std::int64_t count_class_via_sections(const QuadInt& delta, const ClassSpec& spec,
                                      const std::optional<PrimeAbove5>& prime) {
  if (spec.is_modp()) need_prime(prime);
  std::int64_t total = 0;
  for_each_primitive_partition(delta, [&](const Partition& mu) {
    total = checked_add(total, sectional_product(mu.exponent_view(), spec, prime));
  });
  return total;
}

std::pair<ClassSpec, ClassSpec> sylvester_pair(int k) {
  return {ClassSpec::sylvester(Side::A, k), ClassSpec::sylvester(Side::B, k)};
}

std::pair<ClassSpec, ClassSpec> gordon_pair(int k, int i) {
  return {ClassSpec::gordon(Side::A, k, i), ClassSpec::gordon(Side::B, k, i)};
}

std::pair<ClassSpec, ClassSpec> modp_pair(int variant) {
  if (variant != 1 && variant != 2) throw Error(ErrorCode::InvalidParameter, "modp variant must be 1 or 2");
  return {ClassSpec::modp_parts(variant == 1 ? kResidues14 : kResidues23), ClassSpec::modp_shape(variant)};
}

IdentityReport verify_identity(const QuadInt& delta, const std::pair<ClassSpec, ClassSpec>& sides,
                               const std::optional<PrimeAbove5>& prime) {
  const auto& [a, b] = sides;
  return IdentityReport{a,
                        b,
                        count_class(delta, a, prime),
                        count_class(delta, b, prime),
                        count_class_via_sections(delta, a, prime),
                        count_class_via_sections(delta, b, prime)};
}

}  // namespace tpart
