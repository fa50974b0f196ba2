#include "tpart/identities.hpp"

#include "tpart/classes.hpp"
#include "tpart/classical.hpp"
#include "tpart/counting.hpp"
#include "tpart/error.hpp"
#include "tpart/qsum_builders.hpp"
#include "tpart/series_io.hpp"
#include "tpart/text.hpp"

namespace tpart {

namespace {

template <class E>
SeriesCheck compare_impl(std::string name, std::string reading, const Series<E>& lhs, const Series<E>& rhs) {
  if (!lhs.ring()->same_as(*rhs.ring())) throw Error(ErrorCode::RingMismatch, "compared sides live in different rings");
  SeriesCheck check{std::move(name), std::move(reading), lhs == rhs, lhs.term_count(), rhs.term_count(), {}};
  if (check.equal) return check;

  const auto& a = lhs.raw();
  const auto& b = rhs.raw();
  auto ia = a.begin();
  auto ib = b.begin();
  std::uint64_t key = 0;
  std::int64_t ca = 0;
  std::int64_t cb = 0;
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      key = ia->first, ca = ia->second, cb = 0;
      break;
    }
    if (ia == a.end() || ib->first < ia->first) {
      key = ib->first, ca = 0, cb = ib->second;
      break;
    }
    if (ia->second != ib->second) {
      key = ia->first, ca = ia->second, cb = ib->second;
      break;
    }
    ++ia, ++ib;
  }
  const auto& ring = *lhs.ring();
  const std::size_t M = ring.markers.size();
  check.first_difference = "coefficient of " +
                           monomial_text(ring.grading.exponent(key / M), ring.markers.decode(key % M), ring.markers) +
                           ": " + std::to_string(ca) + " vs " + std::to_string(cb);
  return check;
}

QSum product_over_primitives(const QSumRingPtr& ring, const std::function<QSum(const QuadInt&)>& factor) {
  FactorFamily family(ring);
  for (const QuadInt& gamma : primitives_up_to(ring->grading.bound())) {
    family.add(factor(gamma), "gamma=" + to_string(gamma));
  }
  return family.product();
}

// 1 + sum over delta <= bound of count(delta) q^delta.
QSum counting_series(const QSumRingPtr& ring, const std::function<std::int64_t(const QuadInt&)>& count) {
  QSum out = QSum::one(ring);
  for (std::size_t idx = 1; idx < ring->grading.size(); ++idx) {
    const QuadInt& delta = ring->grading.exponent(idx);
    out += QSum::monomial(ring, count(delta), delta);
  }
  return out;
}

std::string gordon_label(int k, int i) { return "k=" + std::to_string(k) + ",i=" + std::to_string(i); }

}  // namespace

SeriesCheck compare_series(std::string name, std::string reading, const QSum& lhs, const QSum& rhs) {
  return compare_impl(std::move(name), std::move(reading), lhs, rhs);
}

SeriesCheck compare_series(std::string name, std::string reading, const ClassicalSeries& lhs,
                           const ClassicalSeries& rhs) {
  return compare_impl(std::move(name), std::move(reading), lhs, rhs);
}

std::vector<SeriesCheck> cauchy_check(std::int64_t N, int cap_a, int cap_t) {
  auto ring = ClassicalSeries::Ring::make(N, MarkerLayout({"a", "t"}, {cap_a, cap_t}));
  const ClassicalSeries lhs = cauchy_product(ring);
  return {compare_series("cauchy", "(a;q)_n", lhs, cauchy_sum(ring, CauchyNumerator::Full)),
          compare_series("cauchy", "(a;q)_{n-1}", lhs, cauchy_sum(ring, CauchyNumerator::Shifted))};
}

std::vector<SeriesCheck> leveque_check(std::int64_t N, int cap_a) {
  auto ring = ClassicalSeries::Ring::make(N, MarkerLayout({"a"}, {cap_a}));
  const ClassicalSeries rhs = leveque_sum<std::int64_t>(ring, 1);
  return {compare_series("leveque", "(-q;q)_inf", leveque_product<std::int64_t>(ring, 1, LevequeTail::MinusQ), rhs),
          compare_series("leveque", "(q;q)_inf", leveque_product<std::int64_t>(ring, 1, LevequeTail::Q), rhs)};
}

std::vector<SeriesCheck> leveque_lifted_check(const QuadInt& bound, int cap_a) {
  auto ring = QSum::Ring::make(bound, MarkerLayout({"a"}, {cap_a}));
  const QSum rhs = lift_product(
      [](const QuadInt&, const ClassicalRingPtr& classical) -> std::optional<ClassicalSeries> {
        return leveque_sum<std::int64_t>(classical, 1);
      },
      ring);
  std::vector<SeriesCheck> out;
  for (LevequeTail tail : {LevequeTail::MinusQ, LevequeTail::Q}) {
    const QSum lhs = product_over_primitives(
        ring, [&](const QuadInt& gamma) { return leveque_product<QuadInt>(ring, gamma, tail); });
    out.push_back(compare_series("leveque-lifted", tail == LevequeTail::MinusQ ? "(-q;q)_inf" : "(q;q)_inf", lhs, rhs));
  }
  return out;
}

SeriesCheck gordon_gf_check(const QuadInt& bound, int k, int i) {
  auto ring = QSum::Ring::make(bound);
  return compare_series("gordon-gf", gordon_label(k, i), gordon_product_side(k, i, ring), gordon_sum_product(k, i, ring));
}

SeriesCheck gordon_count_check(const QuadInt& bound, int k, int i) {
  auto ring = QSum::Ring::make(bound);
  const ClassSpec spec = ClassSpec::gordon(Side::A, k, i);
  return compare_series("gordon-count", gordon_label(k, i), gordon_product_side(k, i, ring),
                        counting_series(ring, [&](const QuadInt& delta) { return count_class(delta, spec); }));
}

std::vector<SeriesCheck> sylvester_gf_check(const QuadInt& gamma, const QuadInt& bound, int cap_a) {
  if (!is_primitive(gamma)) throw Error(ErrorCode::InvalidParameter, "sylvester_gf_check needs a primitive gamma");
  auto ring = QSum::Ring::make(bound, MarkerLayout({"a"}, {cap_a}));
  const QSum lhs = sylvester_bivariate<QuadInt>(ring, gamma);
  std::vector<SeriesCheck> out;
  for (Side side : {Side::A, Side::B}) {
    QSum rhs(ring);
    const auto sections = multiples(*ring, gamma, 0);
    for (std::size_t n = 0; n < sections.size(); ++n) {
      for (int k = 0; k <= cap_a; ++k) {
        const auto nn = static_cast<std::int64_t>(n);
        const std::int64_t c = side == Side::A ? sylvester_a_count(nn, k) : sylvester_b_count(nn, k);
        rhs += QSum::monomial(ring, c, sections[n], marker_power(*ring, "a", k));
      }
    }
    out.push_back(compare_series("sylvester-gf", side == Side::A ? "A_k(n)" : "B_k(n)", lhs, rhs));
  }
  return out;
}

SeriesCheck euler_lift_check(const QuadInt& bound) {
  auto ring = QSum::Ring::make(bound);
  return compare_series("euler-lift", "p(delta)", euler_lift(ring), counting_series(ring, count_partitions));
}

std::vector<SeriesCheck> modp_gf_check(const QuadInt& bound, std::uint8_t residue_mask) {
  const PrimeAbove5 prime = find_prime_above_5(bound.field());
  auto ring = QSum::Ring::make(bound);
  const QSum sums = modp_sum_side(prime, residue_mask, ring);
  const ClassSpec spec = ClassSpec::modp_parts(residue_mask);
  const std::string reading = to_string(spec);
  return {compare_series("modp-gf", reading + " product", sums, modp_product_side(prime, residue_mask, ring)),
          compare_series("modp-gf", reading + " count", sums,
                         counting_series(ring, [&](const QuadInt& delta) { return count_class(delta, spec, prime); }))};
}

}  // namespace tpart
