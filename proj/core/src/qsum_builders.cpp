#include "tpart/qsum_builders.hpp"

#include "tpart/classes.hpp"
#include "tpart/error.hpp"
#include "tpart/text.hpp"

namespace tpart {

namespace {

std::int64_t scale_of(const QuadInt& e) { return e.content(); }
std::int64_t scale_of(std::int64_t e) { return e; }

template <class E>
std::int64_t multiple_count(const SeriesRing<E>& ring, const E& unit) {
  return static_cast<std::int64_t>(multiples(ring, unit, 1).size());
}

template <class E>
Series<E> divide_by_q_pochhammer(Series<E> f, const E& unit, std::int64_t n) {
  for (const E& e : multiples(*f.ring(), unit, 1, n)) f = f.over_binomial(-1, e);
  return f;
}

void check_gordon(int k, int i) {
  if (k < 2 || i < 1 || i > k) throw Error(ErrorCode::InvalidParameter, "Gordon builder needs k >= 2, 1 <= i <= k");
}

}  // namespace

template <class E>
std::vector<E> multiples(const SeriesRing<E>& ring, const E& unit, std::int64_t from, std::int64_t to) {
  std::vector<E> out;
  for (std::int64_t n = from; to < 0 || n <= to; ++n) {
    E e = unit * n;
    if (!ring.grading.index_of(e)) break;
    out.push_back(std::move(e));
  }
  return out;
}

template <class E>
Markers marker_power(const SeriesRing<E>& ring, const std::string& name, int power) {
  auto pos = ring.markers.position(name);
  if (!pos) throw Error(ErrorCode::InvalidParameter, "ring has no marker named '" + name + "'");
  Markers m(ring.markers.count(), 0);
  m[*pos] = power;
  return m;
}

template <class E>
Series<E> pochhammer(const Series<E>& a, const std::vector<E>& exponents) {
  const auto& ring = a.ring();
  Series<E> f = Series<E>::one(ring);
  const auto terms = a.terms();
  if (terms.empty()) return f;
  for (const E& s : exponents) {
    if (!ring->grading.index_of(s)) {
      throw Error(ErrorCode::OutsideTruncation, "Pochhammer exponent outside the truncation");
    }
    if (terms.size() == 1) {
      const auto& t = terms.front();
      const E shifted = t.exponent + s;
      if (ring->grading.index_of(shifted)) f = f.times_binomial(-t.coeff, shifted, t.markers);
    } else {
      f -= f * (a * Series<E>::monomial(ring, 1, s));
    }
  }
  return f;
}

template <class E>
Series<E> pochhammer_n(const Series<E>& a, const E& unit, std::int64_t n) {
  return n <= 0 ? Series<E>::one(a.ring()) : pochhammer(a, multiples(*a.ring(), unit, 0, n - 1));
}

template <class E>
Series<E> pochhammer_star_n(const Series<E>& a, const E& unit, std::int64_t n) {
  return n <= 1 ? Series<E>::one(a.ring()) : pochhammer(a, multiples(*a.ring(), unit, 1, n - 1));
}

template <class E>
Series<E> pochhammer_inf(const Series<E>& a, const E& unit) {
  return pochhammer(a, multiples(*a.ring(), unit, 0));
}

template <class E>
Series<E> pochhammer_star_inf(const Series<E>& a, const E& unit) {
  return pochhammer(a, multiples(*a.ring(), unit, 1));
}

QSum pochhammer_primitive_levels(const QSum& a, std::int64_t m) {
  const QuadInt& bound = a.ring()->grading.bound();
  std::vector<QuadInt> exponents;
  for (const QuadInt& gamma : primitives_up_to(bound)) {
    for (const QuadInt& e : multiples(*a.ring(), gamma, 1, m)) exponents.push_back(e);
  }
  return pochhammer(a, exponents);
}

QSum pochhammer_totally_positive(const QSum& a) { return pochhammer(a, downset(a.ring()->grading.bound())); }

QSum substitute_scale(const ClassicalSeries& f, const QuadInt& gamma, const QSumRingPtr& ring) {
  if (!(f.ring()->markers == ring->markers)) {
    throw Error(ErrorCode::RingMismatch, "substitute_scale needs matching marker layouts");
  }
  if (!is_primitive(gamma)) throw Error(ErrorCode::InvalidParameter, "substitute_scale needs a primitive gamma");
  QSum out(ring);
  const std::size_t M = ring->markers.size();
  for (const auto& [key, c] : f.raw()) {
    const auto n = static_cast<std::int64_t>(key / M);
    auto idx = ring->grading.index_of(gamma * n);
    if (idx) out.add_raw(static_cast<std::uint64_t>(*idx * M + key % M), c);
  }
  return out;
}

QSum lift_product(const LiftRecipe& recipe, const QSumRingPtr& ring) {
  const QuadInt& bound = ring->grading.bound();
  FactorFamily family(ring);
  for (const QuadInt& gamma : primitives_up_to(bound)) {
    auto classical = ClassicalSeries::Ring::make(max_multiple(gamma, bound), ring->markers);
    if (auto factor = recipe(gamma, classical)) {
      family.add(substitute_scale(*factor, gamma, ring), "gamma=" + to_string(gamma));
    }
  }
  return family.product();
}

template <class E>
Series<E> gordon_product(const typename Series<E>::RingPtr& ring, int k, int i) {
  check_gordon(k, i);
  const std::int64_t modulus = 2 * k + 1;
  Series<E> f = Series<E>::one(ring);
  for (std::size_t idx = 1; idx < ring->grading.size(); ++idx) {
    const E e = ring->grading.exponent(idx);
    const std::int64_t r = scale_of(e) % modulus;
    if (r == 0 || r == i || r == modulus - i) continue;
    f = f.over_binomial(-1, e);
  }
  return f;
}

template <class E>
Series<E> gordon_sum(const typename Series<E>::RingPtr& ring, const E& unit, int k, int i) {
  check_gordon(k, i);
  const std::int64_t limit = multiple_count(*ring, unit);
  Series<E> total(ring);
  std::vector<std::int64_t> N(static_cast<std::size_t>(k), 0);  // N[1..k-1], N[k-1] innermost

  // Fill N_j for j = k-1 down to 1, keeping N_j >= N_{j+1}.
  std::function<void(int, std::int64_t)> fill = [&](int j, std::int64_t weight) {
    if (j == 0) {
      Series<E> term = Series<E>::monomial(ring, 1, unit * weight);
      for (int t = 1; t < k; ++t) {
        const std::int64_t next = t + 1 < k ? N[static_cast<std::size_t>(t + 1)] : 0;
        term = divide_by_q_pochhammer(std::move(term), unit, N[static_cast<std::size_t>(t)] - next);
      }
      total += term;
      return;
    }
    const std::int64_t lower = j + 1 < k ? N[static_cast<std::size_t>(j + 1)] : 0;
    for (std::int64_t v = lower;; ++v) {
      const std::int64_t w = weight + v * v + (j >= i ? v : 0);
      if (w > limit) break;
      N[static_cast<std::size_t>(j)] = v;
      fill(j - 1, w);
    }
  };
  fill(k - 1, 0);
  return total;
}

QSum gordon_sum_side(const QuadInt& gamma, int k, int i, const QSumRingPtr& ring) {
  if (!is_primitive(gamma)) throw Error(ErrorCode::InvalidParameter, "gordon_sum_side needs a primitive gamma");
  return gordon_sum<QuadInt>(ring, gamma, k, i);
}

QSum gordon_product_side(int k, int i, const QSumRingPtr& ring) { return gordon_product<QuadInt>(ring, k, i); }

QSum gordon_sum_product(int k, int i, const QSumRingPtr& ring) {
  FactorFamily family(ring);
  for (const QuadInt& gamma : primitives_up_to(ring->grading.bound())) {
    family.add(gordon_sum_side(gamma, k, i, ring), "gamma=" + to_string(gamma));
  }
  return family.product();
}

template <class E>
Series<E> sylvester_bivariate(const typename Series<E>::RingPtr& ring, const E& unit) {
  const Series<E> one = Series<E>::one(ring);
  const Series<E> one_minus_a = one - Series<E>::monomial(ring, 1, unit * 0, marker_power(*ring, "a"));
  std::vector<E> odd;
  std::int64_t n = 1;
  for (const E& e : multiples(*ring, unit, 1)) {
    if (n++ % 2 == 1) odd.push_back(e);
  }
  return pochhammer(one_minus_a, odd) * pochhammer_star_inf(one.scaled(-1), unit);
}

template <class E>
Series<E> euler_product(const typename Series<E>::RingPtr& ring) {
  Series<E> f = Series<E>::one(ring);
  for (std::size_t idx = 1; idx < ring->grading.size(); ++idx) f = f.over_binomial(-1, ring->grading.exponent(idx));
  return f;
}

QSum euler_lift(const QSumRingPtr& ring) {
  return lift_product([](const QuadInt&, const ClassicalRingPtr& classical) -> std::optional<ClassicalSeries> {
    return euler_product<std::int64_t>(classical);
  }, ring);
}

template <class E>
Series<E> leveque_product(const typename Series<E>::RingPtr& ring, const E& unit, LevequeTail tail) {
  const Series<E> one = Series<E>::one(ring);
  const Series<E> a = Series<E>::monomial(ring, 1, unit * 0, marker_power(*ring, "a"));
  std::vector<E> odd;
  std::int64_t n = 1;
  for (const E& e : multiples(*ring, unit, 1)) {
    if (n++ % 2 == 1) odd.push_back(e);
  }
  const Series<E> tail_factor =
      pochhammer_star_inf(tail == LevequeTail::MinusQ ? one.scaled(-1) : one, unit);
  return pochhammer(a, odd) * tail_factor;
}

template <class E>
Series<E> leveque_sum(const typename Series<E>::RingPtr& ring, const E& unit) {
  const Series<E> a = Series<E>::monomial(ring, 1, unit * 0, marker_power(*ring, "a"));
  Series<E> total(ring);
  for (std::int64_t n = 0;; ++n) {
    const E e = unit * (n * (n + 1) / 2);
    if (!ring->grading.index_of(e)) break;
    Series<E> term = Series<E>::monomial(ring, 1, e) * pochhammer_n(a, unit, n);
    total += divide_by_q_pochhammer(std::move(term), unit, n);
  }
  return total;
}

ClassicalSeries cauchy_product(const ClassicalRingPtr& ring) {
  Markers at = marker_power(*ring, "a");
  at[*ring->markers.position("t")] = 1;
  const Markers t = marker_power(*ring, "t");
  ClassicalSeries f = pochhammer_inf(ClassicalSeries::monomial(ring, 1, 0, at), std::int64_t{1});
  for (std::int64_t j : multiples(*ring, std::int64_t{1}, 0)) f = f.over_binomial(-1, j, t);
  return f;
}

ClassicalSeries cauchy_sum(const ClassicalRingPtr& ring, CauchyNumerator numerator) {
  const ClassicalSeries a = ClassicalSeries::monomial(ring, 1, 0, marker_power(*ring, "a"));
  const int t_cap = ring->markers.caps()[*ring->markers.position("t")];
  ClassicalSeries total(ring);
  for (int n = 0; n <= t_cap; ++n) {
    ClassicalSeries num = ClassicalSeries::one(ring);
    if (numerator == CauchyNumerator::Full) {
      num = pochhammer_n(a, std::int64_t{1}, n);
    } else if (n >= 1) {
      num = pochhammer_n(a, std::int64_t{1}, n - 1);
    }
    ClassicalSeries term = ClassicalSeries::monomial(ring, 1, 0, marker_power(*ring, "t", n)) * num;
    total += divide_by_q_pochhammer(std::move(term), std::int64_t{1}, n);
  }
  return total;
}

QSum modp_sum_side(const PrimeAbove5& prime, std::uint8_t residue_mask, const QSumRingPtr& ring) {
  if (residue_mask != kResidues14 && residue_mask != kResidues23) {
    throw Error(ErrorCode::InvalidParameter, "residue mask must be {1,4} or {2,3}");
  }
  FactorFamily family(ring);
  for (const QuadInt& gamma : primitives_up_to(ring->grading.bound())) {
    const int rho = residue_mod_p5(gamma, prime);
    if (rho == 0) continue;
    // The allowed scales are n = +-1 mod 5 when gamma itself is allowed,
    // otherwise n = +-2 mod 5.
    const int i = (residue_mask & residue_bit(rho)) ? 2 : 1;
    family.add(gordon_sum_side(gamma, 2, i, ring), "gamma=" + to_string(gamma));
  }
  return family.product();
}

QSum modp_product_side(const PrimeAbove5& prime, std::uint8_t residue_mask, const QSumRingPtr& ring) {
  QSum f = QSum::one(ring);
  for (std::size_t idx = 1; idx < ring->grading.size(); ++idx) {
    const QuadInt& e = ring->grading.exponent(idx);
    if (residue_mask & residue_bit(residue_mod_p5(e, prime))) f = f.over_binomial(-1, e);
  }
  return f;
}

#define TPART_INSTANTIATE(E)                                                                         \
  template std::vector<E> multiples<E>(const SeriesRing<E>&, const E&, std::int64_t, std::int64_t); \
  template Markers marker_power<E>(const SeriesRing<E>&, const std::string&, int);                  \
  template Series<E> pochhammer<E>(const Series<E>&, const std::vector<E>&);                        \
  template Series<E> pochhammer_n<E>(const Series<E>&, const E&, std::int64_t);                     \
  template Series<E> pochhammer_star_n<E>(const Series<E>&, const E&, std::int64_t);                \
  template Series<E> pochhammer_inf<E>(const Series<E>&, const E&);                                 \
  template Series<E> pochhammer_star_inf<E>(const Series<E>&, const E&);                            \
  template Series<E> gordon_product<E>(const Series<E>::RingPtr&, int, int);                        \
  template Series<E> gordon_sum<E>(const Series<E>::RingPtr&, const E&, int, int);                  \
  template Series<E> sylvester_bivariate<E>(const Series<E>::RingPtr&, const E&);                   \
  template Series<E> euler_product<E>(const Series<E>::RingPtr&);                                   \
  template Series<E> leveque_product<E>(const Series<E>::RingPtr&, const E&, LevequeTail);          \
  template Series<E> leveque_sum<E>(const Series<E>::RingPtr&, const E&);

TPART_INSTANTIATE(QuadInt)
TPART_INSTANTIATE(std::int64_t)

#undef TPART_INSTANTIATE

}  // namespace tpart
