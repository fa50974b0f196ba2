#pragma once

// Builders for the q-sums that appear in the identities: Pochhammer products,
// the substitution q^n -> q^{n gamma}, products over primitives, and both
// sides of the Gordon, Sylvester, LeVeque and Cauchy identities.
//
// Templates take a "unit" exponent: gamma for a section of a QSum ring, 1 for
// a ClassicalSeries. Infinite products are realized over the multiples of the
// unit that survive truncation.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tpart/quadfield.hpp"
#include "tpart/series.hpp"

namespace tpart {

// n*unit for n = from..to (to < 0 means no upper limit), stopping at the first
// multiple outside the grading.
template <class E>
std::vector<E> multiples(const SeriesRing<E>& ring, const E& unit, std::int64_t from, std::int64_t to = -1);

// Marker vector with a single nonzero entry; throws if the name is unknown.
template <class E>
Markers marker_power(const SeriesRing<E>& ring, const std::string& name, int power = 1);

// (a;q)_S = prod_{s in S} (1 - a q^s) for a series a.
template <class E>
Series<E> pochhammer(const Series<E>& a, const std::vector<E>& exponents);

// (a;q^u)_n, (a;q^u)*_n, (a;q^u)_inf, (a;q^u)*_inf.
template <class E>
Series<E> pochhammer_n(const Series<E>& a, const E& unit, std::int64_t n);
template <class E>
Series<E> pochhammer_star_n(const Series<E>& a, const E& unit, std::int64_t n);
template <class E>
Series<E> pochhammer_inf(const Series<E>& a, const E& unit);
template <class E>
Series<E> pochhammer_star_inf(const Series<E>& a, const E& unit);

// (a;q)_{P_m}: the product over n*gamma for primitive gamma and n <= m.
QSum pochhammer_primitive_levels(const QSum& a, std::int64_t m);
// (a;q)_{O+}: the product over every totally positive exponent.
QSum pochhammer_totally_positive(const QSum& a);

// q^n -> q^{n gamma}; terms leaving the truncation are dropped. Marker
// layouts must agree.
QSum substitute_scale(const ClassicalSeries& f, const QuadInt& gamma, const QSumRingPtr& ring);

// Per-section recipe: given a primitive gamma and a classical ring truncated
// at max_multiple(gamma, bound), return the factor, or nullopt for 1.
using LiftRecipe = std::function<std::optional<ClassicalSeries>(const QuadInt&, const ClassicalRingPtr&)>;

// prod over primitive gamma <= bound of substitute_scale(recipe(gamma), gamma).
// Throws ProductCondition if a factor's q^0 part is not 1.
QSum lift_product(const LiftRecipe& recipe, const QSumRingPtr& ring);

// prod over nonzero e in the grading with scale(e) not in {0, i, -i} mod 2k+1
// of 1/(1 - q^e). For a QSum ring the scale is the content; for a classical
// ring it is e itself.
template <class E>
Series<E> gordon_product(const typename Series<E>::RingPtr& ring, int k, int i);

// sum over N_1 >= ... >= N_{k-1} >= 0 of
//   q^{(N_1^2 + ... + N_{k-1}^2 + N_i + ... + N_{k-1}) u} / prod_j (q^u;q^u)_{n_j}
// with n_j = N_j - N_{j+1}.
template <class E>
Series<E> gordon_sum(const typename Series<E>::RingPtr& ring, const E& unit, int k, int i);

QSum gordon_sum_side(const QuadInt& gamma, int k, int i, const QSumRingPtr& ring);
QSum gordon_product_side(int k, int i, const QSumRingPtr& ring);
// prod over primitive gamma <= bound of gordon_sum_side(gamma, k, i).
QSum gordon_sum_product(int k, int i, const QSumRingPtr& ring);

// ((1-a) q^u; q^{2u})_inf (-q^u; q^u)_inf, marker "a".
template <class E>
Series<E> sylvester_bivariate(const typename Series<E>::RingPtr& ring, const E& unit);

// prod over nonzero e of 1/(1 - q^e).
template <class E>
Series<E> euler_product(const typename Series<E>::RingPtr& ring);
// Euler's product lifted over primitives.
QSum euler_lift(const QSumRingPtr& ring);

enum class LevequeTail {
  MinusQ,  // (-q^u; q^u)_inf
  Q,       // (q^u; q^u)_inf
};

// (a q^u; q^{2u})_inf times the tail, marker "a".
template <class E>
Series<E> leveque_product(const typename Series<E>::RingPtr& ring, const E& unit, LevequeTail tail);
// sum_n (a;q^u)_n q^{u n(n+1)/2} / (q^u;q^u)_n, marker "a".
template <class E>
Series<E> leveque_sum(const typename Series<E>::RingPtr& ring, const E& unit);

enum class CauchyNumerator {
  Full,     // (a;q)_n
  Shifted,  // (a;q)_{n-1} for n >= 1
};

// (at;q)_inf / (t;q)_inf, markers "a" and "t".
ClassicalSeries cauchy_product(const ClassicalRingPtr& ring);
// sum_n numerator(n) t^n / (q;q)_n, markers "a" and "t".
ClassicalSeries cauchy_sum(const ClassicalRingPtr& ring, CauchyNumerator numerator);

// Products over primitives built from the two Rogers-Ramanujan sum sides,
// chosen per section by the residue of gamma so that the coefficient of q^delta
// counts partitions of delta with every part's residue in the mask.
QSum modp_sum_side(const PrimeAbove5& prime, std::uint8_t residue_mask, const QSumRingPtr& ring);
// prod over nonzero e with residue(e) in the mask of 1/(1 - q^e).
QSum modp_product_side(const PrimeAbove5& prime, std::uint8_t residue_mask, const QSumRingPtr& ring);

}  // namespace tpart
