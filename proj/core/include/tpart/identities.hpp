#pragma once

// Coefficient-wise checks of q-sum identities at a finite truncation. Each
// check builds both sides independently and compares every stored term.

#include <cstdint>
#include <string>
#include <vector>

#include "tpart/quadfield.hpp"
#include "tpart/series.hpp"

namespace tpart {

struct SeriesCheck {
  std::string name;
  std::string reading;  // which form of the identity was built
  bool equal = false;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  std::string first_difference;  // empty when equal
};

SeriesCheck compare_series(std::string name, std::string reading, const QSum& lhs, const QSum& rhs);
SeriesCheck compare_series(std::string name, std::string reading, const ClassicalSeries& lhs,
                           const ClassicalSeries& rhs);

// (at;q)_inf/(t;q)_inf against sum_n (a;q)_n t^n/(q)_n, then against the
// variant with (a;q)_{n-1}. Truncated at q^N with the given marker caps.
std::vector<SeriesCheck> cauchy_check(std::int64_t N, int cap_a, int cap_t);

// (aq;q^2)_inf (-q;q)_inf against sum_n (a;q)_n q^{n(n+1)/2}/(q)_n, then the
// variant whose product uses (q;q)_inf.
std::vector<SeriesCheck> leveque_check(std::int64_t N, int cap_a);
// The same two readings lifted over the primitives below the bound.
std::vector<SeriesCheck> leveque_lifted_check(const QuadInt& bound, int cap_a);

// Product side against the product over primitives of the sum sides.
SeriesCheck gordon_gf_check(const QuadInt& bound, int k, int i);
// Product side against sum over delta of count_class(delta, GordonA(k,i)) q^delta.
SeriesCheck gordon_count_check(const QuadInt& bound, int k, int i);

// Section of gamma: the bivariate product against sum A_k(n) a^k q^{n gamma},
// and, as a second check, against sum B_k(n) a^k q^{n gamma}.
std::vector<SeriesCheck> sylvester_gf_check(const QuadInt& gamma, const QuadInt& bound, int cap_a);

// Euler product lifted over primitives against sum p(delta) q^delta.
SeriesCheck euler_lift_check(const QuadInt& bound);

// For the residue mask {1,4} or {2,3}: the product over primitives of the
// Rogers-Ramanujan sum sides against the direct product over parts with
// allowed residue, and against the enumerated counts. Throws Inert5.
std::vector<SeriesCheck> modp_gf_check(const QuadInt& bound, std::uint8_t residue_mask);

}  // namespace tpart
