#pragma once

// Text form of q-sums: one term per line in canonical order,
//   coeff * q^(exponent) * a^j * t^k
// with one factor per marker of the ring, in layout order.

#include <string>
#include <string_view>

#include "tpart/series.hpp"

namespace tpart {

std::string serialize(const QSum& f);
std::string serialize(const ClassicalSeries& f);

// Inverse of serialize; terms may come in any order and repeated monomials
// are summed. Throws Parse or OutsideTruncation.
QSum parse_qsum(std::string_view text, const QSumRingPtr& ring);
ClassicalSeries parse_classical_series(std::string_view text, const ClassicalRingPtr& ring);

// "q^(exponent) * a^j * t^k" for a single monomial.
std::string monomial_text(const QuadInt& e, const Markers& m, const MarkerLayout& layout);
std::string monomial_text(std::int64_t e, const Markers& m, const MarkerLayout& layout);

}  // namespace tpart
