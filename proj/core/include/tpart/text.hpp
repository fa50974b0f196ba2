#pragma once

// Text forms. Elements print as "x+y*w@d" (or "x-y*w@d" for negative y);
// partitions print in exponent notation over ascending parts, e.g.
// "(1+0*w@3^7)(2+1*w@3^2)".

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "tpart/partition.hpp"
#include "tpart/quadfield.hpp"

namespace tpart {

std::string to_string(const QuadInt& a);
std::string to_string(const Partition& lambda);

// Accepts "x+y*w@d", "x-y*w@d", "x@d", and, when a field is supplied, the
// same forms without the "@d" suffix. A suffix that disagrees with the
// supplied field is a FieldMismatch.
QuadInt parse_element(std::string_view text, const std::optional<Field>& field = std::nullopt);
Partition parse_partition(std::string_view text, const std::optional<Field>& field = std::nullopt);

std::ostream& operator<<(std::ostream& os, const QuadInt& a);
std::ostream& operator<<(std::ostream& os, const Partition& lambda);

}  // namespace tpart
