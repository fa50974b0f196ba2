#include "tpart/text.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <vector>

#include "tpart/error.hpp"

namespace tpart {

namespace {

[[noreturn]] void parse_error(std::string_view what, std::string_view text) {
  throw Error(ErrorCode::Parse, std::string(what) + ": '" + std::string(text) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) parse_error("bad integer in element", whole);
  return value;
}

}  // namespace

std::string to_string(const QuadInt& a) {
  std::string out = std::to_string(a.x());
  if (a.y() < 0) {
    out += '-';
    out += std::to_string(static_cast<unsigned long long>(-(a.y() + 1)) + 1ULL);
  } else {
    out += '+';
    out += std::to_string(a.y());
  }
  out += "*w@";
  out += std::to_string(a.field().d());
  return out;
}

std::string to_string(const Partition& lambda) {
  std::string out;
  for (const auto& [part, mult] : lambda.exponent_view()) {
    out += '(';
    out += to_string(part);
    out += '^';
    out += std::to_string(mult);
    out += ')';
  }
  return out;
}

QuadInt parse_element(std::string_view text, const std::optional<Field>& field) {
  std::string_view body = trim(text);
  std::optional<Field> own;
  if (auto at = body.rfind('@'); at != std::string_view::npos) {
    own = Field::make(parse_int(trim(body.substr(at + 1)), text));
    body = trim(body.substr(0, at));
    if (field && *field != *own) {
      throw Error(ErrorCode::FieldMismatch, "element '" + std::string(text) + "' is not in Q(sqrt " +
                                                std::to_string(field->d()) + ")");
    }
  } else if (field) {
    own = field;
  } else {
    parse_error("element needs an @d suffix", text);
  }
  if (body.empty()) parse_error("empty element", text);

  if (body.size() < 2 || body.substr(body.size() - 2) != "*w") {
    return own->element(parse_int(body, text), 0);
  }
  body.remove_suffix(2);
  // The sign separating x from y is the last +/- not in leading position.
  std::size_t split = std::string_view::npos;
  for (std::size_t j = body.size(); j-- > 1;) {
    if (body[j] == '+' || body[j] == '-') {
      split = j;
      break;
    }
  }
  if (split == std::string_view::npos) parse_error("element needs the form x+y*w", text);
  const std::int64_t x = parse_int(trim(body.substr(0, split)), text);
  std::string_view ytext = trim(body.substr(split + 1));
  std::int64_t y = parse_int(ytext, text);
  if (body[split] == '-') y = detail::checked_sub(0, y);
  return own->element(x, y);
}

Partition parse_partition(std::string_view text, const std::optional<Field>& field) {
  std::string_view rest = trim(text);
  std::vector<QuadInt> parts;
  std::optional<Field> ctx = field;
  while (!rest.empty()) {
    if (rest.front() != '(') parse_error("partition block must start with '('", text);
    const auto close = rest.find(')');
    if (close == std::string_view::npos) parse_error("unterminated partition block", text);
    std::string_view block = rest.substr(1, close - 1);
    rest = trim(rest.substr(close + 1));

    std::int64_t mult = 1;
    if (auto caret = block.rfind('^'); caret != std::string_view::npos) {
      mult = parse_int(trim(block.substr(caret + 1)), text);
      block = block.substr(0, caret);
    }
    if (mult < 1) parse_error("multiplicity must be positive", text);
    QuadInt part = parse_element(block, ctx);
    ctx = part.field();
    parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
  }
  if (parts.empty()) parse_error("empty partition", text);
  return Partition::from_parts(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const QuadInt& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const Partition& lambda) { return os << to_string(lambda); }

}  // namespace tpart
