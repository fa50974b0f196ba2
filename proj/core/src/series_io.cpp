#include "tpart/series_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "tpart/error.hpp"
#include "tpart/text.hpp"

namespace tpart {

namespace {

std::string exponent_text(const QuadInt& e) { return to_string(e); }
std::string exponent_text(std::int64_t e) { return std::to_string(e); }

QuadInt parse_exponent(std::string_view s, const Grading<QuadInt>& grading) {
  return parse_element(s, grading.bound().field());
}

std::int64_t parse_integer(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::Parse, "bad integer '" + std::string(s) + "' in q-sum text");
  }
  return v;
}

std::int64_t parse_exponent(std::string_view s, const Grading<std::int64_t>&) { return parse_integer(s); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <class E>
std::string monomial_impl(const E& e, const Markers& m, const MarkerLayout& layout) {
  std::string out = "q^(" + exponent_text(e) + ")";
  for (std::size_t j = 0; j < layout.count(); ++j) {
    out += " * " + layout.names()[j] + "^" + std::to_string(j < m.size() ? m[j] : 0);
  }
  return out;
}

template <class E>
std::string serialize_impl(const Series<E>& f) {
  std::string out;
  for (const auto& term : f.terms()) {
    out += std::to_string(term.coeff);
    out += " * ";
    out += monomial_impl(term.exponent, term.markers, f.ring()->markers);
    out += '\n';
  }
  return out;
}

template <class E>
Series<E> parse_impl(std::string_view text, const typename Series<E>::RingPtr& ring) {
  Series<E> out(ring);
  const MarkerLayout& layout = ring->markers;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;

    // Split on " * " outside the parenthesized exponent.
    std::vector<std::string_view> factors;
    int depth = 0;
    std::size_t from = 0;
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (line[j] == '(') ++depth;
      if (line[j] == ')') --depth;
      if (depth == 0 && line[j] == '*' && (j + 1 >= line.size() || line[j + 1] != 'w')) {
        factors.push_back(trim(line.substr(from, j - from)));
        from = j + 1;
      }
    }
    factors.push_back(trim(line.substr(from)));
    if (factors.size() < 2) throw Error(ErrorCode::Parse, "q-sum term needs 'coeff * q^(...)': " + std::string(line));

    const std::int64_t coeff = parse_integer(factors[0]);
    std::string_view q = factors[1];
    if (q.substr(0, 3) != "q^(" || q.back() != ')') {
      throw Error(ErrorCode::Parse, "q-sum term needs q^(exponent): " + std::string(line));
    }
    const E e = parse_exponent(q.substr(3, q.size() - 4), ring->grading);
    Markers m(layout.count(), 0);
    for (std::size_t j = 2; j < factors.size(); ++j) {
      const auto caret = factors[j].find('^');
      if (caret == std::string_view::npos) throw Error(ErrorCode::Parse, "marker factor needs name^power");
      const std::string name(trim(factors[j].substr(0, caret)));
      auto pos = layout.position(name);
      if (!pos) throw Error(ErrorCode::Parse, "unknown marker '" + name + "'");
      m[*pos] = static_cast<int>(parse_integer(trim(factors[j].substr(caret + 1))));
    }
    out += Series<E>::monomial(ring, coeff, e, m);
  }
  return out;
}

}  // namespace

std::string serialize(const QSum& f) { return serialize_impl(f); }
std::string serialize(const ClassicalSeries& f) { return serialize_impl(f); }

QSum parse_qsum(std::string_view text, const QSumRingPtr& ring) { return parse_impl<QuadInt>(text, ring); }

ClassicalSeries parse_classical_series(std::string_view text, const ClassicalRingPtr& ring) {
  return parse_impl<std::int64_t>(text, ring);
}

std::string monomial_text(const QuadInt& e, const Markers& m, const MarkerLayout& layout) {
  return monomial_impl(e, m, layout);
}

std::string monomial_text(std::int64_t e, const Markers& m, const MarkerLayout& layout) {
  return monomial_impl(e, m, layout);
}

}  // namespace tpart
