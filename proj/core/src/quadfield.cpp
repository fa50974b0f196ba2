#include "tpart/quadfield.hpp"

#include <numeric>
#include <string>

#include "tpart/error.hpp"

namespace tpart {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

namespace {

bool is_squarefree(std::int64_t d) {
  for (std::int64_t f = 2; f <= d / f; ++f) {
    if (d % (f * f) == 0) return false;
  }
  return true;
}

// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt(std::int64_t n) {
  if (n < 2) return n;
  std::int64_t r = static_cast<std::int64_t>(__builtin_sqrt(static_cast<double>(n)));
  while (static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool embedding_totally_positive(std::int64_t p, std::int64_t q, std::int64_t d) {
  if (p <= 0) return false;
  const __int128 lhs = static_cast<__int128>(p) * p;
  const __int128 rhs = static_cast<__int128>(q) * q * d;
  return lhs > rhs;
}

QuadInt from_embedding(const Field& field, std::int64_t p, std::int64_t q) {
  if (field.basis() == BasisKind::Half) return field.element((p - q) / 2, q);
  return field.element(p / 2, q / 2);
}

// Largest q >= 0 with q*q*d < p*p (p > 0).
std::int64_t q_limit(std::int64_t p, std::int64_t d) {
  const std::int64_t bound = (checked_mul(p, p) - 1) / d;
  return isqrt(bound);
}

template <class Visit>
void for_each_trace_box(const Field& field, std::int64_t max_trace, Visit&& visit) {
  const bool half = field.basis() == BasisKind::Half;
  for (std::int64_t p = 1; p <= max_trace; ++p) {
    if (!half && p % 2 != 0) continue;
    const std::int64_t qmax = q_limit(p, field.d());
    for (std::int64_t q = -qmax; q <= qmax; ++q) {
      if (half ? ((p - q) % 2 != 0) : (q % 2 != 0)) continue;
      visit(p, q);
    }
  }
}

}  // namespace

Field Field::make(std::int64_t d) {
  if (d < 2) {
    throw Error(ErrorCode::InvalidField, "field radicand must be >= 2, got " + std::to_string(d));
  }
  if (!is_squarefree(d)) {
    throw Error(ErrorCode::NotSquarefree, "field radicand " + std::to_string(d) + " is not squarefree");
  }
  return Field(d, d % 4 == 1 ? BasisKind::Half : BasisKind::Plain);
}

QuadInt Field::element(std::int64_t x, std::int64_t y) const { return QuadInt(*this, x, y); }
QuadInt Field::integer(std::int64_t n) const { return QuadInt(*this, n, 0); }
QuadInt Field::zero() const { return QuadInt(*this, 0, 0); }
QuadInt Field::one() const { return QuadInt(*this, 1, 0); }
QuadInt Field::omega() const { return QuadInt(*this, 0, 1); }

Embedding QuadInt::embedding() const {
  if (field_.basis() == BasisKind::Half) {
    return {checked_add(checked_mul(2, x_), y_), y_};
  }
  return {checked_mul(2, x_), checked_mul(2, y_)};
}

std::int64_t QuadInt::norm() const {
  const auto [p, q] = embedding();
  const __int128 n = (static_cast<__int128>(p) * p - static_cast<__int128>(q) * q * field_.d()) / 4;
  if (n > INT64_MAX || n < INT64_MIN) detail::throw_overflow("norm");
  return static_cast<std::int64_t>(n);
}

QuadInt QuadInt::conjugate() const {
  const auto [p, q] = embedding();
  return from_embedding(field_, p, -q);
}

bool QuadInt::is_totally_positive() const {
  const auto [p, q] = embedding();
  return embedding_totally_positive(p, q, field_.d());
}

std::int64_t QuadInt::content() const noexcept { return std::gcd(x_, y_); }

std::optional<QuadInt> QuadInt::divide_exact(std::int64_t n) const {
  if (n == 0 || x_ % n != 0 || y_ % n != 0) return std::nullopt;
  return QuadInt(field_, x_ / n, y_ / n);
}

QuadInt QuadInt::operator-() const { return QuadInt(field_, checked_sub(0, x_), checked_sub(0, y_)); }

QuadInt& QuadInt::operator+=(const QuadInt& rhs) {
  require_same_field(*this, rhs);
  x_ = checked_add(x_, rhs.x_);
  y_ = checked_add(y_, rhs.y_);
  return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& rhs) {
  require_same_field(*this, rhs);
  x_ = checked_sub(x_, rhs.x_);
  y_ = checked_sub(y_, rhs.y_);
  return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& rhs) {
  require_same_field(*this, rhs);
  const std::int64_t yy = checked_mul(y_, rhs.y_);
  const std::int64_t cross = checked_add(checked_mul(x_, rhs.y_), checked_mul(rhs.x_, y_));
  if (field_.basis() == BasisKind::Half) {
    // w^2 = w + (d - 1)/4
    const std::int64_t c = (field_.d() - 1) / 4;
    const std::int64_t x = checked_add(checked_mul(x_, rhs.x_), checked_mul(c, yy));
    y_ = checked_add(cross, yy);
    x_ = x;
  } else {
    const std::int64_t x = checked_add(checked_mul(x_, rhs.x_), checked_mul(field_.d(), yy));
    y_ = cross;
    x_ = x;
  }
  return *this;
}

QuadInt& QuadInt::operator*=(std::int64_t n) {
  x_ = checked_mul(x_, n);
  y_ = checked_mul(y_, n);
  return *this;
}

std::strong_ordering operator<=>(const QuadInt& a, const QuadInt& b) {
  if (auto c = a.field_.d() <=> b.field_.d(); c != 0) return c;
  const Embedding ea = a.embedding();
  const Embedding eb = b.embedding();
  if (auto c = ea.p <=> eb.p; c != 0) return c;
  return ea.q <=> eb.q;
}

std::size_t QuadIntHash::operator()(const QuadInt& a) const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(a.x());
  h ^= std::hash<std::int64_t>{}(a.y()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<std::int64_t>{}(a.field().d()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void require_same_field(const QuadInt& a, const QuadInt& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::FieldMismatch, "elements of Q(sqrt " + std::to_string(a.field().d()) +
                                              ") and Q(sqrt " + std::to_string(b.field().d()) +
                                              ") cannot be combined");
  }
}

void require_totally_positive(const QuadInt& a, const char* what) {
  if (!a.is_totally_positive()) {
    throw Error(ErrorCode::NotTotallyPositive, std::string(what) + " must be totally positive");
  }
}

bool is_totally_positive(const QuadInt& a) { return a.is_totally_positive(); }

bool precedes_or_equal(const QuadInt& a, const QuadInt& b) {
  require_same_field(a, b);
  const QuadInt diff = b - a;
  return diff.is_zero() || diff.is_totally_positive();
}

std::vector<QuadInt> downset(const QuadInt& delta) {
  require_totally_positive(delta, "downset target");
  const Field& field = delta.field();
  const auto [dp, dq] = delta.embedding();
  std::vector<QuadInt> out;
  for_each_trace_box(field, dp, [&](std::int64_t p, std::int64_t q) {
    const std::int64_t rp = dp - p;
    const std::int64_t rq = dq - q;
    if ((rp == 0 && rq == 0) || embedding_totally_positive(rp, rq, field.d())) {
      out.push_back(from_embedding(field, p, q));
    }
  });
  return out;
}

std::vector<QuadInt> elements_with_trace_at_most(const Field& field, std::int64_t max_trace) {
  std::vector<QuadInt> out;
  for_each_trace_box(field, max_trace, [&](std::int64_t p, std::int64_t q) {
    out.push_back(from_embedding(field, p, q));
  });
  return out;
}

RadialDecomposition radial_decompose(const QuadInt& delta) {
  require_totally_positive(delta, "radial decomposition input");
  const std::int64_t s = delta.content();
  return {s, *delta.divide_exact(s)};
}

bool is_primitive(const QuadInt& a) { return a.is_totally_positive() && a.content() == 1; }

std::vector<QuadInt> primitives_up_to(const QuadInt& bound) {
  std::vector<QuadInt> out;
  for (const QuadInt& a : downset(bound)) {
    if (a.content() == 1) out.push_back(a);
  }
  return out;
}

std::int64_t max_multiple(const QuadInt& gamma, const QuadInt& bound) {
  require_totally_positive(gamma, "section generator");
  std::int64_t n = 0;
  QuadInt next = gamma;
  while (precedes_or_equal(next, bound)) {
    ++n;
    next += gamma;
  }
  return n;
}

std::optional<PrimeAbove5> try_find_prime_above_5(const Field& field) {
  const std::int64_t d = field.d();
  for (int r = 0; r < 5; ++r) {
    std::int64_t value;
    if (field.basis() == BasisKind::Half) {
      value = r * r - r - (d - 1) / 4;
    } else {
      value = r * r - d;
    }
    if (((value % 5) + 5) % 5 == 0) return PrimeAbove5{field, r};
  }
  return std::nullopt;
}

PrimeAbove5 find_prime_above_5(const Field& field) {
  if (auto prime = try_find_prime_above_5(field)) return *prime;
  throw Error(ErrorCode::Inert5,
              "5 is inert in Q(sqrt " + std::to_string(field.d()) + "); no degree-one prime above 5");
}

int residue_mod_p5(const QuadInt& a, const PrimeAbove5& prime) {
  if (a.field() != prime.field) {
    throw Error(ErrorCode::FieldMismatch, "prime above 5 belongs to a different field");
  }
  const std::int64_t x = a.x() % 5;
  const std::int64_t y = a.y() % 5;
  return static_cast<int>((((x + y * prime.residue_root) % 5) + 5) % 5);
}

}  // namespace tpart
