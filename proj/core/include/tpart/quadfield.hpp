#pragma once

// Exact arithmetic in the ring of integers of a real quadratic field Q(sqrt d).
//
// Elements are stored in integral-basis coordinates x + y*w, where w = sqrt d
// when d = 2, 3 (mod 4) and w = (1 + sqrt d)/2 when d = 1 (mod 4). Every
// element also has an embedding pair (p, q) with value (p + q*sqrt d)/2; p is
// the trace and the two real embeddings are (p +- q*sqrt d)/2. All order and
// positivity questions are answered with integer arithmetic on (p, q).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace tpart {

enum class BasisKind { Plain, Half };

class QuadInt;

class Field {
 public:
  // Throws Error{InvalidField} for d < 2 and Error{NotSquarefree}.
  static Field make(std::int64_t d);

  std::int64_t d() const noexcept { return d_; }
  BasisKind basis() const noexcept { return basis_; }

  QuadInt element(std::int64_t x, std::int64_t y) const;
  QuadInt integer(std::int64_t n) const;
  QuadInt zero() const;
  QuadInt one() const;
  // w itself; the generator of the integral basis.
  QuadInt omega() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(std::int64_t d, BasisKind basis) : d_(d), basis_(basis) {}

  std::int64_t d_;
  BasisKind basis_;
};

struct Embedding {
  std::int64_t p;  // trace
  std::int64_t q;
};

class QuadInt {
 public:
  QuadInt(const Field& field, std::int64_t x, std::int64_t y) noexcept
      : field_(field), x_(x), y_(y) {}

  const Field& field() const noexcept { return field_; }
  std::int64_t x() const noexcept { return x_; }
  std::int64_t y() const noexcept { return y_; }

  Embedding embedding() const;
  std::int64_t trace() const { return embedding().p; }
  std::int64_t norm() const;
  QuadInt conjugate() const;

  bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }
  bool is_rational() const noexcept { return y_ == 0; }
  bool is_totally_positive() const;
  // gcd(|x|, |y|); zero for the zero element.
  std::int64_t content() const noexcept;

  // Returns this/n when the quotient is integral.
  std::optional<QuadInt> divide_exact(std::int64_t n) const;

  QuadInt operator-() const;
  QuadInt& operator+=(const QuadInt& rhs);
  QuadInt& operator-=(const QuadInt& rhs);
  QuadInt& operator*=(const QuadInt& rhs);
  QuadInt& operator*=(std::int64_t n);

  friend QuadInt operator+(QuadInt a, const QuadInt& b) { return a += b; }
  friend QuadInt operator-(QuadInt a, const QuadInt& b) { return a -= b; }
  friend QuadInt operator*(QuadInt a, const QuadInt& b) { return a *= b; }
  friend QuadInt operator*(QuadInt a, std::int64_t n) { return a *= n; }
  friend QuadInt operator*(std::int64_t n, QuadInt a) { return a *= n; }

  friend bool operator==(const QuadInt&, const QuadInt&) = default;
  // Canonical total order: by d, then lexicographically on (p, q).
  friend std::strong_ordering operator<=>(const QuadInt& a, const QuadInt& b);

 private:
  Field field_;
  std::int64_t x_;
  std::int64_t y_;
};

struct QuadIntHash {
  std::size_t operator()(const QuadInt& a) const noexcept;
};

// Throws Error{FieldMismatch} unless both elements live in the same field.
void require_same_field(const QuadInt& a, const QuadInt& b);

// Throws Error{NotTotallyPositive}.
void require_totally_positive(const QuadInt& a, const char* what);

bool is_totally_positive(const QuadInt& a);

// a "precedes or equals" b: b - a is zero or totally positive.
bool precedes_or_equal(const QuadInt& a, const QuadInt& b);

// All totally positive a with a <= delta, sorted canonically.
std::vector<QuadInt> downset(const QuadInt& delta);

// All totally positive elements whose trace is at most max_trace.
std::vector<QuadInt> elements_with_trace_at_most(const Field& field, std::int64_t max_trace);

struct RadialDecomposition {
  std::int64_t scale;
  QuadInt primitive_factor;
};

RadialDecomposition radial_decompose(const QuadInt& delta);
bool is_primitive(const QuadInt& a);

// Primitive members of downset(bound), canonical order.
std::vector<QuadInt> primitives_up_to(const QuadInt& bound);

// Largest n >= 0 with n*gamma <= bound.
std::int64_t max_multiple(const QuadInt& gamma, const QuadInt& bound);

// A degree-one prime p above 5, represented by the residue r of w mod p.
struct PrimeAbove5 {
  Field field;
  int residue_root;
};

// Smallest root of w's minimal polynomial mod 5. Throws Error{Inert5} when
// there is none.
PrimeAbove5 find_prime_above_5(const Field& field);
std::optional<PrimeAbove5> try_find_prime_above_5(const Field& field);

// (x + y*r) mod 5, in 0..4.
int residue_mod_p5(const QuadInt& a, const PrimeAbove5& prime);

}  // namespace tpart

template <>
struct std::hash<tpart::QuadInt> : tpart::QuadIntHash {};
