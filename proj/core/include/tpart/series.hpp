#pragma once

// Truncated formal q-sums.
//
// A ring fixes a grading (the exponents that survive truncation) and a marker
// layout (auxiliary variables such as a and t with hard degree caps). For
// QSum the grading is {0} together with downset(bound); exponents outside it
// are zero in the quotient. ClassicalSeries uses the integer grading 0..N and
// is the input of substitute_scale.
//
// Coefficients are exact int64 values; overflow throws.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tpart/quadfield.hpp"

namespace tpart {

using Markers = std::vector<int>;

class MarkerLayout {
 public:
  MarkerLayout() = default;
  MarkerLayout(std::vector<std::string> names, std::vector<int> caps);

  std::size_t count() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& caps() const noexcept { return caps_; }
  // Number of marker monomials within the caps.
  std::size_t size() const noexcept { return size_; }

  // Mixed-radix index; missing trailing entries are zero.
  std::optional<std::size_t> try_encode(const Markers& m) const;
  std::size_t encode(const Markers& m) const;
  Markers decode(std::size_t index) const;
  // Index of the product monomial, or -1 past a cap.
  long add(std::size_t a, std::size_t b) const { return add_[a * size_ + b]; }
  std::optional<std::size_t> position(const std::string& name) const;

  friend bool operator==(const MarkerLayout& a, const MarkerLayout& b) {
    return a.names_ == b.names_ && a.caps_ == b.caps_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> caps_;
  std::size_t size_ = 1;
  std::vector<long> add_{0};
};

template <class E>
class Grading;

// {0} together with downset(bound), canonical order; index 0 is zero.
template <>
class Grading<QuadInt> {
 public:
  explicit Grading(const QuadInt& bound);

  const QuadInt& bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  const QuadInt& exponent(std::size_t index) const { return exponents_[index]; }
  std::optional<std::size_t> index_of(const QuadInt& e) const;
  long add(std::size_t a, std::size_t b) const { return add_[a * exponents_.size() + b]; }
  bool same_as(const Grading& other) const { return bound_ == other.bound_; }
  std::string describe() const;

 private:
  QuadInt bound_;
  std::vector<QuadInt> exponents_;
  std::unordered_map<QuadInt, std::size_t, QuadIntHash> index_;
  std::vector<long> add_;
};

// Integer exponents 0..N.
template <>
class Grading<std::int64_t> {
 public:
  explicit Grading(std::int64_t bound);

  std::int64_t bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(bound_ + 1); }
  std::int64_t exponent(std::size_t index) const { return static_cast<std::int64_t>(index); }
  std::optional<std::size_t> index_of(std::int64_t e) const;
  long add(std::size_t a, std::size_t b) const {
    const auto s = static_cast<std::int64_t>(a + b);
    return s <= bound_ ? static_cast<long>(s) : -1;
  }
  bool same_as(const Grading& other) const { return bound_ == other.bound_; }
  std::string describe() const;

 private:
  std::int64_t bound_;
};

template <class E>
struct SeriesRing {
  Grading<E> grading;
  MarkerLayout markers;

  static std::shared_ptr<const SeriesRing> make(const E& bound, MarkerLayout markers = {});
  bool same_as(const SeriesRing& other) const { return grading.same_as(other.grading) && markers == other.markers; }
};

template <class E>
class Series {
 public:
  using Ring = SeriesRing<E>;
  using RingPtr = std::shared_ptr<const Ring>;

  struct Term {
    E exponent;
    Markers markers;
    std::int64_t coeff;
  };

  explicit Series(RingPtr ring);

  static Series zero(RingPtr ring) { return Series(std::move(ring)); }
  static Series one(RingPtr ring);
  // Throws OutsideTruncation when e is outside the grading or m past a cap.
  static Series monomial(RingPtr ring, std::int64_t coeff, const E& e, const Markers& m = {});

  const RingPtr& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t term_count() const noexcept { return coeffs_.size(); }

  // Throws OutsideTruncation for an exponent outside the grading.
  std::int64_t coefficient(const E& e, const Markers& m = {}) const;
  // Terms in canonical order: exponent, then marker index.
  std::vector<Term> terms() const;

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series operator-() const;
  Series scaled(std::int64_t c) const;

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b) { return a.multiply(b); }

  // this * (1 + c q^e m). Factors whose monomial is truncated away are 1.
  Series times_binomial(std::int64_t c, const E& e, const Markers& m = {}) const;
  // this / (1 + c q^e m); (e, m) must not be (0, 0).
  Series over_binomial(std::int64_t c, const E& e, const Markers& m = {}) const;

  // The image in a ring with smaller bound and the same markers.
  Series restrict_to(RingPtr target) const;
  // Terms with q-exponent zero.
  Series constant_slice() const;

  friend bool operator==(const Series& a, const Series& b) {
    return a.ring_->same_as(*b.ring_) && a.coeffs_ == b.coeffs_;
  }

  // Key-level access for builders: key = exponent_index * marker_count + marker_index.
  const std::map<std::uint64_t, std::int64_t>& raw() const noexcept { return coeffs_; }
  void add_raw(std::uint64_t key, std::int64_t c);

 private:
  Series multiply(const Series& rhs) const;
  void require_same_ring(const Series& rhs) const;
  std::optional<std::uint64_t> key_of(const E& e, const Markers& m) const;
  std::vector<std::int64_t> dense() const;
  void load_dense(const std::vector<std::int64_t>& values);

  RingPtr ring_;
  std::map<std::uint64_t, std::int64_t> coeffs_;

  template <class F>
  friend F geom_inverse(const F& u);
};

using QSum = Series<QuadInt>;
using ClassicalSeries = Series<std::int64_t>;
using QSumRingPtr = QSum::RingPtr;
using ClassicalRingPtr = ClassicalSeries::RingPtr;

// (1 - u)^{-1} = sum_j u^j. Throws NotInvertible when u has a constant term.
template <class S>
S geom_inverse(const S& u);

// Factors of a product over primitives. Each factor must have q^0 slice equal
// to 1 unless it was declared as one of the finitely many exceptions.
class FactorFamily {
 public:
  explicit FactorFamily(QSumRingPtr ring) : ring_(std::move(ring)) {}

  void add(QSum factor, std::string label, bool declared_exception = false);
  std::size_t size() const noexcept { return factors_.size(); }
  // Throws ProductCondition naming the first offending factor.
  void validate() const;
  QSum product() const;

 private:
  struct Entry {
    QSum factor;
    std::string label;
    bool exception;
  };
  QSumRingPtr ring_;
  std::vector<Entry> factors_;
};

extern template class Series<QuadInt>;
extern template class Series<std::int64_t>;
extern template struct SeriesRing<QuadInt>;
extern template struct SeriesRing<std::int64_t>;
extern template QSum geom_inverse<QSum>(const QSum&);
extern template ClassicalSeries geom_inverse<ClassicalSeries>(const ClassicalSeries&);

}  // namespace tpart
