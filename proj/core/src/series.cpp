#include "tpart/series.hpp"

#include <algorithm>
#include <set>

#include "tpart/error.hpp"
#include "tpart/text.hpp"

namespace tpart {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

namespace {

[[noreturn]] void outside(const std::string& what) { throw Error(ErrorCode::OutsideTruncation, what); }

bool within(const QuadInt& small, const QuadInt& big) { return precedes_or_equal(small, big); }
bool within(std::int64_t small, std::int64_t big) { return small <= big; }

}  // namespace

// ---- MarkerLayout ----------------------------------------------------------

MarkerLayout::MarkerLayout(std::vector<std::string> names, std::vector<int> caps)
    : names_(std::move(names)), caps_(std::move(caps)) {
  if (names_.size() != caps_.size()) throw Error(ErrorCode::InvalidParameter, "one cap per marker name");
  std::set<std::string> seen;
  for (std::size_t j = 0; j < names_.size(); ++j) {
    if (caps_[j] < 0) throw Error(ErrorCode::InvalidParameter, "marker caps must be >= 0");
    if (names_[j].empty() || !seen.insert(names_[j]).second) {
      throw Error(ErrorCode::InvalidParameter, "marker names must be distinct and nonempty");
    }
  }
  size_ = 1;
  for (int cap : caps_) size_ *= static_cast<std::size_t>(cap + 1);
  add_.assign(size_ * size_, -1);
  for (std::size_t a = 0; a < size_; ++a) {
    const Markers ma = decode(a);
    for (std::size_t b = 0; b < size_; ++b) {
      Markers mb = decode(b);
      for (std::size_t j = 0; j < mb.size(); ++j) mb[j] += ma[j];
      if (auto idx = try_encode(mb)) add_[a * size_ + b] = static_cast<long>(*idx);
    }
  }
}

std::optional<std::size_t> MarkerLayout::try_encode(const Markers& m) const {
  if (m.size() > caps_.size()) return std::nullopt;
  std::size_t index = 0;
  std::size_t stride = 1;
  for (std::size_t j = 0; j < caps_.size(); ++j) {
    const int e = j < m.size() ? m[j] : 0;
    if (e < 0 || e > caps_[j]) return std::nullopt;
    index += static_cast<std::size_t>(e) * stride;
    stride *= static_cast<std::size_t>(caps_[j] + 1);
  }
  return index;
}

std::size_t MarkerLayout::encode(const Markers& m) const {
  if (auto idx = try_encode(m)) return *idx;
  outside("marker exponents exceed the caps of the ring");
}

Markers MarkerLayout::decode(std::size_t index) const {
  Markers m(caps_.size(), 0);
  for (std::size_t j = 0; j < caps_.size(); ++j) {
    const auto radix = static_cast<std::size_t>(caps_[j] + 1);
    m[j] = static_cast<int>(index % radix);
    index /= radix;
  }
  return m;
}

std::optional<std::size_t> MarkerLayout::position(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

// ---- Gradings --------------------------------------------------------------

Grading<QuadInt>::Grading(const QuadInt& bound) : bound_(bound) {
  require_totally_positive(bound, "truncation bound");
  exponents_.push_back(bound.field().zero());
  for (const QuadInt& e : downset(bound)) exponents_.push_back(e);
  for (std::size_t j = 0; j < exponents_.size(); ++j) index_.emplace(exponents_[j], j);
  const std::size_t n = exponents_.size();
  add_.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto it = index_.find(exponents_[a] + exponents_[b]);
      if (it == index_.end()) continue;
      add_[a * n + b] = add_[b * n + a] = static_cast<long>(it->second);
    }
  }
}

std::optional<std::size_t> Grading<QuadInt>::index_of(const QuadInt& e) const {
  if (e.field() != bound_.field()) {
    throw Error(ErrorCode::FieldMismatch, "exponent " + to_string(e) + " is not in the field of the ring");
  }
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Grading<QuadInt>::describe() const { return "bound " + to_string(bound_); }

Grading<std::int64_t>::Grading(std::int64_t bound) : bound_(bound) {
  if (bound < 0) throw Error(ErrorCode::InvalidParameter, "classical truncation must be >= 0");
}

std::optional<std::size_t> Grading<std::int64_t>::index_of(std::int64_t e) const {
  if (e < 0 || e > bound_) return std::nullopt;
  return static_cast<std::size_t>(e);
}

std::string Grading<std::int64_t>::describe() const { return "bound q^" + std::to_string(bound_); }

template <class E>
std::shared_ptr<const SeriesRing<E>> SeriesRing<E>::make(const E& bound, MarkerLayout markers) {
  return std::make_shared<const SeriesRing<E>>(SeriesRing<E>{Grading<E>(bound), std::move(markers)});
}

// ---- Series ----------------------------------------------------------------

template <class E>
Series<E>::Series(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error(ErrorCode::InvalidParameter, "series needs a ring");
}

template <class E>
Series<E> Series<E>::one(RingPtr ring) {
  Series s(std::move(ring));
  s.coeffs_.emplace(0, 1);
  return s;
}

template <class E>
Series<E> Series<E>::monomial(RingPtr ring, std::int64_t coeff, const E& e, const Markers& m) {
  Series s(std::move(ring));
  auto key = s.key_of(e, m);
  if (!key) outside("monomial exponent outside the truncation (" + s.ring_->grading.describe() + ")");
  if (coeff != 0) s.coeffs_.emplace(*key, coeff);
  return s;
}

template <class E>
std::optional<std::uint64_t> Series<E>::key_of(const E& e, const Markers& m) const {
  auto ei = ring_->grading.index_of(e);
  auto mi = ring_->markers.try_encode(m);
  if (!ei || !mi) return std::nullopt;
  return static_cast<std::uint64_t>(*ei * ring_->markers.size() + *mi);
}

template <class E>
std::int64_t Series<E>::coefficient(const E& e, const Markers& m) const {
  auto key = key_of(e, m);
  if (!key) outside("coefficient requested outside the truncation (" + ring_->grading.describe() + ")");
  auto it = coeffs_.find(*key);
  return it == coeffs_.end() ? 0 : it->second;
}

template <class E>
std::vector<typename Series<E>::Term> Series<E>::terms() const {
  std::vector<Term> out;
  out.reserve(coeffs_.size());
  const std::size_t M = ring_->markers.size();
  for (const auto& [key, c] : coeffs_) {
    out.push_back({ring_->grading.exponent(key / M), ring_->markers.decode(key % M), c});
  }
  return out;
}

template <class E>
void Series<E>::require_same_ring(const Series& rhs) const {
  if (ring_ != rhs.ring_ && !ring_->same_as(*rhs.ring_)) {
    throw Error(ErrorCode::RingMismatch, "q-sums over different truncations or marker caps (" +
                                             ring_->grading.describe() + " vs " + rhs.ring_->grading.describe() +
                                             ")");
  }
}

template <class E>
void Series<E>::add_raw(std::uint64_t key, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(key, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs_.erase(it);
  }
}

template <class E>
Series<E>& Series<E>::operator+=(const Series& rhs) {
  require_same_ring(rhs);
  for (const auto& [key, c] : rhs.coeffs_) add_raw(key, c);
  return *this;
}

template <class E>
Series<E>& Series<E>::operator-=(const Series& rhs) {
  require_same_ring(rhs);
  for (const auto& [key, c] : rhs.coeffs_) add_raw(key, checked_sub(0, c));
  return *this;
}

template <class E>
Series<E> Series<E>::operator-() const {
  return scaled(-1);
}

template <class E>
Series<E> Series<E>::scaled(std::int64_t c) const {
  Series out(ring_);
  if (c == 0) return out;
  for (const auto& [key, v] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), key, checked_mul(v, c));
  return out;
}

template <class E>
std::vector<std::int64_t> Series<E>::dense() const {
  std::vector<std::int64_t> values(ring_->grading.size() * ring_->markers.size(), 0);
  for (const auto& [key, c] : coeffs_) values[key] = c;
  return values;
}

template <class E>
void Series<E>::load_dense(const std::vector<std::int64_t>& values) {
  coeffs_.clear();
  for (std::size_t key = 0; key < values.size(); ++key) {
    if (values[key] != 0) coeffs_.emplace_hint(coeffs_.end(), key, values[key]);
  }
}

namespace {

template <class E>
long add_keys(const SeriesRing<E>& ring, std::uint64_t a, std::uint64_t b) {
  const std::size_t M = ring.markers.size();
  const long e = ring.grading.add(a / M, b / M);
  if (e < 0) return -1;
  const long m = ring.markers.add(a % M, b % M);
  if (m < 0) return -1;
  return e * static_cast<long>(M) + m;
}

}  // namespace

template <class E>
Series<E> Series<E>::multiply(const Series& rhs) const {
  require_same_ring(rhs);
  std::vector<std::int64_t> acc(ring_->grading.size() * ring_->markers.size(), 0);
  for (const auto& [ka, va] : coeffs_) {
    for (const auto& [kb, vb] : rhs.coeffs_) {
      const long k = add_keys(*ring_, ka, kb);
      if (k < 0) continue;
      acc[static_cast<std::size_t>(k)] = checked_add(acc[static_cast<std::size_t>(k)], checked_mul(va, vb));
    }
  }
  Series out(ring_);
  out.load_dense(acc);
  return out;
}

template <class E>
Series<E> Series<E>::times_binomial(std::int64_t c, const E& e, const Markers& m) const {
  auto shift = key_of(e, m);
  if (!shift || c == 0) return *this;
  Series out = *this;
  for (const auto& [key, v] : coeffs_) {
    const long k = add_keys(*ring_, key, *shift);
    if (k >= 0) out.add_raw(static_cast<std::uint64_t>(k), checked_mul(c, v));
  }
  return out;
}

template <class E>
Series<E> Series<E>::over_binomial(std::int64_t c, const E& e, const Markers& m) const {
  auto shift = key_of(e, m);
  if (!shift || c == 0) return *this;
  if (*shift == 0) throw Error(ErrorCode::NotInvertible, "cannot divide by a constant binomial");
  // g = f - c x g, solved in increasing key order; adding a nonzero shift
  // always moves to a larger key.
  std::vector<std::int64_t> g = dense();
  for (std::size_t key = 0; key < g.size(); ++key) {
    if (g[key] == 0) continue;
    const long k = add_keys(*ring_, key, *shift);
    if (k < 0) continue;
    g[static_cast<std::size_t>(k)] = checked_sub(g[static_cast<std::size_t>(k)], checked_mul(c, g[key]));
  }
  Series out(ring_);
  out.load_dense(g);
  return out;
}

template <class E>
Series<E> Series<E>::restrict_to(RingPtr target) const {
  if (!(target->markers == ring_->markers)) {
    throw Error(ErrorCode::RingMismatch, "restriction must keep the marker layout");
  }
  if (!within(target->grading.bound(), ring_->grading.bound())) {
    throw Error(ErrorCode::RingMismatch, "restriction target must have a smaller bound");
  }
  Series out(target);
  const std::size_t M = ring_->markers.size();
  for (const auto& [key, c] : coeffs_) {
    auto e = target->grading.index_of(ring_->grading.exponent(key / M));
    if (e) out.add_raw(static_cast<std::uint64_t>(*e * M + key % M), c);
  }
  return out;
}

template <class E>
Series<E> Series<E>::constant_slice() const {
  Series out(ring_);
  const std::size_t M = ring_->markers.size();
  for (const auto& [key, c] : coeffs_) {
    if (key >= M) break;
    out.coeffs_.emplace(key, c);
  }
  return out;
}

template <class S>
S geom_inverse(const S& u) {
  if (u.coeffs_.count(0)) {
    throw Error(ErrorCode::NotInvertible, "geom_inverse needs a series without constant term");
  }
  // g = 1 + u g, solved in increasing key order.
  std::vector<std::int64_t> g(u.ring_->grading.size() * u.ring_->markers.size(), 0);
  g[0] = 1;
  for (std::size_t key = 0; key < g.size(); ++key) {
    if (g[key] == 0) continue;
    for (const auto& [a, v] : u.coeffs_) {
      const long k = add_keys(*u.ring_, key, a);
      if (k < 0) continue;
      g[static_cast<std::size_t>(k)] = checked_add(g[static_cast<std::size_t>(k)], checked_mul(v, g[key]));
    }
  }
  S out(u.ring_);
  out.load_dense(g);
  return out;
}

template class Series<QuadInt>;
template class Series<std::int64_t>;
template struct SeriesRing<QuadInt>;
template struct SeriesRing<std::int64_t>;
template QSum geom_inverse<QSum>(const QSum&);
template ClassicalSeries geom_inverse<ClassicalSeries>(const ClassicalSeries&);

// ---- FactorFamily ----------------------------------------------------------

void FactorFamily::add(QSum factor, std::string label, bool declared_exception) {
  if (!factor.ring()->same_as(*ring_)) throw Error(ErrorCode::RingMismatch, "factor " + label + " is in another ring");
  factors_.push_back({std::move(factor), std::move(label), declared_exception});
}

void FactorFamily::validate() const {
  const QSum unit = QSum::one(ring_);
  for (const Entry& entry : factors_) {
    if (entry.exception) continue;
    if (!(entry.factor.constant_slice() == unit)) {
      throw Error(ErrorCode::ProductCondition,
                  "factor " + entry.label + " has a q^0 part different from 1; the product over primitives is not defined");
    }
  }
}

QSum FactorFamily::product() const {
  validate();
  QSum out = QSum::one(ring_);
  for (const Entry& entry : factors_) out = out * entry.factor;
  return out;
}

}  // namespace tpart
