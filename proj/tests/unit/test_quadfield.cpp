#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "tpart/error.hpp"
#include "tpart/quadfield.hpp"
#include "tpart/text.hpp"

using namespace tpart;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Parse;
}

QuadInt el(const char* text) { return parse_element(text); }

}  // namespace

TEST(Field, BasisFollowsResidueMod4) {
  EXPECT_EQ(Field::make(3).basis(), BasisKind::Plain);
  EXPECT_EQ(Field::make(2).basis(), BasisKind::Plain);
  EXPECT_EQ(Field::make(5).basis(), BasisKind::Half);
  EXPECT_EQ(Field::make(13).basis(), BasisKind::Half);
}

TEST(Field, RejectsBadRadicands) {
  EXPECT_EQ(code_of([] { Field::make(12); }), ErrorCode::NotSquarefree);
  EXPECT_EQ(code_of([] { Field::make(9); }), ErrorCode::NotSquarefree);
  EXPECT_EQ(code_of([] { Field::make(1); }), ErrorCode::InvalidField);
  EXPECT_EQ(code_of([] { Field::make(-3); }), ErrorCode::InvalidField);
}

TEST(QuadInt, Embedding) {
  const Field f5 = Field::make(5);
  const Embedding w = f5.omega().embedding();
  EXPECT_EQ(w.p, 1);
  EXPECT_EQ(w.q, 1);
  const Embedding e = el("2+1*w@3").embedding();
  EXPECT_EQ(e.p, 4);
  EXPECT_EQ(e.q, 2);
}

TEST(QuadInt, ArithmeticAndNorm) {
  const Field f5 = Field::make(5);
  const QuadInt w = f5.omega();
  EXPECT_EQ(w * w, w + f5.one());  // w^2 = w + 1
  EXPECT_EQ(w.norm(), -1);
  const QuadInt eps = el("2+1*w@3");
  EXPECT_EQ(eps.norm(), 1);
  EXPECT_EQ(eps * eps.conjugate(), Field::make(3).one());
  EXPECT_EQ(el("3+2*w@2").trace(), 6);
}

TEST(QuadInt, MixedFieldsAreRejected) {
  EXPECT_EQ(code_of([] { (void)(el("1@2") + el("1@3")); }), ErrorCode::FieldMismatch);
}

TEST(QuadInt, TotalPositivity) {
  EXPECT_TRUE(is_totally_positive(el("2+1*w@3")));
  EXPECT_FALSE(is_totally_positive(el("1+1*w@3")));
  EXPECT_FALSE(is_totally_positive(el("0+1*w@2")));
  EXPECT_FALSE(is_totally_positive(el("0@2")));
  EXPECT_TRUE(is_totally_positive(Field::make(5).omega() + Field::make(5).one()));
}

TEST(QuadInt, Precedes) {
  EXPECT_TRUE(precedes_or_equal(el("1@2"), el("2@2")));
  EXPECT_FALSE(precedes_or_equal(el("1@3"), el("2+1*w@3")));
  EXPECT_FALSE(precedes_or_equal(el("2-1*w@2"), el("2@2")));
  EXPECT_TRUE(precedes_or_equal(el("2@2"), el("2@2")));
}

TEST(Downset, Examples) {
  EXPECT_EQ(downset(el("2@2")), (std::vector<QuadInt>{el("1@2"), el("2@2")}));
  EXPECT_EQ(downset(el("2+1*w@3")), (std::vector<QuadInt>{el("2+1*w@3")}));

  const auto big = downset(el("21+7*w@3"));
  EXPECT_EQ(big.size(), 87u);
  for (const char* part : {"1@3", "7@3", "2+1*w@3", "6+3*w@3", "10+5*w@3", "14+7*w@3"}) {
    EXPECT_NE(std::find(big.begin(), big.end(), el(part)), big.end()) << part;
  }
  EXPECT_TRUE(std::is_sorted(big.begin(), big.end()));
}

TEST(Downset, AgreesWithTraceBoxBruteForce) {
  std::mt19937_64 rng(20241015);
  for (std::int64_t d : {2, 3, 5, 6, 7, 13}) {
    const Field f = Field::make(d);
    const auto pool = elements_with_trace_at_most(f, 14);
    for (int round = 0; round < 10; ++round) {
      const QuadInt delta = pool[rng() % pool.size()];
      std::vector<QuadInt> expected;
      for (const QuadInt& a : elements_with_trace_at_most(f, delta.trace())) {
        if (precedes_or_equal(a, delta)) expected.push_back(a);
      }
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(downset(delta), expected) << to_string(delta);
    }
  }
}

TEST(Radial, Examples) {
  const auto r = radial_decompose(el("21+7*w@3"));
  EXPECT_EQ(r.scale, 7);
  EXPECT_EQ(r.primitive_factor, el("3+1*w@3"));

  const Field f5 = Field::make(5);
  const auto s = radial_decompose(f5.element(2, 2));
  EXPECT_EQ(s.scale, 2);
  EXPECT_EQ(s.primitive_factor, f5.element(1, 1));

  const auto t = radial_decompose(el("2+1*w@3"));
  EXPECT_EQ(t.scale, 1);
  EXPECT_TRUE(is_primitive(t.primitive_factor));
}

TEST(Radial, RoundTripOnRandomElements) {
  std::mt19937_64 rng(7);
  for (std::int64_t d : {2, 3, 5, 11}) {
    const auto pool = elements_with_trace_at_most(Field::make(d), 40);
    for (int round = 0; round < 50; ++round) {
      const QuadInt a = pool[rng() % pool.size()];
      const auto r = radial_decompose(a);
      EXPECT_EQ(r.primitive_factor * r.scale, a);
      EXPECT_TRUE(is_primitive(r.primitive_factor));
      EXPECT_TRUE(is_totally_positive(r.primitive_factor));
    }
  }
}

TEST(Primitives, Examples) {
  EXPECT_EQ(primitives_up_to(el("2@2")), (std::vector<QuadInt>{el("1@2")}));
  EXPECT_EQ(primitives_up_to(el("1@7")), (std::vector<QuadInt>{el("1@7")}));
  const auto prims = primitives_up_to(el("21+7*w@3"));
  for (const char* g : {"1@3", "2+1*w@3", "3+1*w@3"}) {
    EXPECT_NE(std::find(prims.begin(), prims.end(), el(g)), prims.end()) << g;
  }
  // 21+7w - 8*(2+w) = 5-w and 21+7w - 8 = 13+7w are still totally positive.
  EXPECT_EQ(max_multiple(el("2+1*w@3"), el("21+7*w@3")), 8);
  EXPECT_EQ(max_multiple(el("1@3"), el("21+7*w@3")), 8);
  EXPECT_EQ(max_multiple(el("3+1*w@3"), el("21+7*w@3")), 7);
}

TEST(PrimeAbove5, Roots) {
  EXPECT_EQ(find_prime_above_5(Field::make(5)).residue_root, 3);
  EXPECT_EQ(find_prime_above_5(Field::make(11)).residue_root, 1);
  EXPECT_EQ(code_of([] { find_prime_above_5(Field::make(2)); }), ErrorCode::Inert5);
  EXPECT_FALSE(try_find_prime_above_5(Field::make(3)).has_value());
}

TEST(PrimeAbove5, Residues) {
  const Field f5 = Field::make(5);
  const PrimeAbove5 p = find_prime_above_5(f5);
  EXPECT_EQ(residue_mod_p5(f5.omega(), p), 3);
  EXPECT_EQ(residue_mod_p5(f5.integer(2), p), 2);
  EXPECT_EQ(residue_mod_p5(f5.element(1, 1), p), 4);
}

TEST(PrimeAbove5, ResidueIsARingHomomorphism) {
  std::mt19937_64 rng(11);
  for (std::int64_t d : {5, 11, 19}) {
    const Field f = Field::make(d);
    const PrimeAbove5 p = find_prime_above_5(f);
    const auto pool = elements_with_trace_at_most(f, 30);
    for (int round = 0; round < 100; ++round) {
      const QuadInt a = pool[rng() % pool.size()];
      const QuadInt b = pool[rng() % pool.size()];
      EXPECT_EQ(residue_mod_p5(a * b, p), residue_mod_p5(a, p) * residue_mod_p5(b, p) % 5);
      EXPECT_EQ(residue_mod_p5(a + b, p), (residue_mod_p5(a, p) + residue_mod_p5(b, p)) % 5);
    }
  }
}

TEST(Order, TotalAndCompatibleWithPrecedes) {
  std::mt19937_64 rng(3);
  const auto pool = elements_with_trace_at_most(Field::make(6), 30);
  for (int round = 0; round < 300; ++round) {
    const QuadInt a = pool[rng() % pool.size()];
    const QuadInt b = pool[rng() % pool.size()];
    if (precedes_or_equal(a, b) && a != b) EXPECT_LT(a, b);
  }
}
