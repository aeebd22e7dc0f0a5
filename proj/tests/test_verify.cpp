#include <gtest/gtest.h>

#include <map>
#include <string>

#include "minext/verify.hpp"

using namespace minext;

namespace {

template <class C>
void expect_all_pass(const RingCtx<C>& ring) {
  Verifier<C> v(ring);
  const auto results = v.run(Suite::all);
  EXPECT_FALSE(results.empty());
  for (const auto& c : results) {
    EXPECT_TRUE(c.passed()) << ring.name() << " " << c.name << ": "
                            << (c.witnesses.empty() ? std::string() : c.witnesses.front());
  }
}

}  // namespace

TEST(Verifier, FieldRingsPassEverySuite) {
  expect_all_pass(FieldRing(FieldCtx::prime(2), 2));
  expect_all_pass(FieldRing(FieldCtx::prime(2), 5));
  expect_all_pass(FieldRing(FieldCtx::prime(3), 4));
  expect_all_pass(FieldRing(FieldCtx::of_order(4), 3));
}

TEST(Verifier, ZRingsPassEverySuite) {
  expect_all_pass(ZRing(ZpNCtx(2, 2), 2, 1));
  expect_all_pass(ZRing(ZpNCtx(2, 2), 3, 2));
  expect_all_pass(ZRing(ZpNCtx(3, 2), 2, 2));
  expect_all_pass(ZRing(ZpNCtx(2, 3), 2, 1));
  expect_all_pass(ZRing(ZpNCtx(2, 1), 4, 1));
}

// With N = 1 the Z kind is F_p[x]/x^n; both routes give the same census.
TEST(Verifier, ZKindWithNOneMatchesPrimeField) {
  for (int n = 2; n <= 5; ++n) {
    const auto zrows = census(ZRing(ZpNCtx(3, 1), n, 1));
    const auto frows = census(FieldRing(FieldCtx::prime(3), n));
    ASSERT_EQ(zrows.size(), frows.size());
    for (std::size_t i = 0; i < zrows.size(); ++i) {
      EXPECT_EQ(zrows[i].count, frows[i].count);
      EXPECT_EQ(zrows[i].bound_exp, frows[i].bound_exp) << "n=" << n << " row " << i;
      EXPECT_EQ(zrows[i].d_shape, frows[i].d_shape);
    }
  }
}

TEST(Verifier, SuiteSelection) {
  Verifier<FieldCtx> v(FieldRing(FieldCtx::prime(2), 3));
  const auto val = v.run(Suite::valuation);
  ASSERT_FALSE(val.empty());
  EXPECT_EQ(val.front().name, "nu_strict");
  EXPECT_GT(val.front().cases, 0u);
  EXPECT_EQ(parse_suite("props"), Suite::props);
  EXPECT_FALSE(parse_suite("everything").has_value());
}

TEST(CheckResult, CapsWitnesses) {
  CheckResult c("demo");
  for (int i = 0; i < 10; ++i) c.record(false, std::to_string(i));
  c.record(true);
  EXPECT_EQ(c.cases, 11u);
  EXPECT_EQ(c.failures, 10u);
  EXPECT_EQ(c.witnesses.size(), 5u);
  EXPECT_FALSE(c.passed());
}

// Z/4[x]/x^3 -> R_{4,2,1}: both B of shape {(0,0),(0,1),(1,1),(2,1)} jump,
// with d(B) = 2 and 1, so the fibres hold 4 + 2 = 6 subrings, not 2^2 * 2.
TEST(Verifier, JumpHypothesisAloneDoesNotGiveCensusEquality) {
  Verifier<ZpNCtx> v(ZRing(ZpNCtx(2, 2), 4, 1));
  std::map<std::string, CheckResult> by_name;
  for (const auto& c : v.shape_steps()) by_name.emplace(c.name, c);
  EXPECT_TRUE(by_name.at("fibre_count_exact").passed());
  EXPECT_TRUE(by_name.at("census_equality_flat_fibres").passed());
  EXPECT_GT(by_name.at("census_equality_flat_fibres").cases, 0u);
  const auto& eq = by_name.at("census_equality_case");
  EXPECT_EQ(eq.failures, 1u);
  ASSERT_EQ(eq.witnesses.size(), 1u);
  EXPECT_EQ(eq.witnesses.front(), "[[0,0],[0,1],[1,1],[2,1]]: #S=6 vs 2^2 * 2");
}
