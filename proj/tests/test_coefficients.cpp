#include <gtest/gtest.h>

#include "minext/coefficients.hpp"
#include "oracles.hpp"

using namespace minext;

TEST(FieldArithmetic, CharacteristicTwoAddition) {
  const auto F2 = FieldCtx::prime(2);
  EXPECT_EQ(field_op(F2, ArithOp::add, F2.one(), F2.one()), F2.zero());
}

TEST(FieldArithmetic, F4SquareOfGeneratorMatchesLongDivision) {
  const auto F4 = FieldCtx::extension(2, {1, 1, 1});
  const FieldElem t = F4.from_coords(std::vector<std::uint32_t>{0, 1});
  const auto expected = oracle::mulmod({0, 1}, {0, 1}, F4.modulus(), 2);
  EXPECT_EQ(expected, (std::vector<std::uint32_t>{1, 1}));
  EXPECT_EQ(F4.coords(field_op(F4, ArithOp::mul, t, t)), expected);
}

TEST(FieldArithmetic, F3InverseOfTwo) {
  const auto F3 = FieldCtx::prime(3);
  EXPECT_EQ(field_op(F3, ArithOp::inv, F3.from_int(2)), F3.from_int(2));
}

TEST(FieldArithmetic, InverseOfZeroThrows) {
  const auto F9 = FieldCtx::of_order(9);
  EXPECT_THROW(F9.inv(F9.zero()), DivisionByZero);
  EXPECT_THROW(FieldCtx::prime(5).inv({0}), DivisionByZero);
}

TEST(FieldArithmetic, DefaultModuliAreLeastIrreducible) {
  EXPECT_EQ(FieldCtx::of_order(4).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(FieldCtx::of_order(8).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(FieldCtx::of_order(9).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(FieldArithmetic, RejectsBadOrdersAndModuli) {
  EXPECT_THROW(FieldCtx::of_order(6), InvalidArgument);
  EXPECT_THROW(FieldCtx::of_order(1), InvalidArgument);
  EXPECT_THROW(FieldCtx::prime(4), InvalidArgument);
  EXPECT_THROW(FieldCtx::extension(2, {1, 0, 1}), InvalidArgument);  // (t+1)^2
  EXPECT_THROW(FieldCtx::extension(3, {1, 0, 2}), InvalidArgument);  // not monic
}

// Every product in each small field agrees with schoolbook multiplication
// modulo the modulus.
TEST(FieldArithmetic, MultiplicationTablesMatchOracle) {
  for (std::uint64_t q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    const auto F = FieldCtx::of_order(q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto expected = oracle::mulmod(F.coords({a}), F.coords({b}), F.modulus(), F.p());
        ASSERT_EQ(F.coords(F.mul({a}, {b})), expected) << "q=" << q << " a=" << a << " b=" << b;
      }
  }
}

TEST(FieldArithmetic, AxiomsHoldForSmallOrders) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto F = FieldCtx::of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      if (a) {
        EXPECT_EQ(F.mul({a}, F.inv({a})), F.one());
      }
      EXPECT_EQ(F.add({a}, F.neg({a})), F.zero());
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          ASSERT_EQ(F.mul(F.mul({a}, {b}), {c}), F.mul({a}, F.mul({b}, {c})));
          ASSERT_EQ(F.add(F.add({a}, {b}), {c}), F.add({a}, F.add({b}, {c})));
          ASSERT_EQ(F.mul({a}, F.add({b}, {c})), F.add(F.mul({a}, {b}), F.mul({a}, {c})));
        }
    }
  }
}

TEST(ZpNArithmetic, Examples) {
  const ZpNCtx Z9(3, 2), Z4(2, 2), Z8(2, 3);
  EXPECT_EQ(zpn_op(Z9, ArithOp::inv, {2}), ZpNElem{5});
  EXPECT_EQ(zpn_op(Z4, ArithOp::mul, {2}, {2}), ZpNElem{0});
  EXPECT_EQ(zpn_op(Z8, ArithOp::add, {5}, {6}), ZpNElem{3});
  EXPECT_EQ(zpn_op(Z8, ArithOp::sub, {1}, {6}), ZpNElem{3});
}

TEST(ZpNArithmetic, InverseOfNonUnitThrows) {
  EXPECT_THROW(ZpNCtx(3, 2).inv({6}), NotAUnit);
  EXPECT_THROW(ZpNCtx(2, 3).inv({0}), NotAUnit);
}

TEST(ZpNArithmetic, ConstructionChecks) {
  EXPECT_THROW(ZpNCtx(4, 2), InvalidArgument);
  EXPECT_THROW(ZpNCtx(2, 0), InvalidArgument);
  EXPECT_THROW(ZpNCtx(2, 32), TooLarge);
  EXPECT_NO_THROW(ZpNCtx(2, 31));
}

TEST(ZpNValuation, Examples) {
  EXPECT_EQ(nu1(ZpNCtx(2, 4), {12}), 2);
  EXPECT_EQ(nu1(ZpNCtx(2, 2), {1}), 0);
  EXPECT_EQ(nu1(ZpNCtx(2, 3), {4}), 2);
  EXPECT_THROW(nu1(ZpNCtx(2, 3), {0}), UndefinedValuation);
  EXPECT_THROW(FieldCtx::prime(2).nu1({0}), UndefinedValuation);
}

TEST(ZpNValuation, StrictAndUnitMultiples) {
  for (auto [p, N] : {std::pair{2u, 4}, {3u, 3}, {5u, 2}}) {
    const ZpNCtx K(p, N);
    for (std::uint32_t a = 1; a < K.modulus(); ++a)
      for (std::uint32_t b = 1; b < K.modulus(); ++b) {
        const int sa = K.nu1({a}), sb = K.nu1({b});
        if (sa + sb < N) {
          ASSERT_FALSE(K.is_zero(K.mul({a}, {b})));
          ASSERT_EQ(K.nu1(K.mul({a}, {b})), sa + sb);
        }
        if (sa == sb) {
          bool found = false;
          for (std::uint32_t u = 1; u < K.modulus() && !found; ++u)
            found = K.is_unit({u}) && K.mul({u}, {b}) == ZpNElem{a};
          ASSERT_TRUE(found) << a << " " << b;
        }
      }
  }
}

TEST(ZpNValuation, UnitPartInverseNormalizes) {
  const ZpNCtx K(3, 3);
  for (std::uint32_t a = 1; a < K.modulus(); ++a) {
    const auto n = K.mul({a}, K.unit_part_inverse({a}));
    EXPECT_EQ(n, K.pow_p(K.nu1({a})));
  }
}
