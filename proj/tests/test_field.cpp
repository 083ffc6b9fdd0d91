#include <gtest/gtest.h>

#include <cstdlib>

#include "dofb/field.hpp"
#include "dofb/verify/oracles.hpp"

using namespace dofb;

TEST(PrimeField, DefaultModulusIsMersenne61) {
  const PrimeField f;
  EXPECT_EQ(f.modulus(), (std::uint64_t{1} << 61) - 1);
}

TEST(PrimeField, RejectsSmallOrCompositeModuli) {
  EXPECT_THROW(PrimeField(15), InvalidParams);
  EXPECT_THROW(PrimeField(2147483647ull * 3), InvalidParams);
  EXPECT_NO_THROW(PrimeField(2147483647ull));
}

TEST(PrimeField, Arithmetic) {
  const PrimeField f(2147483647ull);
  const FieldElement a = 123456789;
  EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.add(a, f.neg(a)), 0u);
  EXPECT_EQ(f.sub(0, 1), f.modulus() - 1);
  EXPECT_EQ(f.pow(3, f.modulus() - 1), 1u);
}

TEST(PrimeField, EnvironmentOverride) {
  ::setenv("DOFB_PRIME", "2147483647", 1);
  EXPECT_EQ(PrimeField::from_environment().modulus(), 2147483647u);
  ::setenv("DOFB_PRIME", "100", 1);
  EXPECT_THROW(PrimeField::from_environment(), InvalidParams);
  ::unsetenv("DOFB_PRIME");
  EXPECT_EQ(PrimeField::from_environment().modulus(), PrimeField::kDefaultModulus);
}

TEST(PrimeField, IsPrime) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(PrimeField::kDefaultModulus));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(561));
}

TEST(MixSeed, DistinctPerIndex) {
  EXPECT_NE(mix_seed(0, 0), mix_seed(0, 1));
  EXPECT_EQ(mix_seed(5, 3), mix_seed(5, 3));
}

TEST(RowBasis, SpanMembership) {
  const PrimeField f;
  RowBasis b(f, 3);
  EXPECT_TRUE(b.add(Row{1, 2, 0}));
  EXPECT_TRUE(b.add(Row{0, 1, 1}));
  EXPECT_FALSE(b.add(Row{1, 3, 1}));
  EXPECT_EQ(b.rank(), 2u);
  EXPECT_TRUE(b.contains(Row{2, 5, 1}));
  EXPECT_FALSE(b.contains(Row{0, 0, 1}));
}

TEST(RowBasis, ColumnOrderChoosesPivots) {
  const PrimeField f;
  RowBasis b(f, std::vector<std::size_t>{2, 1, 0});
  b.add(Row{1, 0, 1});
  ASSERT_EQ(b.pivots().size(), 1u);
  EXPECT_EQ(b.pivots()[0], 2u);
}

TEST(MatrixRank, AgreesWithPlainElimination) {
  const PrimeField f;
  const std::vector<Row> rows{{1, 2, 3}, {2, 4, 6}, {0, 1, 5}, {1, 3, 8}};
  EXPECT_EQ(matrix_rank(f, rows, 3), 2u);
  EXPECT_EQ(oracle::gaussian_rank(rows, f.modulus()), 2u);
  EXPECT_EQ(matrix_rank(f, {}, 4), 0u);
}
