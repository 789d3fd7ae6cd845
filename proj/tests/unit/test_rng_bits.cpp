#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "chase/bits.hpp"
#include "chase/errors.hpp"
#include "chase/rng.hpp"

using namespace chase;

TEST(Rng, SeededStreamsRepeat) {
  Rng a(5);
  Rng b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.below(1000), b.below(1000));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(Rng::for_trial(3, 4)(), Rng(derive_seed(3, 4))());
}

TEST(Rng, BelowIsUniformAndBounded) {
  Rng rng(9);
  std::vector<int> counts(6, 0);
  const int trials = 60'000;
  for (int i = 0; i < trials; ++i) ++counts.at(rng.below(6));
  const double sigma = std::sqrt(trials * (1.0 / 6) * (5.0 / 6));
  for (int c : counts) EXPECT_NEAR(c, trials / 6.0, 4 * sigma);
  EXPECT_THROW(rng.below(0), std::invalid_argument);
}

TEST(Rng, UnitInRange) {
  Rng rng(10);
  for (int i = 0; i < 10'000; ++i) {
    const double u = rng.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Bits, BitsFor) {
  EXPECT_EQ(bits_for(0), 1U);
  EXPECT_EQ(bits_for(1), 1U);
  EXPECT_EQ(bits_for(2), 1U);
  EXPECT_EQ(bits_for(3), 2U);
  EXPECT_EQ(bits_for(16), 4U);
  EXPECT_EQ(bits_for(17), 5U);
  EXPECT_EQ(bits_for(256), 8U);
}

TEST(Bits, BufferRoundTrip) {
  BitBuffer buf;
  buf.write(5, 3);
  buf.write_bit(true);
  buf.write(0xABCDEF, 24);
  buf.write(1, 64);
  EXPECT_EQ(buf.size_bits(), 92U);
  EXPECT_EQ(buf.read(3), 5U);
  EXPECT_TRUE(buf.read_bit());
  EXPECT_EQ(buf.read(24), 0xABCDEFU);
  EXPECT_EQ(buf.read(64), 1U);
  EXPECT_THROW(buf.read(1), DomainError);
  buf.rewind();
  EXPECT_EQ(buf.read(3), 5U);
}

TEST(Bits, EqualityIgnoresCursor) {
  BitBuffer a;
  BitBuffer b;
  a.write(3, 2);
  b.write(3, 2);
  a.read(1);
  EXPECT_EQ(a, b);
  b.write_bit(false);
  EXPECT_FALSE(a == b);
}
