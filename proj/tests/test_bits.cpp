#include <gtest/gtest.h>

#include "cclab/bits.hpp"
#include "cclab/cost.hpp"
#include "cclab/errors.hpp"

using namespace cclab;

TEST(Bits, IndexRoundTrip) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) EXPECT_EQ(Bits::from_index(v, n).to_index(), v);
  EXPECT_EQ(Bits::from_index(6, 4).str(), "0110");
}

TEST(Bits, HexRoundTrip) {
  const Bits b = Bits::from_string("1011001");
  EXPECT_EQ(b.hex(), "7:b2");
  EXPECT_EQ(Bits::from_hex(b.hex()), b);
  EXPECT_EQ(Bits::from_hex("0:"), Bits());
  EXPECT_THROW(Bits::from_hex("7:b3"), UsageError);  // nonzero padding
  EXPECT_THROW(Bits::from_hex("7:b"), UsageError);
  EXPECT_THROW(Bits::from_hex("b2"), UsageError);
  EXPECT_THROW(Bits::from_string("012"), UsageError);
}

TEST(Bits, CanonicalOrder) {
  EXPECT_TRUE(canonical_less(Bits::from_string("11"), Bits::from_string("000")));
  EXPECT_TRUE(canonical_less(Bits::from_string("01"), Bits::from_string("10")));
  EXPECT_FALSE(canonical_less(Bits::from_string("10"), Bits::from_string("10")));
}

TEST(Bits, SliceAndConcat) {
  const Bits b = Bits::from_string("110100");
  EXPECT_EQ(b.substr(2, 3).str(), "010");
  EXPECT_EQ(b.prefix(2).concat(Bits::from_string("1")).str(), "111");
  EXPECT_TRUE(b.starts_with(Bits::from_string("1101")));
  EXPECT_FALSE(b.starts_with(Bits::from_string("10")));
  EXPECT_EQ((Bits::from_string("1100") ^ Bits::from_string("1010")).str(), "0110");
}

TEST(Bits, CeilLog2) {
  const unsigned expect[] = {0, 0, 1, 2, 2, 3, 3, 3, 3, 4};
  for (unsigned v = 0; v < 10; ++v) EXPECT_EQ(ceil_log2(v), expect[v]) << v;
  EXPECT_EQ(ceil_log2(std::uint64_t{1} << 40), 40u);
  EXPECT_EQ(ceil_log2((std::uint64_t{1} << 40) + 1), 41u);
}

TEST(Cost, InfinityAbsorbs) {
  EXPECT_FALSE(Cost::inf().finite());
  EXPECT_FALSE((Cost::inf() + 3).finite());
  EXPECT_LT(Cost(1000), Cost::inf());
  EXPECT_EQ(min(Cost(3), Cost::inf()), Cost(3));
  EXPECT_EQ(Cost::inf().str(), "inf");
  EXPECT_EQ((Cost(2) + 3).bits(), 5u);
}
