#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cclab/builders.hpp"
#include "cclab/constructions.hpp"
#include "cclab/errors.hpp"
#include "cclab/sdl.hpp"

using namespace cclab;

namespace {

Bits B(const char* s) { return Bits::from_string(s); }

Bits random_bits(std::size_t n, std::mt19937_64& rng) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng() & 1);
  return b;
}

std::vector<Bits> distinct_blocks(std::size_t count, std::size_t k, std::mt19937_64& rng) {
  std::set<Bits> seen;
  std::vector<Bits> out;
  while (out.size() < count) {
    Bits b = random_bits(k, rng);
    if (seen.insert(b).second) out.push_back(b);
  }
  return out;
}

}  // namespace

TEST(Constructions, PrefixProtocol) {
  Protocol p = prefix_protocol(B("1010"), 2);
  EXPECT_EQ(run(p, B("0000"), B("1001")).transcript, B("001"));
  EXPECT_EQ(run(p, B("0000"), B("0110")).transcript, B("10110"));
  EXPECT_TRUE(computes_everywhere(p, FunctionSpec::identity(4)));
  Protocol q = prefix_protocol(B("1010"), 0);
  for (std::uint64_t y = 0; y < 16; ++y) EXPECT_EQ(run_index(q, 3, y).transcript.size(), 5u);
}

TEST(Constructions, EqualityShortcut) {
  Protocol p = equality_shortcut_protocol(2);
  EXPECT_TRUE(computes_everywhere(p, FunctionSpec::equality(2)));
  RunOutcome a = run(p, B("00"), B("10"));
  EXPECT_EQ(a.transcript.size(), 2u);
  EXPECT_EQ(a.output, B("00"));
  RunOutcome b = run(p, B("11"), B("11"));
  EXPECT_EQ(b.transcript.size(), 3u);
  EXPECT_EQ(b.output, B("01"));
  EXPECT_EQ(run(p, B("11"), B("01")).transcript.size(), 2u);
}

TEST(Constructions, InnerProductShortcuts) {
  for (std::size_t n : {1u, 2u, 3u}) {
    const FunctionSpec ip = FunctionSpec::inner_product(n);
    Protocol z = ip_zero_shortcut(n), a = ip_alice_first(n);
    EXPECT_TRUE(computes_everywhere(z, ip));
    EXPECT_TRUE(computes_everywhere(a, ip));
    const std::uint64_t side = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < side; ++x) {
      EXPECT_EQ(run_index(z, x, 0).transcript.size(), 1u);
      EXPECT_EQ(run_index(z, x, side - 1).transcript.size(), n + 1);
      EXPECT_EQ(run_index(a, x, 1).transcript.size(), n + 1);
    }
  }
}

TEST(Constructions, LargeRectangleShortcut) {
  FunctionTable eq = FunctionSpec::equality(2).table();
  Protocol none = large_rectangle_shortcut(eq, {});
  EXPECT_TRUE(computes_everywhere(none, FunctionSpec::equality(2)));
  for (std::uint64_t y = 0; y < 4; ++y) EXPECT_EQ(run_index(none, 0, y).transcript, Bits::from_index(y, 2));

  Rectangle lower_left{{2, 3}, {0, 1}};
  Protocol p = large_rectangle_shortcut(eq, {lower_left});
  EXPECT_TRUE(computes_everywhere(p, FunctionSpec::equality(2)));
  EXPECT_EQ(run_index(p, 2, 1).transcript.size(), 2u);
  EXPECT_EQ(run_index(p, 0, 1).transcript.size(), 4u);
  EXPECT_EQ(run_index(p, 0, 2).transcript.size(), 3u);

  const FunctionSpec zero = FunctionSpec::constant_zero(2);
  Rectangle ul{{0, 1}, {0, 1}}, lr{{2, 3}, {2, 3}};
  Protocol q = large_rectangle_shortcut(zero.table(), {ul, lr});
  EXPECT_TRUE(computes_everywhere(q, zero));
  EXPECT_EQ(run_index(q, 3, 3).transcript.size(), 3u);

  EXPECT_THROW(large_rectangle_shortcut(zero.table(), {ul, Rectangle{{1, 2}, {1}}}), UsageError);
  EXPECT_THROW(large_rectangle_shortcut(eq, {Rectangle{{0, 1}, {0, 1}}}), UsageError);
}

TEST(Constructions, ShortestDescription) {
  for (std::size_t n : {2u, 3u}) {
    Protocol p = shortest_description_protocol(n, 1 + 2 * n);
    EXPECT_TRUE(computes_everywhere(p, FunctionSpec::identity(n)));
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y)
      EXPECT_EQ(run_index(p, 0, y).transcript, sdl_encode({y}, n));
    Protocol q = shortest_description_protocol(n, 2 * n);
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) EXPECT_TRUE(run_index(q, 0, y).stuck());
  }
}

TEST(Constructions, SeparatingIndexSet) {
  EXPECT_EQ(separating_index_set({B("000"), B("011"), B("101")}).indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(separating_index_set({B("0000"), B("1000")}).indices, std::vector<std::size_t>{0});
  EXPECT_TRUE(separating_index_set({B("0110")}).indices.empty());
  EXPECT_THROW(separating_index_set({B("01"), B("01")}), UsageError);
  EXPECT_EQ(restrict_to(B("10110"), {{0, 2, 3}}), B("111"));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t k = 4 + trial % 5, m = 2 + rng() % 9;
    auto zs = distinct_blocks(m, k, rng);
    SeparatingIndexSet s = separating_index_set(zs);
    EXPECT_LE(s.indices.size(), m - 1);
    EXPECT_TRUE(std::is_sorted(s.indices.begin(), s.indices.end()));
    std::set<Bits> images;
    for (const Bits& z : zs) images.insert(restrict_to(z, s));
    EXPECT_EQ(images.size(), m);
  }
}

TEST(Constructions, Th7SmallCase) {
  std::vector<Bits> zs{B("00"), B("01"), B("10")};
  Th7Protocol t = th7_protocol(zs);
  EXPECT_EQ(t.cost.blocks, 2u);
  EXPECT_EQ(t.cost.index_bits, 1u);
  EXPECT_EQ(t.cost.measured, 4u);
  EXPECT_EQ(t.cost.ceil_bound, 4u);
  EXPECT_DOUBLE_EQ(t.cost.log_bound, 4.0);
  for (std::size_t j = 0; j < zs.size(); ++j) {
    auto [x, y] = th7_input(zs, j);
    Bits want = zs[j];
    want.append(Bits(4));
    EXPECT_EQ(y, want);
    RunOutcome r = run(t.protocol, x, y);
    EXPECT_LE(r.transcript.size(), 4u);
    EXPECT_EQ(r.output, y);
  }
}

TEST(Constructions, Th7RecoversEveryBlock) {
  std::mt19937_64 rng(5);
  for (auto [s, k] : {std::pair<std::size_t, std::size_t>{2, 4}, {2, 6}, {3, 5}}) {
    Th7Protocol t = th7_protocol(s, k);
    EXPECT_EQ(t.cost.measured, (std::size_t{1} << s) * (ceil_log2(k) + 1));
    for (int trial = 0; trial < 20; ++trial) {
      auto zs = distinct_blocks((std::size_t{1} << s) + 1, k, rng);
      for (std::size_t j = 0; j < zs.size(); ++j) {
        auto [x, y] = th7_input(zs, j);
        EXPECT_EQ(th7_indices(x, s, k), separating_index_set(zs));
        RunOutcome r = run(t.protocol, x, y);
        EXPECT_EQ(r.transcript.size(), t.cost.measured);
        EXPECT_EQ(r.output, y) << "s=" << s << " k=" << k << " j=" << j;
      }
    }
  }
}
