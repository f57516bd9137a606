#include <gtest/gtest.h>

#include <set>

#include "cclab/builders.hpp"
#include "cclab/errors.hpp"
#include "cclab/help_bits.hpp"
#include "cclab/pdl.hpp"
#include "cclab/protocol.hpp"

using namespace cclab;

namespace {

Bits B(const char* s) { return Bits::from_string(s); }

Protocol copy_leaf(std::size_t n) { return Protocol(Dims::symmetric(n), Node::leaf(OutputFunction::copy_x())); }

// Oracle: no transcript is a proper prefix of another.
bool prefix_free(const std::set<Bits>& ts) {
  for (const Bits& a : ts)
    for (const Bits& b : ts)
      if (a.size() < b.size() && b.starts_with(a)) return false;
  return true;
}

}  // namespace

TEST(FunctionSpec, BuiltinValues) {
  const auto eq = FunctionSpec::equality(2), ip = FunctionSpec::inner_product(3), id = FunctionSpec::identity(2);
  EXPECT_EQ(eq(B("01"), B("01")), B("01"));
  EXPECT_EQ(eq(B("01"), B("11")), B("00"));
  EXPECT_EQ(ip(B("110"), B("011")), B("001"));
  EXPECT_EQ(ip(B("111"), B("011")), B("000"));
  EXPECT_EQ(id(B("00"), B("10")), B("10"));
  EXPECT_EQ(encode_boolean(true, 4), B("0001"));
}

TEST(FunctionSpec, TableRoundTrip) {
  for (const char* name : {"identity", "eq", "ip"}) {
    FunctionTable t = FunctionSpec::parse(name, 2).table();
    FunctionTable u = parse_table(format_table(t));
    EXPECT_EQ(u.cells, t.cells) << name;
    EXPECT_EQ(u.boolean, t.boolean);
  }
  EXPECT_EQ(parse_table("n=1\n01\n10\n").bit(0, 1), true);
  EXPECT_THROW(parse_table("n=1\n01\n"), UsageError);
  EXPECT_THROW(parse_table("n=1\n012\n10\n"), UsageError);
  EXPECT_THROW(FunctionSpec::parse("xor", 2), UsageError);
}

TEST(Run, LiteralSendIdentity) {
  Protocol p = literal_send(FunctionSpec::identity(2));
  for (std::uint64_t x = 0; x < 4; ++x)
    for (std::uint64_t y = 0; y < 4; ++y) {
      RunOutcome r = run_index(p, x, y);
      EXPECT_EQ(r.transcript, Bits::from_index(y, 2));
      EXPECT_EQ(r.output, Bits::from_index(y, 2));
    }
  EXPECT_TRUE(is_total(p));
  EXPECT_TRUE(is_one_way(p));
  EXPECT_TRUE(computes_everywhere(p, FunctionSpec::identity(2)));
  EXPECT_EQ(pdl_complexity(p), 42u);
}

TEST(Run, DiagonalCostsNothing) {
  // Alice outputs x: correct exactly on the diagonal, with no communication.
  Protocol p = copy_leaf(3);
  const auto id = FunctionSpec::identity(3);
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = 0; y < 8; ++y) {
      Cost c = cc_on_input(p, id, Bits::from_index(x, 3), Bits::from_index(y, 3));
      EXPECT_EQ(c, x == y ? Cost(0) : Cost::inf());
    }
  EXPECT_TRUE(is_one_way(p));
  EXPECT_TRUE(is_total(p));
  EXPECT_FALSE(computes_everywhere(p, id));
}

TEST(Run, StuckAndOneWay) {
  Protocol stuck(Dims::symmetric(2), Node::stuck());
  EXPECT_FALSE(is_total(stuck));
  EXPECT_TRUE(run(stuck, B("00"), B("00")).stuck());
  EXPECT_EQ(cc_on_input(stuck, FunctionSpec::identity(2), B("00"), B("00")), Cost::inf());
  NodePtr leaf = Node::leaf(OutputFunction::copy_x());
  Protocol alice(Dims::symmetric(2), Node::speak(Party::alice, NodeFunction::bit(0), leaf, leaf));
  EXPECT_FALSE(is_one_way(alice));
  EXPECT_EQ(run(alice, B("10"), B("00")).transcript, B("1"));
}

TEST(Run, DepthCapGivesStuck) {
  NodePtr node = Node::leaf(OutputFunction::copy_x());
  for (int i = 0; i < 5; ++i) node = Node::speak(Party::bob, NodeFunction::constant(false), node, node);
  Protocol capped(Dims::symmetric(1), node);  // cap 4
  EXPECT_EQ(capped.depth_cap(), 4u);
  RunOutcome r = run(capped, B("0"), B("0"));
  EXPECT_TRUE(r.stuck());
  EXPECT_EQ(r.transcript.size(), 4u);
  Protocol roomy(Dims::symmetric(1), node, 5);
  EXPECT_FALSE(run(roomy, B("0"), B("0")).stuck());
}

TEST(Run, TotalTranscriptsArePrefixFree) {
  for (std::size_t n : {1, 2}) {
    for (const auto& e : enumerate_protocols(Dims::symmetric(n), 18, {true, false})) {
      std::set<Bits> ts;
      for (std::uint64_t x = 0; x < (1u << n); ++x)
        for (std::uint64_t y = 0; y < (1u << n); ++y) ts.insert(run_index(e.protocol, x, y).transcript);
      EXPECT_TRUE(prefix_free(ts)) << e.code.hex();
    }
  }
}

TEST(Run, AliceReplay) {
  Protocol p = literal_send(FunctionSpec::identity(2));
  EXPECT_EQ(alice_replay(p, B("00"), B("10")), B("10"));
  EXPECT_EQ(alice_replay(p, B("00"), B("1")), std::nullopt);
}

TEST(Fit, ShortestKind) {
  using K = NodeFunction::Kind;
  EXPECT_EQ(NodeFunction::fit(2, {0, 0, 0, 0}).kind(), K::const_zero);
  EXPECT_EQ(NodeFunction::fit(2, {1, -1, 1, 1}).kind(), K::const_one);
  NodeFunction b = NodeFunction::fit(2, {0, 0, 1, 1});
  EXPECT_EQ(b.kind(), K::input_bit);
  EXPECT_EQ(b.index(), 0u);
  NodeFunction nb = NodeFunction::fit(2, {1, 0, 1, 0});
  EXPECT_EQ(nb.kind(), K::negated_input_bit);
  EXPECT_EQ(nb.index(), 1u);
  NodeFunction t = NodeFunction::fit(2, {0, 1, 1, 0});
  EXPECT_EQ(t.kind(), K::table);
  EXPECT_EQ(t.values(), B("0110"));
}

TEST(Help, ZeroHelpBitsEqualsPlainCost) {
  for (std::size_t n : {1, 2}) {
    const auto id = FunctionSpec::identity(n);
    for (const auto& e : enumerate_protocols(Dims::symmetric(n), 14))
      for (std::uint64_t x = 0; x < (1u << n); ++x)
        for (std::uint64_t y = 0; y < (1u << n); ++y) {
          Bits xb = Bits::from_index(x, n), yb = Bits::from_index(y, n);
          EXPECT_EQ(cc_with_help(e.protocol, id, xb, yb, {}), cc_on_input(e.protocol, id, xb, yb));
        }
  }
}

TEST(Help, ValueAsHelpBitCostsNothing) {
  for (const char* name : {"eq", "ip"})
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto f = FunctionSpec::parse(name, n);
      Protocol p = value_as_help_protocol(f);
      EXPECT_TRUE(is_one_way(p));
      for (std::uint64_t x = 0; x < (1u << n); ++x)
        for (std::uint64_t y = 0; y < (1u << n); ++y)
          EXPECT_EQ(cc_with_help(p, f, Bits::from_index(x, n), Bits::from_index(y, n), {1, 0}), Cost(0));
    }
}

TEST(Help, TotalizerOnCopyLeaf) {
  const auto id = FunctionSpec::identity(2);
  Protocol p = copy_leaf(2);
  for (TotalizerMode mode : {TotalizerMode::both, TotalizerMode::alice_only, TotalizerMode::bob_only}) {
    Protocol w = help_bit_totalizer(p, id, mode);
    const HelpSpec h = totalizer_help(mode);
    const std::uint32_t extra = mode == TotalizerMode::both ? 0 : 1;
    EXPECT_TRUE(computes_everywhere_with_help(w, id, h));
    for (std::uint64_t x = 0; x < 4; ++x)
      for (std::uint64_t y = 0; y < 4; ++y) {
        Cost c = cc_with_help(w, id, Bits::from_index(x, 2), Bits::from_index(y, 2), h);
        EXPECT_EQ(c, x == y ? Cost(extra) : Cost(2 + extra)) << x << " " << y;
      }
  }
  EXPECT_EQ(parse_totalizer_mode("bob-only"), TotalizerMode::bob_only);
  EXPECT_THROW(parse_totalizer_mode("neither"), UsageError);
}

TEST(Help, LiftIgnoresHelp) {
  Protocol p = literal_send(FunctionSpec::identity(2));
  Protocol q = lift(p, {1, 2});
  EXPECT_EQ(q.dims(), (Dims{3, 4, 2}));
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = 0; y < 16; ++y) EXPECT_EQ(run_index(q, x, y), run_index(p, x >> 1, y >> 2));
}
