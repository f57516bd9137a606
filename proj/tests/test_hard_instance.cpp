#include <gtest/gtest.h>

#include "cclab/builders.hpp"
#include "cclab/constructions.hpp"
#include "cclab/errors.hpp"
#include "cclab/hard_instance.hpp"

using namespace cclab;

namespace {

Bits B(const char* s) { return Bits::from_string(s); }

}  // namespace

TEST(HardInstance, SmallInstanceIsCertified) {
  HardInstance h = th7_hard_instance(10, 1, 2);
  EXPECT_EQ(h.n, 30u);
  EXPECT_EQ(h.zs.size(), 3u);
  EXPECT_EQ(h.ys.size(), 3u);
  EXPECT_TRUE(h.certified);
  EXPECT_EQ(h.fiber_size, 1024u);
  EXPECT_EQ(h.certificate.size(), h.family.size());
  for (std::size_t j = 0; j < h.zs.size(); ++j) {
    EXPECT_TRUE(h.x.substr(j * 10, 10) == h.zs[j]);
    EXPECT_TRUE(h.ys[j].starts_with(h.zs[j]));
  }
  for (const auto& c : h.certificate) EXPECT_TRUE(!c.value.finite() || c.value.bits() >= 2);
  ReplayReport r = verify_hard_instance(h);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.checked, 0u);
}

TEST(HardInstance, JsonRoundTrip) {
  HardInstance h = th7_hard_instance(10, 1, 2, 6, 9);
  HardInstance g = hard_instance_from_json(nlohmann::json::parse(to_json(h).dump()));
  EXPECT_EQ(g.params, h.params);
  EXPECT_EQ(g.n, h.n);
  EXPECT_EQ(g.zs, h.zs);
  EXPECT_EQ(g.x, h.x);
  EXPECT_EQ(g.ys, h.ys);
  EXPECT_EQ(g.family, h.family);
  EXPECT_EQ(g.label, h.label);
  EXPECT_EQ(g.certificate, h.certificate);
  EXPECT_EQ(g.certified, h.certified);
  EXPECT_TRUE(verify_hard_instance(g).ok());
  EXPECT_THROW(hard_instance_from_json(nlohmann::json::parse("{\"x\": 1}")), UsageError);
}

TEST(HardInstance, TamperingIsDetected) {
  HardInstance h = th7_hard_instance(10, 1, 2);
  HardInstance bad = h;
  bad.zs[1] = bad.zs[0];
  EXPECT_FALSE(verify_hard_instance(bad).ok());
  bad = h;
  ASSERT_FALSE(bad.certificate.empty());
  bad.certificate[0].value = Cost(0);
  EXPECT_FALSE(verify_hard_instance(bad).ok());
}

TEST(HardInstance, Preconditions) {
  EXPECT_THROW(th7_hard_instance(4, 1, 2), UsageError);
  EXPECT_THROW(th7_hard_instance(10, 0, 0), UsageError);
  EXPECT_THROW(helpbit_hard_instance(10, 4, 1, 2, 1), UsageError);
}

TEST(HardInstance, NoHelpBitsEqualsPlainInstance) {
  HardInstance a = th7_hard_instance(10, 1, 2), b = helpbit_hard_instance(10, 1, 2, 0, 0);
  EXPECT_EQ(a.zs, b.zs);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.family, b.family);
  EXPECT_EQ(a.label, b.label);
}

TEST(HardInstance, HelpBitInstance) {
  HardInstance h = helpbit_hard_instance(11, 1, 1, 1, 1);
  EXPECT_EQ(h.n, 99u);
  EXPECT_EQ(h.zs.size(), 9u);
  EXPECT_TRUE(h.certified);
  EXPECT_TRUE(verify_hard_instance(h).ok());
}

TEST(HardInstance, IdentitySoundness) {
  EXPECT_TRUE(identity_sound(Protocol(Dims::symmetric(3), Node::stuck()), 3));
  EXPECT_FALSE(identity_sound(Protocol(Dims::symmetric(3), Node::leaf(OutputFunction::copy_x())), 3));
  EXPECT_TRUE(identity_sound(literal_send(FunctionSpec::identity(3)), 3));
  EXPECT_TRUE(identity_sound(prefix_protocol(B("1010"), 2), 4));
  const Dims wide{12, 12, 12};
  EXPECT_FALSE(identity_sound(Protocol(wide, literal_chain(4, OutputFunction::constant(Bits(12))), 24), 12));
  NodePtr ask = Node::speak(Party::bob, NodeFunction::bit(0), Node::stuck(), Node::stuck());
  EXPECT_TRUE(identity_sound(Protocol(wide, ask), 12));
  auto echo = OutputFunction::computed([](const Bits&, const Bits& t) { return t; }, "transcript");
  EXPECT_THROW(identity_sound(Protocol(wide, literal_chain(12, echo)), 12), UsageError);
}

TEST(HardInstance, CompanionProtocol) {
  const std::size_t k = 4;
  Protocol p = helpbit_companion_protocol(1, k);
  const HelpSpec h{1, 0};
  std::vector<Bits> zs{B("0011"), B("0101"), B("1000")};
  Th7Protocol t = th7_protocol(zs);
  const FunctionSpec id = FunctionSpec::identity(3 * k);
  for (std::size_t j = 0; j < zs.size(); ++j) {
    auto [x, y] = th7_input(zs, j);
    EXPECT_EQ(cc_with_help(p, id, x, y, h), Cost(t.cost.measured + 1));
    Bits x0 = x;
    x0.append(B("0"));
    EXPECT_EQ(run(p, x0, y).transcript.size(), 3 * k + 1);
    EXPECT_EQ(run(p, x0, y).output, y);
  }
}
