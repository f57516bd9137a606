#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <set>

#include "cclab/builders.hpp"
#include "cclab/pdl.hpp"
#include "cclab/rectangle.hpp"
#include "cclab/search.hpp"

using namespace cclab;

namespace {

// Oracle: log2 of the span size, by closing under xor.
std::size_t span_rank(const std::vector<std::uint64_t>& rows) {
  std::set<std::uint64_t> span{0};
  for (std::uint64_t r : rows) {
    std::set<std::uint64_t> next = span;
    for (std::uint64_t v : span) next.insert(v ^ r);
    span = next;
  }
  std::size_t k = 0;
  while ((std::size_t{1} << k) < span.size()) ++k;
  return k;
}

// Oracle: for every row subset, the widest column set of one colour.
std::uint64_t brute_mono(const FunctionTable& t) {
  const std::uint64_t side = t.side();
  std::uint64_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << side); ++mask) {
    std::uint64_t rows = std::popcount(mask);
    std::uint64_t first = std::countr_zero(mask);
    for (std::uint64_t c = 0; c < side; ++c) {
      const Bits& colour = t.at(first, c);
      std::uint64_t cols = 0;
      for (std::uint64_t y = 0; y < side; ++y) {
        bool ok = true;
        for (std::uint64_t x = 0; x < side && ok; ++x)
          if ((mask >> x) & 1) ok = t.at(x, y) == colour;
        cols += ok;
      }
      best = std::max(best, rows * cols);
    }
  }
  return best;
}

FunctionTable random_table(std::size_t n, std::mt19937_64& rng) {
  FunctionTable t{n, true, {}};
  for (std::size_t i = 0; i < t.side() * t.side(); ++i) t.cells.push_back(Bits::from_index(rng() & 1, 1));
  return t;
}

}  // namespace

TEST(Rectangle, Gf2RankMatchesSpanSize) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::uint64_t> rows(rng() % 7);
    for (auto& r : rows) r = rng() & 0xff;
    EXPECT_EQ(gf2_rank(rows), span_rank(rows));
  }
  EXPECT_EQ(gf2_rank(std::vector<Bits>{Bits::from_string("110"), Bits::from_string("011"), Bits::from_string("101")}),
            2u);
}

TEST(Rectangle, LiteralSendPartition) {
  TranscriptPartition part = transcript_partition(literal_send(FunctionSpec::identity(2)));
  EXPECT_EQ(part.cells, 16u);
  EXPECT_EQ(part.covered, 16u);
  ASSERT_EQ(part.classes.size(), 4u);
  for (auto& [t, r] : part.classes) {
    EXPECT_EQ(r.rows, (std::vector<std::uint64_t>{0, 1, 2, 3}));
    EXPECT_EQ(r.cols, std::vector<std::uint64_t>{t.to_index()});
  }
}

TEST(Rectangle, EveryEnumeratedProtocolPartitionsIntoRectangles) {
  const Dims d = Dims::symmetric(2);
  for (const auto& e : enumerate_protocols(d, 18)) {
    TranscriptPartition part = transcript_partition(e.protocol);
    std::uint64_t sum = 0;
    for (auto& [t, r] : part.classes) {
      sum += r.size();
      for (std::uint64_t x : r.rows)
        for (std::uint64_t y : r.cols) EXPECT_EQ(run_index(e.protocol, x, y).transcript, t);
    }
    EXPECT_EQ(sum, part.covered);
  }
}

TEST(Rectangle, HelpSwitchClassIsNotARectangle) {
  Protocol p(Dims{2, 2, 1}, Node::help_switch(1, 1, Node::leaf(OutputFunction::copy_x()),
                                                Node::leaf(OutputFunction::copy_x())));
  try {
    transcript_partition(p);
    FAIL() << "expected a violation";
  } catch (const RectangleViolation& v) {
    EXPECT_TRUE(v.transcript().empty());
    ASSERT_EQ(v.witnesses().size(), 4u);
    auto [x, y1] = v.witnesses()[0];
    auto [x2, y] = v.witnesses()[1];
    EXPECT_FALSE(run_index(p, x, y1).stuck());
    EXPECT_FALSE(run_index(p, x2, y).stuck());
    EXPECT_TRUE(run_index(p, x2, y1).stuck() || run_index(p, x, y).stuck());
  }
}

TEST(Rectangle, MaxMonochromaticMatchesBruteForce) {
  for (const char* name : {"identity", "eq", "ip"})
    for (std::size_t n : {1u, 2u, 3u}) {
      FunctionTable t = FunctionSpec::parse(name, n).table();
      MonoRectangle m = max_monochromatic_rectangle(t);
      EXPECT_TRUE(m.exact);
      EXPECT_EQ(m.size, brute_mono(t)) << name << " n=" << n;
      EXPECT_EQ(m.rect.size(), m.size);
      for (std::uint64_t x : m.rect.rows)
        for (std::uint64_t y : m.rect.cols) EXPECT_EQ(t.at(x, y), m.color);
    }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    FunctionTable t = random_table(1 + trial % 3, rng);
    EXPECT_EQ(max_monochromatic_rectangle(t).size, brute_mono(t));
  }
}

TEST(Rectangle, IpAuditOnCorrectProtocols) {
  for (std::size_t n : {1u, 2u}) {
    IpAudit a = ip_rectangle_audit(literal_send(FunctionSpec::inner_product(n)));
    EXPECT_TRUE(a.ok());
    EXPECT_LE(a.max_product, std::uint64_t{1} << n);
  }
  const FunctionSpec ip = FunctionSpec::inner_product(2);
  std::size_t audited = 0;
  for (const Bits& c : enumerate_correct(ip, 64, false)) {
    IpAudit a = ip_rectangle_audit(pdl_decode(c, 2));
    EXPECT_TRUE(a.ok()) << c.hex();
    ++audited;
  }
  EXPECT_GT(audited, 0u);
}

TEST(Rectangle, IpAuditFlagsWrongProtocol) {
  IpAudit a = ip_rectangle_audit(literal_send(FunctionSpec::identity(2)));
  EXPECT_GT(a.non_monochromatic, 0u);
  EXPECT_FALSE(a.ok());
}

TEST(Rectangle, EqualityDiagonal) {
  DiagonalReport r = equality_diagonal_bound(literal_send(FunctionSpec::equality(2)));
  EXPECT_TRUE(r.distinct);
  EXPECT_EQ(r.max_length, 2u);
  EXPECT_EQ(r.length_histogram, (std::map<std::size_t, std::size_t>{{2, 4}}));
  Protocol zero(Dims::symmetric(2), Node::leaf(OutputFunction::constant(Bits::from_string("00"))));
  EXPECT_FALSE(equality_diagonal_bound(zero).distinct);
}
