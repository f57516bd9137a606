#include <gtest/gtest.h>

#include <map>
#include <random>

#include "cclab/dcc.hpp"
#include "cclab/errors.hpp"
#include "cclab/individual.hpp"
#include "cclab/pdl.hpp"

using namespace cclab;

namespace {

// Oracle: recursion over row and column sets, trying every split by either party.
struct Oracle {
  const FunctionTable& t;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> seen;

  bool rows_constant(std::uint64_t xs, std::uint64_t ys) const {
    for (std::uint64_t x = 0; x < t.side(); ++x) {
      if (!((xs >> x) & 1)) continue;
      const Bits* first = nullptr;
      for (std::uint64_t y = 0; y < t.side(); ++y)
        if ((ys >> y) & 1) {
          if (first && t.at(x, y) != *first) return false;
          first = &t.at(x, y);
        }
    }
    return true;
  }

  std::size_t depth(std::uint64_t xs, std::uint64_t ys) {
    if (rows_constant(xs, ys)) return 0;
    auto key = std::make_pair(xs, ys);
    if (auto it = seen.find(key); it != seen.end()) return it->second;
    std::size_t best = SIZE_MAX;
    for (std::uint64_t part = (xs - 1) & xs; part; part = (part - 1) & xs)
      best = std::min(best, 1 + std::max(depth(part, ys), depth(xs & ~part, ys)));
    for (std::uint64_t part = (ys - 1) & ys; part; part = (part - 1) & ys)
      best = std::min(best, 1 + std::max(depth(xs, part), depth(xs, ys & ~part)));
    seen[key] = best;
    return best;
  }
};

std::size_t oracle_dcc(const FunctionTable& t) {
  Oracle o{t, {}};
  const std::uint64_t all = (std::uint64_t{1} << t.side()) - 1;
  return o.depth(all, all);
}

void check_protocol(const DccResult& r, const FunctionSpec& f) {
  EXPECT_TRUE(computes_everywhere(r.protocol, f));
  std::size_t deepest = 0;
  const std::uint64_t side = std::uint64_t{1} << f.n();
  for (std::uint64_t x = 0; x < side; ++x)
    for (std::uint64_t y = 0; y < side; ++y) deepest = std::max(deepest, run_index(r.protocol, x, y).transcript.size());
  EXPECT_EQ(deepest, r.bits);
}

}  // namespace

TEST(Dcc, BuiltinsMatchOracle) {
  for (const char* name : {"identity", "eq", "ip"})
    for (std::size_t n : {1u, 2u}) {
      const FunctionSpec f = FunctionSpec::parse(name, n);
      DccResult r = dcc_exact(f.table());
      EXPECT_EQ(r.bits, oracle_dcc(f.table())) << name << " n=" << n;
      check_protocol(r, f);
    }
}

TEST(Dcc, FrozenValues) {
  EXPECT_EQ(dcc_exact(FunctionSpec::identity(2).table()).bits, 2u);
  EXPECT_EQ(dcc_exact(FunctionSpec::identity(3).table()).bits, 3u);
  EXPECT_EQ(dcc_exact(FunctionSpec::constant_zero(2).table()).bits, 0u);
  EXPECT_EQ(dcc_exact(FunctionSpec::equality(1).table()).bits, 1u);
  EXPECT_THROW(dcc_exact(FunctionSpec::identity(4).table()), UsageError);
}

TEST(Dcc, RandomTablesMatchOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    FunctionTable t{2, true, {}};
    for (int i = 0; i < 16; ++i) t.cells.push_back(Bits::from_index(rng() & 1, 1));
    DccResult r = dcc_exact(t);
    EXPECT_EQ(r.bits, oracle_dcc(t));
    check_protocol(r, FunctionSpec::from_table(t));
  }
}

TEST(Dcc, BoundsIndividualTotalComplexity) {
  const FunctionSpec eq = FunctionSpec::equality(2);
  DccResult r = dcc_exact(eq.table());
  const std::size_t len = pdl_complexity(r.protocol);
  for (std::uint64_t x = 0; x < 4; ++x)
    for (std::uint64_t y = 0; y < 4; ++y) {
      Cost v = individual_cc({Family::tcc, false, {}, len}, eq, Bits::from_index(x, 2), Bits::from_index(y, 2)).value;
      ASSERT_TRUE(v.finite());
      EXPECT_LE(v.bits(), r.bits);
    }
}
