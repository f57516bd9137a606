#include <gtest/gtest.h>

#include "cclab/errors.hpp"
#include "cclab/pdl.hpp"
#include "cclab/search.hpp"

using namespace cclab;

namespace {

struct BruteProtocol {
  Bits code;
  bool total = true;
  bool correct = true;
  std::vector<Cost> at;  // cost at (x, y) when not stuck and correct
};

// Oracle: run every enumerated protocol on every input pair.
std::vector<BruteProtocol> brute(const FunctionSpec& f, std::size_t alpha, bool one_way) {
  const std::size_t n = f.n(), side = std::size_t{1} << n;
  std::vector<BruteProtocol> out;
  for (const Bits& c : enumerate_codes(Dims::symmetric(n), alpha, one_way)) {
    Protocol p = pdl_decode(c, n);
    if (one_way && !is_one_way(p)) continue;
    BruteProtocol b{c, true, true, std::vector<Cost>(side * side)};
    for (std::uint64_t x = 0; x < side; ++x)
      for (std::uint64_t y = 0; y < side; ++y) {
        RunOutcome r = run_index(p, x, y);
        if (r.stuck()) b.total = false;
        if (r.output && *r.output == f.at(x, y)) b.at[x * side + y] = Cost(r.transcript.size());
        else b.correct = false;
      }
    out.push_back(std::move(b));
  }
  return out;
}

bool admits(const BruteProtocol& b, Family fam, std::size_t cell) {
  switch (fam) {
    case Family::tcc: return b.total && b.correct;
    case Family::cc: return b.total && b.at[cell].finite();
    case Family::pcc: return b.at[cell].finite();
  }
  return false;
}

void compare_all(const FunctionSpec& f, std::size_t alpha, bool one_way, const std::vector<std::size_t>& budgets) {
  const std::size_t side = std::size_t{1} << f.n();
  auto all = brute(f, alpha, one_way);
  for (Family fam : {Family::tcc, Family::cc, Family::pcc})
    for (std::uint64_t x = 0; x < side; ++x)
      for (std::uint64_t y = 0; y < side; ++y) {
        RectangleSearch s(f, fam, one_way, x, y, alpha);
        for (std::size_t a : budgets) {
          Cost best;
          std::optional<Bits> wit;
          for (const auto& b : all)
            if (b.code.size() <= a && admits(b, fam, x * side + y) && b.at[x * side + y] < best) {
              best = b.at[x * side + y];
              wit = b.code;
            }
          auto r = s.best_within(a);
          EXPECT_EQ(r.value, best) << f.name() << " " << family_name(fam) << " x=" << x << " y=" << y << " a=" << a
                                   << " one_way=" << one_way;
          EXPECT_EQ(r.witness, wit) << f.name() << " " << family_name(fam) << " x=" << x << " y=" << y << " a=" << a;
        }
      }
}

}  // namespace

TEST(Search, MatchesBruteAtOneBit) {
  for (const char* name : {"identity", "eq", "ip"})
    for (bool one_way : {false, true}) compare_all(FunctionSpec::parse(name, 1), 20, one_way, {2, 4, 8, 12, 16, 20});
}

TEST(Search, MatchesBruteAtTwoBits) {
  for (bool one_way : {false, true}) compare_all(FunctionSpec::identity(2), 16, one_way, {4, 10, 16});
  compare_all(FunctionSpec::equality(2), 16, false, {16});
}

TEST(Search, AllExactListsEveryValidCode) {
  const FunctionSpec f = FunctionSpec::equality(1);
  auto all = brute(f, 18, false);
  for (Family fam : {Family::tcc, Family::pcc}) {
    RectangleSearch s(f, fam, false, 1, 0, 18);
    for (std::size_t len = 0; len <= 18; ++len) {
      std::vector<Bits> want;
      for (const auto& b : all)
        if (b.code.size() == len && admits(b, fam, 1 * 2 + 0)) want.push_back(b.code);
      EXPECT_EQ(s.all_exact(len, 1'000'000), want) << family_name(fam) << " len=" << len;
      EXPECT_EQ(s.any_exact(len), !want.empty());
    }
  }
}

TEST(Search, EnumerateCorrectMatchesFilteredBrute) {
  for (const char* name : {"identity", "eq", "ip"})
    for (bool one_way : {false, true}) {
      const FunctionSpec f = FunctionSpec::parse(name, 1);
      std::vector<Bits> want;
      for (const auto& b : brute(f, 20, one_way))
        if (b.total && b.correct) want.push_back(b.code);
      EXPECT_EQ(enumerate_correct(f, 20, one_way), want) << name << " one_way=" << one_way;
    }
}

TEST(Search, CorrectCodesBeyondTheCap) {
  const FunctionSpec id = FunctionSpec::identity(2);
  auto codes = enumerate_correct(id, 42, false);
  ASSERT_FALSE(codes.empty());
  EXPECT_EQ(codes.front().size(), 42u);
  for (const Bits& c : codes) EXPECT_TRUE(computes_everywhere(pdl_decode(c, 2), id));
  EXPECT_THROW(enumerate_correct(id, 52, false, 10), UsageError);
}

TEST(Search, FamilyNames) {
  for (Family f : {Family::tcc, Family::cc, Family::pcc}) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("rcc"), UsageError);
}
