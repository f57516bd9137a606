#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cclab/cost.hpp"
#include "cclab/function_spec.hpp"
#include "cclab/protocol.hpp"

namespace cclab {

// TCC: total and correct everywhere. CC: total, correct on the target pair.
// PCC: may get stuck anywhere except on the target pair, correct there.
enum class Family : std::uint8_t { tcc, cc, pcc };
std::string family_name(Family f);
Family parse_family(const std::string& s);

inline constexpr std::size_t kSearchMaxLen = 127;
inline constexpr std::size_t kSearchMaxInputBits = 3;

// Exact search over protocol codes by rectangle recursion. A subtree is
// summarized by the rectangle of inputs reaching it and its depth; for every
// exact code length it records whether a valid subtree exists and the least
// depth it gives the target pair. Agrees with brute enumeration (value and
// canonical-first witness) wherever both run.
class RectangleSearch {
 public:
  RectangleSearch(const FunctionSpec& f, Family family, bool one_way, std::uint64_t x, std::uint64_t y,
                  std::size_t max_len);

  bool any_exact(std::size_t len);
  Cost best_exact(std::size_t len);

  struct Result {
    Cost value;
    std::optional<Bits> witness;
  };
  // Minimum over code lengths <= alpha; witness = canonical-first code reaching it.
  Result best_within(std::size_t alpha);
  // Lexicographically least code of exactly `len` bits reaching best_exact(len).
  Bits witness_exact(std::size_t len);

  // Every valid code of exactly `len` bits, lexicographic. Throws UsageError
  // once more than `limit` codes would be produced.
  std::vector<Bits> all_exact(std::size_t len, std::size_t limit);

  const Dims& dims() const { return dims_; }
  std::size_t depth_cap() const { return cap_; }

 private:
  using Lens = std::bitset<kSearchMaxLen + 1>;
  static constexpr std::uint8_t kNone = 255;

  struct Key {
    std::uint64_t xs, ys;  // row / column masks; both 0 = unreachable subtree
    std::uint8_t depth;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return (k.xs * 0x9E3779B97F4A7C15ull) ^ (k.ys << 9) ^ k.depth; }
  };
  struct Entry {
    Lens any;
    std::array<std::uint8_t, kSearchMaxLen + 1> best;
  };
  struct Split {
    Bits header;
    Key child[2];
  };

  const Entry& entry(const Key& k);
  Entry compute(const Key& k);
  bool holds_target(const Key& k) const;
  bool empty(const Key& k) const { return k.xs == 0 || k.ys == 0; }
  Key child_key(std::uint64_t xs, std::uint64_t ys, std::uint8_t depth) const;
  bool stuck_ok(const Key& k) const;
  // Speak headers in lexicographic order with the rectangle split they induce.
  std::vector<Split> splits(const Key& k) const;
  // Valid leaf codes of this rectangle (all of them when `all`, else the least per length).
  std::vector<Bits> leaves(const Key& k, bool all, std::size_t only_len = SIZE_MAX) const;
  std::optional<Bits> lexmin(const Key& k, std::size_t len, bool need_best);
  bool child_ok(const Key& k, std::size_t len, int need);

  FunctionSpec f_;
  Dims dims_;
  Family family_;
  bool one_way_;
  std::uint64_t tx_, ty_;
  std::size_t max_len_;
  std::size_t cap_;
  std::vector<std::uint64_t> value_;   // f as index, row-major
  std::vector<std::uint64_t> xprefix_; // first out_bits bits of each x
  std::unordered_map<Key, Entry, KeyHash> memo_;
  struct LenKey {
    Key k;
    std::uint16_t len;
    bool best;
    bool operator==(const LenKey&) const = default;
  };
  struct LenKeyHash {
    std::size_t operator()(const LenKey& l) const { return KeyHash()(l.k) * 131 + l.len * 2 + l.best; }
  };
  std::unordered_map<LenKey, std::optional<Bits>, LenKeyHash> lexmin_memo_;
  std::unordered_map<LenKey, std::vector<Bits>, LenKeyHash> all_memo_;
  std::size_t all_count_ = 0;
};

// Every protocol of at most alpha PDL bits that computes f everywhere,
// shortest code first, then lexicographic.
std::vector<Bits> enumerate_correct(const FunctionSpec& f, std::size_t alpha, bool one_way,
                                    std::size_t limit = 2'000'000);

}  // namespace cclab
