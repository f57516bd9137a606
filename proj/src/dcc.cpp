#include "cclab/dcc.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <vector>

#include "cclab/errors.hpp"

namespace cclab {

namespace {

class Solver {
 public:
  explicit Solver(const FunctionTable& t) : t_(t), side_(t.side()), memo_(std::size_t{1} << (2 * side_), kUnset) {}

  std::uint8_t depth(std::uint32_t xs, std::uint32_t ys) {
    std::uint8_t& m = memo_[index(xs, ys)];
    if (m != kUnset) return m;
    if (leaf_ok(xs, ys)) return m = 0;
    std::uint8_t best = kUnset;
    for (std::uint32_t a = (xs - 1) & xs; a != 0; a = (a - 1) & xs)
      best = std::min<std::uint8_t>(best, 1 + std::max(depth(a, ys), depth(xs & ~a, ys)));
    for (std::uint32_t b = (ys - 1) & ys; b != 0; b = (b - 1) & ys)
      best = std::min<std::uint8_t>(best, 1 + std::max(depth(xs, b), depth(xs, ys & ~b)));
    return m = best;
  }

  NodePtr tree(std::uint32_t xs, std::uint32_t ys) {
    const std::uint8_t want = depth(xs, ys);
    const std::size_t n = t_.n;
    if (want == 0) {
      std::vector<std::optional<Bits>> rows(side_);
      const std::uint64_t y0 = std::countr_zero(ys);
      for (std::uint64_t x = 0; x < side_; ++x)
        if (xs >> x & 1u) rows[x] = value(x, y0);
      return Node::leaf(OutputFunction::fit(n, n, rows));
    }
    for (int party = 0; party < 2; ++party) {
      const std::uint32_t all = party == 0 ? xs : ys;
      for (std::uint32_t a = (all - 1) & all; a != 0; a = (a - 1) & all) {
        const std::uint32_t a0 = all & ~a;  // bit 0 side
        const auto d0 = party == 0 ? depth(a0, ys) : depth(xs, a0);
        const auto d1 = party == 0 ? depth(a, ys) : depth(xs, a);
        if (1 + std::max(d0, d1) != want) continue;
        std::vector<std::int8_t> fn(side_, -1);
        for (std::uint64_t u = 0; u < side_; ++u)
          if (all >> u & 1u) fn[u] = (a >> u & 1u) ? 1 : 0;
        NodePtr c0 = party == 0 ? tree(a0, ys) : tree(xs, a0);
        NodePtr c1 = party == 0 ? tree(a, ys) : tree(xs, a);
        return Node::speak(party == 0 ? Party::alice : Party::bob, NodeFunction::fit(n, fn), c0, c1);
      }
    }
    throw InternalError("dcc reconstruction found no optimal split");
  }

 private:
  static constexpr std::uint8_t kUnset = 255;

  std::size_t index(std::uint32_t xs, std::uint32_t ys) const { return (std::size_t{xs} << side_) | ys; }
  Bits value(std::uint64_t x, std::uint64_t y) const { return t_.boolean ? encode_boolean(t_.bit(x, y), t_.n) : t_.at(x, y); }

  bool leaf_ok(std::uint32_t xs, std::uint32_t ys) const {
    for (std::uint64_t x = 0; x < side_; ++x) {
      if (!(xs >> x & 1u)) continue;
      const Bits* first = nullptr;
      for (std::uint64_t y = 0; y < side_; ++y) {
        if (!(ys >> y & 1u)) continue;
        if (!first) first = &t_.at(x, y);
        else if (t_.at(x, y) != *first) return false;
      }
    }
    return true;
  }

  const FunctionTable& t_;
  std::size_t side_;
  std::vector<std::uint8_t> memo_;
};

}  // namespace

DccResult dcc_exact(const FunctionTable& t) {
  t.validate();
  if (t.n == 0 || t.n > kDccMaxN) throw UsageError("dcc needs 1 <= n <= " + std::to_string(kDccMaxN));
  Solver s(t);
  const std::uint32_t full = (std::uint32_t{1} << t.side()) - 1;
  std::size_t bits = s.depth(full, full);
  return {bits, Protocol(Dims::symmetric(t.n), s.tree(full, full))};
}

}  // namespace cclab
