#include "cclab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cclab/builders.hpp"
#include "cclab/errors.hpp"
#include "cclab/sdl.hpp"

namespace cclab {

namespace {

using Answer = std::function<Bits(std::uint64_t x, std::uint64_t y)>;
using Rows = std::function<bool(std::uint64_t x)>;

bool all_rows(std::uint64_t) { return true; }

// Bob sends y[pos..n) given the high bits already sent; Alice answers f on the
// rows `rows` (other rows never reach this subtree).
NodePtr bob_rest(const Dims& d, std::uint64_t y_hi, std::size_t pos, const Rows& rows, const Answer& f) {
  if (pos == d.bob_bits) {
    std::vector<std::optional<Bits>> wanted(std::size_t{1} << d.alice_bits);
    for (std::uint64_t x = 0; x < wanted.size(); ++x)
      if (rows(x)) wanted[x] = f(x, y_hi);
    return Node::leaf(OutputFunction::fit(d.alice_bits, d.out_bits, wanted));
  }
  return Node::speak(Party::bob, NodeFunction::bit(pos), bob_rest(d, y_hi << 1, pos + 1, rows, f),
                     bob_rest(d, (y_hi << 1) | 1, pos + 1, rows, f));
}

NodeFunction fit_predicate(std::size_t bits, const std::function<int(std::uint64_t)>& want) {
  std::vector<std::int8_t> w(std::size_t{1} << bits);
  for (std::uint64_t u = 0; u < w.size(); ++u) w[u] = static_cast<std::int8_t>(want(u));
  return NodeFunction::fit(bits, w);
}

void check_small(std::size_t n) {
  if (n == 0 || n > 10) throw UsageError("n must be in [1, 10]");
}

std::vector<Bits> blocks_of(const Bits& x, std::size_t count, std::size_t k) {
  std::vector<Bits> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(x.substr(i * k, k));
  return out;
}

// Greedy separating set; duplicates are skipped unless strict.
SeparatingIndexSet separate(const std::vector<Bits>& zs, bool strict) {
  SeparatingIndexSet s;
  std::vector<const Bits*> kept;
  for (const Bits& z : zs) {
    if (!kept.empty() && z.size() != kept.front()->size()) throw UsageError("strings must have equal length");
    Bits r = restrict_to(z, s);
    const Bits* clash = nullptr;
    for (const Bits* o : kept)
      if (restrict_to(*o, s) == r) clash = o;
    if (clash) {
      std::size_t i = 0;
      while (i < z.size() && z[i] == (*clash)[i]) ++i;
      if (i == z.size()) {
        if (strict) throw UsageError("strings must be pairwise distinct");
        continue;
      }
      s.indices.insert(std::upper_bound(s.indices.begin(), s.indices.end(), i), i);
    }
    kept.push_back(&z);
  }
  return s;
}

}  // namespace

Protocol prefix_protocol(const Bits& target, std::size_t alpha) {
  const std::size_t n = target.size();
  check_small(n);
  if (alpha > n) throw UsageError("alpha must be at most n");
  std::vector<std::optional<Bits>> messages(std::size_t{1} << n);
  for (std::uint64_t y = 0; y < messages.size(); ++y) {
    Bits yb = Bits::from_index(y, n);
    messages[y] = yb.starts_with(target.prefix(alpha)) ? Bits::from_string("0").concat(yb.substr(alpha, n - alpha))
                                                       : Bits::from_string("1").concat(yb);
  }
  Dims d = Dims::symmetric(n);
  return Protocol(d, build_one_way_trie(d, messages, [n](std::uint64_t y, std::uint64_t) -> std::optional<Bits> {
                    return Bits::from_index(y, n);
                  }));
}

Protocol shortest_description_protocol(std::size_t n, std::size_t budget) {
  check_small(n);
  std::vector<std::optional<Bits>> messages(std::size_t{1} << n);
  for (std::uint64_t y = 0; y < messages.size(); ++y) {
    Bits code = sdl_encode({y}, n);
    if (code.size() == budget) messages[y] = code;
  }
  Dims d = Dims::symmetric(n);
  return Protocol(d, build_one_way_trie(d, messages, [n](std::uint64_t y, std::uint64_t) -> std::optional<Bits> {
                    return Bits::from_index(y, n);
                  }));
}

Protocol equality_shortcut_protocol(std::size_t n) {
  check_small(n);
  Dims d = Dims::symmetric(n);
  Answer eq = [n](std::uint64_t x, std::uint64_t y) { return encode_boolean(x == y, n); };
  const std::uint64_t high = std::uint64_t{1} << (n - 1);
  NodePtr after_one = Node::speak(Party::alice, NodeFunction::bit(0), Node::leaf(OutputFunction::constant(encode_boolean(false, n))),
                                  bob_rest(d, 1, 1, [high](std::uint64_t x) { return (x & high) != 0; }, eq));
  return Protocol(d, Node::speak(Party::bob, NodeFunction::bit(0), bob_rest(d, 0, 1, all_rows, eq), after_one));
}

Protocol large_rectangle_shortcut(const FunctionTable& t, const std::vector<Rectangle>& rects) {
  t.validate();
  const std::size_t n = t.n;
  check_small(n);
  const FunctionSpec f = FunctionSpec::from_table(t);
  const std::uint64_t side = t.side();
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  std::vector<Bits> colors;
  for (const Rectangle& r : rects) {
    if (r.rows.empty() || r.cols.empty()) throw UsageError("rectangles must be nonempty");
    for (auto v : r.rows)
      if (v >= side) throw UsageError("rectangle row out of range");
    for (auto v : r.cols)
      if (v >= side) throw UsageError("rectangle column out of range");
    if (!is_monochromatic(r, f)) throw UsageError("rectangle is not monochromatic");
    for (auto x : r.rows)
      for (auto y : r.cols)
        if (!seen.insert({x, y}).second) throw UsageError("rectangles overlap");
    colors.push_back(f.at(r.rows.front(), r.cols.front()));
  }
  const unsigned w = ceil_log2(rects.size() + 1);
  auto index_of = [&](std::uint64_t y) -> std::uint64_t {
    for (std::size_t i = 0; i < rects.size(); ++i)
      if (std::binary_search(rects[i].cols.begin(), rects[i].cols.end(), y)) return i + 1;
    return 0;
  };
  Dims d = Dims::symmetric(n);
  Answer value = [&f](std::uint64_t x, std::uint64_t y) { return f.at(x, y); };
  std::function<NodePtr(unsigned, std::uint64_t)> build = [&](unsigned level, std::uint64_t prefix) -> NodePtr {
    if (level == w) {
      if (prefix == 0) return bob_rest(d, 0, 0, all_rows, value);
      if (prefix > rects.size()) return Node::stuck();
      const Rectangle& r = rects[prefix - 1];
      auto in_rows = [&r](std::uint64_t x) { return std::binary_search(r.rows.begin(), r.rows.end(), x); };
      NodeFunction ask = fit_predicate(n, [&](std::uint64_t x) { return in_rows(x) ? 1 : 0; });
      return Node::speak(Party::alice, ask, bob_rest(d, 0, 0, [&](std::uint64_t x) { return !in_rows(x); }, value),
                         Node::leaf(OutputFunction::constant(colors[prefix - 1])));
    }
    NodeFunction bit = fit_predicate(n, [&](std::uint64_t y) {
      std::uint64_t idx = index_of(y);
      if ((idx >> (w - level)) != prefix) return -1;
      return int(idx >> (w - 1 - level) & 1u);
    });
    return Node::speak(Party::bob, bit, build(level + 1, prefix << 1), build(level + 1, (prefix << 1) | 1));
  };
  return Protocol(d, build(0, 0));
}

Protocol ip_zero_shortcut(std::size_t n) {
  check_small(n);
  Dims d = Dims::symmetric(n);
  const FunctionSpec ip = FunctionSpec::inner_product(n);
  NodeFunction zero = fit_predicate(n, [](std::uint64_t y) { return y == 0 ? 1 : 0; });
  return Protocol(d, Node::speak(Party::bob, zero, bob_rest(d, 0, 0, all_rows, [&](auto x, auto y) { return ip.at(x, y); }),
                                 Node::leaf(OutputFunction::constant(encode_boolean(false, n)))));
}

Protocol ip_alice_first(std::size_t n) {
  check_small(n);
  Dims d = Dims::symmetric(n);
  const FunctionSpec ip = FunctionSpec::inner_product(n);
  NodePtr zero = Node::leaf(OutputFunction::constant(encode_boolean(false, n)));
  NodePtr one = Node::leaf(OutputFunction::constant(encode_boolean(true, n)));
  std::function<NodePtr(std::size_t, std::uint64_t)> build = [&](std::size_t pos, std::uint64_t x_hi) -> NodePtr {
    if (pos == n) {
      NodeFunction v = fit_predicate(n, [&](std::uint64_t y) { return int(ip.at(x_hi, y)[n - 1]); });
      return Node::speak(Party::bob, v, zero, one);
    }
    return Node::speak(Party::alice, NodeFunction::bit(pos), build(pos + 1, x_hi << 1), build(pos + 1, (x_hi << 1) | 1));
  };
  return Protocol(d, build(0, 0));
}

Bits restrict_to(const Bits& z, const SeparatingIndexSet& s) {
  Bits out(s.indices.size());
  for (std::size_t i = 0; i < s.indices.size(); ++i) out.set(i, z[s.indices[i]]);
  return out;
}

SeparatingIndexSet separating_index_set(const std::vector<Bits>& zs) { return separate(zs, true); }

SeparatingIndexSet th7_indices(const Bits& x, std::size_t s, std::size_t k) {
  return separate(blocks_of(x, (std::size_t{1} << s) + 1, k), false);
}

std::pair<Bits, Bits> th7_input(const std::vector<Bits>& zs, std::size_t j) {
  if (zs.empty() || j >= zs.size()) throw UsageError("block index out of range");
  Bits x;
  for (const Bits& z : zs) x.append(z);
  return {x, zs[j].concat(Bits((zs.size() - 1) * zs[j].size()))};
}

NodePtr th7_tree(std::size_t s, std::size_t k, std::size_t offset) {
  if (k == 0) throw UsageError("k must be positive");
  if (s > 6) throw UsageError("s must be at most 6");
  const std::size_t m = std::size_t{1} << s;
  const std::size_t n = (m + 1) * k;
  const unsigned w = ceil_log2(k);
  auto position = [=](const Bits& transcript, std::size_t t) {
    std::size_t p = 0;
    for (unsigned r = 0; r < w; ++r) p = (p << 1) | transcript[offset + t * w + r];
    return p;
  };
  NodePtr next = Node::leaf(OutputFunction::computed(
      [=](const Bits& x, const Bits& transcript) {
        for (const Bits& z : blocks_of(x, m + 1, k)) {
          bool match = true;
          for (std::size_t t = 0; t < m && match; ++t)
            match = z[position(transcript, t)] == transcript[offset + m * w + t];
          if (match) return z.concat(Bits(m * k));
        }
        return Bits(n);
      },
      "th7-output"));
  NodeFunction answer = NodeFunction::computed(
      [=](const Bits& y, const Bits& transcript) {
        std::size_t p = position(transcript, transcript.size() - offset - m * w);
        return p < k && y[p];
      },
      "th7-answer");
  for (std::size_t t = 0; t < m; ++t) next = Node::speak(Party::bob, answer, next, next);
  NodeFunction send = NodeFunction::computed(
      [=](const Bits& x, const Bits& transcript) {
        SeparatingIndexSet idx = th7_indices(x, s, k);
        std::size_t t = (transcript.size() - offset) / w, r = (transcript.size() - offset) % w;
        std::size_t p = t < idx.indices.size() ? idx.indices[t] : 0;
        return bool(p >> (w - 1 - r) & 1u);
      },
      "th7-index");
  for (std::size_t i = 0; i < m * w; ++i) next = Node::speak(Party::alice, send, next, next);
  return next;
}

Th7Protocol th7_protocol(std::size_t s, std::size_t k) {
  NodePtr root = th7_tree(s, k, 0);
  const std::size_t m = std::size_t{1} << s;
  Th7Cost cost;
  cost.blocks = m;
  cost.index_bits = ceil_log2(k);
  cost.measured = m * (cost.index_bits + 1);
  cost.ceil_bound = m * ceil_log2(2 * k);
  cost.log_bound = double(m) * std::log2(2.0 * double(k));
  return {Protocol(Dims::symmetric((m + 1) * k), root), cost};
}

Th7Protocol th7_protocol(const std::vector<Bits>& zs) {
  const std::size_t m = zs.empty() ? 0 : zs.size() - 1;
  if (m == 0 || (m & (m - 1)) != 0) throw UsageError("need 2^s + 1 blocks");
  separating_index_set(zs);
  std::size_t s = 0;
  while ((std::size_t{1} << s) < m) ++s;
  return th7_protocol(s, zs.front().size());
}

}  // namespace cclab
