#include "cclab/builders.hpp"

#include "cclab/errors.hpp"

namespace cclab {

namespace {

struct TrieBuilder {
  const Dims& d;
  const std::vector<std::optional<Bits>>& messages;
  const LeafAnswer& answer;

  NodePtr build(const Bits& prefix, const std::vector<std::uint64_t>& ys) const {
    if (ys.empty()) return Node::stuck();
    std::vector<std::uint64_t> ending, going;
    for (auto y : ys) (messages[y]->size() == prefix.size() ? ending : going).push_back(y);
    if (!ending.empty() && !going.empty())
      throw InternalError("trie messages are not prefix-free at '" + prefix.str() + "'");
    if (!ending.empty()) {
      std::vector<std::optional<Bits>> wanted(std::size_t{1} << d.alice_bits);
      for (std::uint64_t x = 0; x < wanted.size(); ++x)
        for (auto y : ending) {
          auto v = answer(y, x);
          if (!v) continue;
          if (wanted[x] && *wanted[x] != *v)
            throw InternalError("inputs sharing message '" + prefix.str() + "' need different answers");
          wanted[x] = v;
        }
      return Node::leaf(OutputFunction::fit(d.alice_bits, d.out_bits, wanted));
    }
    std::vector<std::int8_t> wanted(std::size_t{1} << d.bob_bits, -1);
    std::vector<std::uint64_t> next[2];
    for (auto y : going) {
      bool b = (*messages[y])[prefix.size()];
      wanted[y] = b;
      next[b].push_back(y);
    }
    NodeFunction fn = NodeFunction::fit(d.bob_bits, wanted);
    Bits p0 = prefix, p1 = prefix;
    p0.push_back(false);
    p1.push_back(true);
    return Node::speak(Party::bob, std::move(fn), build(p0, next[0]), build(p1, next[1]));
  }
};

}  // namespace

NodePtr build_one_way_trie(const Dims& d, const std::vector<std::optional<Bits>>& messages, const LeafAnswer& answer) {
  if (d.alice_bits > kMaxTableInputBits || d.bob_bits > kMaxTableInputBits)
    throw UsageError("trie builder needs inputs of at most 20 bits");
  if (messages.size() != (std::size_t{1} << d.bob_bits)) throw UsageError("need one message slot per Bob input");
  std::vector<std::uint64_t> ys;
  for (std::uint64_t y = 0; y < messages.size(); ++y)
    if (messages[y]) ys.push_back(y);
  return TrieBuilder{d, messages, answer}.build(Bits(), ys);
}

NodePtr literal_send_tree(const Dims& d, const std::function<Bits(const Bits& x, const Bits& y)>& f) {
  std::vector<std::optional<Bits>> messages(std::size_t{1} << d.bob_bits);
  for (std::uint64_t y = 0; y < messages.size(); ++y) messages[y] = Bits::from_index(y, d.bob_bits);
  return build_one_way_trie(d, messages, [&](std::uint64_t y, std::uint64_t x) -> std::optional<Bits> {
    return f(Bits::from_index(x, d.alice_bits), Bits::from_index(y, d.bob_bits));
  });
}

Protocol literal_send(const FunctionSpec& f) {
  Dims d = Dims::symmetric(f.n());
  return Protocol(d, literal_send_tree(d, [&](const Bits& x, const Bits& y) { return f(x, y); }));
}

NodePtr literal_chain(std::size_t len, OutputFunction out) {
  NodePtr node = Node::leaf(std::move(out));
  for (std::size_t i = len; i-- > 0;) node = Node::speak(Party::bob, NodeFunction::bit(i), node, node);
  return node;
}

}  // namespace cclab
