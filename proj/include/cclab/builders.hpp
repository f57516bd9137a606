#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cclab/protocol.hpp"

namespace cclab {

// Alice's answer at the leaf reached by Bob's input y, for her input x;
// nullopt = don't care.
using LeafAnswer = std::function<std::optional<Bits>(std::uint64_t y, std::uint64_t x)>;

// Bob-only trie: Bob sends messages[y] bit by bit (messages must be
// prefix-free unless equal), then Alice answers. Inputs without a message are
// don't-cares in every node fit. Branches nobody uses end in stuck leaves.
// Needs alice_bits, bob_bits <= kMaxTableInputBits.
NodePtr build_one_way_trie(const Dims& d, const std::vector<std::optional<Bits>>& messages, const LeafAnswer& answer);

// Default protocol: Bob sends y literally, Alice answers f(x, y) from a table.
Protocol literal_send(const FunctionSpec& f);
NodePtr literal_send_tree(const Dims& d, const std::function<Bits(const Bits& x, const Bits& y)>& f);

// Literal send of Bob's first `len` bits as a shared chain; the leaf answers
// with `out` applied to Alice's input and the transcript.
NodePtr literal_chain(std::size_t len, OutputFunction out);

}  // namespace cclab
