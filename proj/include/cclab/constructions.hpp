#pragma once

#include <vector>

#include "cclab/function_spec.hpp"
#include "cclab/protocol.hpp"
#include "cclab/rectangle.hpp"

namespace cclab {

// Bob sends 0 and the last n - alpha bits of y when y starts with the first
// alpha bits of target, else 1 and all of y. Alice outputs y.
Protocol prefix_protocol(const Bits& target, std::size_t alpha);

// Bob sends the canonical SDL code of {y} when it has exactly `budget` bits,
// otherwise the protocol is stuck on y. Alice outputs the decoded y.
Protocol shortest_description_protocol(std::size_t n, std::size_t budget);

// Equality: Bob sends y[0]. On 0 he sends the rest of y. On 1 Alice sends
// x[0]; if it is 0 she outputs 0, else Bob sends the rest of y.
Protocol equality_shortcut_protocol(std::size_t n);

// Bob sends the 1-based index (0 = none) of the first rectangle whose columns
// hold y, in ceil(log2(|rects| + 1)) bits. After a nonzero index Alice sends
// whether x is in its rows; if so she outputs its color. Otherwise Bob sends y.
Protocol large_rectangle_shortcut(const FunctionTable& t, const std::vector<Rectangle>& rects);

// Inner product: Bob sends whether y = 0 (then Alice outputs 0), else y.
Protocol ip_zero_shortcut(std::size_t n);
// Inner product: Alice sends x, Bob answers with the value.
Protocol ip_alice_first(std::size_t n);

struct SeparatingIndexSet {
  std::vector<std::size_t> indices;  // ascending
  bool operator==(const SeparatingIndexSet&) const = default;
};

// Strings are inserted in order; on a collision under the current
// restriction the first position where the two strings differ is added.
SeparatingIndexSet separating_index_set(const std::vector<Bits>& zs);
Bits restrict_to(const Bits& z, const SeparatingIndexSet& s);

struct Th7Cost {
  std::size_t blocks = 0;       // 2^s
  std::size_t index_bits = 0;   // ceil(log2 k)
  std::size_t measured = 0;     // 2^s (index_bits + 1)
  std::size_t ceil_bound = 0;   // 2^s ceil(log2 2k)
  double log_bound = 0;         // 2^s log2(2k)
};

struct Th7Protocol {
  Protocol protocol;
  Th7Cost cost;
};

// Inputs: x = z_0 ... z_{2^s} (each k bits), y = z_j 0^{2^s k}. Alice sends
// 2^s positions (the separating set of x's blocks, padded with position 0),
// Bob answers with y's bits there and Alice outputs the block they pick out.
Th7Protocol th7_protocol(std::size_t s, std::size_t k);
// Same, with s and k read off 2^s + 1 distinct blocks of equal length.
Th7Protocol th7_protocol(const std::vector<Bits>& zs);
// The tree of th7_protocol for transcripts whose first `offset` bits precede it.
NodePtr th7_tree(std::size_t s, std::size_t k, std::size_t offset);
// x and y_j for the given blocks.
std::pair<Bits, Bits> th7_input(const std::vector<Bits>& zs, std::size_t j);
// The separating set Alice computes from x.
SeparatingIndexSet th7_indices(const Bits& x, std::size_t s, std::size_t k);

}  // namespace cclab
