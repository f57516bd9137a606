#pragma once

#include "cclab/protocol.hpp"

namespace cclab {

struct HelpSpec {
  std::size_t a = 0;  // Alice's help bits
  std::size_t b = 0;  // Bob's help bits

  bool none() const { return a == 0 && b == 0; }
  bool operator==(const HelpSpec&) const = default;
};

// Dims of a protocol that reads x·h_A and y·h_B.
inline Dims extended(const Dims& d, const HelpSpec& h) { return {d.alice_bits + h.a, d.bob_bits + h.b, d.out_bits}; }

// The same protocol on extended inputs, ignoring the help bits.
Protocol lift(const Protocol& p, const HelpSpec& h);

// Shortest conversation on (x·h_A, y·h_B) over all help strings after which
// Alice outputs f(x, y); infinity if none.
Cost cc_with_help(const Protocol& p, const FunctionSpec& f, const Bits& x, const Bits& y, const HelpSpec& h);
// cc_with_help is finite on every input pair.
bool computes_everywhere_with_help(const Protocol& p, const FunctionSpec& f, const HelpSpec& h);
// Help strings that realize cc_with_help (first in lexicographic order).
std::optional<std::pair<Bits, Bits>> best_help(const Protocol& p, const FunctionSpec& f, const Bits& x, const Bits& y,
                                               const HelpSpec& h);

enum class TotalizerMode { both, alice_only, bob_only };
TotalizerMode parse_totalizer_mode(const std::string& s);
HelpSpec totalizer_help(TotalizerMode m);

// Help bit 1 runs p, help bit 0 runs the literal-send default for f. In the
// single-sided modes the holder first sends the bit (one extra bit).
Protocol help_bit_totalizer(const Protocol& p, const FunctionSpec& f, TotalizerMode mode);

// One help bit for Alice holding f(x, y); she outputs it with no
// communication. f must be Boolean.
Protocol value_as_help_protocol(const FunctionSpec& f);

}  // namespace cclab
