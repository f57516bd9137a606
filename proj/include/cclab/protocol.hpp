#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cclab/bits.hpp"
#include "cclab/cost.hpp"
#include "cclab/function_spec.hpp"

namespace cclab {

enum class Party : std::uint8_t { alice, bob };

// Largest input width for which full-table functions are materialized.
inline constexpr std::size_t kMaxTableInputBits = 20;

// Next-bit map of a speaking party. Kinds other than `computed` have a PDL code;
// `computed` exists for constructions whose inputs are too long for tables and
// may look at the transcript so far (equivalent to a distinct function at every
// position of the expanded tree).
class NodeFunction {
 public:
  enum class Kind : std::uint8_t { const_zero, const_one, input_bit, negated_input_bit, table, computed };
  using Computed = std::function<bool(const Bits& input, const Bits& transcript)>;

  NodeFunction() = default;

  static NodeFunction constant(bool v);
  static NodeFunction bit(std::size_t index);
  static NodeFunction negated_bit(std::size_t index);
  static NodeFunction table(Bits values);
  static NodeFunction computed(Computed fn, std::string label);

  // Function with the shortest code that agrees with `wanted` on every input
  // whose entry is 0 or 1 (-1 = don't care). Ties go to the lexicographically
  // smallest code; free table entries are 0.
  static NodeFunction fit(std::size_t input_bits, const std::vector<std::int8_t>& wanted);

  Kind kind() const { return kind_; }
  std::size_t index() const { return index_; }
  const Bits& values() const { return values_; }
  const std::string& label() const { return label_; }
  bool encodable() const { return kind_ != Kind::computed; }

  bool eval(const Bits& input, const Bits& transcript) const;
  // Value on the input with MSB-first index `u` (not for computed functions).
  bool eval_index(std::uint64_t u, std::size_t input_bits) const;
  void check(std::size_t input_bits) const;

 private:
  Kind kind_ = Kind::const_zero;
  std::size_t index_ = 0;
  Bits values_;
  Computed computed_;
  std::string label_;
};

// Alice's answer at a leaf, a function of her input (and, for `computed`, of
// the transcript, i.e. the leaf position). Width is the protocol's out_bits;
// copy-x and xor-mask act on the first out_bits bits of x.
class OutputFunction {
 public:
  enum class Kind : std::uint8_t { const_string, copy_x, xor_mask, table, computed };
  using Computed = std::function<Bits(const Bits& x, const Bits& transcript)>;

  OutputFunction() : kind_(Kind::copy_x) {}

  static OutputFunction constant(Bits s);
  static OutputFunction copy_x();
  static OutputFunction xor_mask(Bits mask);
  static OutputFunction table(std::vector<Bits> rows);
  static OutputFunction computed(Computed fn, std::string label);

  // Shortest-code output function matching `wanted[x]` wherever it is set.
  static OutputFunction fit(std::size_t alice_bits, std::size_t out_bits,
                            const std::vector<std::optional<Bits>>& wanted);

  Kind kind() const { return kind_; }
  const Bits& value() const { return value_; }
  const std::vector<Bits>& rows() const { return rows_; }
  const std::string& label() const { return label_; }
  bool encodable() const { return kind_ != Kind::computed; }

  Bits eval(const Bits& x, const Bits& transcript, std::size_t out_bits) const;
  void check(std::size_t alice_bits, std::size_t out_bits) const;

 private:
  Kind kind_;
  Bits value_;
  std::vector<Bits> rows_;
  Computed computed_;
  std::string label_;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Protocol tree node. Children may be shared (the tree is then stored as a
// DAG; its semantics are those of the expanded tree).
struct Node {
  enum class Kind : std::uint8_t { speak, output, stuck, help_switch };

  Kind kind = Kind::stuck;
  Party owner = Party::bob;
  NodeFunction fn;
  OutputFunction out;
  NodePtr child[2];
  // help_switch: positions of the help bit in Alice's and Bob's inputs.
  std::size_t alice_help_pos = 0;
  std::size_t bob_help_pos = 0;

  static NodePtr speak(Party owner, NodeFunction fn, NodePtr child0, NodePtr child1);
  static NodePtr leaf(OutputFunction out);
  static NodePtr stuck();
  // Zero-communication branch on a help bit both parties hold: equal bits
  // select the child, unequal bits get stuck.
  static NodePtr help_switch(std::size_t alice_pos, std::size_t bob_pos, NodePtr on0, NodePtr on1);
};

struct Dims {
  std::size_t alice_bits = 0;
  std::size_t bob_bits = 0;
  std::size_t out_bits = 0;

  static Dims symmetric(std::size_t n) { return {n, n, n}; }
  bool operator==(const Dims&) const = default;
};

class Protocol {
 public:
  // depth_cap defaults to 4 * max(alice_bits, bob_bits).
  Protocol(Dims dims, NodePtr root, std::optional<std::size_t> depth_cap = std::nullopt);

  const Dims& dims() const { return dims_; }
  const NodePtr& root() const { return root_; }
  std::size_t depth_cap() const { return depth_cap_; }

 private:
  Dims dims_;
  NodePtr root_;
  std::size_t depth_cap_;
};

struct RunOutcome {
  Bits transcript;
  std::optional<Bits> output;  // nullopt = stuck

  bool stuck() const { return !output.has_value(); }
  bool operator==(const RunOutcome&) const = default;
};

RunOutcome run(const Protocol& p, const Bits& x, const Bits& y);
RunOutcome run_index(const Protocol& p, std::uint64_t x, std::uint64_t y);

// |transcript| when Alice outputs f(x, y); infinity when stuck or wrong.
Cost cc_on_input(const Protocol& p, const FunctionSpec& f, const Bits& x, const Bits& y);

// Exhaustive predicates; the input grid must have at most 2^20 cells.
bool is_total(const Protocol& p);
bool computes_everywhere(const Protocol& p, const FunctionSpec& f);
bool computes_on(const Protocol& p, const FunctionSpec& f, const Bits& x, const Bits& y);
// Every speak node reachable in the stored structure is Bob's.
bool is_one_way(const Protocol& p);
// Same RunOutcome on every input pair.
bool same_behavior(const Protocol& a, const Protocol& b);

// Alice's side of a run: follow `transcript`, checking her own bits against x,
// and report her output if the transcript ends at an output leaf.
std::optional<Bits> alice_replay(const Protocol& p, const Bits& x, const Bits& transcript);

void check_grid(const Dims& d, std::size_t max_log_cells = 20);

}  // namespace cclab
