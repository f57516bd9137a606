#include "cclab/protocol.hpp"

#include <unordered_set>

#include "cclab/errors.hpp"

namespace cclab {

namespace {

bool bit_of_index(std::uint64_t u, std::size_t i, std::size_t width) { return (u >> (width - 1 - i)) & 1u; }

}  // namespace

// --- NodeFunction ---------------------------------------------------------

NodeFunction NodeFunction::constant(bool v) {
  NodeFunction f;
  f.kind_ = v ? Kind::const_one : Kind::const_zero;
  return f;
}

NodeFunction NodeFunction::bit(std::size_t index) {
  NodeFunction f;
  f.kind_ = Kind::input_bit;
  f.index_ = index;
  return f;
}

NodeFunction NodeFunction::negated_bit(std::size_t index) {
  NodeFunction f;
  f.kind_ = Kind::negated_input_bit;
  f.index_ = index;
  return f;
}

NodeFunction NodeFunction::table(Bits values) {
  NodeFunction f;
  f.kind_ = Kind::table;
  f.values_ = std::move(values);
  return f;
}

NodeFunction NodeFunction::computed(Computed fn, std::string label) {
  NodeFunction f;
  f.kind_ = Kind::computed;
  f.computed_ = std::move(fn);
  f.label_ = std::move(label);
  return f;
}

NodeFunction NodeFunction::fit(std::size_t input_bits, const std::vector<std::int8_t>& wanted) {
  if (input_bits > kMaxTableInputBits) throw UsageError("fit: input too wide for a table function");
  const std::size_t size = std::size_t{1} << input_bits;
  if (wanted.size() != size) throw UsageError("fit: wanted must have 2^input_bits entries");
  auto agrees = [&](auto value_of) {
    for (std::size_t u = 0; u < size; ++u)
      if (wanted[u] >= 0 && bool(wanted[u]) != value_of(u)) return false;
    return true;
  };
  if (agrees([](std::uint64_t) { return false; })) return constant(false);
  if (agrees([](std::uint64_t) { return true; })) return constant(true);
  for (std::size_t i = 0; i < input_bits; ++i)
    if (agrees([&](std::uint64_t u) { return bit_of_index(u, i, input_bits); })) return bit(i);
  for (std::size_t i = 0; i < input_bits; ++i)
    if (agrees([&](std::uint64_t u) { return !bit_of_index(u, i, input_bits); })) return negated_bit(i);
  Bits values(size);
  for (std::size_t u = 0; u < size; ++u) values.set(u, wanted[u] > 0);
  return table(std::move(values));
}

bool NodeFunction::eval(const Bits& input, const Bits& transcript) const {
  switch (kind_) {
    case Kind::const_zero: return false;
    case Kind::const_one: return true;
    case Kind::input_bit: return input[index_];
    case Kind::negated_input_bit: return !input[index_];
    case Kind::table: return values_[input.to_index()];
    case Kind::computed: return computed_(input, transcript);
  }
  throw InternalError("bad node function kind");
}

bool NodeFunction::eval_index(std::uint64_t u, std::size_t input_bits) const {
  switch (kind_) {
    case Kind::const_zero: return false;
    case Kind::const_one: return true;
    case Kind::input_bit: return bit_of_index(u, index_, input_bits);
    case Kind::negated_input_bit: return !bit_of_index(u, index_, input_bits);
    case Kind::table: return values_[u];
    case Kind::computed: return computed_(Bits::from_index(u, input_bits), Bits());
  }
  throw InternalError("bad node function kind");
}

void NodeFunction::check(std::size_t input_bits) const {
  if ((kind_ == Kind::input_bit || kind_ == Kind::negated_input_bit) && index_ >= input_bits)
    throw UsageError("input-bit index " + std::to_string(index_) + " out of range for " +
                     std::to_string(input_bits) + "-bit input");
  if (kind_ == Kind::table) {
    if (input_bits > kMaxTableInputBits) throw UsageError("table function over too wide an input");
    if (values_.size() != (std::size_t{1} << input_bits)) throw UsageError("table function must have 2^n entries");
  }
  if (kind_ == Kind::computed && !computed_) throw UsageError("computed function is empty");
}

// --- OutputFunction ---------------------------------------------------------

OutputFunction OutputFunction::constant(Bits s) {
  OutputFunction g;
  g.kind_ = Kind::const_string;
  g.value_ = std::move(s);
  return g;
}

OutputFunction OutputFunction::copy_x() { return OutputFunction(); }

OutputFunction OutputFunction::xor_mask(Bits mask) {
  OutputFunction g;
  g.kind_ = Kind::xor_mask;
  g.value_ = std::move(mask);
  return g;
}

OutputFunction OutputFunction::table(std::vector<Bits> rows) {
  OutputFunction g;
  g.kind_ = Kind::table;
  g.rows_ = std::move(rows);
  return g;
}

OutputFunction OutputFunction::computed(Computed fn, std::string label) {
  OutputFunction g;
  g.kind_ = Kind::computed;
  g.computed_ = std::move(fn);
  g.label_ = std::move(label);
  return g;
}

OutputFunction OutputFunction::fit(std::size_t alice_bits, std::size_t out_bits,
                                   const std::vector<std::optional<Bits>>& wanted) {
  if (alice_bits > kMaxTableInputBits) throw UsageError("fit: input too wide for a table output");
  const std::size_t size = std::size_t{1} << alice_bits;
  if (wanted.size() != size) throw UsageError("fit: wanted must have 2^alice_bits entries");
  auto x_of = [&](std::uint64_t u) { return Bits::from_index(u, alice_bits).prefix(out_bits); };

  if (out_bits > 0 && out_bits <= alice_bits) {
    bool ok = true;
    for (std::size_t u = 0; u < size && ok; ++u)
      if (wanted[u] && *wanted[u] != x_of(u)) ok = false;
    if (ok) return copy_x();
  }
  std::optional<Bits> common;
  bool constant_ok = true;
  for (std::size_t u = 0; u < size && constant_ok; ++u) {
    if (!wanted[u]) continue;
    if (!common) common = *wanted[u];
    else if (*common != *wanted[u]) constant_ok = false;
  }
  if (constant_ok) return constant(common ? *common : Bits(out_bits));
  if (out_bits <= alice_bits) {
    std::optional<Bits> mask;
    bool ok = true;
    for (std::size_t u = 0; u < size && ok; ++u) {
      if (!wanted[u]) continue;
      Bits m = x_of(u) ^ *wanted[u];
      if (!mask) mask = m;
      else if (*mask != m) ok = false;
    }
    if (ok) return xor_mask(*mask);
  }
  std::vector<Bits> rows(size, Bits(out_bits));
  for (std::size_t u = 0; u < size; ++u)
    if (wanted[u]) rows[u] = *wanted[u];
  return table(std::move(rows));
}

Bits OutputFunction::eval(const Bits& x, const Bits& transcript, std::size_t out_bits) const {
  switch (kind_) {
    case Kind::const_string: return value_;
    case Kind::copy_x: return x.prefix(out_bits);
    case Kind::xor_mask: return x.prefix(out_bits) ^ value_;
    case Kind::table: return rows_[x.to_index()];
    case Kind::computed: return computed_(x, transcript);
  }
  throw InternalError("bad output function kind");
}

void OutputFunction::check(std::size_t alice_bits, std::size_t out_bits) const {
  switch (kind_) {
    case Kind::const_string:
      if (value_.size() != out_bits) throw UsageError("constant output must have out_bits bits");
      break;
    case Kind::copy_x:
      if (out_bits > alice_bits) throw UsageError("copy-x needs out_bits <= alice_bits");
      break;
    case Kind::xor_mask:
      if (out_bits > alice_bits || value_.size() != out_bits) throw UsageError("xor mask has wrong width");
      break;
    case Kind::table:
      if (alice_bits > kMaxTableInputBits || rows_.size() != (std::size_t{1} << alice_bits))
        throw UsageError("output table must have 2^alice_bits rows");
      for (const auto& r : rows_)
        if (r.size() != out_bits) throw UsageError("output table row has wrong width");
      break;
    case Kind::computed:
      if (!computed_) throw UsageError("computed output is empty");
      break;
  }
}

// --- Node / Protocol --------------------------------------------------------

NodePtr Node::speak(Party owner, NodeFunction fn, NodePtr child0, NodePtr child1) {
  if (!child0 || !child1) throw UsageError("speak node needs two children");
  auto n = std::make_shared<Node>();
  n->kind = Kind::speak;
  n->owner = owner;
  n->fn = std::move(fn);
  n->child[0] = std::move(child0);
  n->child[1] = std::move(child1);
  return n;
}

NodePtr Node::leaf(OutputFunction out) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::output;
  n->out = std::move(out);
  return n;
}

NodePtr Node::stuck() {
  static const NodePtr shared = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::stuck;
    return NodePtr(n);
  }();
  return shared;
}

NodePtr Node::help_switch(std::size_t alice_pos, std::size_t bob_pos, NodePtr on0, NodePtr on1) {
  if (!on0 || !on1) throw UsageError("help switch needs two children");
  auto n = std::make_shared<Node>();
  n->kind = Kind::help_switch;
  n->alice_help_pos = alice_pos;
  n->bob_help_pos = bob_pos;
  n->child[0] = std::move(on0);
  n->child[1] = std::move(on1);
  return n;
}

Protocol::Protocol(Dims dims, NodePtr root, std::optional<std::size_t> depth_cap)
    : dims_(dims), root_(std::move(root)) {
  if (!root_) throw UsageError("protocol needs a root");
  if (dims_.out_bits > dims_.alice_bits) throw UsageError("out_bits may not exceed alice_bits");
  depth_cap_ = depth_cap ? *depth_cap : 4 * std::max(dims_.alice_bits, dims_.bob_bits);
  // Validate every node once.
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> stack{root_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    switch (n->kind) {
      case Node::Kind::speak:
        n->fn.check(n->owner == Party::alice ? dims_.alice_bits : dims_.bob_bits);
        stack.push_back(n->child[0].get());
        stack.push_back(n->child[1].get());
        break;
      case Node::Kind::output:
        n->out.check(dims_.alice_bits, dims_.out_bits);
        break;
      case Node::Kind::stuck:
        break;
      case Node::Kind::help_switch:
        if (n->alice_help_pos >= dims_.alice_bits || n->bob_help_pos >= dims_.bob_bits)
          throw UsageError("help switch position out of range");
        stack.push_back(n->child[0].get());
        stack.push_back(n->child[1].get());
        break;
    }
  }
}

RunOutcome run(const Protocol& p, const Bits& x, const Bits& y) {
  const Dims& d = p.dims();
  if (x.size() != d.alice_bits || y.size() != d.bob_bits)
    throw UsageError("input lengths (" + std::to_string(x.size()) + ", " + std::to_string(y.size()) +
                     ") do not match protocol (" + std::to_string(d.alice_bits) + ", " +
                     std::to_string(d.bob_bits) + ")");
  RunOutcome r;
  const Node* node = p.root().get();
  for (;;) {
    switch (node->kind) {
      case Node::Kind::speak: {
        if (r.transcript.size() >= p.depth_cap()) return r;
        bool b = node->fn.eval(node->owner == Party::alice ? x : y, r.transcript);
        r.transcript.push_back(b);
        node = node->child[b].get();
        break;
      }
      case Node::Kind::output:
        r.output = node->out.eval(x, r.transcript, d.out_bits);
        return r;
      case Node::Kind::stuck:
        return r;
      case Node::Kind::help_switch: {
        bool a = x[node->alice_help_pos];
        if (a != y[node->bob_help_pos]) return r;
        node = node->child[a].get();
        break;
      }
    }
  }
}

RunOutcome run_index(const Protocol& p, std::uint64_t x, std::uint64_t y) {
  return run(p, Bits::from_index(x, p.dims().alice_bits), Bits::from_index(y, p.dims().bob_bits));
}

Cost cc_on_input(const Protocol& p, const FunctionSpec& f, const Bits& x, const Bits& y) {
  RunOutcome r = run(p, x, y);
  if (r.stuck() || *r.output != f(x, y)) return Cost::inf();
  return Cost(static_cast<std::uint32_t>(r.transcript.size()));
}

void check_grid(const Dims& d, std::size_t max_log_cells) {
  if (d.alice_bits + d.bob_bits > max_log_cells)
    throw UsageError("input grid too large for an exhaustive check (2^" +
                     std::to_string(d.alice_bits + d.bob_bits) + " cells)");
}

namespace {

template <class Fn>
bool all_pairs(const Protocol& p, Fn&& fn) {
  check_grid(p.dims());
  const std::uint64_t na = std::uint64_t{1} << p.dims().alice_bits;
  const std::uint64_t nb = std::uint64_t{1} << p.dims().bob_bits;
  for (std::uint64_t x = 0; x < na; ++x) {
    Bits xb = Bits::from_index(x, p.dims().alice_bits);
    for (std::uint64_t y = 0; y < nb; ++y)
      if (!fn(xb, Bits::from_index(y, p.dims().bob_bits))) return false;
  }
  return true;
}

}  // namespace

bool is_total(const Protocol& p) {
  return all_pairs(p, [&](const Bits& x, const Bits& y) { return !run(p, x, y).stuck(); });
}

bool computes_everywhere(const Protocol& p, const FunctionSpec& f) {
  return all_pairs(p, [&](const Bits& x, const Bits& y) { return cc_on_input(p, f, x, y).finite(); });
}

bool computes_on(const Protocol& p, const FunctionSpec& f, const Bits& x, const Bits& y) {
  return cc_on_input(p, f, x, y).finite();
}

bool is_one_way(const Protocol& p) {
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> stack{p.root().get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->kind == Node::Kind::speak && n->owner == Party::alice) return false;
    if (n->kind == Node::Kind::speak || n->kind == Node::Kind::help_switch) {
      stack.push_back(n->child[0].get());
      stack.push_back(n->child[1].get());
    }
  }
  return true;
}

bool same_behavior(const Protocol& a, const Protocol& b) {
  if (!(a.dims() == b.dims())) return false;
  return all_pairs(a, [&](const Bits& x, const Bits& y) { return run(a, x, y) == run(b, x, y); });
}

std::optional<Bits> alice_replay(const Protocol& p, const Bits& x, const Bits& transcript) {
  const Node* node = p.root().get();
  Bits so_far;
  for (;;) {
    if (node->kind == Node::Kind::output) {
      if (so_far.size() != transcript.size()) return std::nullopt;
      return node->out.eval(x, so_far, p.dims().out_bits);
    }
    if (node->kind != Node::Kind::speak) return std::nullopt;
    if (so_far.size() >= transcript.size() || so_far.size() >= p.depth_cap()) return std::nullopt;
    bool b = transcript[so_far.size()];
    if (node->owner == Party::alice && node->fn.eval(x, so_far) != b) return std::nullopt;
    so_far.push_back(b);
    node = node->child[b].get();
  }
}

}  // namespace cclab
