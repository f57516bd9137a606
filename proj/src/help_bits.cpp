#include "cclab/help_bits.hpp"

#include <unordered_map>

#include "cclab/builders.hpp"
#include "cclab/errors.hpp"

namespace cclab {

namespace {

Bits widen_table(const Bits& t, std::size_t extra) {
  Bits out(t.size() << extra);
  for (std::size_t j = 0; j < out.size(); ++j) out.set(j, t[j >> extra]);
  return out;
}

NodeFunction lift_function(const NodeFunction& fn, std::size_t base_bits, std::size_t extra) {
  if (extra == 0) return fn;
  switch (fn.kind()) {
    case NodeFunction::Kind::table: return NodeFunction::table(widen_table(fn.values(), extra));
    case NodeFunction::Kind::computed:
      return NodeFunction::computed(
          [fn, base_bits](const Bits& in, const Bits& t) { return fn.eval(in.prefix(base_bits), t); }, fn.label());
    default: return fn;
  }
}

OutputFunction lift_output(const OutputFunction& g, std::size_t base_bits, std::size_t extra, std::size_t out_bits) {
  if (extra == 0) return g;
  switch (g.kind()) {
    case OutputFunction::Kind::table: {
      std::vector<Bits> rows(g.rows().size() << extra);
      for (std::size_t j = 0; j < rows.size(); ++j) rows[j] = g.rows()[j >> extra];
      return OutputFunction::table(std::move(rows));
    }
    case OutputFunction::Kind::computed:
      return OutputFunction::computed(
          [g, base_bits, out_bits](const Bits& x, const Bits& t) { return g.eval(x.prefix(base_bits), t, out_bits); },
          g.label());
    default: return g;
  }
}

struct Lifter {
  const Dims& d;
  const HelpSpec& h;
  std::unordered_map<const Node*, NodePtr> done;

  NodePtr operator()(const NodePtr& n) {
    auto it = done.find(n.get());
    if (it != done.end()) return it->second;
    NodePtr r;
    switch (n->kind) {
      case Node::Kind::speak: {
        bool alice = n->owner == Party::alice;
        r = Node::speak(n->owner,
                        lift_function(n->fn, alice ? d.alice_bits : d.bob_bits, alice ? h.a : h.b),
                        (*this)(n->child[0]), (*this)(n->child[1]));
        break;
      }
      case Node::Kind::output: r = Node::leaf(lift_output(n->out, d.alice_bits, h.a, d.out_bits)); break;
      case Node::Kind::stuck: r = n; break;
      case Node::Kind::help_switch:
        r = Node::help_switch(n->alice_help_pos, n->bob_help_pos, (*this)(n->child[0]), (*this)(n->child[1]));
        break;
    }
    done.emplace(n.get(), r);
    return r;
  }
};

}  // namespace

Protocol lift(const Protocol& p, const HelpSpec& h) {
  if (h.none()) return p;
  Lifter l{p.dims(), h, {}};
  return Protocol(extended(p.dims(), h), l(p.root()), p.depth_cap());
}

std::optional<std::pair<Bits, Bits>> best_help(const Protocol& p, const FunctionSpec& f, const Bits& x, const Bits& y,
                                               const HelpSpec& h) {
  if (p.dims().alice_bits != x.size() + h.a || p.dims().bob_bits != y.size() + h.b)
    throw UsageError("protocol dims do not match input lengths plus help bits");
  if (h.a > 20 || h.b > 20) throw UsageError("too many help bits to enumerate");
  const Bits want = f(x, y);
  std::optional<std::pair<Bits, Bits>> best;
  std::size_t best_len = 0;
  for (std::uint64_t ha = 0; ha < (std::uint64_t{1} << h.a); ++ha) {
    Bits hab = Bits::from_index(ha, h.a);
    Bits xa = x.concat(hab);
    for (std::uint64_t hb = 0; hb < (std::uint64_t{1} << h.b); ++hb) {
      Bits hbb = Bits::from_index(hb, h.b);
      RunOutcome r = run(p, xa, y.concat(hbb));
      if (r.stuck() || *r.output != want) continue;
      if (!best || r.transcript.size() < best_len) {
        best = std::make_pair(hab, hbb);
        best_len = r.transcript.size();
      }
    }
  }
  return best;
}

Cost cc_with_help(const Protocol& p, const FunctionSpec& f, const Bits& x, const Bits& y, const HelpSpec& h) {
  auto hb = best_help(p, f, x, y, h);
  if (!hb) return Cost::inf();
  return Cost(static_cast<std::uint32_t>(run(p, x.concat(hb->first), y.concat(hb->second)).transcript.size()));
}

bool computes_everywhere_with_help(const Protocol& p, const FunctionSpec& f, const HelpSpec& h) {
  const std::size_t n = f.n();
  check_grid({n, n, n});
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y)
      if (!cc_with_help(p, f, Bits::from_index(x, n), Bits::from_index(y, n), h).finite()) return false;
  return true;
}

TotalizerMode parse_totalizer_mode(const std::string& s) {
  if (s == "both") return TotalizerMode::both;
  if (s == "alice-only") return TotalizerMode::alice_only;
  if (s == "bob-only") return TotalizerMode::bob_only;
  throw UsageError("unknown totalizer mode '" + s + "' (expected both | alice-only | bob-only)");
}

HelpSpec totalizer_help(TotalizerMode m) {
  switch (m) {
    case TotalizerMode::both: return {1, 1};
    case TotalizerMode::alice_only: return {1, 0};
    case TotalizerMode::bob_only: return {0, 1};
  }
  return {};
}

Protocol help_bit_totalizer(const Protocol& p, const FunctionSpec& f, TotalizerMode mode) {
  const Dims& d = p.dims();
  if (!(d == Dims::symmetric(f.n()))) throw UsageError("totalizer needs a protocol over f's input length");
  HelpSpec h = totalizer_help(mode);
  Dims ext = extended(d, h);
  Protocol inner = lift(p, h);
  const std::size_t n = f.n();
  // Default: Bob sends the first n bits of his input, not his help bit.
  std::vector<std::optional<Bits>> messages(std::size_t{1} << ext.bob_bits);
  for (std::uint64_t y = 0; y < messages.size(); ++y) messages[y] = Bits::from_index(y >> h.b, n);
  NodePtr fallback = build_one_way_trie(ext, messages, [&](std::uint64_t y, std::uint64_t x) -> std::optional<Bits> {
    return f.at(x >> h.a, y >> h.b);
  });
  NodePtr root;
  switch (mode) {
    case TotalizerMode::both: root = Node::help_switch(n, n, fallback, inner.root()); break;
    case TotalizerMode::alice_only:
      root = Node::speak(Party::alice, NodeFunction::bit(n), fallback, inner.root());
      break;
    case TotalizerMode::bob_only:
      root = Node::speak(Party::bob, NodeFunction::bit(n), fallback, inner.root());
      break;
  }
  std::size_t cap = std::max(p.depth_cap(), ext.bob_bits) + 1;
  return Protocol(ext, root, cap);
}

Protocol value_as_help_protocol(const FunctionSpec& f) {
  if (!f.boolean()) throw UsageError("value-as-help needs a Boolean function");
  const std::size_t n = f.n();
  Dims d{n + 1, n, n};
  std::vector<Bits> rows(std::size_t{1} << (n + 1));
  for (std::size_t u = 0; u < rows.size(); ++u) rows[u] = encode_boolean(u & 1u, n);
  return Protocol(d, Node::leaf(OutputFunction::table(std::move(rows))));
}

}  // namespace cclab
