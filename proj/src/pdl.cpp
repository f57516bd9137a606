#include "cclab/pdl.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>

#include "cclab/errors.hpp"

namespace cclab {

namespace {

void put(Bits& out, std::uint64_t v, std::size_t width) { out.append(Bits::from_index(v, width)); }

void encode_function(Bits& out, const NodeFunction& fn, std::size_t m) {
  if (!fn.encodable()) throw UsageError("protocol uses a computed function '" + fn.label() + "' with no PDL code");
  NodeFunction c = fn;
  if (fn.kind() == NodeFunction::Kind::table) {
    std::vector<std::int8_t> wanted(fn.values().size());
    for (std::size_t u = 0; u < wanted.size(); ++u) wanted[u] = fn.values()[u];
    c = NodeFunction::fit(m, wanted);
  }
  const unsigned w = index_width(m);
  switch (c.kind()) {
    case NodeFunction::Kind::const_zero: put(out, 0b000, 3); break;
    case NodeFunction::Kind::const_one: put(out, 0b001, 3); break;
    case NodeFunction::Kind::input_bit: put(out, 0b010, 3); put(out, c.index(), w); break;
    case NodeFunction::Kind::negated_input_bit: put(out, 0b011, 3); put(out, c.index(), w); break;
    case NodeFunction::Kind::table: put(out, 0b100, 3); out.append(c.values()); break;
    case NodeFunction::Kind::computed: break;
  }
}

void encode_output(Bits& out, const OutputFunction& g, const Dims& d) {
  if (!g.encodable()) throw UsageError("protocol uses a computed output '" + g.label() + "' with no PDL code");
  OutputFunction c = g;
  if (d.alice_bits <= kMaxTableInputBits) {
    std::vector<std::optional<Bits>> wanted(std::size_t{1} << d.alice_bits);
    for (std::size_t u = 0; u < wanted.size(); ++u)
      wanted[u] = g.eval(Bits::from_index(u, d.alice_bits), Bits(), d.out_bits);
    c = OutputFunction::fit(d.alice_bits, d.out_bits, wanted);
  }
  switch (c.kind()) {
    case OutputFunction::Kind::const_string: put(out, 0b00, 2); out.append(c.value()); break;
    case OutputFunction::Kind::copy_x: put(out, 0b01, 2); break;
    case OutputFunction::Kind::xor_mask: put(out, 0b10, 2); out.append(c.value()); break;
    case OutputFunction::Kind::table:
      put(out, 0b11, 2);
      for (const auto& r : c.rows()) out.append(r);
      break;
    case OutputFunction::Kind::computed: break;
  }
}

void encode_node(Bits& out, const Node& n, const Dims& d) {
  switch (n.kind) {
    case Node::Kind::speak:
      put(out, n.owner == Party::alice ? 0b00 : 0b01, 2);
      encode_function(out, n.fn, n.owner == Party::alice ? d.alice_bits : d.bob_bits);
      encode_node(out, *n.child[0], d);
      encode_node(out, *n.child[1], d);
      break;
    case Node::Kind::output:
      put(out, 0b10, 2);
      encode_output(out, n.out, d);
      break;
    case Node::Kind::stuck: put(out, 0b11, 2); break;
    case Node::Kind::help_switch: throw UsageError("help switches have no PDL code");
  }
}

struct Decoder {
  const Bits& code;
  const Dims& d;
  std::size_t pos = 0;

  Bits take(std::size_t len) {
    if (pos + len > code.size()) throw DecodeError("code truncated at bit " + std::to_string(code.size()));
    Bits b = code.substr(pos, len);
    pos += len;
    return b;
  }
  std::uint64_t take_int(std::size_t len) { return take(len).to_index(); }

  NodeFunction function(std::size_t m) {
    const std::size_t at = pos;
    std::uint64_t sel = take_int(3);
    const unsigned w = index_width(m);
    switch (sel) {
      case 0b000: return NodeFunction::constant(false);
      case 0b001: return NodeFunction::constant(true);
      case 0b010:
      case 0b011: {
        if (m == 0) throw DecodeError("input-bit selector on an empty input at bit " + std::to_string(at));
        std::uint64_t i = take_int(w);
        if (i >= m) throw DecodeError("input index " + std::to_string(i) + " out of range at bit " + std::to_string(at));
        return sel == 0b010 ? NodeFunction::bit(i) : NodeFunction::negated_bit(i);
      }
      case 0b100:
        if (m > kMaxTableInputBits) throw DecodeError("table function over too wide an input");
        return NodeFunction::table(take(std::size_t{1} << m));
      default: throw DecodeError("invalid function selector at bit " + std::to_string(at));
    }
  }

  OutputFunction output() {
    switch (take_int(2)) {
      case 0b00: return OutputFunction::constant(take(d.out_bits));
      case 0b01: return OutputFunction::copy_x();
      case 0b10: return OutputFunction::xor_mask(take(d.out_bits));
      default: {
        if (d.alice_bits > kMaxTableInputBits) throw DecodeError("output table over too wide an input");
        std::vector<Bits> rows(std::size_t{1} << d.alice_bits);
        for (auto& r : rows) r = take(d.out_bits);
        return OutputFunction::table(std::move(rows));
      }
    }
  }

  NodePtr node() {
    switch (take_int(2)) {
      case 0b00:
      case 0b01: {
        Party owner = code[pos - 1] ? Party::bob : Party::alice;
        NodeFunction fn = function(owner == Party::alice ? d.alice_bits : d.bob_bits);
        NodePtr c0 = node();
        NodePtr c1 = node();
        return Node::speak(owner, std::move(fn), std::move(c0), std::move(c1));
      }
      case 0b10: return Node::leaf(output());
      default: return Node::stuck();
    }
  }
};

// All subtree codes by exact length, each bucket in lexicographic order.
class CodeTable {
 public:
  CodeTable(const Dims& d, std::size_t max_len, bool bob_only) : d_(d), max_(max_len), bob_only_(bob_only) {
    heads_.resize(max_ + 1);
    add_headers();
    by_len_.resize(max_ + 1);
    for (std::size_t len = 0; len <= max_; ++len) {
      auto& out = by_len_[len];
      for (const auto& h : heads_[len])
        if (!h.speak) out.push_back(h.code);
      for (std::size_t hl = 0; hl <= len; ++hl)
        for (const auto& h : heads_[hl]) {
          if (!h.speak) continue;
          std::size_t rest = len - hl;
          for (std::size_t l0 = 0; l0 <= rest; ++l0)
            for (const auto& c0 : by_len_[l0])
              for (const auto& c1 : by_len_[rest - l0]) out.push_back(h.code.concat(c0).concat(c1));
        }
      std::sort(out.begin(), out.end());
    }
  }

  const std::vector<Bits>& exact(std::size_t len) const { return by_len_[len]; }

 private:
  struct Head {
    Bits code;
    bool speak;
  };

  void add(Bits code, bool speak) {
    if (code.size() <= max_ && !(speak && code.size() == 0)) heads_[code.size()].push_back({std::move(code), speak});
  }

  void add_payloads(const Bits& prefix, std::size_t width, bool speak) {
    if (prefix.size() + width > max_) return;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << width); ++v) add(prefix.concat(Bits::from_index(v, width)), speak);
  }

  void add_headers() {
    for (Party owner : {Party::alice, Party::bob}) {
      if (owner == Party::alice && bob_only_) continue;
      std::size_t m = owner == Party::alice ? d_.alice_bits : d_.bob_bits;
      Bits tag = Bits::from_string(owner == Party::alice ? "00" : "01");
      add(tag.concat(Bits::from_string("000")), true);
      add(tag.concat(Bits::from_string("001")), true);
      if (m > 0) {
        unsigned w = index_width(m);
        for (const char* sel : {"010", "011"})
          for (std::size_t i = 0; i < m && tag.size() + 3 + w <= max_; ++i)
            add(tag.concat(Bits::from_string(sel)).concat(Bits::from_index(i, w)), true);
      }
      if (m < 63 && 5 + (std::size_t{1} << m) <= max_)
        add_payloads(tag.concat(Bits::from_string("100")), std::size_t{1} << m, true);
    }
    add_payloads(Bits::from_string("1000"), d_.out_bits, false);
    add(Bits::from_string("1001"), false);
    add_payloads(Bits::from_string("1010"), d_.out_bits, false);
    if (d_.alice_bits < 63 && d_.out_bits > 0 && 4 + (d_.out_bits << d_.alice_bits) <= max_)
      add_payloads(Bits::from_string("1011"), d_.out_bits << d_.alice_bits, false);
    else if (d_.out_bits == 0)
      add(Bits::from_string("1011"), false);
    add(Bits::from_string("11"), false);
  }

  Dims d_;
  std::size_t max_;
  bool bob_only_;
  std::vector<std::vector<Head>> heads_;
  std::vector<std::vector<Bits>> by_len_;
};

}  // namespace

Bits pdl_encode(const Protocol& p) {
  Bits out;
  encode_node(out, *p.root(), p.dims());
  return out;
}

Protocol pdl_decode(const Bits& code, const Dims& d, std::optional<std::size_t> depth_cap) {
  Decoder dec{code, d};
  NodePtr root = dec.node();
  if (dec.pos != code.size())
    throw DecodeError("trailing bits after a complete protocol (" + std::to_string(code.size() - dec.pos) + " bits)");
  return Protocol(d, root, depth_cap);
}

Protocol pdl_decode(const Bits& code, std::size_t n) { return pdl_decode(code, Dims::symmetric(n)); }

std::size_t pdl_complexity(const Protocol& p) { return pdl_encode(p).size(); }

std::size_t budget_cap() {
  static std::once_flag once;
  static std::size_t cap = kDefaultBudgetCap;
  std::call_once(once, [] {
    const char* env = std::getenv("CCLAB_BUDGET_CAP");
    if (!env || !*env) return;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0 || v > 40) {
      std::cerr << "warning: ignoring CCLAB_BUDGET_CAP='" << env << "' (expected an integer in [1, 40])\n";
      return;
    }
    cap = v;
    std::cerr << "warning: enumeration budget cap overridden to " << cap << " bits by CCLAB_BUDGET_CAP\n";
  });
  return cap;
}

std::vector<Bits> enumerate_codes(const Dims& d, std::size_t alpha, bool bob_only) {
  if (alpha > budget_cap())
    throw UsageError("budget " + std::to_string(alpha) + " exceeds the enumeration cap of " +
                     std::to_string(budget_cap()) + " bits (set CCLAB_BUDGET_CAP to raise it)");
  CodeTable table(d, alpha, bob_only);
  std::vector<Bits> all;
  for (std::size_t len = 0; len <= alpha; ++len)
    all.insert(all.end(), table.exact(len).begin(), table.exact(len).end());
  return all;
}

EnumerationCursor::EnumerationCursor(const Dims& d, std::size_t alpha, EnumerationFilter filter)
    : dims_(d), alpha_(alpha), filter_(filter), codes_(enumerate_codes(d, alpha, filter.require_one_way)) {}

std::optional<Enumerated> EnumerationCursor::next() {
  while (pos_ < codes_.size()) {
    const Bits& c = codes_[pos_++];
    Protocol p = pdl_decode(c, dims_);
    if (filter_.require_one_way && !is_one_way(p)) continue;
    if (filter_.require_total && !is_total(p)) continue;
    return Enumerated{c, std::move(p)};
  }
  return std::nullopt;
}

std::vector<Enumerated> enumerate_protocols(const Dims& d, std::size_t alpha, EnumerationFilter filter) {
  EnumerationCursor cur(d, alpha, filter);
  std::vector<Enumerated> out;
  while (auto e = cur.next()) out.push_back(std::move(*e));
  return out;
}

void write_pdl_file(const std::string& path, const Dims& d, const Bits& code) {
  if (d.alice_bits > 255 || d.bob_bits > 255 || d.out_bits > 255) throw UsageError("dims too large for a .pdl header");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  std::uint32_t len = static_cast<std::uint32_t>(code.size());
  unsigned char header[8] = {kPdlVersion,
                             static_cast<unsigned char>(d.alice_bits),
                             static_cast<unsigned char>(d.bob_bits),
                             static_cast<unsigned char>(d.out_bits),
                             static_cast<unsigned char>(len & 0xff),
                             static_cast<unsigned char>((len >> 8) & 0xff),
                             static_cast<unsigned char>((len >> 16) & 0xff),
                             static_cast<unsigned char>((len >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(header), 8);
  for (std::size_t i = 0; i < code.size(); i += 8) {
    unsigned char byte = 0;
    for (std::size_t k = 0; k < 8; ++k)
      if (i + k < code.size() && code[i + k]) byte |= 0x80u >> k;
    out.put(static_cast<char>(byte));
  }
}

std::pair<Dims, Bits> read_pdl_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() < 8) throw DecodeError("'" + path + "' is too short for a .pdl header");
  if (bytes[0] != kPdlVersion)
    throw DecodeError("'" + path + "' has grammar version " + std::to_string(bytes[0]) + ", expected " +
                      std::to_string(kPdlVersion));
  Dims d{bytes[1], bytes[2], bytes[3]};
  std::uint32_t len = bytes[4] | (bytes[5] << 8) | (bytes[6] << 16) | (std::uint32_t(bytes[7]) << 24);
  if (bytes.size() != 8 + (len + 7) / 8) throw DecodeError("'" + path + "' body does not match its bit length");
  Bits code(len);
  for (std::size_t i = 0; i < len; ++i) code.set(i, (bytes[8 + i / 8] >> (7 - i % 8)) & 1u);
  return {d, code};
}

}  // namespace cclab
