#include "cclab/hard_instance.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cclab/builders.hpp"
#include "cclab/constructions.hpp"
#include "cclab/errors.hpp"
#include "cclab/pdl.hpp"

namespace cclab {

namespace {

constexpr std::size_t kMaxBlockBits = 20;

std::size_t block_count(const HardInstanceParams& p) { return (std::size_t{1} << (p.a + p.b + p.s)) + 1; }

void check_params(const HardInstanceParams& p) {
  if (p.k == 0 || p.l == 0) throw UsageError("k and l must be positive");
  if (p.a + p.b + p.s > 6) throw UsageError("a + b + s must be at most 6");
  if (p.k > kMaxBlockBits) throw UsageError("k must be at most " + std::to_string(kMaxBlockBits));
  const std::size_t need = p.a + p.b + p.s + p.l * (std::size_t{1} << (p.s + p.b));
  if (p.k < need)
    throw UsageError("need k >= a + b + s + l 2^(s+b) = " + std::to_string(need) + ", got k = " + std::to_string(p.k));
  if (p.budget > budget_cap()) throw UsageError("budget exceeds the enumeration cap");
}

Dims dims_for(const HardInstanceParams& p, std::size_t n) { return {n + p.a, n + p.b, n}; }

std::vector<Bits> sound_family(const HardInstanceParams& p, const Dims& d, std::size_t n, std::size_t& enumerated) {
  std::vector<Bits> codes = enumerate_codes(d, p.budget, true);
  enumerated = codes.size();
  std::vector<Bits> out;
  for (const Bits& c : codes)
    if (identity_sound(pdl_decode(c, d), n)) out.push_back(c);
  return out;
}

std::vector<std::string> labels_of(const std::vector<Protocol>& family, const Bits& z, const HardInstanceParams& p,
                                   std::size_t n) {
  std::vector<std::string> out;
  const Bits y = z.concat(Bits(n - z.size()));
  for (const Protocol& q : family)
    for (std::uint64_t hb = 0; hb < (std::uint64_t{1} << p.b); ++hb) {
      RunOutcome r = run(q, Bits(q.dims().alice_bits), y.concat(Bits::from_index(hb, p.b)));
      out.push_back(r.stuck() || r.transcript.size() >= p.l ? "inf" : "m" + r.transcript.str());
    }
  return out;
}

std::vector<Protocol> decode_all(const std::vector<Bits>& codes, const Dims& d) {
  std::vector<Protocol> out;
  for (const Bits& c : codes) out.push_back(pdl_decode(c, d));
  return out;
}

ProtocolCertificate certify(const Protocol& q, const Bits& code, const HardInstance& h) {
  const FunctionSpec id = FunctionSpec::identity(h.n);
  const HelpSpec help{h.params.a, h.params.b};
  ProtocolCertificate c{code, h.ys.size(), Cost(0)};
  for (std::size_t j = 0; j < h.ys.size(); ++j) {
    Cost v = cc_with_help(q, id, h.x, h.ys[j], help);
    if (!v.finite() || v.bits() >= h.params.l) return {code, j, v};
    c.value = std::max(c.value, v);
  }
  return c;
}

bool sound_cubes(const Protocol& p, const NodePtr& node, std::vector<std::int8_t>& cube, std::size_t depth,
                 std::size_t n) {
  const Dims& d = p.dims();
  switch (node->kind) {
    case Node::Kind::stuck: return true;
    case Node::Kind::help_switch:
      return sound_cubes(p, node->child[0], cube, depth, n) && sound_cubes(p, node->child[1], cube, depth, n);
    case Node::Kind::speak: {
      if (depth >= p.depth_cap()) return true;
      if (node->owner == Party::alice) throw UsageError("cube check needs a one-way protocol");
      const NodeFunction& fn = node->fn;
      switch (fn.kind()) {
        case NodeFunction::Kind::const_zero: return sound_cubes(p, node->child[0], cube, depth + 1, n);
        case NodeFunction::Kind::const_one: return sound_cubes(p, node->child[1], cube, depth + 1, n);
        case NodeFunction::Kind::input_bit:
        case NodeFunction::Kind::negated_input_bit: {
          const int neg = fn.kind() == NodeFunction::Kind::negated_input_bit;
          std::int8_t& slot = cube[fn.index()];
          if (slot >= 0) return sound_cubes(p, node->child[slot ^ neg], cube, depth + 1, n);
          bool ok = true;
          for (int v = 0; v < 2 && ok; ++v) {
            slot = static_cast<std::int8_t>(v);
            ok = sound_cubes(p, node->child[v ^ neg], cube, depth + 1, n);
          }
          slot = -1;
          return ok;
        }
        default: throw UsageError("cube check handles constant and single-bit functions only");
      }
    }
    case Node::Kind::output: {
      Bits point(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (cube[i] < 0) return false;
        point.set(i, cube[i] != 0);
      }
      const OutputFunction& out = node->out;
      switch (out.kind()) {
        case OutputFunction::Kind::const_string: return out.value() == point;
        case OutputFunction::Kind::table:
          return std::all_of(out.rows().begin(), out.rows().end(), [&](const Bits& r) { return r == point; });
        case OutputFunction::Kind::copy_x:
        case OutputFunction::Kind::xor_mask: return d.alice_bits == 0 && out.eval(Bits(), Bits(), n) == point;
        default: throw UsageError("cube check cannot inspect computed outputs");
      }
    }
  }
  return false;
}

HardInstance build(const HardInstanceParams& p) {
  check_params(p);
  HardInstance h;
  h.params = p;
  const std::size_t m1 = block_count(p);
  h.n = m1 * p.k;
  const Dims d = dims_for(p, h.n);
  h.family = sound_family(p, d, h.n, h.enumerated);
  const std::vector<Protocol> family = decode_all(h.family, d);
  const std::size_t N = family.size();

  std::map<std::vector<std::string>, std::vector<std::uint64_t>> fibers;
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << p.k); ++z)
    fibers[labels_of(family, Bits::from_index(z, p.k), p, h.n)].push_back(z);
  h.fiber_count = fibers.size();
  const std::vector<std::string>* best_label = nullptr;
  const std::vector<std::uint64_t>* best = nullptr;
  for (const auto& [label, zs] : fibers)
    if (!best || zs.size() > best->size() || (zs.size() == best->size() && zs.front() < best->front())) {
      best_label = &label;
      best = &zs;
    }
  h.range_log2 = p.l * N << p.b;
  h.population_log2 = long(p.k) - long(h.range_log2);
  h.range_ok = h.range_log2 < (p.l << (p.s + p.b));
  h.fiber_size = best->size();
  if (best->size() < m1) {
    if (h.population_log2 > long(p.a + p.b + p.s))
      throw InternalError("no fiber reaches 2^(a+b+s) + 1 members despite the counting bound");
    throw UsageError("the budget admits " + std::to_string(N) + " protocols; no fiber has " + std::to_string(m1) +
                     " members (lower the budget)");
  }
  h.label = *best_label;
  std::vector<std::uint64_t> members = *best;
  if (p.seed != 0) std::shuffle(members.begin(), members.end(), std::mt19937_64(p.seed));
  members.resize(m1);
  std::sort(members.begin(), members.end());
  for (std::uint64_t z : members) h.zs.push_back(Bits::from_index(z, p.k));
  for (std::size_t j = 0; j < m1; ++j) {
    auto [x, y] = th7_input(h.zs, j);
    h.x = x;
    h.ys.push_back(y);
  }
  h.certified = true;
  for (std::size_t i = 0; i < N; ++i) {
    h.certificate.push_back(certify(family[i], h.family[i], h));
    if (h.certificate.back().j >= m1) h.certified = false;
  }
  return h;
}

std::string cost_json(Cost c) { return c.str(); }

Cost cost_from(const nlohmann::json& j) {
  std::string s = j.get<std::string>();
  return s == "inf" ? Cost::inf() : Cost(static_cast<std::uint32_t>(std::stoul(s)));
}

}  // namespace

HardInstance th7_hard_instance(std::size_t k, std::size_t s, std::size_t l, std::size_t budget, std::uint64_t seed) {
  return build({k, s, l, 0, 0, budget, seed});
}

HardInstance helpbit_hard_instance(std::size_t k, std::size_t s, std::size_t l, std::size_t a, std::size_t b,
                                   std::size_t budget, std::uint64_t seed) {
  return build({k, s, l, a, b, budget, seed});
}

bool identity_sound(const Protocol& p, std::size_t n) {
  const Dims& d = p.dims();
  if (d.out_bits != n || d.bob_bits < n) throw UsageError("protocol does not output n bits of Bob's input");
  if (d.alice_bits + d.bob_bits <= 20) {
    const std::size_t extra = d.bob_bits - n;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << d.alice_bits); ++x)
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << d.bob_bits); ++y) {
        RunOutcome r = run_index(p, x, y);
        if (!r.stuck() && *r.output != Bits::from_index(y >> extra, n)) return false;
      }
    return true;
  }
  std::vector<std::int8_t> cube(d.bob_bits, -1);
  return sound_cubes(p, p.root(), cube, 0, n);
}

ReplayReport verify_hard_instance(const HardInstance& h) {
  ReplayReport rep;
  auto fail = [&](std::string what) {
    ++rep.discrepancies;
    rep.problems.push_back(std::move(what));
  };
  const HardInstanceParams& p = h.params;
  const std::size_t m1 = block_count(p);
  if (h.n != m1 * p.k) fail("input length");
  if (h.zs.size() != m1 || h.ys.size() != m1) fail("block count");
  for (std::size_t i = 0; i < h.zs.size(); ++i)
    for (std::size_t j = i + 1; j < h.zs.size(); ++j)
      if (h.zs[i] == h.zs[j]) fail("repeated block");
  if (rep.discrepancies) return rep;
  for (std::size_t j = 0; j < m1; ++j) {
    auto [x, y] = th7_input(h.zs, j);
    if (x != h.x) fail("x is not the block concatenation");
    if (y != h.ys[j]) fail("y_" + std::to_string(j) + " is not z_j padded");
  }
  const Dims d = dims_for(p, h.n);
  std::size_t enumerated = 0;
  std::vector<Bits> family = sound_family(p, d, h.n, enumerated);
  if (enumerated != h.enumerated || family != h.family) fail("family differs on re-enumeration");
  const std::vector<Protocol> protocols = decode_all(h.family, d);
  for (const Bits& z : h.zs)
    if (labels_of(protocols, z, p, h.n) != h.label) fail("fiber label differs for z = " + z.str());
  if (h.certificate.size() != protocols.size()) fail("certificate size");
  const FunctionSpec id = FunctionSpec::identity(h.n);
  for (std::size_t i = 0; i < std::min(protocols.size(), h.certificate.size()); ++i) {
    const ProtocolCertificate& c = h.certificate[i];
    ++rep.checked;
    if (c.code != h.family[i] || c.j >= m1) {
      fail("certificate line " + std::to_string(i));
      continue;
    }
    Cost v = cc_with_help(protocols[i], id, h.x, h.ys[c.j], {p.a, p.b});
    if (v != c.value || (v.finite() && v.bits() < p.l)) fail("certificate value for protocol " + std::to_string(i));
  }
  return rep;
}

Protocol helpbit_companion_protocol(std::size_t s_blocks, std::size_t k) {
  const std::size_t n = ((std::size_t{1} << s_blocks) + 1) * k;
  NodePtr literal = literal_chain(
      n, OutputFunction::computed([n](const Bits&, const Bits& t) { return t.substr(1, n); }, "literal-tail"));
  return Protocol({n + 1, n, n}, Node::speak(Party::alice, NodeFunction::bit(n), literal, th7_tree(s_blocks, k, 1)));
}

nlohmann::json to_json(const HardInstance& h) {
  using nlohmann::json;
  const auto& p = h.params;
  json j;
  j["params"] = {{"k", p.k}, {"s", p.s}, {"l", p.l}, {"a", p.a}, {"b", p.b}, {"budget", p.budget}, {"seed", p.seed}};
  j["n"] = h.n;
  j["zs"] = json::array();
  for (const Bits& z : h.zs) j["zs"].push_back(z.hex());
  j["x"] = h.x.hex();
  j["ys"] = json::array();
  for (const Bits& y : h.ys) j["ys"].push_back(y.hex());
  j["enumerated"] = h.enumerated;
  j["family"] = json::array();
  for (const Bits& c : h.family) j["family"].push_back(c.hex());
  j["label"] = h.label;
  j["fibers"] = {{"size", h.fiber_size},
                 {"count", h.fiber_count},
                 {"range_log2", h.range_log2},
                 {"population_log2", h.population_log2},
                 {"range_ok", h.range_ok}};
  j["certificate"] = json::array();
  for (const auto& c : h.certificate)
    j["certificate"].push_back({{"code", c.code.hex()}, {"j", c.j}, {"value", cost_json(c.value)}});
  j["certified"] = h.certified;
  return j;
}

HardInstance hard_instance_from_json(const nlohmann::json& j) {
  try {
    HardInstance h;
    const auto& p = j.at("params");
    h.params = {p.at("k"), p.at("s"), p.at("l"), p.at("a"), p.at("b"), p.at("budget"), p.at("seed")};
    h.n = j.at("n");
    for (const auto& z : j.at("zs")) h.zs.push_back(Bits::from_hex(z.get<std::string>()));
    h.x = Bits::from_hex(j.at("x").get<std::string>());
    for (const auto& y : j.at("ys")) h.ys.push_back(Bits::from_hex(y.get<std::string>()));
    h.enumerated = j.at("enumerated");
    for (const auto& c : j.at("family")) h.family.push_back(Bits::from_hex(c.get<std::string>()));
    h.label = j.at("label").get<std::vector<std::string>>();
    const auto& f = j.at("fibers");
    h.fiber_size = f.at("size");
    h.fiber_count = f.at("count");
    h.range_log2 = f.at("range_log2");
    h.population_log2 = f.at("population_log2");
    h.range_ok = f.at("range_ok");
    for (const auto& c : j.at("certificate"))
      h.certificate.push_back({Bits::from_hex(c.at("code").get<std::string>()), c.at("j"), cost_from(c.at("value"))});
    h.certified = j.at("certified");
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed hard instance: ") + e.what());
  }
}

}  // namespace cclab
