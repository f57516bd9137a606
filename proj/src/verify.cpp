#include "cclab/verify.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "cclab/builders.hpp"
#include "cclab/constructions.hpp"
#include "cclab/dcc.hpp"
#include "cclab/errors.hpp"
#include "cclab/hard_instance.hpp"
#include "cclab/help_bits.hpp"
#include "cclab/individual.hpp"
#include "cclab/parallel.hpp"
#include "cclab/pdl.hpp"
#include "cclab/rectangle.hpp"
#include "cclab/sdl.hpp"
#include "cclab/search.hpp"

namespace cclab {

bool VerificationReport::ok() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
}

namespace {

using Suite = std::function<std::vector<Check>(const VerifyOptions&)>;

Check check(std::string id, bool pass, std::string slack, std::string witness = {}, std::string detail = {}) {
  return {std::move(id), pass, std::move(slack), std::move(witness), std::move(detail)};
}

std::string pair_str(const Bits& x, const Bits& y) { return "x=" + x.str() + " y=" + y.str(); }

std::vector<Protocol> decode_codes(const std::vector<Bits>& codes, std::size_t n) {
  std::vector<Protocol> out;
  out.reserve(codes.size());
  for (const Bits& c : codes) out.push_back(pdl_decode(c, n));
  return out;
}

// Maximum PDL budget at which every everywhere-correct protocol is audited.
constexpr std::size_t kIdentityAlpha = 52;
constexpr std::size_t kIpAlpha = 64;
constexpr std::size_t kEqAlpha = 70;

// ---- rectangles

std::vector<Check> rectangles(const VerifyOptions& o) {
  std::vector<Check> out;
  auto audit = [&](const std::string& id, const std::vector<Bits>& codes, std::size_t n) {
    auto bad = parallel_map<std::string>(codes.size(), o.jobs, [&](std::size_t i) -> std::string {
      try {
        transcript_partition(pdl_decode(codes[i], n));
      } catch (const RectangleViolation& v) {
        return "code=" + codes[i].hex() + " transcript=" + v.transcript().str();
      }
      return {};
    });
    std::size_t violations = 0;
    std::string first;
    for (auto& b : bad)
      if (!b.empty() && violations++ == 0) first = b;
    out.push_back(check(id, violations == 0,
                        "protocols=" + std::to_string(codes.size()) + " violations=" + std::to_string(violations), first));
  };
  audit("n2.all-codes.alpha<=10", enumerate_codes(Dims::symmetric(2), 10), 2);
  audit("n2.all-codes.alpha<=20", enumerate_codes(Dims::symmetric(2), 20), 2);
  std::vector<Bits> pool = enumerate_codes(Dims::symmetric(3), 18);
  std::vector<Bits> sample;
  std::sample(pool.begin(), pool.end(), std::back_inserter(sample), 1000, std::mt19937_64(o.seed));
  audit("n3.sample1000.alpha<=18", sample, 3);
  audit("n2.identity-correct.alpha<=" + std::to_string(kIdentityAlpha),
        enumerate_correct(FunctionSpec::identity(2), kIdentityAlpha, false), 2);
  return out;
}

// ---- theorem1

std::vector<Check> theorem1(const VerifyOptions& o) {
  std::vector<Check> out;
  const FunctionSpec id = FunctionSpec::identity(2);
  const std::vector<Bits> codes = enumerate_correct(id, kIdentityAlpha, false);
  struct Row {
    long slack = 0;
    std::string bad;
  };
  auto rows = parallel_map<Row>(codes.size(), o.jobs, [&](std::size_t i) {
    Protocol p = pdl_decode(codes[i], 2);
    Protocol q = one_way_from_two_way(p);
    Row r{long(pdl_complexity(q)) - long(codes[i].size()), {}};
    if (!is_one_way(q) || !computes_everywhere(q, id)) r.bad = "code=" + codes[i].hex() + " conversion not one-way Identity";
    for (std::uint64_t x = 0; x < 4 && r.bad.empty(); ++x)
      for (std::uint64_t y = 0; y < 4 && r.bad.empty(); ++y)
        if (Cost(run_index(q, x, y).transcript.size()) > cc_on_input(p, id, Bits::from_index(x, 2), Bits::from_index(y, 2)))
          r.bad = "code=" + codes[i].hex() + " " + pair_str(Bits::from_index(x, 2), Bits::from_index(y, 2));
    return r;
  });
  std::size_t bad = 0;
  long worst = LONG_MIN, best = LONG_MAX;
  std::string first;
  for (const Row& r : rows) {
    worst = std::max(worst, r.slack);
    best = std::min(best, r.slack);
    if (!r.bad.empty() && bad++ == 0) first = r.bad;
  }
  out.push_back(check("message<=cc.all-correct.n2", bad == 0,
                      "protocols=" + std::to_string(codes.size()) + " counterexamples=" + std::to_string(bad), first));
  out.push_back(check("conversion-code-slack<=8", codes.empty() || worst <= 8,
                      "|P'|-|P| in [" + std::to_string(best) + ", " + std::to_string(worst) + "]"));
  auto reps = parallel_map<TccIdentityReport>(4, o.jobs, [](std::size_t y) {
    return tcc_identity_profile(Bits::from_index(y, 2), kIdentityAlpha);
  });
  for (std::uint64_t y = 0; y < 4; ++y) {
    const auto& r = reps[y];
    out.push_back(check("profile-equal.y=" + Bits::from_index(y, 2).str(), r.equal_every_x && r.budget_shift <= 8,
                        "slack=" + std::to_string(r.budget_shift) + " first-finite=" + std::to_string(r.first_finite_alpha),
                        r.equal_every_x ? "" : "one-way and two-way profiles differ"));
  }
  return out;
}

// ---- ip-bound

std::vector<Check> ip_bound(const VerifyOptions& o) {
  std::vector<Check> out;
  for (std::size_t n : {2, 3}) {
    const FunctionSpec ip = FunctionSpec::inner_product(n);
    std::vector<Protocol> ps = {literal_send(ip), ip_zero_shortcut(n), ip_alice_first(n), dcc_exact(ip.table()).protocol};
    if (n == 2)
      for (Protocol& p : decode_codes(enumerate_correct(ip, kIpAlpha, false), n)) ps.push_back(std::move(p));
    auto audits = parallel_map<IpAudit>(ps.size(), o.jobs, [&](std::size_t i) { return ip_rectangle_audit(ps[i]); });
    std::size_t classes = 0, bad = 0, incorrect = 0;
    std::uint64_t max_product = 0;
    std::string first;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (!computes_everywhere(ps[i], ip)) ++incorrect;
      max_product = std::max(max_product, audits[i].max_product);
      for (const auto& c : audits[i].classes) {
        ++classes;
        if (!(c.monochromatic && c.rank_ok && c.count_ok) && bad++ == 0)
          first = "protocol #" + std::to_string(i) + " transcript=" + c.transcript.str();
      }
    }
    out.push_back(check("n" + std::to_string(n), bad == 0 && incorrect == 0,
                        "protocols=" + std::to_string(ps.size()) + " classes=" + std::to_string(classes) +
                            " max|X||Y|=" + std::to_string(max_product) + " bound=" + std::to_string(1u << n),
                        first, incorrect ? std::to_string(incorrect) + " audited protocols do not compute ip" : ""));
  }
  return out;
}

// ---- eq-shortcut

std::vector<Check> eq_shortcut(const VerifyOptions& o) {
  std::vector<Check> out;
  for (std::size_t n : {2, 3}) {
    const FunctionSpec eq = FunctionSpec::equality(n);
    Protocol p = equality_shortcut_protocol(n);
    const std::uint64_t side = std::uint64_t{1} << n, high = side >> 1;
    std::size_t pairs = 0, two = 0;
    std::string first;
    for (std::uint64_t x = 0; x < high; ++x)
      for (std::uint64_t y = high; y < side; ++y) {
        ++pairs;
        RunOutcome r = run_index(p, x, y);
        if (r.transcript.size() == 2 && r.output == encode_boolean(false, n)) ++two;
        else if (first.empty()) first = pair_str(Bits::from_index(x, n), Bits::from_index(y, n));
      }
    const std::size_t expected = std::size_t{1} << (2 * (n - 1));
    out.push_back(check("shortcut-2-bits.n" + std::to_string(n), two == expected && pairs == expected,
                        std::to_string(two) + "/" + std::to_string(expected) + " pairs", first));
    out.push_back(check("shortcut-correct.n" + std::to_string(n), computes_everywhere(p, eq), ""));

    std::vector<Protocol> ps = {p, literal_send(eq), dcc_exact(eq.table()).protocol};
    if (n == 2)
      for (Protocol& q : decode_codes(enumerate_correct(eq, kEqAlpha, false), n)) ps.push_back(std::move(q));
    auto reports = parallel_map<DiagonalReport>(ps.size(), o.jobs, [&](std::size_t i) { return equality_diagonal_bound(ps[i]); });
    std::size_t bad = 0;
    std::string w;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (!reports[i].distinct && bad++ == 0) w = "protocol #" + std::to_string(i);
    out.push_back(check("diagonal-distinct.n" + std::to_string(n), bad == 0,
                        "protocols=" + std::to_string(ps.size()) + " repeated=" + std::to_string(bad), w));
  }
  return out;
}

// ---- counting

std::vector<Check> counting(const VerifyOptions&) {
  std::vector<Check> out;
  const std::size_t n = 2, amax = 10;
  const FunctionSpec id = FunctionSpec::identity(n);
  BruteIndex idx(id, amax, false);
  std::size_t worst = 0;
  bool count_ok = true, totals_ok = true;
  std::string first;
  for (std::size_t a = 0; a <= amax; ++a) {
    if (idx.total_count(a) >= (std::size_t{1} << (a + 1))) totals_ok = false;
    const long threshold = long(n) - long(a);
    for (std::uint64_t x = 0; x < 4; ++x) {
      std::size_t below = 0;
      for (std::uint64_t y = 0; y < 4; ++y) {
        Cost v = idx.value(Family::cc, x, y, a).value;
        if (v.finite() && long(v.bits()) < threshold) ++below;
      }
      worst = std::max(worst, below);
      if (below >= 4 && count_ok) {
        count_ok = false;
        first = "alpha=" + std::to_string(a) + " x=" + Bits::from_index(x, n).str();
      }
    }
  }
  out.push_back(check("below-threshold<2^n", count_ok, "max #y below n-alpha = " + std::to_string(worst), first,
                      "total protocols within alpha=10: " + std::to_string(idx.total_count(amax))));
  out.push_back(check("total-protocols<2^(alpha+1)", totals_ok, "alpha<=10"));

  std::size_t applied = 0, bad = 0;
  std::string w;
  for (std::size_t a = 0; a <= amax; ++a)
    for (std::uint64_t x = 0; x < 4; ++x) {
      const Bits xb = Bits::from_index(x, n);
      HardY h = find_hard_y(n, a, xb);
      if (!h.bound_applies) continue;
      ++applied;
      const long threshold = long(n) - long(a);
      auto hard = [&](std::uint64_t y) {
        Cost v = RectangleSearch(id, Family::cc, false, x, y, a).best_within(a).value;
        return !v.finite() || long(v.bits()) >= threshold;
      };
      bool ok = h.found && hard(h.y.to_index());
      for (std::uint64_t y = 0; y < h.y.to_index() && ok; ++y) ok = !hard(y);
      if (!ok && bad++ == 0) w = "alpha=" + std::to_string(a) + " " + pair_str(xb, h.y);
    }
  out.push_back(check("find-hard-y-rescan", bad == 0,
                      "nonvacuous cases=" + std::to_string(applied) + " mismatches=" + std::to_string(bad), w));
  return out;
}

// ---- equiv

std::vector<Check> equiv(const VerifyOptions& o) {
  std::vector<Check> out;
  const std::size_t n = 3;
  const FunctionSpec id3 = FunctionSpec::identity(n);
  auto rows = parallel_map<std::string>(255, o.jobs, [&](std::size_t i) -> std::string {
    const std::uint64_t mask = i + 1;
    SetMembers s;
    for (std::uint64_t v = 0; v < 8; ++v)
      if (mask >> v & 1u) s.push_back(v);
    Protocol p = set_to_oneway(s, n);
    if (!computes_everywhere(p, id3)) return "S=" + sdl_encode(s, n).hex() + " not Identity";
    for (std::uint64_t y : s) {
      RunOutcome r = run_index(p, 0, y);
      if (r.transcript.size() != 1 + ceil_log2(s.size())) return "S=" + sdl_encode(s, n).hex() + " y=" + Bits::from_index(y, n).str();
    }
    return {};
  });
  std::size_t bad = 0;
  std::string first;
  for (auto& r : rows)
    if (!r.empty() && bad++ == 0) first = r;
  out.push_back(check("set-to-oneway.n3.all-sets", bad == 0, "sets=255 violations=" + std::to_string(bad), first));

  const std::vector<Bits> codes = enumerate_correct(FunctionSpec::identity(2), kIdentityAlpha, true);
  struct Row {
    long slack = LONG_MIN;
    std::string bad;
  };
  auto checks = parallel_map<Row>(codes.size(), o.jobs, [&](std::size_t i) {
    Protocol p = pdl_decode(codes[i], 2);
    Row r;
    for (std::uint64_t y = 0; y < 4; ++y) {
      const Bits yb = Bits::from_index(y, 2);
      SetMembers s = oneway_to_set(p, yb);
      r.slack = std::max(r.slack, long(sdl_complexity(s, 2)) - long(codes[i].size()));
      if ((!contains(s, y) || std::log2(double(s.size())) > double(message_length(p, yb))) && r.bad.empty())
        r.bad = "code=" + codes[i].hex() + " y=" + yb.str();
    }
    return r;
  });
  bad = 0;
  long worst = LONG_MIN;
  for (auto& r : checks) {
    worst = std::max(worst, r.slack);
    if (!r.bad.empty() && bad++ == 0) first = r.bad;
  }
  out.push_back(check("oneway-to-set.n2.all-correct", bad == 0,
                      "protocols=" + std::to_string(codes.size()) + " violations=" + std::to_string(bad) +
                          " max |S code|-|P code|=" + std::to_string(worst),
                      bad ? first : ""));
  return out;
}

// ---- profiles

// h_y(alpha) for every y by decoding every bit string of length <= alpha.
std::vector<std::vector<double>> naive_h(std::size_t n, std::size_t alpha_max) {
  const std::size_t side = std::size_t{1} << n;
  std::vector<std::vector<double>> h(alpha_max + 1, std::vector<double>(side, kInfinity));
  std::vector<double> best(side, kInfinity);
  for (std::size_t len = 0; len <= alpha_max; ++len) {
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << len); ++c) {
      SetMembers s;
      try {
        s = sdl_decode(Bits::from_index(c, len), n);
      } catch (const DecodeError&) {
        continue;
      }
      const double v = std::log2(double(s.size()));
      for (std::uint64_t y : s) best[y] = std::min(best[y], v);
    }
    h[len] = best;
  }
  return h;
}

std::vector<Check> profiles(const VerifyOptions& o) {
  std::vector<Check> out;
  for (auto [n, amax] : {std::pair<std::size_t, std::size_t>{2, 12}, {4, 20}}) {
    const auto oracle = naive_h(n, amax);
    std::size_t mono = 0, match = 0, total = std::size_t{1} << n;
    std::string first;
    for (std::uint64_t y = 0; y < total; ++y) {
      ComplexityProfile h = structure_function_profile(Bits::from_index(y, n), amax);
      if (h.nonincreasing()) ++mono;
      bool same = true;
      for (const auto& e : h.entries) same = same && e.value == oracle[e.alpha][y];
      if (same) ++match;
      else if (first.empty()) first = "y=" + Bits::from_index(y, n).str();
    }
    const std::string tag = ".n" + std::to_string(n) + ".alpha<=" + std::to_string(amax);
    out.push_back(check("h-nonincreasing" + tag, mono == total, std::to_string(mono) + "/" + std::to_string(total)));
    out.push_back(check("h-matches-naive" + tag, match == total, std::to_string(match) + "/" + std::to_string(total), first));
  }
  auto reps = parallel_map<TccIdentityReport>(4, o.jobs, [](std::size_t y) {
    return tcc_identity_profile(Bits::from_index(y, 2), kIdentityAlpha);
  });
  std::size_t mono = 0;
  std::string first;
  for (std::uint64_t y = 0; y < 4; ++y) {
    if (reps[y].one_way.nonincreasing() && reps[y].two_way.nonincreasing()) ++mono;
    else if (first.empty()) first = "y=" + Bits::from_index(y, 2).str();
  }
  out.push_back(check("tcc-nonincreasing.n2.alpha<=" + std::to_string(kIdentityAlpha), mono == 4,
                      std::to_string(mono) + "/4", first));
  return out;
}

// ---- th7

std::vector<Bits> random_blocks(std::size_t count, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::uint64_t> pick;
  std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t{1} << k) - 1);
  while (pick.size() < count) {
    std::uint64_t v = d(rng);
    if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
  }
  std::vector<Bits> out;
  for (auto v : pick) out.push_back(Bits::from_index(v, k));
  return out;
}

Check replay_check(const std::string& id, const HardInstance& h) {
  ReplayReport r = verify_hard_instance(h);
  return check(id, r.ok() && h.certified,
               "protocols=" + std::to_string(r.checked) + " discrepancies=" + std::to_string(r.discrepancies),
               r.problems.empty() ? "" : r.problems.front(), h.certified ? "" : "certificate incomplete");
}

std::vector<Check> th7(const VerifyOptions& o) {
  std::vector<Check> out;
  std::mt19937_64 rng(o.seed);
  for (auto [s, k] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 4}, {2, 8}}) {
    Th7Protocol t = th7_protocol(s, k);
    const std::size_t m1 = (std::size_t{1} << s) + 1;
    std::size_t runs = 0, bad = 0, worst = 0;
    std::string first;
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<Bits> zs = random_blocks(m1, k, rng);
      for (std::size_t j = 0; j < m1; ++j) {
        auto [x, y] = th7_input(zs, j);
        RunOutcome r = run(t.protocol, x, y);
        ++runs;
        worst = std::max(worst, r.transcript.size());
        if ((r.output != y || r.transcript.size() > t.cost.ceil_bound) && bad++ == 0) first = pair_str(x, y);
      }
    }
    std::ostringstream slack;
    slack << "runs=" << runs << " max cost=" << worst << " bound=" << t.cost.ceil_bound
          << " 2^s log2(2k)=" << t.cost.log_bound;
    out.push_back(check("protocol.s=" + std::to_string(s) + ".k=" + std::to_string(k), bad == 0, slack.str(), first));
  }
  HardInstance h = th7_hard_instance(10, 1, 2, 6);
  std::ostringstream stats;
  stats << "N=" << h.family.size() << " fiber=" << h.fiber_size << " >= 2^" << h.population_log2
        << " range ok=" << h.range_ok;
  const bool pigeon = h.population_log2 < 0 || h.fiber_size >= (std::size_t{1} << h.population_log2);
  out.push_back(check("hard-instance.k=10.s=1.l=2.budget=6", h.certified && pigeon && h.range_ok, stats.str()));
  out.push_back(replay_check("hard-instance-replay", h));
  out.push_back(replay_check("hard-instance-json-replay", hard_instance_from_json(nlohmann::json::parse(to_json(h).dump()))));
  if (o.replay) {
    std::ifstream in(*o.replay);
    if (!in) throw UsageError("cannot open " + *o.replay);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("malformed JSON in " + *o.replay + ": " + e.what());
    }
    out.push_back(replay_check("replay:" + *o.replay, hard_instance_from_json(j)));
  }
  return out;
}

// ---- helpbits

std::vector<Check> helpbits(const VerifyOptions& o) {
  std::vector<Check> out;
  const std::size_t n = 2;
  std::vector<Bits> codes = enumerate_codes(Dims::symmetric(n), 14);
  for (const std::string name : {"identity", "eq", "ip"}) {
    const FunctionSpec f = FunctionSpec::parse(name, n);
    std::vector<Protocol> ps = decode_codes(codes, n);
    ps.push_back(literal_send(f));
    ps.push_back(dcc_exact(f.table()).protocol);
    for (TotalizerMode mode : {TotalizerMode::both, TotalizerMode::alice_only, TotalizerMode::bob_only}) {
      const HelpSpec h = totalizer_help(mode);
      const std::uint32_t extra = mode == TotalizerMode::both ? 0 : 1;
      auto rows = parallel_map<std::string>(ps.size(), o.jobs, [&](std::size_t i) -> std::string {
        Protocol w = help_bit_totalizer(ps[i], f, mode);
        for (std::uint64_t x = 0; x < 4; ++x)
          for (std::uint64_t y = 0; y < 4; ++y) {
            const Bits xb = Bits::from_index(x, n), yb = Bits::from_index(y, n);
            Cost with = cc_with_help(w, f, xb, yb, h);
            if (!with.finite() || with > cc_on_input(ps[i], f, xb, yb) + extra) return "protocol #" + std::to_string(i) + " " + pair_str(xb, yb);
          }
        return {};
      });
      std::size_t bad = 0;
      std::string first;
      for (auto& r : rows)
        if (!r.empty() && bad++ == 0) first = r;
      static const char* names[] = {"both", "alice-only", "bob-only"};
      out.push_back(check("totalizer." + std::string(names[int(mode)]) + "." + name, bad == 0,
                          "protocols=" + std::to_string(ps.size()) + " violations=" + std::to_string(bad), first));
    }
  }
  for (const std::string name : {"eq", "ip"}) {
    std::size_t bad = 0;
    for (std::size_t m = 1; m <= 3; ++m) {
      const FunctionSpec f = FunctionSpec::parse(name, m);
      Protocol v = value_as_help_protocol(f);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x)
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << m); ++y)
          if (cc_with_help(v, f, Bits::from_index(x, m), Bits::from_index(y, m), {1, 0}) != Cost(0)) ++bad;
    }
    out.push_back(check("value-as-help.zero-bits." + name, bad == 0, "n=1..3 nonzero pairs=" + std::to_string(bad)));
  }
  const bool same = to_json(helpbit_hard_instance(10, 1, 2, 0, 0, 6)) == to_json(th7_hard_instance(10, 1, 2, 6));
  out.push_back(check("a=b=0-reduces-to-th7", same, ""));
  HardInstance h = helpbit_hard_instance(11, 1, 2, 1, 1, 6);
  out.push_back(replay_check("hard-instance.k=11.s=1.l=2.a=1.b=1", h));

  const std::size_t sb = h.params.a + h.params.b + h.params.s;
  Protocol c = helpbit_companion_protocol(sb, h.params.k);
  const FunctionSpec id = FunctionSpec::identity(h.n);
  const std::size_t expect = (std::size_t{1} << sb) * (ceil_log2(h.params.k) + 1) + 1;
  std::size_t bad = 0;
  for (const Bits& y : h.ys)
    if (cc_with_help(c, id, h.x, y, {1, 0}) != Cost(expect)) ++bad;
  std::mt19937_64 rng(o.seed);
  std::bernoulli_distribution coin;
  for (int t = 0; t < 32; ++t) {
    Bits x(h.n), y(h.n);
    for (std::size_t i = 0; i < h.n; ++i) {
      x.set(i, coin(rng));
      y.set(i, coin(rng));
    }
    if (cc_with_help(c, id, x, y, {1, 0}) > Cost(h.n + 1)) ++bad;
  }
  out.push_back(check("companion-one-help-bit", bad == 0,
                      "instance cost=" + std::to_string(expect) + " literal=" + std::to_string(h.n + 1) +
                          " failures=" + std::to_string(bad)));
  return out;
}

// ---- ordering

std::vector<Check> ordering(const VerifyOptions& o) {
  std::vector<Check> out;
  const std::size_t n = 2, amax = 10;
  for (const std::string name : {"identity", "eq", "ip"}) {
    const FunctionSpec f = FunctionSpec::parse(name, n);
    for (bool ow : {false, true}) {
      BruteIndex idx(f, amax, ow);
      std::size_t bad = 0, finite = 0;
      std::string first;
      for (std::size_t a = 0; a <= amax; ++a)
        for (std::uint64_t x = 0; x < 4; ++x)
          for (std::uint64_t y = 0; y < 4; ++y) {
            Cost p = idx.value(Family::pcc, x, y, a).value, c = idx.value(Family::cc, x, y, a).value,
                 t = idx.value(Family::tcc, x, y, a).value;
            finite += t.finite();
            if (!(p <= c && c <= t) && bad++ == 0)
              first = "alpha=" + std::to_string(a) + " " + pair_str(Bits::from_index(x, n), Bits::from_index(y, n));
          }
      out.push_back(check(std::string(ow ? "one-way." : "two-way.") + name + ".alpha<=10", bad == 0,
                          "violations=" + std::to_string(bad) + " finite TCC cells=" + std::to_string(finite), first));
    }
    // Beyond the enumeration cap, by exact search; also worst case dominates.
    DccResult d = dcc_exact(f.table());
    const std::size_t top = std::min<std::size_t>(kSearchMaxLen, std::max<std::size_t>(70, pdl_complexity(d.protocol)));
    struct Row {
      std::size_t finite = 0;
      std::string bad;
    };
    auto rows = parallel_map<Row>(16, o.jobs, [&](std::size_t cell) {
      const std::uint64_t x = cell / 4, y = cell % 4;
      RectangleSearch sp(f, Family::pcc, false, x, y, top), sc(f, Family::cc, false, x, y, top),
          st(f, Family::tcc, false, x, y, top);
      Row r;
      Cost bp, bc, bt;
      for (std::size_t a = 0; a <= top; ++a) {
        bp = min(bp, sp.best_exact(a));
        bc = min(bc, sc.best_exact(a));
        bt = min(bt, st.best_exact(a));
        r.finite += bt.finite();
        if (!(bp <= bc && bc <= bt) && r.bad.empty()) r.bad = "alpha=" + std::to_string(a);
      }
      if (r.bad.empty() && pdl_complexity(d.protocol) <= top && bt > Cost(d.bits)) r.bad = "TCC above dcc";
      if (!r.bad.empty()) r.bad += " " + pair_str(Bits::from_index(x, n), Bits::from_index(y, n));
      return r;
    });
    std::size_t bad = 0, finite = 0;
    std::string first;
    for (auto& r : rows) {
      finite += r.finite;
      if (!r.bad.empty() && bad++ == 0) first = r.bad;
    }
    out.push_back(check("search." + name + ".alpha<=" + std::to_string(top) + ".dcc=" + std::to_string(d.bits), bad == 0,
                        "violations=" + std::to_string(bad) + " finite TCC cells=" + std::to_string(finite), first));
  }
  return out;
}

const std::map<std::string, std::pair<Suite, std::string>>& registry() {
  static const std::map<std::string, std::pair<Suite, std::string>> r = {
      {"rectangles", {rectangles, "transcript classes are rectangles: all codes at n=2 alpha<=10 and <=20, 1000 sampled codes at n=3 alpha<=18, every correct Identity protocol at n=2 up to 52 bits"}},
      {"theorem1", {theorem1, "one-way conversion of every correct Identity protocol at n=2 (message <= cc); one-way and two-way TCC profiles agree per alpha for every x, y"}},
      {"ip-bound", {ip_bound, "output-refined classes of inner-product protocols (n=2: all correct up to 64 bits plus constructions; n=3: constructions) have rank(X)+rank(Y) <= n and |X||Y| <= 2^n"}},
      {"eq-shortcut", {eq_shortcut, "equality shortcut costs 2 bits on x=0..., y=1... and is correct; diagonal transcripts distinct for audited equality protocols"}},
      {"counting", {counting, "at n=2, alpha<=10: fewer than 2^n inputs y below n-alpha; find_hard_y re-checked by exact search"}},
      {"equiv", {equiv, "set_to_oneway message = 1 + ceil(log2|S|) for every set at n=3; oneway_to_set gives log2|S| <= message for every correct one-way Identity protocol at n=2"}},
      {"profiles", {profiles, "h_y nonincreasing and equal to a naive decoder scan (n=2, n=4); TCC profiles nonincreasing at n=2"}},
      {"th7", {th7, "th7_protocol identifies y_j at (s,k) in (1,2),(2,4),(2,8) within 2^s ceil(log2 2k); hard instance k=10 s=1 l=2 budget 6 certified and replayed (--replay FILE re-verifies a saved instance)"}},
      {"helpbits", {helpbits, "totalizer inequalities for all three modes at n=2 (every code up to 14 bits plus literal and optimal protocols); value-as-help costs 0; a=b=0 equals the th7 instance; a=b=1 instance certified; companion protocol"}},
      {"ordering", {ordering, "PCC <= CC <= TCC at n=2 for identity, eq, ip (enumeration alpha<=10, search beyond); dcc dominates TCC"}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rectangles", "theorem1", "ip-bound", "eq-shortcut", "counting",
                                                 "equiv",      "profiles", "th7",      "helpbits",    "ordering"};
  return names;
}

std::string suite_help(const std::string& suite) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw UsageError("unknown suite '" + suite + "'");
  return it->second.second;
}

VerificationReport verify_suite(const std::string& suite, const VerifyOptions& opts) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw UsageError("unknown suite '" + suite + "'");
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r{suite, it->second.first(opts), 0};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j{{"schema", "cclab.verify/1"}, {"suite", r.suite}, {"ok", r.ok()}, {"seconds", r.seconds}};
  j["checks"] = nlohmann::json::array();
  for (const Check& c : r.checks)
    j["checks"].push_back(
        {{"id", c.id}, {"pass", c.pass}, {"slack", c.slack}, {"witness", c.witness}, {"detail", c.detail}});
  return j;
}

std::string format_report(const VerificationReport& r) {
  std::ostringstream os;
  os << r.suite << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, " << r.failures()
     << " failed)\n";
  for (const Check& c : r.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id;
    if (!c.slack.empty()) os << "  " << c.slack;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    if (!c.pass && !c.witness.empty()) os << "  witness: " << c.witness;
    os << "\n";
  }
  return os.str();
}

}  // namespace cclab
