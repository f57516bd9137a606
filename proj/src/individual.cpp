#include "cclab/individual.hpp"

#include <cmath>

#include "cclab/builders.hpp"
#include "cclab/errors.hpp"
#include "cclab/pdl.hpp"

namespace cclab {

BruteIndex::BruteIndex(const FunctionSpec& f, std::size_t alpha, bool one_way, HelpSpec help)
    : dims_(extended(Dims::symmetric(f.n()), help)), n_(f.n()), alpha_(alpha) {
  check_grid(dims_, 16);
  const std::uint64_t side = std::uint64_t{1} << n_;
  for (auto& s : steps_) s.assign(side * side, {});
  std::vector<Bits> want(side * side);
  for (std::uint64_t x = 0; x < side; ++x)
    for (std::uint64_t y = 0; y < side; ++y) want[x * side + y] = f.at(x, y);
  const std::uint64_t ea = std::uint64_t{1} << dims_.alice_bits, eb = std::uint64_t{1} << dims_.bob_bits;
  std::vector<Bits> xs(ea), ys(eb);
  for (std::uint64_t u = 0; u < ea; ++u) xs[u] = Bits::from_index(u, dims_.alice_bits);
  for (std::uint64_t v = 0; v < eb; ++v) ys[v] = Bits::from_index(v, dims_.bob_bits);
  std::vector<Cost> cost(side * side);
  for (const Bits& code : enumerate_codes(dims_, alpha, one_way)) {
    Protocol p = pdl_decode(code, dims_);
    lengths_.push_back(code.size());
    std::fill(cost.begin(), cost.end(), Cost::inf());
    bool total = true;
    for (std::uint64_t u = 0; u < ea; ++u)
      for (std::uint64_t v = 0; v < eb; ++v) {
        RunOutcome r = run(p, xs[u], ys[v]);
        if (r.stuck()) {
          total = false;
          continue;
        }
        std::uint64_t cell = (u >> help.a) * side + (v >> help.b);
        if (*r.output == want[cell]) cost[cell] = min(cost[cell], Cost(static_cast<std::uint32_t>(r.transcript.size())));
      }
    if (total) total_lengths_.push_back(code.size());
    bool everywhere = std::all_of(cost.begin(), cost.end(), [](Cost c) { return c.finite(); });
    for (std::uint64_t cell = 0; cell < side * side; ++cell) {
      Cost c = cost[cell];
      if (!c.finite()) continue;
      for (Family fam : {Family::tcc, Family::cc, Family::pcc}) {
        if (fam == Family::tcc && !(total && everywhere)) continue;
        if (fam == Family::cc && !total) continue;
        auto& st = steps_[static_cast<int>(fam)][cell];
        if (st.empty() || c < st.back().value) st.push_back({code.size(), c, code});
      }
    }
  }
}

IndividualResult BruteIndex::value(Family fam, std::uint64_t x, std::uint64_t y, std::size_t alpha) const {
  if (alpha > alpha_) throw UsageError("budget above the indexed range");
  const std::uint64_t side = std::uint64_t{1} << n_;
  IndividualResult r;
  r.route = "enumeration";
  for (const auto& s : steps_[static_cast<int>(fam)][x * side + y]) {
    if (s.len > alpha) break;
    r.value = s.value;
    r.witness = s.code;
  }
  return r;
}

std::size_t BruteIndex::total_count(std::size_t alpha) const {
  return std::count_if(total_lengths_.begin(), total_lengths_.end(), [&](std::size_t l) { return l <= alpha; });
}

IndividualResult individual_cc(const Measure& m, const FunctionSpec& f, const Bits& x, const Bits& y) {
  if (x.size() != f.n() || y.size() != f.n()) throw UsageError("inputs must have n bits");
  if (m.alpha <= budget_cap()) return BruteIndex(f, m.alpha, m.one_way, m.help).value(m.family, x.to_index(), y.to_index());
  if (!m.help.none())
    throw UsageError("help bits need alpha within the enumeration cap (" + std::to_string(budget_cap()) + ")");
  RectangleSearch s(f, m.family, m.one_way, x.to_index(), y.to_index(), m.alpha);
  auto r = s.best_within(m.alpha);
  return {r.value, r.witness, "search"};
}

bool ComplexityProfile::nonincreasing() const {
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].value > entries[i - 1].value) return false;
  return true;
}

double ComplexityProfile::at(std::size_t alpha) const {
  for (const auto& e : entries)
    if (e.alpha == alpha) return e.value;
  throw UsageError("alpha outside the profile");
}

ComplexityProfile structure_function_profile(const Bits& y, std::size_t alpha_max) {
  const std::size_t n = y.size();
  if (n == 0 || n > 6) throw UsageError("structure function needs 1 <= n <= 6");
  const std::uint64_t yi = y.to_index();
  auto sets = enumerate_sets(n, alpha_max);
  ComplexityProfile prof{"h_y", "sdl", y, {}};
  double best = kInfinity;
  std::optional<Bits> witness;
  std::size_t i = 0;
  for (std::size_t a = 0; a <= alpha_max; ++a) {
    for (; i < sets.size() && sets[i].code.size() <= a; ++i) {
      if (!contains(sets[i].members, yi)) continue;
      double v = std::log2(static_cast<double>(sets[i].members.size()));
      if (v < best) {
        best = v;
        witness = sets[i].code;
      }
    }
    prof.entries.push_back({a, best, witness});
  }
  return prof;
}

Protocol one_way_from_two_way(const Protocol& p) {
  const Dims& d = p.dims();
  const std::size_t n = d.alice_bits;
  if (!(d == Dims::symmetric(n))) throw UsageError("one-way conversion needs a protocol over (n, n)");
  if (!computes_everywhere(p, FunctionSpec::identity(n)))
    throw UsageError("one-way conversion needs a protocol computing Identity everywhere");
  const std::uint64_t side = std::uint64_t{1} << n;
  std::vector<std::optional<Bits>> messages(side);
  for (std::uint64_t y = 0; y < side; ++y)
    for (std::uint64_t x = 0; x < side; ++x) {
      Bits t = run_index(p, x, y).transcript;
      if (!messages[y] || canonical_less(t, *messages[y])) messages[y] = t;
    }
  return Protocol(d, build_one_way_trie(d, messages, [n](std::uint64_t y, std::uint64_t) -> std::optional<Bits> {
                    return Bits::from_index(y, n);
                  }));
}

Protocol set_to_oneway(const SetMembers& s, std::size_t n) {
  if (s.empty()) throw UsageError("set must be nonempty");
  const std::uint64_t side = std::uint64_t{1} << n;
  const unsigned w = ceil_log2(s.size());
  std::vector<std::optional<Bits>> messages(side);
  for (std::uint64_t y = 0; y < side; ++y) {
    if (contains(s, y))
      messages[y] = Bits::from_string("1").concat(Bits::from_index(rank_in(s, y), w));
    else
      messages[y] = Bits::from_string("0").concat(Bits::from_index(y, n));
  }
  Dims d = Dims::symmetric(n);
  return Protocol(d, build_one_way_trie(d, messages, [n](std::uint64_t y, std::uint64_t) -> std::optional<Bits> {
                    return Bits::from_index(y, n);
                  }));
}

std::size_t message_length(const Protocol& one_way, const Bits& y) {
  if (!is_one_way(one_way)) throw UsageError("protocol is not one-way");
  return run(one_way, Bits(one_way.dims().alice_bits), y).transcript.size();
}

SetMembers oneway_to_set(const Protocol& p, const Bits& y) {
  const std::size_t n = p.dims().bob_bits;
  const std::size_t len = message_length(p, y);
  SetMembers s;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
    if (message_length(p, Bits::from_index(v, n)) == len) s.push_back(v);
  return s;
}

namespace {

ComplexityProfile search_profile(RectangleSearch& s, std::size_t alpha_max, std::string label, const Bits& y) {
  ComplexityProfile prof{std::move(label), "pdl", y, {}};
  Cost best;
  std::optional<Bits> witness;
  for (std::size_t a = 0; a <= alpha_max; ++a) {
    Cost c = s.best_exact(a);
    if (c < best) {
      best = c;
      witness = s.witness_exact(a);
    }
    prof.entries.push_back({a, best.finite() ? double(best.bits()) : kInfinity, witness});
  }
  return prof;
}

}  // namespace

TccIdentityReport tcc_identity_profile(const Bits& y, std::size_t alpha_max, std::optional<Bits> x) {
  const std::size_t n = y.size();
  if (n == 0 || n > kSearchMaxInputBits) throw UsageError("TCC profile needs 1 <= n <= 3");
  if (x && x->size() != n) throw UsageError("x and y must have the same length");
  const std::uint64_t yi = y.to_index();
  const FunctionSpec id = FunctionSpec::identity(n);
  TccIdentityReport rep;
  rep.x = x ? x->to_index() : 0;

  RectangleSearch ow(id, Family::tcc, true, 0, yi, alpha_max);
  rep.one_way = search_profile(ow, alpha_max, "tcc-1way", y);

  std::vector<ComplexityProfile> two_ways;
  for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << n); ++xv) {
    if (x && xv != rep.x) continue;
    RectangleSearch tw(id, Family::tcc, false, xv, yi, alpha_max);
    two_ways.push_back(search_profile(tw, alpha_max, "tcc-2way", y));
    if (xv == rep.x) rep.two_way = two_ways.back();
  }
  for (const auto& tw : two_ways)
    for (std::size_t a = 0; a <= alpha_max; ++a)
      if (tw.entries[a].value != rep.one_way.entries[a].value) rep.equal_every_x = false;
  for (std::size_t d = 0;; ++d) {
    bool ok = true;
    for (const auto& tw : two_ways)
      for (std::size_t a = 0; a + d <= alpha_max && ok; ++a)
        if (rep.one_way.entries[a + d].value > tw.entries[a].value) ok = false;
    if (ok || d > alpha_max) {
      rep.budget_shift = d;
      break;
    }
  }
  for (const auto& e : rep.two_way.entries) {
    if (!e.witness) continue;
    Protocol p = pdl_decode(*e.witness, n);
    Protocol q = one_way_from_two_way(p);
    rep.conversion_slack = std::max(rep.conversion_slack, long(pdl_complexity(q)) - long(e.witness->size()));
  }

  rep.h = structure_function_profile(y, alpha_max);
  // set -> protocol
  std::vector<Cost> set_bound(alpha_max + 1);
  bool first = true;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (std::uint64_t{1} << n)); ++mask) {
    if (!(mask >> yi & 1u)) continue;
    SetMembers s;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
      if (mask >> v & 1u) s.push_back(v);
    Protocol p = set_to_oneway(s, n);
    std::size_t len = pdl_complexity(p);
    long slack = long(len) - long(sdl_complexity(s, n));
    rep.set_to_protocol_slack = first ? slack : std::max(rep.set_to_protocol_slack, slack);
    first = false;
    Cost msg(static_cast<std::uint32_t>(1 + ceil_log2(s.size())));
    for (std::size_t a = len; a <= alpha_max; ++a) set_bound[a] = min(set_bound[a], msg);
  }
  for (std::size_t a = 0; a <= alpha_max; ++a) {
    double v = rep.one_way.entries[a].value;
    if (set_bound[a].finite() && v > set_bound[a].bits()) rep.set_bound_ok = false;
  }
  // protocol -> set
  first = true;
  for (const auto& e : rep.one_way.entries) {
    if (!e.witness) continue;
    Protocol p = pdl_decode(*e.witness, n);
    SetMembers s = oneway_to_set(p, y);
    if (!contains(s, yi) || std::log2(double(s.size())) > double(message_length(p, y))) rep.oneway_to_set_ok = false;
    long slack = long(sdl_complexity(s, n)) - long(e.witness->size());
    rep.protocol_to_set_slack = first ? slack : std::max(rep.protocol_to_set_slack, slack);
    first = false;
  }
  // upper bracket: least C with one_way(a + C) <= n - a for every a < n
  for (std::size_t c = 0; c + n <= alpha_max + 1; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      if (rep.one_way.entries[a + c].value > double(n - a)) ok = false;
    if (ok) {
      rep.bracket_constant = long(c);
      break;
    }
  }
  for (const auto& e : rep.one_way.entries)
    if (e.value != kInfinity) {
      rep.first_finite_alpha = e.alpha;
      break;
    }
  return rep;
}

HardY find_hard_y(std::size_t n, std::size_t alpha, const Bits& x) {
  if (x.size() != n) throw UsageError("x must have n bits");
  BruteIndex idx(FunctionSpec::identity(n), alpha, false);
  HardY out;
  const long threshold = long(n) - long(alpha);
  out.total_protocols = idx.total_count(alpha);
  if (threshold >= 1) {
    const double per = std::pow(2.0, double(threshold)) - 1;
    out.bound_applies = double(out.total_protocols) * per < std::pow(2.0, double(n));
  }
  std::optional<std::pair<std::uint64_t, Cost>> worst;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
    Cost v = idx.value(Family::cc, x.to_index(), y).value;
    bool hard = !v.finite() || long(v.bits()) >= threshold;
    if (!hard) ++out.below;
    if (hard && !out.found) {
      out.found = true;
      out.y = Bits::from_index(y, n);
      out.value = v;
    }
    if (!worst || worst->second < v) worst = std::make_pair(y, v);
  }
  if (threshold <= 0) out.note = "n - alpha <= 0: every y qualifies";
  if (!out.found) {
    out.y = Bits::from_index(worst->first, n);
    out.value = worst->second;
    out.note = "no y reaches n - alpha; returning the first maximizer";
  }
  return out;
}

bool replay_recovers(const Protocol& p, const Bits& x, const Bits& y) {
  RunOutcome r = run(p, x, y);
  if (r.stuck()) return false;
  auto out = alice_replay(p, x, r.transcript);
  return out && *out == y;
}

}  // namespace cclab
