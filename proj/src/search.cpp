#include "cclab/search.hpp"

#include <algorithm>

#include "cclab/errors.hpp"

namespace cclab {

std::string family_name(Family f) {
  switch (f) {
    case Family::tcc: return "tcc";
    case Family::cc: return "cc";
    case Family::pcc: return "pcc";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "tcc") return Family::tcc;
  if (s == "cc") return Family::cc;
  if (s == "pcc") return Family::pcc;
  throw UsageError("unknown measure '" + s + "' (expected tcc | cc | pcc)");
}

namespace {

using Lens = std::bitset<kSearchMaxLen + 1>;

Lens convolve(const Lens& a, const Lens& b) {
  Lens out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) out |= b << i;
  return out;
}

// Masks of the inputs whose bit i is 1, for an m-bit input.
std::vector<std::uint64_t> bit_masks(std::size_t m) {
  std::vector<std::uint64_t> out(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << m); ++u)
      if ((u >> (m - 1 - i)) & 1u) out[i] |= std::uint64_t{1} << u;
  return out;
}

}  // namespace

RectangleSearch::RectangleSearch(const FunctionSpec& f, Family family, bool one_way, std::uint64_t x,
                                 std::uint64_t y, std::size_t max_len)
    : f_(f),
      dims_(Dims::symmetric(f.n())),
      family_(family),
      one_way_(one_way),
      tx_(x),
      ty_(y),
      max_len_(max_len),
      cap_(4 * f.n()) {
  const std::size_t n = f.n();
  if (n == 0 || n > kSearchMaxInputBits)
    throw UsageError("rectangle search supports 1 <= n <= " + std::to_string(kSearchMaxInputBits));
  if (max_len > kSearchMaxLen) throw UsageError("rectangle search supports codes of at most 127 bits");
  const std::uint64_t side = std::uint64_t{1} << n;
  if (x >= side || y >= side) throw UsageError("target input out of range");
  value_.resize(side * side);
  xprefix_.resize(side);
  for (std::uint64_t a = 0; a < side; ++a) {
    xprefix_[a] = Bits::from_index(a, n).prefix(dims_.out_bits).to_index();
    for (std::uint64_t b = 0; b < side; ++b) value_[a * side + b] = f.at(a, b).to_index();
  }
}

bool RectangleSearch::holds_target(const Key& k) const { return (k.xs >> tx_ & 1u) && (k.ys >> ty_ & 1u); }

RectangleSearch::Key RectangleSearch::child_key(std::uint64_t xs, std::uint64_t ys, std::uint8_t depth) const {
  if (xs == 0 || ys == 0) return Key{0, 0, 0};
  return Key{xs, ys, depth};
}

bool RectangleSearch::stuck_ok(const Key& k) const {
  if (empty(k)) return true;
  return family_ == Family::pcc && !holds_target(k);
}

std::vector<RectangleSearch::Split> RectangleSearch::splits(const Key& k) const {
  std::vector<Split> out;
  const bool dead = empty(k) || k.depth >= cap_;
  for (Party owner : {Party::alice, Party::bob}) {
    if (owner == Party::alice && one_way_) continue;
    const std::size_t m = owner == Party::alice ? dims_.alice_bits : dims_.bob_bits;
    const std::uint64_t mine = owner == Party::alice ? k.xs : k.ys;
    const std::uint64_t size = std::uint64_t{1} << m;
    const Bits tag = Bits::from_string(owner == Party::alice ? "00" : "01");
    auto add = [&](Bits header, std::uint64_t ones) {
      Split s{tag.concat(header), {Key{0, 0, 0}, Key{0, 0, 0}}};
      if (!dead) {
        std::uint64_t zeros = mine & ~ones;
        ones &= mine;
        std::uint8_t d = static_cast<std::uint8_t>(k.depth + 1);
        if (owner == Party::alice) {
          s.child[0] = child_key(zeros, k.ys, d);
          s.child[1] = child_key(ones, k.ys, d);
        } else {
          s.child[0] = child_key(k.xs, zeros, d);
          s.child[1] = child_key(k.xs, ones, d);
        }
      }
      out.push_back(std::move(s));
    };
    add(Bits::from_string("000"), 0);
    add(Bits::from_string("001"), ~std::uint64_t{0});
    auto masks = bit_masks(m);
    const unsigned w = index_width(m);
    for (std::size_t i = 0; i < m; ++i) add(Bits::from_string("010").concat(Bits::from_index(i, w)), masks[i]);
    for (std::size_t i = 0; i < m; ++i) add(Bits::from_string("011").concat(Bits::from_index(i, w)), ~masks[i]);
    if (5 + size <= max_len_)
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << size); ++t) {
        std::uint64_t ones = 0;
        for (std::uint64_t u = 0; u < size; ++u)
          if ((t >> (size - 1 - u)) & 1u) ones |= std::uint64_t{1} << u;
        add(Bits::from_string("100").concat(Bits::from_index(t, size)), ones);
      }
  }
  return out;
}

std::vector<Bits> RectangleSearch::leaves(const Key& k, bool all, std::size_t only_len) const {
  const std::size_t n = dims_.alice_bits, out_bits = dims_.out_bits;
  const std::uint64_t side = std::uint64_t{1} << n;
  // Cells whose answer is constrained.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cells;
  if (!empty(k)) {
    if (family_ == Family::tcc) {
      for (std::uint64_t x = 0; x < side; ++x)
        for (std::uint64_t y = 0; y < side; ++y)
          if ((k.xs >> x & 1u) && (k.ys >> y & 1u)) cells.emplace_back(x, y);
    } else if (holds_target(k)) {
      cells.emplace_back(tx_, ty_);
    }
  }
  auto val = [&](std::uint64_t x, std::uint64_t y) { return value_[x * side + y]; };
  std::vector<Bits> out;
  auto emit = [&](Bits code) {
    if (only_len != SIZE_MAX && code.size() != only_len) return;
    if (!all && only_len != SIZE_MAX && !out.empty()) return;
    out.push_back(std::move(code));
  };
  const std::uint64_t strings = std::uint64_t{1} << out_bits;
  // const-s
  for (std::uint64_t s = 0; s < strings; ++s) {
    bool ok = std::all_of(cells.begin(), cells.end(), [&](auto c) { return val(c.first, c.second) == s; });
    if (ok) {
      emit(Bits::from_string("1000").concat(Bits::from_index(s, out_bits)));
      if (!all) break;
    }
  }
  // copy-x
  if (std::all_of(cells.begin(), cells.end(), [&](auto c) { return val(c.first, c.second) == xprefix_[c.first]; }))
    emit(Bits::from_string("1001"));
  // xor-mask
  for (std::uint64_t m = 0; m < strings; ++m) {
    bool ok = std::all_of(cells.begin(), cells.end(),
                          [&](auto c) { return (val(c.first, c.second) ^ xprefix_[c.first]) == m; });
    if (ok) {
      emit(Bits::from_string("1010").concat(Bits::from_index(m, out_bits)));
      if (!all) break;
    }
  }
  // table
  const std::size_t table_len = 4 + out_bits * side;
  if (table_len <= max_len_ && (only_len == SIZE_MAX || only_len == table_len)) {
    std::vector<std::int64_t> row(side, -1);
    bool ok = true;
    for (auto [x, y] : cells) {
      std::int64_t v = static_cast<std::int64_t>(val(x, y));
      if (row[x] >= 0 && row[x] != v) ok = false;
      row[x] = v;
    }
    if (ok) {
      std::vector<std::uint64_t> free_rows;
      for (std::uint64_t x = 0; x < side; ++x)
        if (row[x] < 0) free_rows.push_back(x);
      const std::size_t free_bits = out_bits * free_rows.size();
      if (all && free_bits > 20) throw UsageError("too many free output-table rows to list");
      const std::uint64_t variants = all ? (std::uint64_t{1} << free_bits) : 1;
      for (std::uint64_t v = 0; v < variants; ++v) {
        Bits code = Bits::from_string("1011");
        std::size_t j = 0;
        for (std::uint64_t x = 0; x < side; ++x) {
          std::uint64_t r;
          if (row[x] >= 0) {
            r = static_cast<std::uint64_t>(row[x]);
          } else {
            r = (v >> (free_bits - out_bits * (j + 1))) & (strings - 1);
            ++j;
          }
          code.append(Bits::from_index(r, out_bits));
        }
        emit(std::move(code));
      }
    }
  }
  return out;
}

const RectangleSearch::Entry& RectangleSearch::entry(const Key& k) {
  auto it = memo_.find(k);
  if (it != memo_.end()) return it->second;
  Entry e = compute(k);
  return memo_.emplace(k, std::move(e)).first->second;
}

RectangleSearch::Entry RectangleSearch::compute(const Key& k) {
  Entry e;
  e.best.fill(kNone);
  const bool target = holds_target(k);
  for (const Bits& leaf : leaves(k, false)) {
    if (leaf.size() > max_len_) continue;
    e.any.set(leaf.size());
    if (target) e.best[leaf.size()] = 0;
  }
  if (stuck_ok(k)) e.any.set(2);
  if (empty(k)) {
    // Syntactic lengths: children are unreachable too, so lengths build up bottom-up.
    std::vector<std::size_t> heads;
    for (const auto& s : splits(k)) heads.push_back(s.header.size());
    std::sort(heads.begin(), heads.end());
    heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
    for (std::size_t len = 0; len <= max_len_; ++len) {
      if (e.any[len]) continue;
      for (std::size_t h : heads) {
        if (h > len) continue;
        for (std::size_t l0 = 0; l0 + h <= len && !e.any[len]; ++l0)
          if (e.any[l0] && e.any[len - h - l0]) e.any.set(len);
      }
    }
    return e;
  }
  const bool dead = k.depth >= cap_;
  if (dead && !stuck_ok(k)) return e;
  // Distinct (split, header length) pairs.
  struct Option {
    Key c0, c1;
    std::size_t h;
    bool operator==(const Option& o) const { return c0 == o.c0 && c1 == o.c1 && h == o.h; }
  };
  std::vector<Option> options;
  for (const auto& s : splits(k)) {
    Option o{s.child[0], s.child[1], s.header.size()};
    if (std::find(options.begin(), options.end(), o) == options.end()) options.push_back(o);
  }
  for (const auto& o : options) {
    const Entry& e0 = entry(o.c0);
    const Entry& e1 = entry(o.c1);
    e.any |= convolve(e0.any, e1.any) << o.h;
    if (!target || dead) continue;
    const bool first = holds_target(o.c0);
    const Entry& et = first ? e0 : e1;
    const Entry& eo = first ? e1 : e0;
    for (std::size_t lt = 0; lt + o.h <= max_len_; ++lt) {
      if (et.best[lt] == kNone) continue;
      std::uint8_t v = static_cast<std::uint8_t>(et.best[lt] + 1);
      for (std::size_t lo = 0; lt + lo + o.h <= max_len_; ++lo)
        if (eo.any[lo]) {
          std::size_t len = lt + lo + o.h;
          if (v < e.best[len]) e.best[len] = v;
        }
    }
  }
  return e;
}

bool RectangleSearch::any_exact(std::size_t len) {
  if (len > max_len_) return false;
  return entry(Key{(std::uint64_t{1} << (std::uint64_t{1} << dims_.alice_bits)) - 1,
                   (std::uint64_t{1} << (std::uint64_t{1} << dims_.bob_bits)) - 1, 0})
      .any[len];
}

Cost RectangleSearch::best_exact(std::size_t len) {
  if (len > max_len_) return Cost::inf();
  const Entry& e = entry(Key{(std::uint64_t{1} << (std::uint64_t{1} << dims_.alice_bits)) - 1,
                             (std::uint64_t{1} << (std::uint64_t{1} << dims_.bob_bits)) - 1, 0});
  return e.best[len] == kNone ? Cost::inf() : Cost(e.best[len]);
}

bool RectangleSearch::child_ok(const Key& k, std::size_t len, int need) {
  const Entry& e = entry(k);
  if (need < 0) return e.any[len];
  return e.best[len] == need;
}

std::optional<Bits> RectangleSearch::lexmin(const Key& k, std::size_t len, bool need_best) {
  LenKey lk{k, static_cast<std::uint16_t>(len), need_best};
  auto it = lexmin_memo_.find(lk);
  if (it != lexmin_memo_.end()) return it->second;
  const Entry& e = entry(k);
  std::optional<Bits> result;
  const int v = need_best ? (e.best[len] == kNone ? -2 : e.best[len]) : -1;
  if (v == -2 || (!need_best && !e.any[len])) {
    lexmin_memo_.emplace(lk, result);
    return result;
  }
  const bool dead = !empty(k) && k.depth >= cap_;
  if (!(dead && (need_best || !stuck_ok(k)))) {
    for (const auto& s : splits(k)) {
      const std::size_t h = s.header.size();
      if (h > len) continue;
      const std::size_t rest = len - h;
      int need0 = -1, need1 = -1;
      if (need_best) {
        if (v == 0) break;
        (holds_target(s.child[0]) ? need0 : need1) = v - 1;
      }
      std::optional<Bits> c0;
      for (std::size_t l0 = 0; l0 <= rest; ++l0) {
        if (!child_ok(s.child[0], l0, need0) || !child_ok(s.child[1], rest - l0, need1)) continue;
        auto cand = lexmin(s.child[0], l0, need0 >= 0);
        if (!c0 || *cand < *c0) c0 = cand;
      }
      if (!c0) continue;
      auto c1 = lexmin(s.child[1], rest - c0->size(), need1 >= 0);
      result = s.header.concat(*c0).concat(*c1);
      break;
    }
  }
  if (!result && (!need_best || v == 0)) {
    auto ls = leaves(k, false, len);
    if (!ls.empty()) result = ls.front();
  }
  if (!result && !need_best && len == 2 && stuck_ok(k)) result = Bits::from_string("11");
  if (!result) throw InternalError("search table and witness reconstruction disagree");
  lexmin_memo_.emplace(lk, result);
  return result;
}

Bits RectangleSearch::witness_exact(std::size_t len) {
  if (!best_exact(len).finite()) throw UsageError("no code of that length reaches the target");
  Key root{(std::uint64_t{1} << (std::uint64_t{1} << dims_.alice_bits)) - 1,
           (std::uint64_t{1} << (std::uint64_t{1} << dims_.bob_bits)) - 1, 0};
  return *lexmin(root, len, true);
}

RectangleSearch::Result RectangleSearch::best_within(std::size_t alpha) {
  Result r;
  std::size_t at = 0;
  for (std::size_t len = 0; len <= std::min(alpha, max_len_); ++len) {
    Cost c = best_exact(len);
    if (c < r.value) {
      r.value = c;
      at = len;
    }
  }
  if (r.value.finite()) r.witness = witness_exact(at);
  return r;
}

std::vector<Bits> RectangleSearch::all_exact(std::size_t len, std::size_t limit) {
  struct Gen {
    RectangleSearch& s;
    std::size_t limit;

    const std::vector<Bits>& operator()(const Key& k, std::size_t len) {
      LenKey lk{k, static_cast<std::uint16_t>(len), false};
      auto it = s.all_memo_.find(lk);
      if (it != s.all_memo_.end()) return it->second;
      std::vector<Bits> out;
      const Entry& e = s.entry(k);
      if (e.any[len]) {
        const bool dead = !s.empty(k) && k.depth >= s.cap_;
        if (!dead || s.stuck_ok(k))
          for (const auto& sp : s.splits(k)) {
            const std::size_t h = sp.header.size();
            if (h > len) continue;
            for (std::size_t l0 = 0; l0 + h <= len; ++l0) {
              if (!s.entry(sp.child[0]).any[l0] || !s.entry(sp.child[1]).any[len - h - l0]) continue;
              const auto& a = (*this)(sp.child[0], l0);
              const auto& b = (*this)(sp.child[1], len - h - l0);
              if (s.all_count_ + a.size() * b.size() > limit)
                throw UsageError("more than " + std::to_string(limit) + " codes; lower alpha");
              s.all_count_ += a.size() * b.size();
              for (const auto& ca : a)
                for (const auto& cb : b) out.push_back(sp.header.concat(ca).concat(cb));
            }
          }
        for (auto& l : s.leaves(k, true, len)) out.push_back(std::move(l));
        if (len == 2 && s.stuck_ok(k)) out.push_back(Bits::from_string("11"));
        std::sort(out.begin(), out.end());
      }
      return s.all_memo_.emplace(lk, std::move(out)).first->second;
    }
  };
  if (len > max_len_) return {};
  Key root{(std::uint64_t{1} << (std::uint64_t{1} << dims_.alice_bits)) - 1,
           (std::uint64_t{1} << (std::uint64_t{1} << dims_.bob_bits)) - 1, 0};
  return Gen{*this, limit}(root, len);
}

std::vector<Bits> enumerate_correct(const FunctionSpec& f, std::size_t alpha, bool one_way, std::size_t limit) {
  RectangleSearch s(f, Family::tcc, one_way, 0, 0, alpha);
  std::vector<Bits> out;
  for (std::size_t len = 0; len <= alpha; ++len) {
    auto codes = s.all_exact(len, limit);
    out.insert(out.end(), codes.begin(), codes.end());
  }
  return out;
}

}  // namespace cclab
