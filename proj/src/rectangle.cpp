#include "cclab/rectangle.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace cclab {

bool Rectangle::contains(std::uint64_t x, std::uint64_t y) const {
  return std::binary_search(rows.begin(), rows.end(), x) && std::binary_search(cols.begin(), cols.end(), y);
}

RectangleViolation::RectangleViolation(Bits transcript, std::vector<std::pair<std::uint64_t, std::uint64_t>> witnesses)
    : InternalError("transcript class '" + transcript.str() + "' is not a rectangle"),
      transcript_(std::move(transcript)),
      witnesses_(std::move(witnesses)) {}

TranscriptPartition transcript_partition(const Protocol& p, std::size_t cap_bits) {
  const Dims& d = p.dims();
  if (d.alice_bits + d.bob_bits > cap_bits)
    throw UsageError("grid of 2^" + std::to_string(d.alice_bits + d.bob_bits) + " cells exceeds the partition cap");
  const std::uint64_t na = std::uint64_t{1} << d.alice_bits, nb = std::uint64_t{1} << d.bob_bits;
  std::map<Bits, std::vector<std::pair<std::uint64_t, std::uint64_t>>> cells;
  TranscriptPartition part;
  part.cells = na * nb;
  for (std::uint64_t x = 0; x < na; ++x)
    for (std::uint64_t y = 0; y < nb; ++y) {
      RunOutcome r = run_index(p, x, y);
      if (r.stuck()) continue;
      ++part.covered;
      cells[r.transcript].emplace_back(x, y);
    }
  for (auto& [t, list] : cells) {
    std::set<std::uint64_t> rows, cols;
    for (auto [x, y] : list) rows.insert(x), cols.insert(y);
    Rectangle rect{{rows.begin(), rows.end()}, {cols.begin(), cols.end()}};
    if (list.size() != rect.size()) {
      std::set<std::pair<std::uint64_t, std::uint64_t>> in(list.begin(), list.end());
      for (auto [x, y1] : list)
        for (auto [x2, y] : list)
          if (!in.count({x, y})) throw RectangleViolation(t, {{x, y1}, {x2, y}, {x2, y1}, {x, y}});
    }
    part.classes.emplace(t, std::move(rect));
  }
  return part;
}

bool is_monochromatic(const Rectangle& r, const FunctionSpec& f) {
  if (r.rows.empty() || r.cols.empty()) return true;
  Bits first = f.at(r.rows[0], r.cols[0]);
  for (auto x : r.rows)
    for (auto y : r.cols)
      if (f.at(x, y) != first) return false;
  return true;
}

std::size_t gf2_rank(std::vector<std::uint64_t> rows) {
  std::size_t rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    std::uint64_t mask = std::uint64_t{1} << bit;
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](std::uint64_t v) { return v & mask; });
    if (pivot == rows.end()) continue;
    std::swap(rows[rank], *pivot);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && (rows[i] & mask)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

std::size_t gf2_rank(const std::vector<Bits>& vectors) {
  std::vector<std::uint64_t> rows;
  for (const auto& v : vectors) rows.push_back(v.to_index());
  return gf2_rank(std::move(rows));
}

IpAudit ip_rectangle_audit(const Protocol& p) {
  const std::size_t n = p.dims().alice_bits;
  if (!(p.dims() == Dims::symmetric(n))) throw UsageError("inner-product audit needs a protocol over (n, n)");
  FunctionSpec ip = FunctionSpec::inner_product(n);
  TranscriptPartition part = transcript_partition(p);
  IpAudit audit;
  audit.n = n;
  for (const auto& [t, rect] : part.classes) {
    std::map<Bits, std::vector<std::uint64_t>> by_value;
    for (auto x : rect.rows) by_value[*run_index(p, x, rect.cols[0]).output].push_back(x);
    for (auto& [value, xs] : by_value) {
      IpClassCheck c;
      c.transcript = t;
      c.value = value;
      c.rect = {xs, rect.cols};
      c.monochromatic = is_monochromatic(c.rect, ip);
      if (!c.monochromatic) {
        ++audit.non_monochromatic;
        audit.classes.push_back(std::move(c));
        continue;
      }
      bool one = ip.at(xs[0], rect.cols[0])[n - 1];
      std::vector<std::uint64_t> shifted = xs;
      if (one)
        for (auto& x : shifted) x ^= xs[0];
      c.rank_rows = gf2_rank(shifted);
      c.rank_cols = gf2_rank(rect.cols);
      c.rank_ok = c.rank_rows + c.rank_cols <= n;
      c.count_ok = c.rect.size() <= (std::uint64_t{1} << n);
      if (!c.rank_ok || !c.count_ok) ++audit.violations;
      audit.max_product = std::max(audit.max_product, c.rect.size());
      audit.classes.push_back(std::move(c));
    }
  }
  return audit;
}

namespace {

MonoRectangle greedy_mono(const FunctionTable& t) {
  const std::uint64_t side = t.side();
  MonoRectangle best;
  best.exact = false;
  for (std::uint64_t seed = 0; seed < side; ++seed)
    for (std::uint64_t y0 = 0; y0 < side; ++y0) {
      const Bits& color = t.at(seed, y0);
      std::vector<std::uint64_t> rows{seed}, cols;
      for (std::uint64_t y = 0; y < side; ++y)
        if (t.at(seed, y) == color) cols.push_back(y);
      for (;;) {
        std::uint64_t best_row = side, best_size = rows.size() * cols.size();
        std::vector<std::uint64_t> best_cols;
        for (std::uint64_t x = 0; x < side; ++x) {
          if (std::find(rows.begin(), rows.end(), x) != rows.end()) continue;
          std::vector<std::uint64_t> kept;
          for (auto y : cols)
            if (t.at(x, y) == color) kept.push_back(y);
          if ((rows.size() + 1) * kept.size() > best_size) {
            best_size = (rows.size() + 1) * kept.size();
            best_row = x;
            best_cols = kept;
          }
        }
        if (best_row == side) break;
        rows.push_back(best_row);
        cols = best_cols;
      }
      if (rows.size() * cols.size() > best.size) {
        std::sort(rows.begin(), rows.end());
        best.size = rows.size() * cols.size();
        best.rect = {rows, cols};
        best.color = color;
      }
    }
  return best;
}

}  // namespace

MonoRectangle max_monochromatic_rectangle(const FunctionTable& t) {
  t.validate();
  if (t.n > kExactMonoMaxN) return greedy_mono(t);
  const std::uint64_t side = t.side();
  std::set<Bits> colors(t.cells.begin(), t.cells.end());
  MonoRectangle best;
  for (const Bits& color : colors) {
    std::vector<std::uint32_t> row_mask(side, 0);
    for (std::uint64_t x = 0; x < side; ++x)
      for (std::uint64_t y = 0; y < side; ++y)
        if (t.at(x, y) == color) row_mask[x] |= 1u << y;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << side); ++subset) {
      std::uint32_t cols = ~0u;
      for (std::uint64_t x = 0; x < side; ++x)
        if (subset >> x & 1u) cols &= row_mask[x];
      std::uint64_t size = std::uint64_t(std::popcount(subset)) * std::popcount(cols);
      if (size <= best.size) continue;
      best.size = size;
      best.color = color;
      best.rect = {};
      for (std::uint64_t x = 0; x < side; ++x)
        if (subset >> x & 1u) best.rect.rows.push_back(x);
      for (std::uint64_t y = 0; y < side; ++y)
        if (cols >> y & 1u) best.rect.cols.push_back(y);
    }
  }
  return best;
}

DiagonalReport equality_diagonal_bound(const Protocol& p) {
  const std::size_t n = p.dims().alice_bits;
  if (!(p.dims() == Dims::symmetric(n))) throw UsageError("equality audit needs a protocol over (n, n)");
  check_grid(p.dims());
  DiagonalReport rep;
  std::set<Bits> seen;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    Bits t = run_index(p, x, x).transcript;
    if (!seen.insert(t).second) rep.distinct = false;
    rep.max_length = std::max(rep.max_length, t.size());
    ++rep.length_histogram[t.size()];
    rep.transcripts.push_back(std::move(t));
  }
  return rep;
}

}  // namespace cclab
