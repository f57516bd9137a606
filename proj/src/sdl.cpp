#include "cclab/sdl.hpp"

#include <algorithm>

#include "cclab/errors.hpp"

namespace cclab {

namespace {

void check_set(const SetMembers& s, std::size_t n) {
  if (s.empty()) throw UsageError("set must be nonempty");
  if (n == 0 || n > 16) throw UsageError("set universe needs 1 <= n <= 16");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >> n) throw UsageError("set member out of range");
    if (i && s[i] <= s[i - 1]) throw UsageError("set members must be strictly ascending");
  }
}

Bits list_code(const SetMembers& s, std::size_t n) {
  Bits c = Bits::from_string("1");
  c.append(Bits::from_index(s.size() - 1, n));
  for (auto v : s) c.append(Bits::from_index(v, n));
  return c;
}

Bits template_code(const std::string& pattern) {
  Bits c = Bits::from_string("0");
  for (char ch : pattern) c.append(Bits::from_string(ch == '0' ? "00" : ch == '1' ? "01" : "10"));
  return c;
}

}  // namespace

std::optional<std::string> template_of(const SetMembers& s, std::size_t n) {
  check_set(s, n);
  std::string pattern(n, '?');
  std::size_t free = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool seen[2] = {false, false};
    for (auto v : s) seen[(v >> (n - 1 - i)) & 1u] = true;
    pattern[i] = seen[0] && seen[1] ? '*' : seen[1] ? '1' : '0';
    if (pattern[i] == '*') ++free;
  }
  if (s.size() != (std::size_t{1} << free)) return std::nullopt;
  return pattern;
}

SetMembers template_members(const std::string& pattern) {
  SetMembers out;
  const std::size_t n = pattern.size();
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      char ch = pattern[i];
      bool bit = (v >> (n - 1 - i)) & 1u;
      if (ch == '*') continue;
      if (ch != '0' && ch != '1') throw UsageError("template symbols must be 0, 1 or *");
      ok = bit == (ch == '1');
    }
    if (ok) out.push_back(v);
  }
  return out;
}

Bits sdl_encode(const SetMembers& s, std::size_t n) {
  check_set(s, n);
  Bits list = list_code(s, n);
  if (auto t = template_of(s, n)) {
    Bits tc = template_code(*t);
    if (tc.size() <= list.size()) return tc;
  }
  return list;
}

std::size_t sdl_complexity(const SetMembers& s, std::size_t n) { return sdl_encode(s, n).size(); }

SetMembers sdl_decode(const Bits& code, std::size_t n) {
  if (code.empty()) throw DecodeError("empty set code");
  if (!code[0]) {
    if (code.size() != 1 + 2 * n) throw DecodeError("template code must have 1 + 2n bits");
    std::string pattern;
    for (std::size_t i = 0; i < n; ++i) {
      bool a = code[1 + 2 * i], b = code[2 + 2 * i];
      if (a && b) throw DecodeError("invalid template symbol 11 at position " + std::to_string(i));
      pattern += a ? '*' : b ? '1' : '0';
    }
    return template_members(pattern);
  }
  if (code.size() < 1 + n) throw DecodeError("list code truncated");
  std::size_t m = code.substr(1, n).to_index() + 1;
  if (code.size() != 1 + n + n * m) throw DecodeError("list code length does not match its count");
  SetMembers s;
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t v = code.substr(1 + n + n * i, n).to_index();
    if (!s.empty() && v <= s.back()) throw DecodeError("list members must be strictly ascending");
    s.push_back(v);
  }
  return s;
}

std::vector<EnumeratedSet> enumerate_sets(std::size_t n, std::size_t alpha) {
  if (n == 0 || n > 16) throw UsageError("set enumeration needs 1 <= n <= 16");
  std::vector<EnumeratedSet> out;
  if (1 + 2 * n <= alpha) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= 3;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::string pattern(n, '0');
      std::uint64_t v = t;
      for (std::size_t i = n; i-- > 0; v /= 3) pattern[i] = "01*"[v % 3];
      out.push_back({template_code(pattern), template_members(pattern)});
    }
  }
  const std::uint64_t universe = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m <= universe && 1 + n + n * m <= alpha; ++m) {
    // All m-subsets in lexicographic order of their member lists.
    SetMembers cur(m);
    for (std::uint64_t i = 0; i < m; ++i) cur[i] = i;
    for (;;) {
      out.push_back({list_code(cur, n), cur});
      std::size_t i = m;
      while (i > 0 && cur[i - 1] == universe - m + (i - 1)) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < m; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const EnumeratedSet& a, const EnumeratedSet& b) { return canonical_less(a.code, b.code); });
  return out;
}

bool contains(const SetMembers& s, std::uint64_t y) { return std::binary_search(s.begin(), s.end(), y); }

std::uint64_t rank_in(const SetMembers& s, std::uint64_t y) {
  auto it = std::lower_bound(s.begin(), s.end(), y);
  if (it == s.end() || *it != y) throw UsageError("value is not a member of the set");
  return static_cast<std::uint64_t>(it - s.begin());
}

}  // namespace cclab
