#include "cclab/bits.hpp"

#include "cclab/errors.hpp"

namespace cclab {

Bits Bits::from_string(std::string_view s) {
  Bits b;
  b.bits_.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw UsageError("bit string may contain only 0 and 1: '" + std::string(s) + "'");
    b.bits_.push_back(c == '1');
  }
  return b;
}

Bits Bits::from_index(std::uint64_t index, std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b.bits_[n - 1 - i] = (index >> i) & 1u;
  return b;
}

Bits Bits::from_hex(std::string_view tagged) {
  auto colon = tagged.find(':');
  if (colon == std::string_view::npos) throw UsageError("hex code must look like <len>:<hex>");
  std::size_t len = 0;
  try {
    len = std::stoull(std::string(tagged.substr(0, colon)));
  } catch (const std::exception&) {
    throw UsageError("bad length in hex code '" + std::string(tagged) + "'");
  }
  auto hex = tagged.substr(colon + 1);
  if (hex.size() != (len + 3) / 4) throw UsageError("hex digits do not match length in '" + std::string(tagged) + "'");
  Bits b(len);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    char c = hex[d];
    unsigned v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw UsageError("bad hex digit in '" + std::string(tagged) + "'");
    for (unsigned k = 0; k < 4; ++k) {
      std::size_t pos = 4 * d + k;
      bool bit = (v >> (3 - k)) & 1u;
      if (pos < len) b.bits_[pos] = bit;
      else if (bit) throw UsageError("nonzero padding in '" + std::string(tagged) + "'");
    }
  }
  return b;
}

Bits& Bits::append(const Bits& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
  return *this;
}

Bits Bits::concat(const Bits& other) const {
  Bits r = *this;
  r.append(other);
  return r;
}

Bits Bits::substr(std::size_t pos, std::size_t len) const {
  if (pos + len > size()) throw UsageError("substr out of range");
  Bits r;
  r.bits_.assign(bits_.begin() + pos, bits_.begin() + pos + len);
  return r;
}

bool Bits::starts_with(const Bits& p) const {
  if (p.size() > size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (bits_[i] != p.bits_[i]) return false;
  return true;
}

std::uint64_t Bits::to_index() const {
  if (size() > 63) throw UsageError("bit string too long for an index");
  std::uint64_t v = 0;
  for (bool b : bits_) v = (v << 1) | (b ? 1u : 0u);
  return v;
}

std::string Bits::str() const {
  std::string s;
  s.reserve(size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::string Bits::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s = std::to_string(size()) + ":";
  for (std::size_t d = 0; d < (size() + 3) / 4; ++d) {
    unsigned v = 0;
    for (unsigned k = 0; k < 4; ++k) {
      std::size_t pos = 4 * d + k;
      v = (v << 1) | ((pos < size() && bits_[pos]) ? 1u : 0u);
    }
    s.push_back(digits[v]);
  }
  return s;
}

std::strong_ordering Bits::operator<=>(const Bits& o) const {
  std::size_t n = std::min(size(), o.size());
  for (std::size_t i = 0; i < n; ++i)
    if (bits_[i] != o.bits_[i]) return bits_[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  return size() <=> o.size();
}

Bits operator^(const Bits& a, const Bits& b) {
  if (a.size() != b.size()) throw UsageError("xor of bit strings of different length");
  Bits r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.set(i, a[i] != b[i]);
  return r;
}

unsigned ceil_log2(std::uint64_t v) {
  unsigned w = 0;
  while (w < 64 && (std::uint64_t{1} << w) < v) ++w;
  return w;
}

}  // namespace cclab
