#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cclab {

// Bit string, position 0 first. Strings of equal length compare
// lexicographically, which matches the order of their MSB-first index.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n, bool value = false) : bits_(n, value) {}

  static Bits from_string(std::string_view s);
  static Bits from_index(std::uint64_t index, std::size_t n);
  // "<len>:<hex>" with the bit string packed MSB-first, zero padded on the right.
  static Bits from_hex(std::string_view tagged);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool v) { bits_[i] = v; }
  void push_back(bool v) { bits_.push_back(v); }
  void pop_back() { bits_.pop_back(); }

  Bits& append(const Bits& other);
  Bits concat(const Bits& other) const;
  Bits substr(std::size_t pos, std::size_t len) const;
  Bits prefix(std::size_t len) const { return substr(0, len); }
  bool starts_with(const Bits& p) const;

  // Requires size() <= 63.
  std::uint64_t to_index() const;
  std::string str() const;
  std::string hex() const;

  bool operator==(const Bits&) const = default;
  std::strong_ordering operator<=>(const Bits& o) const;

 private:
  std::vector<bool> bits_;
};

// Shorter first, then lexicographic. The enumeration order for codes.
inline bool canonical_less(const Bits& a, const Bits& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Bits operator^(const Bits& a, const Bits& b);

// ceil(log2(v)) for v >= 1; 0 for v <= 1.
unsigned ceil_log2(std::uint64_t v);

// Width of an index field addressing `count` positions.
inline unsigned index_width(std::size_t count) { return ceil_log2(count); }

}  // namespace cclab
