#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace cclab {

// Communication cost in bits, or infinity. Infinity absorbs addition and
// compares above every finite value.
class Cost {
 public:
  constexpr Cost() = default;  // infinity
  constexpr explicit Cost(std::uint32_t bits) : v_(bits) {}

  static constexpr Cost inf() { return Cost(); }

  constexpr bool finite() const { return v_ != kInf; }
  constexpr std::uint32_t bits() const { return v_; }

  constexpr Cost operator+(std::uint32_t k) const { return finite() ? Cost(v_ + k) : Cost(); }
  constexpr auto operator<=>(const Cost&) const = default;

  std::string str() const { return finite() ? std::to_string(v_) : "inf"; }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t v_ = kInf;
};

inline constexpr Cost min(Cost a, Cost b) { return a < b ? a : b; }

inline std::ostream& operator<<(std::ostream& os, Cost c) { return os << c.str(); }

}  // namespace cclab
