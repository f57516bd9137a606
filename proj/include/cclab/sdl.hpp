#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cclab/bits.hpp"

namespace cclab {

// A nonempty subset of {0,1}^n, as ascending MSB-first indices.
using SetMembers = std::vector<std::uint64_t>;

// Template form: tag 0, then 2 bits per position (00 -> 0, 01 -> 1, 10 -> *).
// List form: tag 1, m-1 in n bits, then the m members ascending, n bits each.
Bits sdl_encode(const SetMembers& s, std::size_t n);
SetMembers sdl_decode(const Bits& code, std::size_t n);
std::size_t sdl_complexity(const SetMembers& s, std::size_t n);

// Pattern over {0,1,*} when s is exactly the set of its matches.
std::optional<std::string> template_of(const SetMembers& s, std::size_t n);
SetMembers template_members(const std::string& pattern);

struct EnumeratedSet {
  Bits code;
  SetMembers members;
};

// Every valid code of length <= alpha, shortest first, then lexicographic.
std::vector<EnumeratedSet> enumerate_sets(std::size_t n, std::size_t alpha);

bool contains(const SetMembers& s, std::uint64_t y);
std::uint64_t rank_in(const SetMembers& s, std::uint64_t y);

}  // namespace cclab
