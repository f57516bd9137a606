#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cclab/help_bits.hpp"
#include "cclab/search.hpp"
#include "cclab/sdl.hpp"

namespace cclab {

struct Measure {
  Family family = Family::tcc;
  bool one_way = false;
  HelpSpec help;
  std::size_t alpha = 0;
};

struct IndividualResult {
  Cost value;
  std::optional<Bits> witness;
  std::string route;  // "enumeration" or "search"
};

// Brute values for every input pair and every budget up to alpha, from one
// pass over the enumerated protocols.
class BruteIndex {
 public:
  BruteIndex(const FunctionSpec& f, std::size_t alpha, bool one_way, HelpSpec help = {});

  IndividualResult value(Family fam, std::uint64_t x, std::uint64_t y, std::size_t alpha) const;
  IndividualResult value(Family fam, std::uint64_t x, std::uint64_t y) const { return value(fam, x, y, alpha_); }
  // Total protocols (no stuck on any extended input pair) with code <= alpha.
  std::size_t total_count(std::size_t alpha) const;
  std::size_t protocol_count() const { return lengths_.size(); }
  std::size_t alpha() const { return alpha_; }
  const Dims& dims() const { return dims_; }

 private:
  struct Step {
    std::size_t len;
    Cost value;
    Bits code;
  };
  Dims dims_;
  std::size_t n_;
  std::size_t alpha_;
  std::vector<std::size_t> lengths_;
  std::vector<std::size_t> total_lengths_;
  std::vector<std::vector<Step>> steps_[3];  // [family][x * side + y]
};

// Brute enumeration when alpha is within the cap, otherwise the rectangle search.
IndividualResult individual_cc(const Measure& m, const FunctionSpec& f, const Bits& x, const Bits& y);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct ProfileEntry {
  std::size_t alpha = 0;
  double value = kInfinity;
  std::optional<Bits> witness;
};

struct ComplexityProfile {
  std::string measure;  // e.g. "h_y", "tcc-1way"
  std::string code_kind;  // "sdl" or "pdl"
  Bits target;
  std::vector<ProfileEntry> entries;

  bool nonincreasing() const;
  double at(std::size_t alpha) const;
};

// h_y(alpha): least log2|S| over SDL codes of at most alpha bits with y in S.
ComplexityProfile structure_function_profile(const Bits& y, std::size_t alpha_max);

// One-way protocol: Bob sends the shortest transcript of p consistent with his
// y over all x; Alice reads y off the transcript. p must compute Identity everywhere.
Protocol one_way_from_two_way(const Protocol& p);

// Flag 1 + rank of y in S (ceil(log2|S|) bits) when y is in S, else flag 0 + y.
Protocol set_to_oneway(const SetMembers& s, std::size_t n);
// Inputs whose message has the same length as y's message.
SetMembers oneway_to_set(const Protocol& p, const Bits& y);
std::size_t message_length(const Protocol& one_way, const Bits& y);

struct TccIdentityReport {
  ComplexityProfile one_way;   // TCC^alpha_I(y), one-way
  ComplexityProfile two_way;   // TCC^alpha_I(x, y) at the reported x
  ComplexityProfile h;         // structure function of y
  std::size_t x = 0;
  bool equal_every_x = true;   // one-way value == two-way value at every alpha and x
  std::size_t budget_shift = 0;          // least d with one_way(a + d) <= two_way(a) for all a
  long conversion_slack = 0;             // max |code(P')| - |code(P)| over two-way witnesses
  bool set_bound_ok = true;              // one_way(a) <= best set_to_oneway message within a
  long set_to_protocol_slack = 0;        // max |code(set_to_oneway(S))| - |code(S)|
  bool oneway_to_set_ok = true;          // log2|S| <= message for each one-way witness
  long protocol_to_set_slack = 0;        // max |code(S)| - |code(P)| over one-way witnesses
  std::optional<long> bracket_constant;  // least C with one_way(a + C) <= n - a for all a < n
  std::size_t first_finite_alpha = 0;
};

// Needs n <= 3 and alpha_max <= 127.
TccIdentityReport tcc_identity_profile(const Bits& y, std::size_t alpha_max, std::optional<Bits> x = std::nullopt);

struct HardY {
  Bits y;
  Cost value;
  bool found = false;              // value >= n - alpha
  std::size_t below = 0;           // #y with value < n - alpha
  std::size_t total_protocols = 0; // total protocols within alpha
  bool bound_applies = false;      // total_protocols * (2^{n-alpha} - 1) < 2^n
  std::string note;
};

// First y (lexicographic) with CC^alpha_I(x, y) >= n - alpha.
HardY find_hard_y(std::size_t n, std::size_t alpha, const Bits& x);

// Alice, knowing x, the protocol and the transcript on (x, y), recovers y.
bool replay_recovers(const Protocol& p, const Bits& x, const Bits& y);

}  // namespace cclab
