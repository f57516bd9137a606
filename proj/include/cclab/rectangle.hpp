#pragma once

#include <map>
#include <string>
#include <vector>

#include "cclab/errors.hpp"
#include "cclab/function_spec.hpp"
#include "cclab/protocol.hpp"

namespace cclab {

// X x Y over MSB-first input indices, both sorted ascending.
struct Rectangle {
  std::vector<std::uint64_t> rows;
  std::vector<std::uint64_t> cols;

  std::uint64_t size() const { return rows.size() * cols.size(); }
  bool contains(std::uint64_t x, std::uint64_t y) const;
  bool operator==(const Rectangle&) const = default;
};

struct TranscriptPartition {
  std::map<Bits, Rectangle> classes;
  std::uint64_t covered = 0;  // non-stuck cells
  std::uint64_t cells = 0;    // grid size
};

// A transcript class that is not a product set. Carries the transcript and
// four cells: (x, y1) and (x2, y) inside the class, (x2, y1), and (x, y) outside.
class RectangleViolation : public InternalError {
 public:
  RectangleViolation(Bits transcript, std::vector<std::pair<std::uint64_t, std::uint64_t>> witnesses);
  const Bits& transcript() const { return transcript_; }
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& witnesses() const { return witnesses_; }

 private:
  Bits transcript_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> witnesses_;
};

inline constexpr std::size_t kRectangleCapBits = 16;  // alice_bits + bob_bits

// Groups non-stuck cells by transcript; throws RectangleViolation when a class
// is not a rectangle.
TranscriptPartition transcript_partition(const Protocol& p, std::size_t cap_bits = kRectangleCapBits);

bool is_monochromatic(const Rectangle& r, const FunctionSpec& f);

std::size_t gf2_rank(std::vector<std::uint64_t> rows);
std::size_t gf2_rank(const std::vector<Bits>& vectors);

struct IpClassCheck {
  Bits transcript;
  Bits value;  // Alice's output on the subclass
  Rectangle rect;
  std::size_t rank_rows = 0;  // after translation for value-1 classes
  std::size_t rank_cols = 0;
  bool monochromatic = true;
  bool rank_ok = true;
  bool count_ok = true;
};

struct IpAudit {
  std::size_t n = 0;
  std::vector<IpClassCheck> classes;
  std::uint64_t max_product = 0;
  std::size_t violations = 0;
  std::size_t non_monochromatic = 0;
  bool ok() const { return violations == 0 && non_monochromatic == 0; }
};

// Refines each transcript class by Alice's output and checks
// rank(X) + rank(Y) <= n and |X|·|Y| <= 2^n (value-1 classes translated by one of their rows).
IpAudit ip_rectangle_audit(const Protocol& p);

struct MonoRectangle {
  std::uint64_t size = 0;
  Rectangle rect;
  Bits color;
  bool exact = true;  // false: greedy, a lower bound only
};

inline constexpr std::size_t kExactMonoMaxN = 4;
MonoRectangle max_monochromatic_rectangle(const FunctionTable& t);

struct DiagonalReport {
  std::vector<Bits> transcripts;  // transcript on (x, x), by x
  bool distinct = true;
  std::size_t max_length = 0;
  std::map<std::size_t, std::size_t> length_histogram;
};

// For an equality protocol: diagonal transcripts and whether they are pairwise distinct.
DiagonalReport equality_diagonal_bound(const Protocol& p);

}  // namespace cclab
