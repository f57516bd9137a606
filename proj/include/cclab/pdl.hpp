#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cclab/protocol.hpp"

namespace cclab {

inline constexpr std::uint8_t kPdlVersion = 1;
inline constexpr std::size_t kDefaultBudgetCap = 20;

// Canonical code: every node function is replaced by the shortest equivalent
// kind (ties to the smaller code). Rejects computed functions and help switches.
Bits pdl_encode(const Protocol& p);
Protocol pdl_decode(const Bits& code, const Dims& d, std::optional<std::size_t> depth_cap = std::nullopt);
Protocol pdl_decode(const Bits& code, std::size_t n);
std::size_t pdl_complexity(const Protocol& p);

// Longest code enumerate_protocols accepts: 20, or CCLAB_BUDGET_CAP if set
// (a warning goes to stderr the first time it is read).
std::size_t budget_cap();

// Every syntactically valid code of length <= alpha, shortest first, then
// lexicographic. With bob_only, codes containing an Alice node are skipped.
std::vector<Bits> enumerate_codes(const Dims& d, std::size_t alpha, bool bob_only = false);

struct EnumerationFilter {
  bool require_total = false;
  bool require_one_way = false;
};

struct Enumerated {
  Bits code;
  Protocol protocol;
};

class EnumerationCursor {
 public:
  EnumerationCursor(const Dims& d, std::size_t alpha, EnumerationFilter filter = {});

  std::optional<Enumerated> next();
  std::size_t position() const { return pos_; }
  std::size_t alpha() const { return alpha_; }
  const Dims& dims() const { return dims_; }

 private:
  Dims dims_;
  std::size_t alpha_;
  EnumerationFilter filter_;
  std::vector<Bits> codes_;
  std::size_t pos_ = 0;
};

std::vector<Enumerated> enumerate_protocols(const Dims& d, std::size_t alpha, EnumerationFilter filter = {});

// .pdl file: [version][alice_bits][bob_bits][out_bits][bit length, u32 LE][bits, MSB first].
void write_pdl_file(const std::string& path, const Dims& d, const Bits& code);
std::pair<Dims, Bits> read_pdl_file(const std::string& path);

}  // namespace cclab
