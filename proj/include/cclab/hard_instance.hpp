#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cclab/help_bits.hpp"
#include "cclab/protocol.hpp"

namespace cclab {

struct HardInstanceParams {
  std::size_t k = 0;
  std::size_t s = 0;
  std::size_t l = 0;
  std::size_t a = 0;  // Alice's help bits
  std::size_t b = 0;  // Bob's help bits
  std::size_t budget = 6;  // PDL bits (inclusive) standing for "complexity below s"
  std::uint64_t seed = 0;  // 0: lexicographically first fiber members
  bool operator==(const HardInstanceParams&) const = default;
};

struct ProtocolCertificate {
  Bits code;
  std::size_t j = 0;  // block index with cost >= l
  Cost value;         // cc with help on (x, y_j)
  bool operator==(const ProtocolCertificate&) const = default;
};

struct HardInstance {
  HardInstanceParams params;
  std::size_t n = 0;  // (2^{a+b+s} + 1) k
  std::vector<Bits> zs;
  Bits x;
  std::vector<Bits> ys;
  std::size_t enumerated = 0;       // one-way codes within the budget
  std::vector<Bits> family;         // those that never output a wrong answer
  std::vector<std::string> label;   // shared fiber label, one entry per (protocol, h_B)
  std::size_t fiber_size = 0;
  std::size_t fiber_count = 0;
  std::size_t range_log2 = 0;       // l N 2^b
  long population_log2 = 0;         // k - l N 2^b
  bool range_ok = false;            // l N 2^b < l 2^{s+b}
  std::vector<ProtocolCertificate> certificate;
  bool certified = false;
};

// Lower-bound instance: every protocol of the family needs >= l bits on some
// (x, y_j), for every choice of help strings.
HardInstance th7_hard_instance(std::size_t k, std::size_t s, std::size_t l, std::size_t budget = 6,
                               std::uint64_t seed = 0);
HardInstance helpbit_hard_instance(std::size_t k, std::size_t s, std::size_t l, std::size_t a, std::size_t b,
                                   std::size_t budget = 6, std::uint64_t seed = 0);

// Never outputs anything but the first n bits of Bob's input: exhaustive on
// small grids, by cube propagation through one-way trees otherwise.
bool identity_sound(const Protocol& p, std::size_t n);

struct ReplayReport {
  std::size_t checked = 0;
  std::size_t discrepancies = 0;
  std::vector<std::string> problems;
  bool ok() const { return discrepancies == 0; }
};

// Rebuilds the family and the fiber labels from scratch and re-checks every
// certificate line.
ReplayReport verify_hard_instance(const HardInstance& h);

// One Alice help bit: 0 runs the literal send, 1 runs the th7 tree for
// 2^{s'} + 1 blocks of k bits.
Protocol helpbit_companion_protocol(std::size_t s_blocks, std::size_t k);

nlohmann::json to_json(const HardInstance& h);
HardInstance hard_instance_from_json(const nlohmann::json& j);

}  // namespace cclab
