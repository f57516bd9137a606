#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cclab {

struct Check {
  std::string id;
  bool pass = true;
  std::string slack;    // measured slack or count, free text
  std::string witness;  // replayable witness for a failure (hex codes, inputs)
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;
  bool ok() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::optional<std::string> replay;  // th7: hard-instance JSON to re-verify
};

// rectangles | theorem1 | ip-bound | eq-shortcut | counting | equiv | profiles | th7 | helpbits | ordering
const std::vector<std::string>& suite_names();
std::string suite_help(const std::string& suite);
VerificationReport verify_suite(const std::string& suite, const VerifyOptions& opts = {});

nlohmann::json to_json(const VerificationReport& r);
std::string format_report(const VerificationReport& r);

}  // namespace cclab
