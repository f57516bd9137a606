#include "cclab/report_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cclab/errors.hpp"

namespace cclab {

std::string format_value(double v) {
  if (std::isinf(v)) return "inf";
  if (v == std::floor(v)) return std::to_string(static_cast<long long>(v));
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string profile_csv(const ComplexityProfile& p) {
  std::ostringstream os;
  os << "# schema=" << kProfileSchema << " measure=" << p.measure << " code=" << p.code_kind
     << " target=" << p.target.str() << "\n";
  os << "alpha,value,witness_hex\n";
  for (const auto& e : p.entries) os << e.alpha << "," << format_value(e.value) << "," << (e.witness ? e.witness->hex() : "") << "\n";
  return os.str();
}

nlohmann::json to_json(const ComplexityProfile& p) {
  nlohmann::json j{{"schema", kProfileSchema}, {"measure", p.measure}, {"code", p.code_kind}, {"target", p.target.str()}};
  j["entries"] = nlohmann::json::array();
  for (const auto& e : p.entries)
    j["entries"].push_back({{"alpha", e.alpha},
                            {"value", format_value(e.value)},
                            {"witness_hex", e.witness ? nlohmann::json(e.witness->hex()) : nlohmann::json()}});
  return j;
}

nlohmann::json to_json(const TccIdentityReport& r) {
  nlohmann::json j{{"schema", "cclab.tcc-identity/1"},
                   {"one_way", to_json(r.one_way)},
                   {"two_way", to_json(r.two_way)},
                   {"h", to_json(r.h)},
                   {"x", r.x},
                   {"equal_every_x", r.equal_every_x},
                   {"budget_shift", r.budget_shift},
                   {"conversion_slack", r.conversion_slack},
                   {"set_bound_ok", r.set_bound_ok},
                   {"set_to_protocol_slack", r.set_to_protocol_slack},
                   {"oneway_to_set_ok", r.oneway_to_set_ok},
                   {"protocol_to_set_slack", r.protocol_to_set_slack},
                   {"first_finite_alpha", r.first_finite_alpha}};
  j["bracket_constant"] = r.bracket_constant ? nlohmann::json(*r.bracket_constant) : nlohmann::json();
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("write failed for " + path);
}

}  // namespace cclab
