#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cclab/constructions.hpp"
#include "cclab/dcc.hpp"
#include "cclab/errors.hpp"
#include "cclab/hard_instance.hpp"
#include "cclab/individual.hpp"
#include "cclab/pdl.hpp"
#include "cclab/report_io.hpp"
#include "cclab/search.hpp"
#include "cclab/verify.hpp"

using namespace cclab;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2;

Bits parse_input(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("01") != std::string::npos)
    throw UsageError(std::string("--") + what + " must be a nonempty 0/1 string");
  return Bits::from_string(s);
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") std::cout << text;
  else write_text_file(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cclab: individual two-party communication complexity at desk scale"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for verification suites")->check(CLI::Range(1u, 256u));

  // cc
  auto* cc = app.add_subcommand("cc", "least communication on (x, y) over protocols within alpha PDL bits");
  std::string fn = "identity", xs, ys, mode = "tcc";
  std::size_t alpha = 0, help_a = 0, help_b = 0;
  bool one_way = false;
  cc->add_option("--fn", fn, "identity | ip | eq | table:<path>");
  cc->add_option("--x", xs, "Alice's input")->required();
  cc->add_option("--y", ys, "Bob's input")->required();
  cc->add_option("--alpha", alpha, "PDL budget in bits")->required();
  cc->add_option("--mode", mode, "tcc | cc | pcc");
  cc->add_flag("--one-way", one_way, "Bob-only protocols");
  cc->add_option("--help-a", help_a, "Alice's help bits (enumeration route only)");
  cc->add_option("--help-b", help_b, "Bob's help bits (enumeration route only)");

  // profile
  auto* profile = app.add_subcommand("profile", "h_y(alpha) or TCC profile of Identity at y");
  std::string kind = "h", out, format = "csv", px;
  std::size_t alpha_max = 0;
  profile->add_option("--y", ys, "target string")->required();
  profile->add_option("--alpha-max", alpha_max, "largest budget")->required();
  profile->add_option("--kind", kind, "h (structure function) | tcc (one-way and two-way TCC, n <= 3)")
      ->check(CLI::IsMember({"h", "tcc"}));
  profile->add_option("--x", px, "Alice's input for the two-way TCC profile (default: all x are compared)");
  profile->add_option("--out", out, "output file (default stdout)");
  profile->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  // hardness
  auto* hardness = app.add_subcommand("hardness", "hard instances");
  hardness->require_subcommand(1);
  std::size_t k = 0, s = 0, l = 0, a = 0, b = 0, budget = 6, n = 2;
  std::uint64_t seed = 0;
  auto* th7 = hardness->add_subcommand("th7", "hard instance for one-way protocols within the budget");
  auto* hb = hardness->add_subcommand("helpbit", "the same with a help bits for Alice and b for Bob");
  for (auto* sub : {th7, hb}) {
    sub->add_option("--k", k, "block length")->required();
    sub->add_option("--s", s, "2^s + 1 blocks (2^(a+b+s) + 1 with help)")->required();
    sub->add_option("--l", l, "communication lower bound")->required();
    sub->add_option("--budget", budget, "PDL bits (inclusive) standing for complexity below s");
    sub->add_option("--seed", seed, "0 = lexicographically first fiber members");
    sub->add_option("--out", out, "JSON output (default stdout)");
  }
  hb->add_option("--a", a, "Alice's help bits")->required();
  hb->add_option("--b", b, "Bob's help bits")->required();
  auto* hard_y = hardness->add_subcommand("hard-y", "first y with CC^alpha(x, y) >= n - alpha");
  hard_y->add_option("--x", xs, "Alice's input")->required();
  hard_y->add_option("--alpha", alpha, "PDL budget")->required();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "stream protocol codes, shortest first then lexicographic");
  std::string ekind = "all";
  bool count_only = false;
  enumerate->add_option("--n", n, "input length")->required();
  enumerate->add_option("--alpha", alpha, "largest code length")->required();
  enumerate->add_option("--kind", ekind, "all | total | one-way | correct (needs --fn)")
      ->check(CLI::IsMember({"all", "total", "one-way", "correct"}));
  enumerate->add_option("--fn", fn, "function for --kind correct");
  enumerate->add_flag("--count", count_only, "print only the number of codes");

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites; exit 1 if any check fails");
  std::string suite;
  std::optional<std::string> replay;
  bool as_json = false;
  std::uint64_t vseed = 1;
  std::string suites_help;
  for (const auto& name : suite_names()) suites_help += "\n  " + name + ": " + suite_help(name);
  verify->add_option("suite", suite, "suite name or 'all':" + suites_help)->required();
  verify->add_option("--replay", replay, "th7: re-verify a saved hard-instance JSON");
  verify->add_option("--seed", vseed, "seed for sampled families");
  verify->add_flag("--json", as_json, "JSON report");

  // dcc
  auto* dcc = app.add_subcommand("dcc", "exact worst-case deterministic complexity (n <= 3)");
  dcc->add_option("--fn", fn, "identity | ip | eq | table:<path>");
  dcc->add_option("--n", n, "input length");

  // run
  auto* runc = app.add_subcommand("run", "decode a PDL code and run it on (x, y)");
  std::string code;
  runc->add_option("--code", code, "code as <bits>:<hex>")->required();
  runc->add_option("--x", xs, "Alice's input")->required();
  runc->add_option("--y", ys, "Bob's input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cc) {
      Bits x = parse_input(xs, "x"), y = parse_input(ys, "y");
      if (x.size() != y.size()) throw UsageError("--x and --y must have the same length");
      Measure m{parse_family(mode), one_way, {help_a, help_b}, alpha};
      IndividualResult r = individual_cc(m, FunctionSpec::parse(fn, x.size()), x, y);
      std::cout << "value " << r.value << "\n"
                << "witness " << (r.witness ? r.witness->hex() : "-") << "\n"
                << "route " << r.route << "\n";
      return kOk;
    }
    if (*profile) {
      Bits y = parse_input(ys, "y");
      if (kind == "h") {
        ComplexityProfile p = structure_function_profile(y, alpha_max);
        emit(out, format == "csv" ? profile_csv(p) : to_json(p).dump(2) + "\n");
        return kOk;
      }
      std::optional<Bits> x;
      if (!px.empty()) x = parse_input(px, "x");
      TccIdentityReport r = tcc_identity_profile(y, alpha_max, x);
      emit(out, format == "csv" ? profile_csv(r.one_way) : to_json(r).dump(2) + "\n");
      if (format == "csv")
        std::cerr << "one-way == two-way at every alpha and x: " << (r.equal_every_x ? "yes" : "no")
                  << "; slack " << r.budget_shift << "\n";
      return r.equal_every_x ? kOk : kCheckFailed;
    }
    if (*th7 || *hb) {
      HardInstance h = *th7 ? th7_hard_instance(k, s, l, budget, seed) : helpbit_hard_instance(k, s, l, a, b, budget, seed);
      emit(out, to_json(h).dump(2) + "\n");
      if (!out.empty() && out != "-")
        std::cerr << "n=" << h.n << " protocols=" << h.family.size() << " fiber=" << h.fiber_size
                  << " certified=" << (h.certified ? "yes" : "no") << "\n";
      return h.certified ? kOk : kCheckFailed;
    }
    if (*hard_y) {
      Bits x = parse_input(xs, "x");
      HardY h = find_hard_y(x.size(), alpha, x);
      std::cout << "y " << h.y.str() << "\nvalue " << h.value << "\nfound " << (h.found ? "yes" : "no")
                << "\nbelow " << h.below << "\ntotal_protocols " << h.total_protocols << "\nbound_applies "
                << (h.bound_applies ? "yes" : "no") << "\n";
      if (!h.note.empty()) std::cout << "note " << h.note << "\n";
      return kOk;
    }
    if (*enumerate) {
      if (n == 0) throw UsageError("--n must be positive");
      std::vector<Bits> codes;
      if (ekind == "correct") {
        codes = enumerate_correct(FunctionSpec::parse(fn, n), alpha, false);
      } else {
        EnumerationFilter f{ekind == "total", ekind == "one-way"};
        for (auto& e : enumerate_protocols(Dims::symmetric(n), alpha, f)) codes.push_back(e.code);
      }
      if (count_only) std::cout << codes.size() << "\n";
      else
        for (const Bits& c : codes) std::cout << c.hex() << "\n";
      return kOk;
    }
    if (*verify) {
      VerifyOptions o{jobs, vseed, replay};
      std::vector<std::string> which = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool ok = true;
      nlohmann::json all = nlohmann::json::array();
      for (const auto& name : which) {
        VerificationReport r = verify_suite(name, o);
        ok = ok && r.ok();
        if (as_json) all.push_back(to_json(r));
        else std::cout << format_report(r) << std::flush;
      }
      if (as_json) std::cout << (which.size() == 1 ? all[0] : all).dump(2) << "\n";
      return ok ? kOk : kCheckFailed;
    }
    if (*dcc) {
      DccResult r = dcc_exact(FunctionSpec::parse(fn, n).table());
      std::cout << "bits " << r.bits << "\ncode " << pdl_encode(r.protocol).hex() << "\n";
      return kOk;
    }
    if (*runc) {
      Bits x = parse_input(xs, "x"), y = parse_input(ys, "y");
      if (x.size() != y.size()) throw UsageError("--x and --y must have the same length");
      RunOutcome r = run(pdl_decode(Bits::from_hex(code), x.size()), x, y);
      std::cout << "transcript " << (r.transcript.empty() ? "-" : r.transcript.str()) << "\n"
                << "output " << (r.output ? r.output->str() : "stuck") << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DecodeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
