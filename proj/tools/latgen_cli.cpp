// Command-line front end: lattice ingestion, generator analysis, DOT export,
// and the one-shot verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latgen/latgen.hpp"

namespace {

using namespace latgen;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return 2;
    case ErrorKind::NotALattice:
    case ErrorKind::NotAChain:
    case ErrorKind::CyclicCovers:
    case ErrorKind::DuplicateCover: return 3;
    case ErrorKind::BoundExceeded:
    case ErrorKind::CapacityExceeded: return 4;
    default: return 1;
  }
}

nlohmann::json read_json_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(ErrorKind::ParseError, "input is not valid JSON");
  return j;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LATGEN_SEED")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 0);
    if (end && *end == '\0') return v;
    raise(ErrorKind::ParseError, "LATGEN_SEED is not a number");
  }
  return kDefaultSeed;
}

struct CommonFlags {
  std::string conventions = "standard";
  std::string completeness = "countable";
  std::uint32_t bound = 25;
  int trials = 1000;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string format = "json";
  int max_rounds = kDefaultMaxRounds;

  void attach(CLI::App* cmd) {
    cmd->add_option("--conventions", conventions, "empty meet/join conventions: both|standard|none")
        ->check(CLI::IsMember({"both", "standard", "none"}));
    cmd->add_option("--completeness", completeness, "finitary|countable|join-complete")
        ->check(CLI::IsMember({"finitary", "countable", "join-complete"}));
    cmd->add_option("--bound", bound, "parametric instance bound")->check(CLI::PositiveNumber);
    cmd->add_option("--trials", trials, "randomized trial count")->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", seed, "seed for randomized screens")->each([this](const std::string&) {
      seed_set = true;
    });
    cmd->add_option("--format", format, "output format: json|dot|text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    cmd->add_option("--max-rounds", max_rounds, "symbolic closure fixpoint cap")
        ->check(CLI::PositiveNumber);
  }

  Completeness completeness_mode() const {
    if (completeness == "finitary") return Completeness::Finitary;
    if (completeness == "join-complete") return Completeness::JoinComplete;
    return Completeness::CountablyComplete;
  }

  std::uint64_t seed_value() const { return seed_set ? seed : default_seed(); }

  // The convention combinations to run: standard, none, or both.
  std::vector<ClosureConfig> modes(bool respect_joins) const {
    auto make = [&](bool extremes) {
      ClosureConfig c;
      c.respect_joins = respect_joins;
      c.include_empty_meet = extremes;
      c.include_empty_join = extremes && respect_joins;
      c.completeness = completeness_mode();
      return c;
    };
    if (conventions == "standard") return {make(true)};
    if (conventions == "none") return {make(false)};
    return {make(true), make(false)};
  }
};

void print_report_text(std::ostream& os, const GeneratorReport& r) {
  auto show = [&](const char* name, const SubsetMask& m) {
    os << name << ": {";
    bool first = true;
    m.for_each([&](int i) {
      os << (first ? "" : ", ") << i;
      first = false;
    });
    os << "}\n";
  };
  show("gamma", r.gamma);
  show("phi", r.phi);
  show("indispensable", r.indispensables);
  os << "maximal proper substructures: " << r.maximal.size() << "\n";
  for (const auto& m : r.maximal) show("  ", m);
  os << "gamma is a substructure: " << (r.gamma_is_substructure ? "yes" : "no") << "\n";
  os << "gamma equals phi: " << (r.gamma_equals_phi ? "yes" : "no") << "\n";
}

int cmd_analyze(const std::string& input, const CommonFlags& flags, const std::string& signature) {
  auto j = read_json_input(input);
  nlohmann::json out;
  const bool lattice_sig = signature == "lattice";
  auto modes = flags.modes(lattice_sig);
  auto run_one = [&](const ClosureConfig& cfg) -> nlohmann::json {
    if (lattice_sig) return report_to_json(analyze(lattice_from_json(j), cfg));
    return report_to_json(analyze(meet_semilattice_from_json(j), cfg));
  };
  if (modes.size() == 1) {
    out = run_one(modes[0]);
  } else {
    out["standard"] = run_one(modes[0]);
    out["none"] = run_one(modes[1]);
  }
  if (flags.format == "text") {
    if (modes.size() == 1) {
      auto r = lattice_sig ? analyze(lattice_from_json(j), modes[0])
                           : analyze(meet_semilattice_from_json(j), modes[0]);
      print_report_text(std::cout, r);
    } else {
      std::cout << out.dump(2) << "\n";
    }
  } else if (flags.format == "json") {
    std::cout << out.dump() << "\n";
  } else {
    raise(ErrorKind::ParseError, "analyze emits json or text; use export-dot for DOT");
  }
  return 0;
}

int cmd_enumerate(int n, const CommonFlags& flags, const std::string& signature) {
  const bool lattice_sig = signature == "lattice";
  std::uint64_t structures = 0, gamma_eq_phi = 0, dichotomy_violations = 0;
  auto cfg = lattice_sig ? ClosureConfig::lattice_standard() : ClosureConfig::semilattice_standard();
  auto eat = [&](const auto& s) {
    auto r = analyze(s, cfg);
    ++structures;
    if (r.gamma_equals_phi) ++gamma_eq_phi;
    SubsetMask both = r.indispensables & r.gamma;
    SubsetMask either = r.indispensables | r.gamma;
    if (!both.none() || !either.is_full()) ++dichotomy_violations;
  };
  if (lattice_sig)
    for_each_labeled_lattice(n, eat);
  else
    for_each_labeled_meet_semilattice(n, eat);
  nlohmann::json out{{"n", n},
                     {"signature", signature},
                     {"structures", structures},
                     {"gamma_equals_phi", gamma_eq_phi},
                     {"dichotomy_violations", dichotomy_violations}};
  if (flags.format == "text") {
    std::cout << signature << "s on " << n << " elements: " << structures << "\n"
              << "gamma == phi on " << gamma_eq_phi << "\n"
              << "dichotomy violations: " << dichotomy_violations << "\n";
  } else {
    std::cout << out.dump() << "\n";
  }
  return 0;
}

int cmd_verify(const CommonFlags& flags, bool timings) {
  SuiteOptions o;
  o.instance_bound = flags.bound;
  o.trials = flags.trials;
  o.seed = flags.seed_value();
  o.max_rounds = flags.max_rounds;
  o.modes = flags.modes(true);
  auto claims = run_verification_suite(o);
  bool ok = true;
  for (const auto& c : claims) ok = ok && c.ok();
  if (flags.format == "text") {
    for (const auto& c : claims) {
      std::cout << c.id << ": " << c.status;
      if (timings) std::cout << " (" << static_cast<long long>(c.elapsed_ms) << " ms)";
      std::cout << "\n";
    }
    std::cout << (ok ? "all claims hold" : "CLAIM FAILURES") << "\n";
  } else {
    std::cout << suite_to_json(claims, o, timings).dump() << "\n";
  }
  if (!ok) {
    for (const auto& c : claims)
      if (!c.ok()) std::cerr << "failed: " << c.id << " " << c.details.dump() << "\n";
    return 1;
  }
  return 0;
}

int cmd_export_dot(const std::string& input, const CommonFlags& flags, const std::string& highlight) {
  auto l = lattice_from_json(read_json_input(input));
  auto h = dot_highlight_from_string(highlight);
  if (h == DotHighlight::None) {
    std::cout << export_dot(l);
    return 0;
  }
  auto report = analyze(l, flags.modes(true)[0]);
  std::cout << export_dot(l, h, &report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generator-theory toolkit for finite and countable lattices"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string input, signature = "lattice", highlight = "none";
  int enum_n = 3;
  bool timings = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "generator report for a cover-list JSON lattice");
  analyze_cmd->add_option("input", input, "path to lattice JSON, or - for stdin")->required();
  analyze_cmd->add_option("--signature", signature, "lattice|meet-semilattice")
      ->check(CLI::IsMember({"lattice", "meet-semilattice"}));
  flags.attach(analyze_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "corpus-level generator statistics");
  enum_cmd->add_option("n", enum_n, "carrier size (<= 6)")->required();
  enum_cmd->add_option("--signature", signature, "lattice|meet-semilattice")
      ->check(CLI::IsMember({"lattice", "meet-semilattice"}));
  flags.attach(enum_cmd);

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the full verification suite");
  verify_cmd->add_flag("--timings", timings, "include per-claim timings in the output");
  flags.attach(verify_cmd);

  auto* dot_cmd = app.add_subcommand("export-dot", "Hasse diagram as DOT");
  dot_cmd->add_option("input", input, "path to lattice JSON, or - for stdin")->required();
  dot_cmd->add_option("--highlight", highlight, "none|gamma|phi|maximal")
      ->check(CLI::IsMember({"none", "gamma", "phi", "maximal"}));
  flags.attach(dot_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints help to stdout or the usage error to stderr
    return rc == 0 ? 0 : 2;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(input, flags, signature);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_n, flags, signature);
    if (verify_cmd->parsed()) return cmd_verify(flags, timings);
    if (dot_cmd->parsed()) return cmd_export_dot(input, flags, highlight);
  } catch (const latgen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
