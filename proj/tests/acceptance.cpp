// Acceptance suite: one pass/fail line per criterion, each criterion pinned to
// its tolerance and runtime budget. Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "latgen/latgen.hpp"

namespace {

using namespace latgen;

std::vector<ClosureConfig> acceptance_modes() {
  ClosureConfig standard = ClosureConfig::lattice_standard();
  ClosureConfig none = ClosureConfig::lattice_no_extremes();
  ClosureConfig join_complete = standard;
  join_complete.completeness = Completeness::JoinComplete;
  return {standard, none, join_complete};
}

SuiteOptions acceptance_options() {
  SuiteOptions o;
  o.instance_bound = 25;
  o.trials = 1000;
  o.seed = kDefaultSeed;
  o.max_rounds = kDefaultMaxRounds;
  o.modes = acceptance_modes();
  o.exhaustive_max_n = 5;
  o.sample_n = 6;
  o.sample_count = 10000;
  o.finite_property_cases = 10000;
  o.symbolic_property_cases = 1000;
  o.truncation_depths = {2, 3, 4};
  return o;
}

bool claims_ok(const std::vector<ClaimResult>& claims, std::string& note) {
  bool ok = true;
  for (const auto& c : claims) {
    if (!c.ok()) {
      ok = false;
      note += " " + c.id + " failed: " + c.details.dump();
    }
  }
  return ok;
}

struct Criterion {
  int id;
  std::string label;
  double budget_s;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const SuiteOptions opts = acceptance_options();

  std::vector<Criterion> criteria;

  criteria.push_back({1,
                      "semilattice oracle equivalence and dichotomy (exhaustive n<=5, 10000 sampled at n=6)",
                      60.0,
                      [&](std::string& note) {
                        return claims_ok({claim_semilattice_oracle(opts)}, note);
                      }});

  criteria.push_back({2,
                      "finite-structure equalities: gamma = phi, gamma a substructure, gamma finitarily closed",
                      60.0,
                      [&](std::string& note) {
                        return claims_ok({claim_finite_gamma_phi(opts)}, note);
                      }});

  criteria.push_back({3,
                      "omega ladder: exact gamma/phi, certificate for (top,0), maximal catalog to 25, "
                      "co-singleton rejection",
                      10.0,
                      [&](std::string& note) {
                        return claims_ok({claim_gamma_closure(Family::Omega, opts),
                                          claim_top0_relative_generator(Family::Omega, opts),
                                          claim_maximal_catalog(Family::Omega, opts),
                                          claim_phi_matches_catalog(Family::Omega, opts),
                                          claim_top0_complement_not_closed(Family::Omega, opts)},
                                         note);
                      }});

  criteria.push_back({4,
                      "squared ladder: closure of gamma is phi (gamma not a complete sublattice), "
                      "certificate, catalog to 25, screens with >=1000 seeded trials, identical under "
                      "both conventions and join-complete closures",
                      60.0,
                      [&](std::string& note) {
                        return claims_ok({claim_gamma_closure(Family::OmegaSq, opts),
                                          claim_top0_relative_generator(Family::OmegaSq, opts),
                                          claim_maximal_catalog(Family::OmegaSq, opts),
                                          claim_phi_matches_catalog(Family::OmegaSq, opts),
                                          claim_top0_complement_not_closed(Family::OmegaSq, opts),
                                          claim_nongen_screens(opts),
                                          claim_gamma_finitary_sublattice(opts)},
                                         note);
                      }});

  criteria.push_back({5,
                      "negative control: finite truncations at depths 2,3,4 all satisfy gamma = phi",
                      30.0,
                      [&](std::string& note) { return claims_ok({claim_truncations(opts)}, note); }});

  criteria.push_back({6,
                      "dual descending chain: d indispensable finitarily, a non-generator countably",
                      1.0,
                      [&](std::string& note) { return claims_ok({claim_dual_chain(opts)}, note); }});

  criteria.push_back({7,
                      "single countable operation reproduces meets and joins on 1000 seeded tuples",
                      10.0,
                      [&](std::string& note) { return claims_ok({claim_omega_op(opts)}, note); }});

  criteria.push_back({8,
                      "closure laws: 10000 finite and 1000 symbolic seeded cases, zero violations",
                      120.0,
                      [&](std::string& note) {
                        return claims_ok({claim_closure_laws_finite(opts),
                                          claim_closure_laws_symbolic(opts)},
                                         note);
                      }});

  int failures = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string(" exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs <= c.budget_s;
    if (!in_budget) note += " (over budget)";
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s [%.2fs / %.0fs]%s\n", pass ? "PASS" : "FAIL", c.id,
                c.label.c_str(), secs, c.budget_s, note.c_str());
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
