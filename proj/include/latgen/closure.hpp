#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "latgen/error.hpp"
#include "latgen/finite_lattice.hpp"
#include "latgen/subset_mask.hpp"

namespace latgen {

/// Brute-force generator analysis is exact up to this carrier size.
inline constexpr int kMaxBruteForce = 16;
/// Default seed for every randomized screen and property suite.
inline constexpr std::uint64_t kDefaultSeed = 0xA11CE;
/// The subtractive maximal-substructure search extends exact analysis to here.
inline constexpr int kMaxExtendedAnalysis = 64;

enum class Completeness { Finitary, CountablyComplete, JoinComplete };

/** Which operations a substructure must respect. On finite carriers the three
 *  completeness modes coincide; they differ only in the symbolic engines. */
struct ClosureConfig {
  bool respect_joins = true;       // lattice signature; false = meet-semilattice
  bool include_empty_meet = true;  // closed sets contain the maximum
  bool include_empty_join = true;  // closed sets contain the minimum (lattice signature only)
  Completeness completeness = Completeness::CountablyComplete;

  static ClosureConfig lattice_standard() { return {}; }
  static ClosureConfig lattice_no_extremes() { return {true, false, false, Completeness::CountablyComplete}; }
  static ClosureConfig semilattice_standard() { return {false, true, false, Completeness::CountablyComplete}; }
  static ClosureConfig semilattice_no_extremes() { return {false, false, false, Completeness::CountablyComplete}; }
};

/** Uniform view over lattices and meet-semilattices for the closure algorithms. */
struct StructView {
  int n = 0;
  const std::uint16_t* meet = nullptr;
  const std::uint16_t* join = nullptr;  // null for meet-semilattices
  int bottom = -1;                      // -1 for meet-semilattices
  int top = -1;

  int meet_of(int a, int b) const { return meet[static_cast<std::size_t>(a) * n + b]; }
  int join_of(int a, int b) const { return join[static_cast<std::size_t>(a) * n + b]; }
};

inline StructView view(const FiniteLattice& l) {
  return {l.n, l.meet_t.data(), l.join_t.data(), l.bottom, l.top};
}

inline StructView view(const FiniteMeetSemilattice& s) {
  return {s.n, s.meet_t.data(), nullptr, -1, s.top};
}

namespace detail {

inline bool use_joins(const StructView& s, const ClosureConfig& cfg) {
  return cfg.respect_joins && s.join != nullptr;
}

}  // namespace detail

/** Least superset of X closed under the configured operations (the generated
 *  substructure). On a finite carrier this equals the intersection of all
 *  closed supersets. */
inline SubsetMask generate(const StructView& s, const SubsetMask& X, const ClosureConfig& cfg) {
  const bool joins = detail::use_joins(s, cfg);
  std::vector<std::uint8_t> in(s.n, 0);
  std::vector<int> stack;
  auto add = [&](int e) {
    if (!in[e]) { in[e] = 1; stack.push_back(e); }
  };
  X.for_each(add);
  if (cfg.include_empty_meet && s.top >= 0) add(s.top);
  if (cfg.include_empty_join && joins && s.bottom >= 0) add(s.bottom);
  std::vector<int> members;
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    for (int f : members) {
      add(s.meet_of(e, f));
      if (joins) add(s.join_of(e, f));
    }
    members.push_back(e);
  }
  SubsetMask out(s.n);
  for (int i = 0; i < s.n; ++i)
    if (in[i]) out.set(i);
  return out;
}

inline SubsetMask generate(const FiniteLattice& l, const SubsetMask& X, const ClosureConfig& cfg) {
  return generate(view(l), X, cfg);
}

inline SubsetMask generate(const FiniteMeetSemilattice& s, const SubsetMask& X, const ClosureConfig& cfg) {
  ClosureConfig c = cfg;
  c.respect_joins = false;
  return generate(view(s), X, c);
}

template <class S>
inline bool is_substructure(const S& s, const SubsetMask& C, const ClosureConfig& cfg) {
  return generate(s, C, cfg) == C;
}

/** Closure under binary meet and join only — no convention-forced extremes. */
inline SubsetMask finitary_sublattice_closure(const FiniteLattice& l, const SubsetMask& X) {
  ClosureConfig cfg;
  cfg.respect_joins = true;
  cfg.include_empty_meet = false;
  cfg.include_empty_join = false;
  cfg.completeness = Completeness::Finitary;
  return generate(view(l), X, cfg);
}

// ---------------------------------------------------------------------------
// Machine-checkable evidence attached to report entries.
// ---------------------------------------------------------------------------

struct Certificate {
  enum class Kind { RelativeGeneratorWitness, MeetReduction, ComplementClosed, MaximalityWitness };
  Kind kind;
  SubsetMask set;  // witness X (relative generator) or Y (meet reduction); empty otherwise
};

/** Aggregate generator-theory analysis of one finite structure. */
struct GeneratorReport {
  SubsetMask gamma;                  // non-generators
  SubsetMask phi;                    // intersection of maximal proper substructures
  SubsetMask indispensables;
  SubsetMask relative_generators;    // complement of gamma
  std::vector<SubsetMask> maximal;   // maximal proper substructures, sorted
  bool gamma_is_substructure = false;
  bool gamma_equals_phi = false;
  std::map<int, Certificate> witnesses;
};

// ---------------------------------------------------------------------------
// Closure table over all 2^n subsets (n <= 16): the workhorse of the oracle.
// ---------------------------------------------------------------------------

namespace detail {

struct ClosureTable {
  int n = 0;
  std::uint32_t full = 0;
  std::uint32_t seed = 0;  // convention-forced elements
  std::vector<std::uint32_t> cl;
};

// `already` must be closed; `fresh` are the elements newly adjoined.
inline std::uint32_t saturate32(const StructView& s, const ClosureConfig& cfg, std::uint32_t already,
                                std::uint32_t fresh) {
  const bool joins = use_joins(s, cfg);
  std::uint32_t in = already | fresh;
  std::uint32_t frontier = fresh;
  while (frontier) {
    std::uint32_t next = 0;
    std::uint32_t fr = frontier;
    while (fr) {
      int e = std::countr_zero(fr);
      fr &= fr - 1;
      std::uint32_t mem = in;
      while (mem) {
        int f = std::countr_zero(mem);
        mem &= mem - 1;
        std::uint32_t mb = 1u << s.meet_of(e, f);
        if (!(in & mb)) { in |= mb; next |= mb; }
        if (joins) {
          std::uint32_t jb = 1u << s.join_of(e, f);
          if (!(in & jb)) { in |= jb; next |= jb; }
        }
      }
    }
    frontier = next;
  }
  return in;
}

inline ClosureTable build_closure_table(const StructView& s, const ClosureConfig& cfg) {
  if (s.n > kMaxBruteForce)
    raise(ErrorKind::BoundExceeded, "brute-force analysis supports carriers up to " + std::to_string(kMaxBruteForce) + " elements");
  ClosureTable t;
  t.n = s.n;
  t.full = (s.n == 32) ? ~0u : ((1u << s.n) - 1);
  t.seed = 0;
  if (cfg.include_empty_meet && s.top >= 0) t.seed |= 1u << s.top;
  if (cfg.include_empty_join && use_joins(s, cfg) && s.bottom >= 0) t.seed |= 1u << s.bottom;
  t.cl.assign(std::size_t{1} << s.n, 0);
  t.cl[0] = saturate32(s, cfg, 0, t.seed);
  for (std::uint32_t m = 1; m <= t.full; ++m) {
    std::uint32_t low = m & (m - 1);
    std::uint32_t fresh = (m & ~low) & ~t.cl[low];
    t.cl[m] = fresh ? saturate32(s, cfg, t.cl[low], fresh) : t.cl[low];
  }
  return t;
}

// Iterates all n-bit masks with exactly k bits (Gosper's hack).
template <class Fn>
void for_each_mask_of_popcount(int n, int k, Fn fn) {
  if (k == 0) { fn(0u); return; }
  if (k > n) return;
  std::uint32_t m = (1u << k) - 1;
  std::uint32_t limit = 1u << n;
  while (m < limit) {
    fn(m);
    std::uint32_t c = m & -m, r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

inline SubsetMask to_mask(int n, std::uint32_t bits) { return SubsetMask::from_bits(n, bits); }

}  // namespace detail

/** Meet-reducible elements: a = ⋀Y for some Y with a ∉ Y. The canonical witness
 *  is the strict up-set of a (its meet is a exactly when a is reducible); with
 *  the empty-meet convention the maximum is reducible via Y = ∅. */
template <class S>
SubsetMask meet_reducible_elements(const S& s, const ClosureConfig& cfg,
                                   std::map<int, Certificate>* witnesses = nullptr) {
  const int n = s.n;
  SubsetMask out(n);
  for (int a = 0; a < n; ++a) {
    SubsetMask up(n);
    int acc = -1;
    for (int b = 0; b < n; ++b) {
      if (b == a || !s.le(a, b)) continue;
      up.set(b);
      acc = (acc < 0) ? b : s.meet(acc, b);
    }
    if (acc == a) {
      out.set(a);
      if (witnesses) (*witnesses)[a] = Certificate{Certificate::Kind::MeetReduction, up};
    } else if (acc < 0 && cfg.include_empty_meet) {
      // a is the maximum; the empty family reduces it by convention
      out.set(a);
      if (witnesses) (*witnesses)[a] = Certificate{Certificate::Kind::MeetReduction, SubsetMask(n)};
    }
  }
  return out;
}

/** Indispensable elements: a belongs to every generating set; equivalently the
 *  complement of {a} is a substructure. */
template <class S>
SubsetMask indispensable_elements(const S& s, const ClosureConfig& cfg) {
  const int n = s.n;
  SubsetMask out(n);
  for (int a = 0; a < n; ++a) {
    SubsetMask c = SubsetMask::full(n);
    c.reset(a);
    if (is_substructure(s, c, cfg)) out.set(a);
  }
  return out;
}

/** Exhaustive non-generator oracle: a is kept iff every X with ⟨X,a⟩ = L already
 *  has ⟨X⟩ = L. Witness scan runs in increasing popcount so the first relative
 *  generator witness found is one of minimum size. Carrier size <= 16. */
template <class S>
SubsetMask non_generators_bruteforce(const S& s, const ClosureConfig& cfg,
                                     std::map<int, Certificate>* witnesses = nullptr) {
  StructView v = view(s);
  ClosureConfig c = cfg;
  if (v.join == nullptr) c.respect_joins = false;
  auto t = detail::build_closure_table(v, c);
  const int n = v.n;
  SubsetMask out(n);
  for (int a = 0; a < n; ++a) {
    const std::uint32_t abit = 1u << a;
    bool nongen = true;
    for (int k = 0; k <= n && nongen; ++k) {
      detail::for_each_mask_of_popcount(n, k, [&](std::uint32_t m) {
        if (!nongen) return;
        if (t.cl[m | abit] == t.full && t.cl[m] != t.full) {
          nongen = false;
          if (witnesses)
            (*witnesses)[a] = Certificate{Certificate::Kind::RelativeGeneratorWitness, detail::to_mask(n, m)};
        }
      });
    }
    if (nongen) out.set(a);
  }
  return out;
}

/** All inclusion-maximal proper substructures, by closing every subset.
 *  Carrier size <= 16 (see analyze() for the larger exact search). */
template <class S>
std::vector<SubsetMask> maximal_proper_substructures(const S& s, const ClosureConfig& cfg) {
  StructView v = view(s);
  ClosureConfig c = cfg;
  if (v.join == nullptr) c.respect_joins = false;
  auto t = detail::build_closure_table(v, c);
  const int n = v.n;
  std::vector<SubsetMask> out;
  std::unordered_set<std::uint32_t> closed;
  for (std::uint32_t m = 0; m <= t.full; ++m)
    if (t.cl[m] == m && m != t.full) closed.insert(m);
  for (std::uint32_t m : closed) {
    bool maximal = true;
    for (int a = 0; a < n && maximal; ++a)
      if (!(m >> a & 1) && t.cl[m | (1u << a)] != t.full) maximal = false;
    if (maximal) out.push_back(detail::to_mask(n, m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class S>
SubsetMask frattini(const S& s, const ClosureConfig& cfg) {
  auto maximal = maximal_proper_substructures(s, cfg);
  if (maximal.empty()) return SubsetMask::full(s.n);
  SubsetMask acc = SubsetMask::full(s.n);
  for (const auto& m : maximal) acc = acc & m;
  return acc;
}

// ---------------------------------------------------------------------------
// Exact analysis beyond 16 elements: subtractive search for the maximal closed
// sets avoiding a given element. Any closed subset of L \ R must drop one side
// of each pair whose meet/join lands in R, so branching on that pair is
// complete; leaves are closed sets, and the maximal ones survive filtering.
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t closure64(const StructView& s, const ClosureConfig& cfg, std::uint64_t start) {
  const bool joins = use_joins(s, cfg);
  std::uint64_t in = start;
  if (cfg.include_empty_meet && s.top >= 0) in |= std::uint64_t{1} << s.top;
  if (cfg.include_empty_join && joins && s.bottom >= 0) in |= std::uint64_t{1} << s.bottom;
  std::uint64_t frontier = in;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t fr = frontier;
    while (fr) {
      int e = std::countr_zero(fr);
      fr &= fr - 1;
      std::uint64_t mem = in;
      while (mem) {
        int f = std::countr_zero(mem);
        mem &= mem - 1;
        std::uint64_t mb = std::uint64_t{1} << s.meet_of(e, f);
        if (!(in & mb)) { in |= mb; next |= mb; }
        if (joins) {
          std::uint64_t jb = std::uint64_t{1} << s.join_of(e, f);
          if (!(in & jb)) { in |= jb; next |= jb; }
        }
      }
    }
    frontier = next;
  }
  return in;
}

struct AvoidSearch {
  const StructView& s;
  const ClosureConfig& cfg;
  std::uint64_t full;
  std::unordered_set<std::uint64_t> visited;
  std::vector<std::uint64_t> leaves;
  std::size_t budget;

  void run(std::uint64_t removed) {
    if (!visited.insert(removed).second) return;
    if (visited.size() > budget)
      raise(ErrorKind::BoundExceeded, "maximal-substructure search exceeded its node budget");
    // conventions make any closed set contain the extremes; removing one kills the branch
    if (cfg.include_empty_meet && s.top >= 0 && (removed >> s.top & 1)) return;
    if (cfg.include_empty_join && use_joins(s, cfg) && s.bottom >= 0 && (removed >> s.bottom & 1)) return;
    const std::uint64_t present = full & ~removed;
    const bool joins = use_joins(s, cfg);
    for (std::uint64_t xa = present; xa; xa &= xa - 1) {
      int a = std::countr_zero(xa);
      for (std::uint64_t xb = xa; xb; xb &= xb - 1) {
        int b = std::countr_zero(xb);
        bool bad = (removed >> s.meet_of(a, b)) & 1;
        if (!bad && joins) bad = (removed >> s.join_of(a, b)) & 1;
        if (bad) {
          run(removed | (std::uint64_t{1} << a));
          run(removed | (std::uint64_t{1} << b));
          return;
        }
      }
    }
    leaves.push_back(present);  // closed
  }
};

// Maximal closed subsets of the carrier avoiding element a.
inline std::vector<std::uint64_t> maximal_closed_avoiding(const StructView& s, const ClosureConfig& cfg,
                                                          int a, std::size_t budget = 1 << 20) {
  std::uint64_t full = (s.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << s.n) - 1);
  AvoidSearch search{s, cfg, full, {}, {}, budget};
  search.run(std::uint64_t{1} << a);
  auto& ls = search.leaves;
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  std::vector<std::uint64_t> out;
  for (std::uint64_t c : ls) {
    bool maximal = true;
    for (std::uint64_t d : ls)
      if (d != c && (c & ~d) == 0) { maximal = false; break; }
    if (maximal) out.push_back(c);
  }
  return out;
}

}  // namespace detail

struct AnalyzeOptions {
  int max_n = kMaxBruteForce;  // raise up to kMaxExtendedAnalysis to enable the subtractive search
};

namespace detail {

template <class S>
GeneratorReport analyze_bruteforce(const S& s, const ClosureConfig& cfg) {
  const int n = s.n;
  GeneratorReport r;
  r.gamma = non_generators_bruteforce(s, cfg, &r.witnesses);
  r.relative_generators = r.gamma.complement();
  r.maximal = maximal_proper_substructures(s, cfg);
  r.phi = SubsetMask::full(n);
  for (const auto& m : r.maximal) r.phi = r.phi & m;
  r.indispensables = indispensable_elements(s, cfg);

  // Cross-check the complement-closed route against the direct definition:
  // a is in every generating set iff bit a survives ANDing all generating sets.
  {
    StructView v = view(s);
    ClosureConfig c = cfg;
    if (v.join == nullptr) c.respect_joins = false;
    auto t = build_closure_table(v, c);
    std::uint32_t every = t.full;
    for (std::uint32_t m = 0; m <= t.full; ++m)
      if (t.cl[m] == t.full) every &= m;
    if (to_mask(n, every) != r.indispensables)
      raise(ErrorKind::CertificateInvalid, "indispensable-element routes disagree");
  }

  for (int a = 0; a < n; ++a)
    if (r.indispensables.test(a))
      r.witnesses[a] = Certificate{Certificate::Kind::ComplementClosed, SubsetMask(n)};
  if (!cfg.respect_joins || view(s).join == nullptr) {
    // semilattice signature: non-generators carry their meet-reduction witness
    std::map<int, Certificate> reductions;
    meet_reducible_elements(s, cfg, &reductions);
    for (auto& [a, cert] : reductions)
      if (r.gamma.test(a)) r.witnesses[a] = cert;
  }
  r.gamma_is_substructure = is_substructure(s, r.gamma, cfg);
  r.gamma_equals_phi = (r.gamma == r.phi);
  return r;
}

template <class S>
GeneratorReport analyze_extended(const S& s, const ClosureConfig& cfg) {
  StructView v = view(s);
  ClosureConfig c = cfg;
  if (v.join == nullptr) c.respect_joins = false;
  const int n = v.n;
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

  GeneratorReport r;
  r.gamma = SubsetMask(n);
  std::vector<std::uint64_t> candidates;
  for (int a = 0; a < n; ++a) {
    auto avoid = maximal_closed_avoiding(v, c, a);
    candidates.insert(candidates.end(), avoid.begin(), avoid.end());
    // a is a relative generator iff some closed set avoiding a generates L with
    // a adjoined; testing the maximal ones suffices by monotonicity.
    bool relgen = false;
    for (std::uint64_t m : avoid) {
      if (closure64(v, c, m | (std::uint64_t{1} << a)) == full) {
        relgen = true;
        SubsetMask w(n);
        for (int i = 0; i < n; ++i)
          if (m >> i & 1) w.set(i);
        r.witnesses[a] = Certificate{Certificate::Kind::RelativeGeneratorWitness, w};
        break;
      }
    }
    if (!relgen) r.gamma.set(a);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (std::uint64_t m : candidates) {
    if (m == full) continue;
    bool maximal = true;
    for (std::uint64_t d : candidates)
      if (d != m && d != full && (m & ~d) == 0) { maximal = false; break; }
    if (maximal) {
      SubsetMask mm(n);
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) mm.set(i);
      r.maximal.push_back(mm);
    }
  }
  std::sort(r.maximal.begin(), r.maximal.end());
  r.phi = SubsetMask::full(n);
  for (const auto& m : r.maximal) r.phi = r.phi & m;
  r.relative_generators = r.gamma.complement();
  r.indispensables = indispensable_elements(s, cfg);
  for (int a = 0; a < n; ++a)
    if (r.indispensables.test(a))
      r.witnesses[a] = Certificate{Certificate::Kind::ComplementClosed, SubsetMask(n)};
  r.gamma_is_substructure = is_substructure(s, r.gamma, cfg);
  r.gamma_equals_phi = (r.gamma == r.phi);
  return r;
}

}  // namespace detail

/** Full generator-theory report. Carriers up to 16 elements run the exhaustive
 *  subset oracle; opting in via AnalyzeOptions extends exact analysis to 64
 *  elements through the subtractive maximal-substructure search. */
template <class S>
GeneratorReport analyze(const S& s, const ClosureConfig& cfg, const AnalyzeOptions& opts = {}) {
  if (s.n <= kMaxBruteForce) return detail::analyze_bruteforce(s, cfg);
  if (s.n <= opts.max_n && s.n <= kMaxExtendedAnalysis) return detail::analyze_extended(s, cfg);
  raise(ErrorKind::BoundExceeded, "analyze: carrier has " + std::to_string(s.n) + " elements (limit " + std::to_string(std::min(opts.max_n, kMaxExtendedAnalysis)) + ")");
}

// ---------------------------------------------------------------------------
// Report JSON: sets as ascending index arrays, maximal list sorted.
// ---------------------------------------------------------------------------

inline nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json j;
  switch (c.kind) {
    case Certificate::Kind::RelativeGeneratorWitness:
      j["kind"] = "relative-generator";
      j["X"] = c.set.indices();
      break;
    case Certificate::Kind::MeetReduction:
      j["kind"] = "meet-reduction";
      j["Y"] = c.set.indices();
      break;
    case Certificate::Kind::ComplementClosed:
      j["kind"] = "complement-closed";
      break;
    case Certificate::Kind::MaximalityWitness:
      j["kind"] = "maximality";
      j["set"] = c.set.indices();
      break;
  }
  return j;
}

inline nlohmann::json report_to_json(const GeneratorReport& r) {
  nlohmann::json j;
  j["gamma"] = r.gamma.indices();
  j["phi"] = r.phi.indices();
  j["indispensable"] = r.indispensables.indices();
  nlohmann::json maximal = nlohmann::json::array();
  for (const auto& m : r.maximal) maximal.push_back(m.indices());
  j["maximal"] = std::move(maximal);
  j["gamma_is_substructure"] = r.gamma_is_substructure;
  j["gamma_equals_phi"] = r.gamma_equals_phi;
  nlohmann::json w = nlohmann::json::object();
  for (const auto& [e, cert] : r.witnesses) w[std::to_string(e)] = certificate_to_json(cert);
  j["witnesses"] = std::move(w);
  return j;
}

}  // namespace latgen
