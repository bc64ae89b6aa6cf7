#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "latgen/error.hpp"
#include "latgen/finite_lattice.hpp"

namespace latgen {

/// Guaranteed-performance bound for exhaustive labeled enumeration.
inline constexpr int kMaxEnumeration = 6;

namespace detail {

// Emits every labeled poset on {0..n-1} exactly once. Element k is attached to
// the poset on {0..k-1} by choosing a down-set D (elements below k) and an
// up-set U (elements above k) with D ∩ U = ∅ and d < u for all d ∈ D, u ∈ U.
template <class Fn>
void extend_poset(Poset& p, int k, int n, Fn& fn) {
  if (k == n) {
    fn(static_cast<const Poset&>(p));
    return;
  }
  const int m = k;  // elements already placed
  std::vector<std::uint32_t> down_sets, up_sets;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    bool down = true, up = true;
    for (int i = 0; i < m && (down || up); ++i) {
      if (!(s >> i & 1)) continue;
      for (int j = 0; j < m; ++j) {
        if (s >> j & 1) continue;
        if (p.le(j, i)) down = false;
        if (p.le(i, j)) up = false;
      }
    }
    if (down) down_sets.push_back(s);
    if (up) up_sets.push_back(s);
  }
  for (std::uint32_t d : down_sets) {
    for (std::uint32_t u : up_sets) {
      if (d & u) continue;
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        if (!(d >> i & 1)) continue;
        for (int j = 0; j < m; ++j)
          if ((u >> j & 1) && !(p.le(i, j) && i != j)) { ok = false; break; }
      }
      if (!ok) continue;
      for (int i = 0; i < m; ++i) {
        if (d >> i & 1) p.leq[static_cast<std::size_t>(i) * n + k] = 1;
        if (u >> i & 1) p.leq[static_cast<std::size_t>(k) * n + i] = 1;
      }
      extend_poset(p, k + 1, n, fn);
      for (int i = 0; i < m; ++i) {
        p.leq[static_cast<std::size_t>(i) * n + k] = 0;
        p.leq[static_cast<std::size_t>(k) * n + i] = 0;
      }
    }
  }
}

inline bool poset_is_lattice(const Poset& p) {
  for (int a = 0; a < p.n; ++a)
    for (int b = a + 1; b < p.n; ++b)
      if (glb_of_pair(p, a, b) < 0 || lub_of_pair(p, a, b) < 0) return false;
  return true;
}

inline bool poset_is_meet_semilattice(const Poset& p) {
  for (int a = 0; a < p.n; ++a) {
    bool max = true;
    for (int b = 0; b < p.n; ++b)
      if (!p.le(b, a)) { max = false; break; }
    if (max) goto has_max;
  }
  return false;
has_max:
  for (int a = 0; a < p.n; ++a)
    for (int b = a + 1; b < p.n; ++b)
      if (glb_of_pair(p, a, b) < 0) return false;
  return true;
}

}  // namespace detail

template <class Fn>
void for_each_labeled_poset(int n, Fn fn) {
  if (n < 1 || n > kMaxEnumeration)
    raise(ErrorKind::BoundExceeded, "labeled enumeration supports 1 <= n <= " + std::to_string(kMaxEnumeration));
  Poset p{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0)};
  for (int i = 0; i < n; ++i) p.set_le(i, i);
  detail::extend_poset(p, 0, n, fn);
}

/** Streams every labeled lattice on n elements exactly once (n <= 6). */
template <class Fn>
void for_each_labeled_lattice(int n, Fn fn) {
  for_each_labeled_poset(n, [&](const Poset& p) {
    if (detail::poset_is_lattice(p)) fn(lattice_from_poset(p));
  });
}

/** Streams every labeled meet-semilattice (each pair has a glb, a maximum exists). */
template <class Fn>
void for_each_labeled_meet_semilattice(int n, Fn fn) {
  for_each_labeled_poset(n, [&](const Poset& p) {
    if (detail::poset_is_meet_semilattice(p)) fn(meet_semilattice_from_poset(p));
  });
}

inline std::uint64_t count_labeled_posets(int n) {
  std::uint64_t c = 0;
  for_each_labeled_poset(n, [&](const Poset&) { ++c; });
  return c;
}

inline std::uint64_t count_labeled_lattices(int n) {
  std::uint64_t c = 0;
  for_each_labeled_lattice(n, [&](const FiniteLattice&) { ++c; });
  return c;
}

/** Canonical form of a poset: the lexicographically least relation matrix over
 *  all relabelings. Quadratic-factorial; intended for n <= 6. */
inline std::vector<std::uint8_t> canonical_form(const Poset& p) {
  std::vector<int> perm(p.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(p.n) * p.n);
  do {
    for (int a = 0; a < p.n; ++a)
      for (int b = 0; b < p.n; ++b)
        cur[static_cast<std::size_t>(a) * p.n + b] = p.le(perm[a], perm[b]);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/** Number of isomorphism classes of lattices on n elements, by canonical-form
 *  deduplication of the labeled stream. */
inline std::uint64_t count_lattice_isomorphism_classes(int n) {
  std::set<std::vector<std::uint8_t>> seen;
  for_each_labeled_lattice(n, [&](const FiniteLattice& l) { seen.insert(canonical_form(Poset{l.n, l.leq})); });
  return seen.size();
}

inline std::vector<FiniteLattice> all_labeled_lattices(int n) {
  std::vector<FiniteLattice> out;
  for_each_labeled_lattice(n, [&](const FiniteLattice& l) { out.push_back(l); });
  return out;
}

/** Deterministic sampler over the labeled lattices on n elements: materializes
 *  the corpus once, then draws `count` structures with the seeded generator. */
class LatticeSampler {
 public:
  LatticeSampler(int n, std::uint64_t seed) : rng_(seed) { corpus_ = all_labeled_lattices(n); }

  const FiniteLattice& next() {
    std::uint64_t i = rng_() % corpus_.size();
    return corpus_[static_cast<std::size_t>(i)];
  }

  std::size_t corpus_size() const { return corpus_.size(); }

 private:
  std::vector<FiniteLattice> corpus_;
  std::mt19937_64 rng_;
};

}  // namespace latgen
