#pragma once

#include <optional>
#include <set>

#include "latgen/closure.hpp"
#include "latgen/error.hpp"

namespace latgen {

/** A subset of the dual ω-chain c_0 > c_1 > ... > d: finitely many points,
 *  an optional tail {c_i : i >= i0}, and optionally the bottom d. */
struct DualChainDesc {
  std::set<std::uint32_t> points;
  std::optional<std::uint32_t> tail;  // CTail(i0)
  bool has_d = false;

  friend bool operator==(const DualChainDesc&, const DualChainDesc&) = default;
};

inline DualChainDesc dual_chain_normalize(DualChainDesc d) {
  if (d.tail) {
    for (auto it = d.points.begin(); it != d.points.end();)
      it = (*it >= *d.tail) ? d.points.erase(it) : std::next(it);
    while (*d.tail > 0 && d.points.count(*d.tail - 1)) {
      d.points.erase(*d.tail - 1);
      --*d.tail;
    }
  }
  return d;
}

inline bool dual_chain_contains_c(const DualChainDesc& d, std::uint32_t i) {
  return d.points.count(i) || (d.tail && i >= *d.tail);
}

/** Meet-semilattice closure on the dual chain. Binary meets of chain elements
 *  pick the lower one, so they add nothing; the only nontrivial rule is the
 *  countable meet of a tail, which is d. */
inline DualChainDesc dual_chain_closure(const DualChainDesc& x, Completeness completeness) {
  DualChainDesc out = dual_chain_normalize(x);
  if (out.tail && completeness != Completeness::Finitary) out.has_d = true;
  return out;
}

/** d is indispensable exactly when the rest of the chain is closed, which
 *  holds finitarily and fails once countable meets force d below a tail. */
inline bool dual_chain_d_indispensable(Completeness completeness) {
  DualChainDesc rest;
  rest.tail = 0;  // every c_i
  auto closed = dual_chain_closure(rest, completeness);
  return closed == dual_chain_normalize(rest);
}

/** d is meet-reducible (hence a non-generator) exactly when some witness
 *  family avoiding d has meet d: the tail, under countable completeness. */
inline bool dual_chain_d_nongenerator(Completeness completeness) {
  DualChainDesc tail_only;
  tail_only.tail = 0;
  return dual_chain_closure(tail_only, completeness).has_d;
}

}  // namespace latgen
