#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latgen/error.hpp"

namespace latgen {

/// Hard cap on carrier size for construction operations.
inline constexpr int kMaxCarrier = 4096;

/** A finite partial order on indices 0..n-1, as an explicit relation matrix. */
struct Poset {
  int n = 0;
  std::vector<std::uint8_t> leq;  // row-major: leq[a*n+b] != 0  iff  a <= b

  bool le(int a, int b) const { return leq[static_cast<std::size_t>(a) * n + b] != 0; }
  void set_le(int a, int b) { leq[static_cast<std::size_t>(a) * n + b] = 1; }
};

/** Finite lattice: order matrix plus total meet/join tables and the two extremes.
 *  Elements are dense indices; labels are presentation-only. */
struct FiniteLattice {
  int n = 0;
  std::vector<std::uint8_t> leq;
  std::vector<std::uint16_t> meet_t;
  std::vector<std::uint16_t> join_t;
  int bottom = 0;
  int top = 0;
  std::vector<std::string> labels;  // empty, or exactly n entries

  bool le(int a, int b) const { return leq[static_cast<std::size_t>(a) * n + b] != 0; }
  int meet(int a, int b) const { return meet_t[static_cast<std::size_t>(a) * n + b]; }
  int join(int a, int b) const { return join_t[static_cast<std::size_t>(a) * n + b]; }

  Poset poset() const { return Poset{n, leq}; }

  bool operator==(const FiniteLattice& o) const {
    return n == o.n && leq == o.leq && meet_t == o.meet_t && join_t == o.join_t &&
           bottom == o.bottom && top == o.top;
  }
};

/** Finite meet-semilattice with a maximum: order matrix plus meet table. */
struct FiniteMeetSemilattice {
  int n = 0;
  std::vector<std::uint8_t> leq;
  std::vector<std::uint16_t> meet_t;
  int top = 0;
  std::vector<std::string> labels;

  bool le(int a, int b) const { return leq[static_cast<std::size_t>(a) * n + b] != 0; }
  int meet(int a, int b) const { return meet_t[static_cast<std::size_t>(a) * n + b]; }

  Poset poset() const { return Poset{n, leq}; }
};

namespace detail {

// Greatest lower bound of {a,b} in p, or -1 when it does not exist (no lower
// bound, or no greatest one).
inline int glb_of_pair(const Poset& p, int a, int b) {
  int cand = -1;
  for (int c = 0; c < p.n; ++c) {
    if (!p.le(c, a) || !p.le(c, b)) continue;
    if (cand < 0 || p.le(cand, c)) cand = c;
  }
  if (cand < 0) return -1;
  for (int c = 0; c < p.n; ++c)
    if (p.le(c, a) && p.le(c, b) && !p.le(c, cand)) return -1;
  return cand;
}

inline int lub_of_pair(const Poset& p, int a, int b) {
  int cand = -1;
  for (int c = 0; c < p.n; ++c) {
    if (!p.le(a, c) || !p.le(b, c)) continue;
    if (cand < 0 || p.le(c, cand)) cand = c;
  }
  if (cand < 0) return -1;
  for (int c = 0; c < p.n; ++c)
    if (p.le(a, c) && p.le(b, c) && !p.le(cand, c)) return -1;
  return cand;
}

inline void check_capacity(long long n, const char* who) {
  if (n > kMaxCarrier) raise(ErrorKind::CapacityExceeded, std::string(who) + ": carrier would have " + std::to_string(n) + " elements (cap " + std::to_string(kMaxCarrier) + ")");
  if (n < 1) raise(ErrorKind::ParseError, std::string(who) + ": carrier must be nonempty");
}

}  // namespace detail

/** Builds the partial order generated by a cover list (reflexive-transitive
 *  closure of the cover digraph). */
inline Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  detail::check_capacity(n, "poset_from_covers");
  std::vector<std::vector<int>> up(n);
  std::vector<std::pair<int, int>> seen;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n)
      raise(ErrorKind::ParseError, "cover index out of range");
    if (lo == hi) raise(ErrorKind::CyclicCovers, "self-loop cover");
    if (std::find(seen.begin(), seen.end(), std::make_pair(lo, hi)) != seen.end())
      raise(ErrorKind::DuplicateCover, "duplicate cover (" + std::to_string(lo) + "," + std::to_string(hi) + ")");
    seen.emplace_back(lo, hi);
    up[lo].push_back(hi);
  }

  Poset p{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0)};
  // DFS reachability from each node along cover edges.
  for (int s = 0; s < n; ++s) {
    std::vector<int> stack{s};
    p.set_le(s, s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : up[v]) {
        if (w == s || p.le(s, w)) {
          if (w == s) raise(ErrorKind::CyclicCovers, "cover digraph has a cycle through " + std::to_string(s));
          continue;
        }
        p.set_le(s, w);
        stack.push_back(w);
      }
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < a; ++b)
      if (p.le(a, b) && p.le(b, a)) raise(ErrorKind::CyclicCovers, "order not antisymmetric");
  return p;
}

/** Fills meet/join tables from the order; rejects posets that are not lattices. */
inline FiniteLattice lattice_from_poset(const Poset& p, std::vector<std::string> labels = {}) {
  FiniteLattice l;
  l.n = p.n;
  l.leq = p.leq;
  l.meet_t.assign(static_cast<std::size_t>(p.n) * p.n, 0);
  l.join_t.assign(static_cast<std::size_t>(p.n) * p.n, 0);
  for (int a = 0; a < p.n; ++a) {
    for (int b = a; b < p.n; ++b) {
      int m = detail::glb_of_pair(p, a, b);
      int j = detail::lub_of_pair(p, a, b);
      if (m < 0)
        raise(ErrorKind::NotALattice, "pair (" + std::to_string(a) + "," + std::to_string(b) + ") has no greatest lower bound");
      if (j < 0)
        raise(ErrorKind::NotALattice, "pair (" + std::to_string(a) + "," + std::to_string(b) + ") has no least upper bound");
      l.meet_t[static_cast<std::size_t>(a) * p.n + b] = static_cast<std::uint16_t>(m);
      l.meet_t[static_cast<std::size_t>(b) * p.n + a] = static_cast<std::uint16_t>(m);
      l.join_t[static_cast<std::size_t>(a) * p.n + b] = static_cast<std::uint16_t>(j);
      l.join_t[static_cast<std::size_t>(b) * p.n + a] = static_cast<std::uint16_t>(j);
    }
  }
  int bot = 0, top = 0;
  for (int a = 0; a < p.n; ++a) {
    bot = l.meet(bot, a);
    top = l.join(top, a);
  }
  l.bottom = bot;
  l.top = top;
  if (!labels.empty() && static_cast<int>(labels.size()) != p.n)
    raise(ErrorKind::ParseError, "labels must match carrier size");
  l.labels = std::move(labels);
  return l;
}

inline FiniteMeetSemilattice meet_semilattice_from_poset(const Poset& p,
                                                         std::vector<std::string> labels = {}) {
  FiniteMeetSemilattice s;
  s.n = p.n;
  s.leq = p.leq;
  s.meet_t.assign(static_cast<std::size_t>(p.n) * p.n, 0);
  for (int a = 0; a < p.n; ++a) {
    for (int b = a; b < p.n; ++b) {
      int m = detail::glb_of_pair(p, a, b);
      if (m < 0)
        raise(ErrorKind::NotALattice, "pair (" + std::to_string(a) + "," + std::to_string(b) + ") has no greatest lower bound");
      s.meet_t[static_cast<std::size_t>(a) * p.n + b] = static_cast<std::uint16_t>(m);
      s.meet_t[static_cast<std::size_t>(b) * p.n + a] = static_cast<std::uint16_t>(m);
    }
  }
  int top = -1;
  for (int a = 0; a < p.n; ++a) {
    bool max = true;
    for (int b = 0; b < p.n; ++b)
      if (!p.le(b, a)) { max = false; break; }
    if (max) { top = a; break; }
  }
  if (top < 0) raise(ErrorKind::NotALattice, "meet-semilattice has no maximum");
  s.top = top;
  if (!labels.empty() && static_cast<int>(labels.size()) != p.n)
    raise(ErrorKind::ParseError, "labels must match carrier size");
  s.labels = std::move(labels);
  return s;
}

inline FiniteLattice from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                                 std::vector<std::string> labels = {}) {
  return lattice_from_poset(poset_from_covers(n, covers), std::move(labels));
}

/// k-element chain 0 < 1 < ... < k-1.
inline FiniteLattice chain(int k) {
  detail::check_capacity(k, "chain");
  Poset p{k, std::vector<std::uint8_t>(static_cast<std::size_t>(k) * k, 0)};
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) p.set_le(a, b);
  return lattice_from_poset(p);
}

inline bool is_chain(const Poset& p) {
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      if (!p.le(a, b) && !p.le(b, a)) return false;
  return true;
}

inline bool is_chain(const FiniteLattice& l) { return is_chain(Poset{l.n, l.leq}); }

/** Lattice product with componentwise order; element (a,b) has index a*|B|+b. */
inline FiniteLattice product(const FiniteLattice& A, const FiniteLattice& B) {
  long long n = static_cast<long long>(A.n) * B.n;
  detail::check_capacity(n, "product");
  FiniteLattice l;
  l.n = static_cast<int>(n);
  l.leq.assign(static_cast<std::size_t>(n) * n, 0);
  l.meet_t.assign(static_cast<std::size_t>(n) * n, 0);
  l.join_t.assign(static_cast<std::size_t>(n) * n, 0);
  auto id = [&](int a, int b) { return a * B.n + b; };
  for (int a1 = 0; a1 < A.n; ++a1)
    for (int b1 = 0; b1 < B.n; ++b1)
      for (int a2 = 0; a2 < A.n; ++a2)
        for (int b2 = 0; b2 < B.n; ++b2) {
          std::size_t at = static_cast<std::size_t>(id(a1, b1)) * n + id(a2, b2);
          l.leq[at] = A.le(a1, a2) && B.le(b1, b2);
          l.meet_t[at] = static_cast<std::uint16_t>(id(A.meet(a1, a2), B.meet(b1, b2)));
          l.join_t[at] = static_cast<std::uint16_t>(id(A.join(a1, a2), B.join(b1, b2)));
        }
  l.bottom = id(A.bottom, B.bottom);
  l.top = id(A.top, B.top);
  return l;
}

/** Lexicographic product of two chains; (a ⋉ b) maps to index a*|B|+b. */
inline FiniteLattice lex_product(const FiniteLattice& A, const FiniteLattice& B) {
  if (!is_chain(A) || !is_chain(B)) raise(ErrorKind::NotAChain, "lex_product requires chains");
  long long n = static_cast<long long>(A.n) * B.n;
  detail::check_capacity(n, "lex_product");
  return chain(static_cast<int>(n));
}

inline Poset add_top(const Poset& p) {
  detail::check_capacity(p.n + 1, "add_top");
  Poset q{p.n + 1, std::vector<std::uint8_t>(static_cast<std::size_t>(p.n + 1) * (p.n + 1), 0)};
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      if (p.le(a, b)) q.set_le(a, b);
  for (int a = 0; a <= p.n; ++a) q.set_le(a, p.n);
  return q;
}

inline Poset add_bottom(const Poset& p) {
  detail::check_capacity(p.n + 1, "add_bottom");
  Poset q{p.n + 1, std::vector<std::uint8_t>(static_cast<std::size_t>(p.n + 1) * (p.n + 1), 0)};
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      if (p.le(a, b)) q.set_le(a, b);
  for (int a = 0; a <= p.n; ++a) q.set_le(p.n, a);
  q.set_le(p.n, p.n);
  return q;
}

inline FiniteLattice add_top(const FiniteLattice& l) { return lattice_from_poset(add_top(l.poset())); }
inline FiniteLattice add_bottom(const FiniteLattice& l) { return lattice_from_poset(add_bottom(l.poset())); }

/** Cover relation (transitive reduction of the strict order), sorted lexicographically. */
inline std::vector<std::pair<int, int>> covers_of(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b) {
      if (a == b || !p.le(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < p.n && cover; ++c)
        if (c != a && c != b && p.le(a, c) && p.le(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/** Full axiom scan over the tables: order laws, glb/lub agreement, extremes,
 *  commutativity/associativity/idempotence/absorption. Throws on violation. */
inline void validate_lattice(const FiniteLattice& l) {
  const int n = l.n;
  for (int a = 0; a < n; ++a) {
    if (!l.le(a, a)) raise(ErrorKind::NotALattice, "order not reflexive");
    if (!l.le(l.bottom, a) || !l.le(a, l.top)) raise(ErrorKind::NotALattice, "extremes wrong");
    for (int b = 0; b < n; ++b) {
      if (a != b && l.le(a, b) && l.le(b, a)) raise(ErrorKind::NotALattice, "order not antisymmetric");
      int m = l.meet(a, b), j = l.join(a, b);
      if (m != l.meet(b, a) || j != l.join(b, a)) raise(ErrorKind::NotALattice, "tables not commutative");
      if (!l.le(m, a) || !l.le(m, b)) raise(ErrorKind::NotALattice, "meet not a lower bound");
      if (!l.le(a, j) || !l.le(b, j)) raise(ErrorKind::NotALattice, "join not an upper bound");
      if (l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a)
        raise(ErrorKind::NotALattice, "absorption fails");
      for (int c = 0; c < n; ++c) {
        if (l.le(a, b) && l.le(b, c) && !l.le(a, c)) raise(ErrorKind::NotALattice, "order not transitive");
        if (l.le(c, a) && l.le(c, b) && !l.le(c, m)) raise(ErrorKind::NotALattice, "meet not greatest");
        if (l.le(a, c) && l.le(b, c) && !l.le(j, c)) raise(ErrorKind::NotALattice, "join not least");
        if (l.meet(a, l.meet(b, c)) != l.meet(l.meet(a, b), c) ||
            l.join(a, l.join(b, c)) != l.join(l.join(a, b), c))
          raise(ErrorKind::NotALattice, "tables not associative");
      }
    }
  }
}

// ---- cover-list JSON interchange ----
// {"n": <int>, "covers": [[lo,hi],...], "labels": [...]?}  covers sorted lexicographically.

inline nlohmann::json to_json(const FiniteLattice& l) {
  nlohmann::json j;
  j["n"] = l.n;
  auto cov = covers_of(Poset{l.n, l.leq});
  nlohmann::json arr = nlohmann::json::array();
  for (auto [lo, hi] : cov) arr.push_back(nlohmann::json::array({lo, hi}));
  j["covers"] = std::move(arr);
  if (!l.labels.empty()) j["labels"] = l.labels;
  return j;
}

inline Poset poset_from_json(const nlohmann::json& j, std::vector<std::string>* labels_out = nullptr) {
  if (!j.is_object() || !j.contains("n") || !j.contains("covers") || !j["n"].is_number_integer() ||
      !j["covers"].is_array())
    raise(ErrorKind::ParseError, "expected {\"n\": int, \"covers\": [[lo,hi],...]}");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
      raise(ErrorKind::ParseError, "covers entries must be [lo,hi] integer pairs");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  if (labels_out && j.contains("labels")) {
    if (!j["labels"].is_array()) raise(ErrorKind::ParseError, "labels must be an array of strings");
    for (const auto& s : j["labels"]) {
      if (!s.is_string()) raise(ErrorKind::ParseError, "labels must be an array of strings");
      labels_out->push_back(s.get<std::string>());
    }
  }
  return poset_from_covers(n, covers);
}

inline FiniteLattice lattice_from_json(const nlohmann::json& j) {
  std::vector<std::string> labels;
  Poset p = poset_from_json(j, &labels);
  return lattice_from_poset(p, std::move(labels));
}

inline FiniteMeetSemilattice meet_semilattice_from_json(const nlohmann::json& j) {
  std::vector<std::string> labels;
  Poset p = poset_from_json(j, &labels);
  return meet_semilattice_from_poset(p, std::move(labels));
}

}  // namespace latgen
