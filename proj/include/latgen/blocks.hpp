#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "latgen/error.hpp"
#include "latgen/ordinal.hpp"

namespace latgen {

/** Finitely described pieces of K × {0,1}, all at a fixed bit:
 *    Point        — one element
 *    RowTail      — {(n⋉m, b) : m >= m0}, a single limit row (row 0 in ω+1)
 *    ZeroColTail  — {(n⋉0, b) : n >= n0}, ω² only
 *    FullTail     — {(k, b)  : k0 <= k <= top}, contains its own limits
 */
enum class BlockKind { Point, RowTail, ZeroColTail, FullTail };

struct Block {
  BlockKind kind = BlockKind::Point;
  OrdK at;               // Point / FullTail anchor
  std::uint32_t n = 0;   // RowTail row, or ZeroColTail start
  std::uint32_t m = 0;   // RowTail start
  std::uint8_t bit = 0;

  static Block point(const OrdK& k, int bit) { return {BlockKind::Point, k, 0, 0, std::uint8_t(bit)}; }
  static Block row_tail(std::uint32_t n, std::uint32_t m0, int bit) {
    return {BlockKind::RowTail, OrdK::zero(), n, m0, std::uint8_t(bit)};
  }
  static Block zero_col_tail(std::uint32_t n0, int bit) {
    return {BlockKind::ZeroColTail, OrdK::zero(), n0, 0, std::uint8_t(bit)};
  }
  static Block full_tail(const OrdK& k0, int bit) {
    return {BlockKind::FullTail, k0, 0, 0, std::uint8_t(bit)};
  }

  friend bool operator==(const Block&, const Block&) = default;
};

namespace detail {
// Sort key shaped (kind, n, m0, bit).
inline std::tuple<int, std::uint64_t, std::uint64_t, int> block_key(const Block& b) {
  auto ordkey = [](const OrdK& k) {
    return k.top ? ~std::uint64_t{0} : (std::uint64_t{k.q} << 32 | k.r);
  };
  switch (b.kind) {
    case BlockKind::Point: return {0, ordkey(b.at), 0, b.bit};
    case BlockKind::RowTail: return {1, b.n, b.m, b.bit};
    case BlockKind::ZeroColTail: return {2, b.n, 0, b.bit};
    case BlockKind::FullTail: return {3, ordkey(b.at), 0, b.bit};
  }
  return {4, 0, 0, b.bit};
}
}  // namespace detail

inline bool block_before(const Block& a, const Block& b) {
  return detail::block_key(a) < detail::block_key(b);
}

inline void validate_block(Family f, const Block& b) {
  if (b.bit > 1) raise(ErrorKind::UnsupportedBlock, "block bit must be 0 or 1");
  switch (b.kind) {
    case BlockKind::Point:
    case BlockKind::FullTail:
      validate_ord(f, b.at);
      break;
    case BlockKind::RowTail:
      if (f == Family::Omega && b.n != 0)
        raise(ErrorKind::UnsupportedBlock, "omega family has a single row");
      break;
    case BlockKind::ZeroColTail:
      if (f == Family::Omega)
        raise(ErrorKind::UnsupportedBlock, "omega family has no limit column");
      break;
  }
}

inline bool block_contains(Family f, const Block& b, const SymElem& e) {
  if (e.bit != b.bit) return false;
  switch (b.kind) {
    case BlockKind::Point: return e.k == b.at;
    case BlockKind::RowTail: return !e.k.top && e.k.q == b.n && e.k.r >= b.m;
    case BlockKind::ZeroColTail: return !e.k.top && e.k.r == 0 && e.k.q >= b.n;
    case BlockKind::FullTail: return b.at <= e.k;
  }
  (void)f;
  return false;
}

/** A finitely described subset of K × {0,1}: either a normalized finite union
 *  of blocks, or the complement of a finite element set. Normal forms are
 *  canonical, so syntactic equality decides extensional equality. */
struct SetDesc {
  Family family = Family::Omega;
  bool cofinite = false;
  std::vector<Block> blocks;      // positive form, normalized
  std::vector<SymElem> excluded;  // cofinite form, sorted and deduplicated

  friend bool operator==(const SetDesc&, const SetDesc&) = default;
};

inline bool contains(const SetDesc& d, const SymElem& e) {
  if (e.fam != d.family) raise(ErrorKind::FamilyMismatch, "element from another family");
  if (d.cofinite) return !std::binary_search(d.excluded.begin(), d.excluded.end(), e);
  for (const auto& b : d.blocks)
    if (block_contains(d.family, b, e)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Canonical normal form. Per bit, the denotation decomposes uniquely into
//   - the maximal full tail [f0, top] contained in the set,
//   - per row, the longest row tail outside the full tail,
//   - the longest zero-column tail reaching below the full tail,
//   - leftover isolated points.
// Absorbed points are deleted, adjacent points extend tails, and a row tail
// reaching the full-tail anchor is folded into it, so equal denotations
// normalize to identical block lists.
// ---------------------------------------------------------------------------

namespace detail {

struct BitSlice {
  std::set<OrdK> pts;
  std::map<std::uint32_t, std::uint32_t> rows;  // row -> least m0
  std::optional<std::uint32_t> col;             // least n0
  std::optional<OrdK> full;                     // least k0
};

inline void slice_min_full(BitSlice& s, const OrdK& k) {
  if (!s.full || k < *s.full) s.full = k;
}

inline bool slice_pass(Family f, BitSlice& s) {
  bool changed = false;

  // extend the full tail downward through adjacent material
  while (s.full) {
    OrdK k = *s.full;
    if (k.top) {
      if (f == Family::Omega && s.rows.count(0)) {
        s.full = OrdK::pair(0, s.rows[0]);
        s.rows.erase(0);
        changed = true;
        continue;
      }
      break;
    }
    if (k.r > 0) {
      auto row = s.rows.find(k.q);
      if (row != s.rows.end() && row->second <= k.r - 1) {
        s.full = OrdK::pair(k.q, row->second);
        s.rows.erase(row);
        changed = true;
        continue;
      }
      OrdK pred = OrdK::pair(k.q, k.r - 1);
      if (s.pts.count(pred)) {
        s.pts.erase(pred);
        s.full = pred;
        changed = true;
        continue;
      }
      if (k.r == 1 && s.col && *s.col <= k.q) {
        s.full = OrdK::pair(k.q, 0);  // the column supplies (q,0); overlap is kept
        changed = true;
        continue;
      }
      break;
    }
    if (k.q > 0) {
      auto row = s.rows.find(k.q - 1);
      if (row != s.rows.end()) {
        s.full = OrdK::pair(k.q - 1, row->second);
        s.rows.erase(row);
        changed = true;
        continue;
      }
      break;
    }
    break;  // (0,0): nothing below
  }

  // extend row tails downward through points (and through the column at m = 0)
  for (auto& [q, m0] : s.rows) {
    while (m0 > 0 && s.pts.count(OrdK::pair(q, m0 - 1))) {
      s.pts.erase(OrdK::pair(q, m0 - 1));
      --m0;
      changed = true;
    }
    if (m0 == 1 && s.col && *s.col <= q) {
      m0 = 0;
      changed = true;
    }
  }

  // extend the column downward through points, rows at m0 = 0, and the full tail
  while (s.col && *s.col > 0) {
    std::uint32_t q = *s.col - 1;
    OrdK p = OrdK::pair(q, 0);
    if (s.pts.count(p)) {
      s.pts.erase(p);
      s.col = q;
      changed = true;
      continue;
    }
    auto row = s.rows.find(q);
    if (row != s.rows.end() && row->second == 0) {
      s.col = q;
      changed = true;
      continue;
    }
    if (s.full && *s.full <= p) {
      s.col = q;
      changed = true;
      continue;
    }
    break;
  }

  // drop whatever the tails already cover
  if (s.full) {
    for (auto it = s.pts.begin(); it != s.pts.end();)
      it = (*s.full <= *it) ? (changed = true, s.pts.erase(it)) : std::next(it);
    for (auto it = s.rows.begin(); it != s.rows.end();)
      it = (*s.full <= OrdK::pair(it->first, it->second)) ? (changed = true, s.rows.erase(it))
                                                          : std::next(it);
    if (s.col && *s.full <= OrdK::pair(*s.col, 0)) {
      s.col.reset();
      changed = true;
    }
  }
  for (auto it = s.pts.begin(); it != s.pts.end();) {
    bool covered = false;
    if (!it->top) {
      auto row = s.rows.find(it->q);
      if (row != s.rows.end() && it->r >= row->second) covered = true;
      if (s.col && it->r == 0 && it->q >= *s.col) covered = true;
    }
    it = covered ? (changed = true, s.pts.erase(it)) : std::next(it);
  }
  return changed;
}

}  // namespace detail

/** Canonical normal form of a block union; validates blocks against the family. */
inline std::vector<Block> normalize_blocks(Family f, const std::vector<Block>& blocks) {
  detail::BitSlice slices[2];
  for (const auto& b : blocks) {
    validate_block(f, b);
    auto& s = slices[b.bit];
    switch (b.kind) {
      case BlockKind::Point:
        if (b.at.top)
          detail::slice_min_full(s, b.at);  // a lone top is the degenerate full tail
        else
          s.pts.insert(b.at);
        break;
      case BlockKind::RowTail: {
        auto it = s.rows.find(b.n);
        if (it == s.rows.end() || b.m < it->second) s.rows[b.n] = b.m;
        break;
      }
      case BlockKind::ZeroColTail:
        if (!s.col || b.n < *s.col) s.col = b.n;
        break;
      case BlockKind::FullTail:
        detail::slice_min_full(s, b.at);
        break;
    }
  }
  std::vector<Block> out;
  for (int bit = 0; bit < 2; ++bit) {
    auto& s = slices[bit];
    while (detail::slice_pass(f, s)) {
    }
    for (const auto& p : s.pts) out.push_back(Block::point(p, bit));
    for (const auto& [q, m0] : s.rows) out.push_back(Block::row_tail(q, m0, bit));
    if (s.col) out.push_back(Block::zero_col_tail(*s.col, bit));
    if (s.full) out.push_back(Block::full_tail(*s.full, bit));
  }
  std::sort(out.begin(), out.end(), block_before);
  return out;
}

inline SetDesc positive_desc(Family f, const std::vector<Block>& blocks) {
  SetDesc d;
  d.family = f;
  d.cofinite = false;
  d.blocks = normalize_blocks(f, blocks);
  return d;
}

inline SetDesc cofinite_desc(Family f, std::vector<SymElem> excluded) {
  for (const auto& e : excluded) {
    if (e.fam != f) raise(ErrorKind::FamilyMismatch, "excluded element from another family");
    validate_ord(f, e.k);
  }
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  SetDesc d;
  d.family = f;
  d.cofinite = true;
  d.excluded = std::move(excluded);
  return d;
}

inline SetDesc empty_desc(Family f) { return positive_desc(f, {}); }

inline SetDesc full_desc(Family f) {
  return positive_desc(f, {Block::full_tail(OrdK::zero(), 0), Block::full_tail(OrdK::zero(), 1)});
}

inline bool is_full(const SetDesc& d) {
  if (d.cofinite) return d.excluded.empty();
  return d == full_desc(d.family);
}

inline SetDesc with_elements(const SetDesc& d, const std::vector<SymElem>& extra) {
  if (d.cofinite) raise(ErrorKind::UnsupportedBlock, "with_elements expects a positive description");
  auto blocks = d.blocks;
  for (const auto& e : extra) {
    if (e.fam != d.family) raise(ErrorKind::FamilyMismatch, "element from another family");
    blocks.push_back(Block::point(e.k, e.bit));
  }
  return positive_desc(d.family, blocks);
}

/** Positive form of the complement of a finite exclusion set: per bit, the
 *  gaps between consecutive excluded ordinals plus the final tail to the top. */
inline SetDesc cofinite_to_positive(const SetDesc& d) {
  if (!d.cofinite) return d;
  Family f = d.family;
  std::vector<Block> blocks;
  auto interval = [&](int bit, const OrdK& lo, const OrdK& hi) {
    // emit [lo, hi] for non-top hi, assuming lo <= hi
    if (lo.q == hi.q) {
      for (std::uint32_t r = lo.r; r <= hi.r; ++r) blocks.push_back(Block::point(OrdK::pair(lo.q, r), bit));
      return;
    }
    blocks.push_back(Block::row_tail(lo.q, lo.r, bit));
    for (std::uint32_t q = lo.q + 1; q < hi.q; ++q) blocks.push_back(Block::row_tail(q, 0, bit));
    for (std::uint32_t r = 0; r <= hi.r; ++r) blocks.push_back(Block::point(OrdK::pair(hi.q, r), bit));
  };
  for (int bit = 0; bit < 2; ++bit) {
    std::vector<OrdK> ex;
    for (const auto& e : d.excluded)
      if (e.bit == bit) ex.push_back(e.k);
    std::sort(ex.begin(), ex.end());
    OrdK lo = OrdK::zero();
    bool open = true;
    for (const auto& k : ex) {
      if (!open) continue;
      if (lo < k) {
        // [lo, k): ends just below k, so k must be a successor or a limit row start
        if (k.top) {
          if (f == Family::OmegaSq)
            raise(ErrorKind::UnsupportedBlock,
                  "[k, w2) spans infinitely many rows; no finite block union describes it");
          blocks.push_back(Block::row_tail(0, lo.r, bit));
        } else if (k.r == 0) {
          // k = (q,0) is a limit: [lo, k) is rows lo.q .. q-1
          blocks.push_back(Block::row_tail(lo.q, lo.r, bit));
          for (std::uint32_t q = lo.q + 1; q < k.q; ++q) blocks.push_back(Block::row_tail(q, 0, bit));
        } else {
          interval(bit, lo, OrdK::pair(k.q, k.r - 1));
        }
      }
      if (k.top)
        open = false;  // the exclusion removes the top; nothing follows
      else
        lo = OrdK::pair(k.q, k.r + 1);
    }
    if (open) blocks.push_back(Block::full_tail(lo, bit));
  }
  return positive_desc(f, blocks);
}

// ---------------------------------------------------------------------------
// JSON: {"family":..,"kind":"positive"|"cofinite","blocks":[...],"excluded":[...]}
// ---------------------------------------------------------------------------

inline nlohmann::json block_to_json(const Block& b) {
  nlohmann::json j;
  j["bit"] = int(b.bit);
  switch (b.kind) {
    case BlockKind::Point:
      j["t"] = "point";
      if (b.at.top) j["top"] = true;
      else { j["n"] = b.at.q; j["m"] = b.at.r; }
      break;
    case BlockKind::RowTail:
      j["t"] = "rowtail";
      j["n"] = b.n;
      j["m"] = b.m;
      break;
    case BlockKind::ZeroColTail:
      j["t"] = "zerocoltail";
      j["n"] = b.n;
      break;
    case BlockKind::FullTail:
      j["t"] = "fulltail";
      if (b.at.top) j["top"] = true;
      else { j["n"] = b.at.q; j["m"] = b.at.r; }
      break;
  }
  return j;
}

inline nlohmann::json desc_to_json(const SetDesc& d) {
  nlohmann::json j;
  j["family"] = to_string(d.family);
  j["kind"] = d.cofinite ? "cofinite" : "positive";
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : d.blocks) blocks.push_back(block_to_json(b));
  j["blocks"] = std::move(blocks);
  nlohmann::json excluded = nlohmann::json::array();
  for (const auto& e : d.excluded) excluded.push_back(elem_to_json(e));
  j["excluded"] = std::move(excluded);
  return j;
}

inline Block block_from_json(const nlohmann::json& j) {
  if (!j.contains("t") || !j["t"].is_string()) raise(ErrorKind::ParseError, "block needs a kind tag");
  std::string t = j["t"].get<std::string>();
  int bit = j.value("bit", -1);
  if (bit != 0 && bit != 1) raise(ErrorKind::ParseError, "block bit must be 0 or 1");
  if (t == "point") return Block::point(ord_from_json(j), bit);
  if (t == "rowtail") return Block::row_tail(j.value("n", 0u), j.value("m", 0u), bit);
  if (t == "zerocoltail") return Block::zero_col_tail(j.value("n", 0u), bit);
  if (t == "fulltail") return Block::full_tail(ord_from_json(j), bit);
  raise(ErrorKind::ParseError, "unknown block kind '" + t + "'");
}

inline SetDesc desc_from_json(const nlohmann::json& j) {
  if (!j.contains("family") || !j.contains("kind"))
    raise(ErrorKind::ParseError, "description needs family and kind");
  Family f = family_from_string(j["family"].get<std::string>());
  std::string kind = j["kind"].get<std::string>();
  if (kind == "positive") {
    std::vector<Block> blocks;
    for (const auto& b : j.value("blocks", nlohmann::json::array())) blocks.push_back(block_from_json(b));
    return positive_desc(f, blocks);
  }
  if (kind == "cofinite") {
    std::vector<SymElem> ex;
    for (const auto& e : j.value("excluded", nlohmann::json::array())) ex.push_back(elem_from_json(f, e));
    return cofinite_desc(f, ex);
  }
  raise(ErrorKind::ParseError, "description kind must be positive or cofinite");
}

/** All elements with coordinates bounded by (qmax, rmax), plus the tops —
 *  the sampling grid for denotation-level property checks. */
inline std::vector<SymElem> sample_grid(Family f, std::uint32_t qmax, std::uint32_t rmax) {
  std::vector<SymElem> out;
  for (int bit = 0; bit < 2; ++bit) {
    if (f == Family::Omega) {
      for (std::uint32_t r = 0; r <= rmax; ++r) out.push_back(elem(f, 0, r, bit));
    } else {
      for (std::uint32_t q = 0; q <= qmax; ++q)
        for (std::uint32_t r = 0; r <= rmax; ++r) out.push_back(elem(f, q, r, bit));
    }
    out.push_back(top_elem(f, bit));
  }
  return out;
}

}  // namespace latgen
