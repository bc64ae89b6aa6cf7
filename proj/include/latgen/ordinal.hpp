#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "latgen/error.hpp"

namespace latgen {

/** The two countable chain families: ω+1 (naturals plus a top) and ω²+1
 *  (the lexicographic square of the naturals plus a top). */
enum class Family { Omega, OmegaSq };

inline const char* to_string(Family f) { return f == Family::Omega ? "omega" : "omega_sq"; }

inline Family family_from_string(const std::string& s) {
  if (s == "omega") return Family::Omega;
  if (s == "omega_sq") return Family::OmegaSq;
  raise(ErrorKind::ParseError, "unknown family '" + s + "'");
}

/** An element of the chain K: q·ω + r encoded as the pair (q,r), or the top.
 *  The Omega family keeps q = 0 on non-top elements. */
struct OrdK {
  std::uint32_t q = 0;
  std::uint32_t r = 0;
  bool top = false;

  static OrdK pair(std::uint32_t q, std::uint32_t r) { return {q, r, false}; }
  static OrdK limit_top() { return {0, 0, true}; }
  static OrdK zero() { return {0, 0, false}; }

  friend bool operator==(const OrdK&, const OrdK&) = default;

  friend std::strong_ordering operator<=>(const OrdK& a, const OrdK& b) {
    if (a.top != b.top) return a.top ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.top) return std::strong_ordering::equal;
    if (a.q != b.q) return a.q <=> b.q;
    return a.r <=> b.r;
  }
};

inline OrdK ord_min(const OrdK& a, const OrdK& b) { return a < b ? a : b; }
inline OrdK ord_max(const OrdK& a, const OrdK& b) { return a < b ? b : a; }

/// Limit positions of K: the top, and (q,0) for q >= 1 in the ω² family.
inline bool is_limit(Family f, const OrdK& k) {
  if (k.top) return true;
  return f == Family::OmegaSq && k.q > 0 && k.r == 0;
}

inline void validate_ord(Family f, const OrdK& k) {
  if (f == Family::Omega && !k.top && k.q != 0)
    raise(ErrorKind::FamilyMismatch, "omega-family ordinals have no limit rows");
}

inline std::string ord_str(Family f, const OrdK& k) {
  if (k.top) return f == Family::Omega ? "w" : "w2";
  if (f == Family::Omega) return std::to_string(k.r);
  return std::to_string(k.q) + ":" + std::to_string(k.r);
}

/** One element of the product lattice K × {0,1}. */
struct SymElem {
  Family fam = Family::Omega;
  OrdK k;
  std::uint8_t bit = 0;

  friend bool operator==(const SymElem&, const SymElem&) = default;

  // Arbitrary total order for sorted containers (not the lattice order).
  friend bool operator<(const SymElem& a, const SymElem& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.bit < b.bit;
  }
};

inline SymElem elem(Family f, const OrdK& k, int bit) {
  validate_ord(f, k);
  return SymElem{f, k, static_cast<std::uint8_t>(bit)};
}

inline SymElem elem(Family f, std::uint32_t q, std::uint32_t r, int bit) {
  return elem(f, OrdK::pair(q, r), bit);
}

inline SymElem top_elem(Family f, int bit) { return elem(f, OrdK::limit_top(), bit); }

namespace detail {
inline void check_same_family(const SymElem& x, const SymElem& y) {
  if (x.fam != y.fam) raise(ErrorKind::FamilyMismatch, "elements from different lattice families");
}
}  // namespace detail

/// Componentwise lattice order on K × {0,1}.
inline bool sym_le(const SymElem& x, const SymElem& y) {
  detail::check_same_family(x, y);
  return x.k <= y.k && x.bit <= y.bit;
}

inline SymElem sym_meet(const SymElem& x, const SymElem& y) {
  detail::check_same_family(x, y);
  return SymElem{x.fam, ord_min(x.k, y.k), static_cast<std::uint8_t>(x.bit & y.bit)};
}

inline SymElem sym_join(const SymElem& x, const SymElem& y) {
  detail::check_same_family(x, y);
  return SymElem{x.fam, ord_max(x.k, y.k), static_cast<std::uint8_t>(x.bit | y.bit)};
}

inline SymElem sym_bottom(Family f) { return elem(f, OrdK::zero(), 0); }
inline SymElem sym_top(Family f) { return top_elem(f, 1); }

inline std::string elem_str(const SymElem& e) {
  return "(" + ord_str(e.fam, e.k) + "," + std::to_string(int(e.bit)) + ")";
}

inline nlohmann::json ord_to_json(const OrdK& k) {
  if (k.top) return nlohmann::json{{"top", true}};
  return nlohmann::json{{"n", k.q}, {"m", k.r}};
}

inline nlohmann::json elem_to_json(const SymElem& e) {
  auto j = ord_to_json(e.k);
  j["bit"] = int(e.bit);
  return j;
}

inline OrdK ord_from_json(const nlohmann::json& j) {
  if (j.contains("top") && j["top"].is_boolean() && j["top"].get<bool>()) return OrdK::limit_top();
  if (!j.contains("n") || !j.contains("m") || !j["n"].is_number_unsigned() || !j["m"].is_number_unsigned())
    raise(ErrorKind::ParseError, "ordinal must be {\"n\":..,\"m\":..} or {\"top\":true}");
  return OrdK::pair(j["n"].get<std::uint32_t>(), j["m"].get<std::uint32_t>());
}

inline SymElem elem_from_json(Family f, const nlohmann::json& j) {
  if (!j.contains("bit") || !j["bit"].is_number_integer())
    raise(ErrorKind::ParseError, "element needs a bit");
  int b = j["bit"].get<int>();
  if (b != 0 && b != 1) raise(ErrorKind::ParseError, "bit must be 0 or 1");
  return elem(f, ord_from_json(j), b);
}

}  // namespace latgen
